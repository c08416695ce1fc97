"""
Example usage of the generalized elliptic function library.
This script shows the services being called directly, without the CLI.
"""
import math

from models.domain import PQPair, ProblemSpec
from services import gelliptic, gtrig, spectra


def main():
    """Constants, a function table and one spectrum."""
    print("Generalized Elliptic Functions Example Usage\n" + "=" * 50)

    # Half-periods
    print("\nHalf-periods pi_pq:")
    for p, q in ((2, 2), (3, 2), (4, 4)):
        print(f"  pi_{p}{q} = {gtrig.half_period(PQPair(p=p, q=q)):.15g}")

    # sn / cn for p = 3, q = 2, k = 0.6
    pq = PQPair(p=3, q=2)
    K = gelliptic.complete_K(pq, 0.6)
    print(f"\nK_32(0.6) = {K:.15g}")
    print("  t         sn         cn")
    for i in range(5):
        t = i * K / 4
        print(f"  {t:<9.5f} {gelliptic.sn_pq(pq, 0.6, t):<10.7f} {gelliptic.cn_pq(pq, 0.6, t):.7f}")

    # Spectrum of (PE_pq) for p = 4, q = 2 on (0, 10) at the eigenvalue of a pause of 2
    spec = ProblemSpec(pq=PQPair(p=4, q=2), T=10.0)
    lam = spectra.lambda_flatcore(spec.pq, spec.T, 2.0, 1)
    report = spectra.spectrum_at_lambda(spec.model_copy(update={"lam": lam}), n_max=3)

    print(f"\nSpectrum at lambda = {lam:.6g}:")
    for mode in report.modes:
        kinds = ", ".join(f"{b.type}/{b.branch}" for b in mode.branches) or "empty"
        print(f"  mode {mode.n}: {kinds}")

    u = spectra.eigen_PE_flatcore(spec, [2.0], 1)
    print(f"\nFlat core of mode 1: {u.core_intervals()}, u(T/2) = {u(spec.T / 2)}")
    print(f"p/2 eigenvalue of the humps: {spectra.corollary_halfp(spec, u):.6g} (pi^2/64 = {math.pi**2 / 64:.6g})")


if __name__ == "__main__":
    main()
