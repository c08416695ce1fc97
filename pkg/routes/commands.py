import argparse
import logging
from pathlib import Path
from typing import Any, Callable, Dict

from core.errors import DomainError
from models.domain import OutputSpec, PQPair, ProblemSpec
from models.responses import BranchDiagram, ConstantResponse, FunctionTrace
from routes.render import render_branch, render_trace, tabulate, write_output
from services import gelliptic, gtrig, spectra
from services.verification import VerificationRunner, run_verification

logger = logging.getLogger(__name__)

TRIG_FUNCTIONS = ("sin", "cos")
ELLIPTIC_FUNCTIONS = ("sn", "cn", "dn", "am")


def _output(args: argparse.Namespace) -> OutputSpec:
    return OutputSpec(format=args.format, samples=args.samples, path=args.out)


def _pq(args: argparse.Namespace) -> PQPair:
    return PQPair(p=args.p, q=args.q)


def _problem(args: argparse.Namespace, with_lambda: bool = False) -> ProblemSpec:
    return ProblemSpec(pq=_pq(args), T=args.T, lam=args.lam if with_lambda else None)


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name.replace("lambda", "lam")) is None]
    if missing:
        raise DomainError(f"{args.command} needs {', '.join(missing)}")


def cmd_const(args: argparse.Namespace) -> int:
    pq = _pq(args)
    if args.name == "pi":
        value = gtrig.half_period(pq)
        response = ConstantResponse(pi_pq=value if value != float("inf") else None)
    else:
        _require(args, "k")
        value = gelliptic.complete_K(pq, args.k)
        response = ConstantResponse(K_pq=value)

    if args.format == "json":
        write_output(response.model_dump_json(exclude_unset=True) + "\n", args.out)
    else:
        write_output(format(value, "#.15g") + "\n", args.out)
    return 0


def _function(args: argparse.Namespace) -> Callable[[float], float]:
    pq = _pq(args)
    if args.fn in TRIG_FUNCTIONS:
        return (lambda t: gtrig.sin_pq(pq, t)) if args.fn == "sin" else (lambda t: gtrig.cos_pq(pq, t))
    _require(args, "k")
    ctx = gelliptic.elliptic_context(pq, args.k)
    return {"sn": ctx.sn, "cn": ctx.cn, "dn": ctx.dn, "am": ctx.am}[args.fn]


def cmd_eval(args: argparse.Namespace) -> int:
    output = _output(args)
    if not args.t_from < args.t_to:
        raise DomainError(f"--from must be below --to, got [{args.t_from}, {args.t_to}]")
    evaluator = _function(args)
    ts, us = tabulate(evaluator, args.t_from, args.t_to, output.samples)
    meta: Dict[str, Any] = {"fn": args.fn, "p": args.p, "q": args.q}
    if args.fn in ELLIPTIC_FUNCTIONS:
        meta["k"] = args.k
    trace = FunctionTrace(meta=meta, t=ts, u=us)
    write_output(render_trace(trace, output.format), output.path)
    return 0


def cmd_eigen(args: argparse.Namespace) -> int:
    output = _output(args)
    spec = _problem(args)
    meta: Dict[str, Any] = {"problem": args.problem, "p": args.p, "q": args.q, "T": args.T}

    if args.problem == "E":
        _require(args, "R")
        u = spectra.eigen_E(spec, args.R, args.n or 1)
        meta["R"] = args.R
    elif args.tau is not None:
        u = spectra.eigen_PE_flatcore(spec, args.tau, args.n or len(args.tau))
        meta["tau"] = list(args.tau)
    elif args.k is not None:
        u = spectra.eigen_PE_interior(spec, args.k, args.n or 1)
        meta["k"] = args.k
        meta["R"] = u.amplitude
    else:
        raise DomainError("eigen --problem PE needs --k (interior) or --tau (flat-core)")

    meta.update({"kind": u.kind.value, "n": u.n, "lambda": u.lam})
    logger.info("%s solution, n=%d, lambda=%.17g", u.kind.value, u.n, u.lam)
    ts, us = tabulate(u, 0.0, spec.T, output.samples)
    write_output(render_trace(FunctionTrace(meta=meta, t=ts, u=us), output.format), output.path)
    return 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    _require(args, "lambda")
    spec = _problem(args, with_lambda=True)
    if args.problem == "E":
        report = spectra.spectrum_E(spec, args.nmax)
    else:
        report = spectra.spectrum_at_lambda(spec, args.nmax)
    write_output(report.model_dump_json(indent=2, exclude_none=True) + "\n", args.out)
    return 0


def cmd_branch(args: argparse.Namespace) -> int:
    output = _output(args)
    spec = _problem(args)
    n = args.n or 1
    points = spectra.bifurcation_diagram(spec, n, output.samples)
    logger.info("branch %d: %d points", n, len(points))
    meta = {"problem": "PE", "p": args.p, "q": args.q, "T": args.T, "n": n}
    write_output(render_branch(BranchDiagram(meta=meta, points=points), output.format), output.path)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(args.seed, args.only)
    if args.format == "json":
        write_output(report.model_dump_json(indent=2) + "\n", args.out)
    else:
        lines = [
            f"{group.name:<16} {'PASS' if group.passed else 'FAIL'}  checks={group.checks}  "
            f"max_residual={group.max_residual:.3e}" + (f"  {group.detail}" if group.detail else "")
            for group in report.groups
        ]
        lines.append("verify: " + ("all groups passed" if report.passed else "FAILED"))
        write_output("\n".join(lines) + "\n", args.out)
    return 0 if report.passed else 1


def _add_pq(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=float, required=True, help="first exponent p > 0")
    parser.add_argument("--q", type=float, required=True, help="second exponent q > 0")


def _add_output(parser: argparse.ArgumentParser, samples: int = 201) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--samples", type=int, default=samples, help="grid points, both ends included")
    parser.add_argument("--out", type=Path, default=None, help="output file (default: stdout)")


def register_commands(parser: argparse.ArgumentParser) -> None:
    subparsers = parser.add_subparsers(dest="command", required=True)

    const = subparsers.add_parser("const", help="print pi_pq or K_pq(k)")
    const.add_argument("name", choices=("pi", "K"))
    _add_pq(const)
    const.add_argument("--k", type=float, default=None, help="modulus in [0, 1)")
    const.add_argument("--format", choices=("text", "json"), default="text")
    const.add_argument("--out", type=Path, default=None)
    const.set_defaults(handler=cmd_const)

    evaluate = subparsers.add_parser("eval", help="tabulate sin/cos/sn/cn/dn/am")
    evaluate.add_argument("--fn", choices=TRIG_FUNCTIONS + ELLIPTIC_FUNCTIONS, required=True)
    _add_pq(evaluate)
    evaluate.add_argument("--k", type=float, default=None, help="modulus in [0, 1)")
    evaluate.add_argument("--from", dest="t_from", type=float, default=0.0)
    evaluate.add_argument("--to", dest="t_to", type=float, required=True)
    _add_output(evaluate)
    evaluate.set_defaults(handler=cmd_eval)

    eigen = subparsers.add_parser("eigen", help="sample a closed-form eigenfunction on [0, T]")
    eigen.add_argument("--problem", choices=("E", "PE"), default="PE")
    _add_pq(eigen)
    eigen.add_argument("--T", type=float, required=True)
    eigen.add_argument("--n", type=int, default=None)
    eigen.add_argument("--R", type=float, default=None, help="amplitude (E)")
    eigen.add_argument("--k", type=float, default=None, help="modulus (PE interior)")
    eigen.add_argument("--tau", type=float, nargs="+", default=None, help="pauses (PE flat-core)")
    _add_output(eigen)
    eigen.set_defaults(handler=cmd_eigen)

    spectrum = subparsers.add_parser("spectrum", help="classify every mode at a given lambda")
    spectrum.add_argument("--problem", choices=("E", "PE"), default="PE")
    _add_pq(spectrum)
    spectrum.add_argument("--T", type=float, required=True)
    spectrum.add_argument("--lambda", dest="lam", type=float, default=None)
    spectrum.add_argument("--nmax", type=int, default=10)
    spectrum.add_argument("--out", type=Path, default=None)
    spectrum.set_defaults(handler=cmd_spectrum)

    branch = subparsers.add_parser("branch", help="bifurcation diagram of mode n")
    _add_pq(branch)
    branch.add_argument("--T", type=float, required=True)
    branch.add_argument("--n", type=int, default=None)
    _add_output(branch, samples=50)
    branch.set_defaults(handler=cmd_branch)

    verify = subparsers.add_parser("verify", help="run the verification suite")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--only", nargs="+", choices=list(VerificationRunner().groups), default=None)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--out", type=Path, default=None)
    verify.set_defaults(handler=cmd_verify)
