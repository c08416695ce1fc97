"""
CSV / JSON renderers for traces, branch diagrams and reports.

CSV output is one '#'-prefixed JSON metadata line, a header row and the data rows,
all separated by line feeds; reals are written with 17 significant digits.
"""
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from models.responses import BranchDiagram, FunctionTrace


def format_real(value: Optional[float]) -> str:
    return "" if value is None else format(value, ".17g")


def tabulate(evaluator: Callable[[float], float], t_from: float, t_to: float, samples: int) -> Tuple[List[float], List[float]]:
    """Closed uniform grid on [t_from, t_to] and the evaluator on it."""
    ts = [float(t) for t in np.linspace(t_from, t_to, samples)]
    return ts, [float(evaluator(t)) for t in ts]


def _csv(meta: Dict[str, Any], header: str, rows: List[List[Optional[float]]]) -> str:
    lines = ["# " + json.dumps(meta, sort_keys=True), header]
    lines.extend(",".join(format_real(value) for value in row) for row in rows)
    return "\n".join(lines) + "\n"


def render_trace(trace: FunctionTrace, fmt: str) -> str:
    if fmt == "json":
        return trace.model_dump_json() + "\n"
    return _csv(trace.meta, "t,u", [[t, u] for t, u in zip(trace.t, trace.u)])


def render_branch(diagram: BranchDiagram, fmt: str) -> str:
    if fmt == "json":
        return diagram.model_dump_json() + "\n"
    rows = [[point.lam, point.amplitude, point.k, point.tau] for point in diagram.points]
    return _csv(diagram.meta, "lambda,amplitude,k,tau", rows)


def write_output(text: str, path: Optional[Path] = None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
