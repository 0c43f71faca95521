"""Text formats for graphs and tree patterns, and the JSON report.

Graph file::

    # comment
    p directed 3 2
    e 1 2 5
    e 2 3 -1.5

Tree file::

    t 3
    e 1 2
    e 1 3
"""

from __future__ import annotations

import json
import warnings
from typing import Iterator, List, Optional, Tuple

from .exceptions import ParseError, RangeError
from .graph import TreePattern, WeightedGraph, validate_tree
from .report import SolveReport


def _lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line.split()


def _int(tok: str, line: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(line, f"{what} {tok!r} is not an integer") from None


def _weight(tok: str, line: int):
    try:
        return int(tok), False
    except ValueError:
        pass
    try:
        return float(tok), True
    except ValueError:
        raise ParseError(line, f"weight {tok!r} is not a number") from None


def parse_graph(text: str, M: Optional[float] = None) -> WeightedGraph:
    """Parse the edge-list format.  Any non-integer weight switches to real mode.

    With ``M`` given, integer weights must lie in [-M, M] and real weights in [1, M].
    """
    rows = _lines(text)
    first = next(rows, None)
    if first is None or first[1][0] != "p":
        raise ParseError(first[0] if first else 1, "missing header 'p <directed|undirected> <n> <m>'")
    no, tok = first
    header_no = no
    if len(tok) != 4 or tok[1] not in ("directed", "undirected"):
        raise ParseError(no, "header must be 'p <directed|undirected> <n> <m>'")
    directed = tok[1] == "directed"
    n = _int(tok[2], no, "vertex count")
    m = _int(tok[3], no, "edge count")
    if n < 0 or m < 0:
        raise ParseError(no, "negative count in header")
    edges = []
    seen = set()
    real = False
    count = 0
    for no, tok in rows:
        if tok[0] != "e" or len(tok) != 4:
            raise ParseError(no, "expected 'e <u> <v> <w>'")
        count += 1
        if count > m:
            raise ParseError(no, f"more than the declared {m} edge lines")
        u = _int(tok[1], no, "vertex")
        v = _int(tok[2], no, "vertex")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(no, f"vertex out of range 1..{n}")
        w, is_real = _weight(tok[3], no)
        real |= is_real
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"line {no}: duplicate edge ({u}, {v}) ignored; first occurrence wins", stacklevel=2)
            continue
        seen.add(key)
        edges.append((u, v, w))
    if count != m:
        raise ParseError(header_no, f"header declares {m} edges, found {count}")
    if real:
        edges = [(u, v, float(w)) for u, v, w in edges]
    if M is not None:
        for u, v, w in edges:
            if real and not 1 <= w <= M:
                raise RangeError(f"edge ({u}, {v}): real weight {w} outside [1, {M}]")
            if not real and abs(w) > M:
                raise RangeError(f"edge ({u}, {v}): weight {w} outside [-{M}, {M}]")
    return WeightedGraph(n, edges, directed)


def format_graph(g: WeightedGraph) -> str:
    real = g.weight_kind == "real"
    out = [f"p {'directed' if g.directed else 'undirected'} {g.n} {g.m}"]
    for u, v, w in g.edges:
        out.append(f"e {u} {v} {repr(float(w)) if real else int(w)}")
    return "\n".join(out) + "\n"


def parse_tree(text: str) -> TreePattern:
    rows = _lines(text)
    first = next(rows, None)
    if first is None or first[1][0] != "t" or len(first[1]) != 2:
        raise ParseError(first[0] if first else 1, "missing header 't <k>'")
    k = _int(first[1][1], first[0], "node count")
    edges = []
    for no, tok in rows:
        if tok[0] != "e" or len(tok) != 3:
            raise ParseError(no, "expected 'e <a> <b>'")
        a = _int(tok[1], no, "node")
        b = _int(tok[2], no, "node")
        if not (1 <= a <= k and 1 <= b <= k):
            raise ParseError(no, f"node out of range 1..{k}")
        edges.append((a, b))
    if len(edges) != k - 1:
        raise ParseError(first[0], f"tree on {k} nodes needs {k - 1} edge lines, found {len(edges)}")
    return validate_tree(TreePattern(k, edges))


def format_tree(t: TreePattern) -> str:
    return "\n".join([f"t {t.k}"] + [f"e {a} {b}" for a, b in t.edges]) + "\n"


def report_dict(
    report: SolveReport, repetitions: int, emit_solution: bool = True, timing: bool = True, tree: Optional[bool] = None
) -> dict:
    """The stable JSON schema; ``weight`` is null exactly when nothing was found."""
    out = {"weight": report.weight}
    tree_mode = report.mode.startswith("tree") if tree is None else tree
    key = "embedding" if tree_mode else "path"
    sol = None
    if emit_solution and report.weight is not None:
        if tree_mode and report.embedding is not None:
            sol = [report.embedding[i] for i in sorted(report.embedding)]
        elif not tree_mode and report.vertices is not None:
            sol = list(report.vertices)
    out[key] = sol
    out["k"] = report.k
    out["seed"] = report.seed
    out["repetitions"] = repetitions
    out["mode"] = report.mode
    out["elapsed_ms"] = round(report.elapsed * 1000.0, 3) if timing else None
    if report.mode in ("approx", "tree-approx"):
        out["iterations"] = {"count": report.iterations, "trace": [[L, U] for L, U in report.trace]}
    return out


def dumps_report(report: SolveReport, repetitions: int, **kwargs) -> str:
    return json.dumps(report_dict(report, repetitions, **kwargs))
