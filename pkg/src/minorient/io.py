"""Flat text formats: graphs, targets, weights, stabbing instances, closures.

.dag   line 1 is the vertex count; every other non-empty line is "u v" for
       the arc u -> v (0-based ids). The loader validates acyclicity.
.tgt   lines "u v", order-insensitive pairs; must be edges of the paired graph.
.wts   lines "v cost" with nonnegative costs.
.stab  line 1 "n root"; then n-1 lines "child parent"; then interval lines
       "a b" (a third numeric field, if present, is ignored).
Closure dump: .dag header plus "u v d" per directed arc and "u v u" per
undirected edge, sorted; used for golden tests.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InputError
from .graphs import Dag, Pdag, TargetEdges
from .hasse import HasseTree, StabInterval


def _data_lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def load_dag(path: str | Path) -> Dag:
    lines = _data_lines(Path(path).read_text())
    if not lines or len(lines[0]) != 1:
        raise InputError(f"{path}: first line must be the vertex count")
    try:
        n = int(lines[0][0])
        arcs = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc
    return Dag(n, arcs)


def dump_dag(g: Dag, path: str | Path) -> None:
    rows = [str(g.n)] + [f"{u} {v}" for u, v in sorted(g.arcs)]
    Path(path).write_text("\n".join(rows) + "\n")


def load_targets(path: str | Path, g: Dag) -> TargetEdges:
    lines = _data_lines(Path(path).read_text())
    try:
        pairs = [(int(a), int(b)) for a, b in lines]
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc
    t = TargetEdges.of(pairs)
    t.validate_against(g)
    return t


def load_weights(path: str | Path) -> dict[int, float]:
    out: dict[int, float] = {}
    for fields in _data_lines(Path(path).read_text()):
        if len(fields) != 2:
            raise InputError(f"{path}: expected 'vertex cost' lines")
        v, c = int(fields[0]), float(fields[1])
        if c < 0:
            raise InputError(f"{path}: negative cost for vertex {v}")
        out[v] = c
    return out


def dump_pdag(p: Pdag) -> str:
    rows = [str(p.n)]
    rows += [f"{u} {v} d" for u, v in sorted(p.directed)]
    rows += [f"{u} {v} u" for u, v in sorted(p.undirected)]
    return "\n".join(rows) + "\n"


def load_pdag(text: str) -> Pdag:
    lines = _data_lines(text)
    n = int(lines[0][0])
    directed, undirected = [], []
    for u, v, kind in lines[1:]:
        if kind == "d":
            directed.append((int(u), int(v)))
        elif kind == "u":
            undirected.append((int(u), int(v)))
        else:
            raise InputError(f"unknown edge kind {kind!r}")
    return Pdag(n, directed, undirected)


def load_stab_instance(path: str | Path) -> tuple[HasseTree, list[StabInterval]]:
    lines = _data_lines(Path(path).read_text())
    if not lines or len(lines[0]) != 2:
        raise InputError(f"{path}: first line must be 'n root'")
    n, root = int(lines[0][0]), int(lines[0][1])
    if not 0 <= root < n:
        raise InputError(f"{path}: root {root} out of range")
    parent: dict[int, int | None] = {root: None}
    for fields in lines[1 : n]:
        if len(fields) != 2:
            raise InputError(f"{path}: expected 'child parent' lines")
        c, p = int(fields[0]), int(fields[1])
        if c in parent:
            raise InputError(f"{path}: vertex {c} has two parents")
        parent[c] = p
    if sorted(parent) != list(range(n)):
        raise InputError(f"{path}: parent lines must cover all non-root vertices")
    tree = HasseTree(root=root, parent=parent, component=frozenset(range(n)))
    intervals = []
    for fields in lines[n:]:
        if len(fields) not in (2, 3):
            raise InputError(f"{path}: expected 'a b [ignored]' interval lines")
        intervals.append(StabInterval(start=int(fields[0]), end=int(fields[1])))
    return tree, intervals
