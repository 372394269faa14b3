"""The Lozin stretch: replace a vertex x by a 4-vertex path, splitting
N(x) across the two ends.  Raises both the induced matching number and the
regularity by exactly 1; stretching a bridge vertex of a dumbbell turns
C_n.P_l.C_m into C_n.P_{l+3}.C_m.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import DumbbellShape, Graph, GraphError, find_dumbbell


@dataclass(frozen=True)
class LozinSpec:
    vertex: str
    part1: tuple[str, ...]
    part2: tuple[str, ...]


def lozin_transform(G: Graph, spec: LozinSpec) -> Graph:
    """Replace spec.vertex x by the path x.1 - x.a - x.b - x.2, joining x.1
    to part1 and x.2 to part2 (a partition of N(x))."""
    x = spec.vertex
    nbrs = set(G.neighbors(x))
    p1, p2 = set(spec.part1), set(spec.part2)
    if p1 & p2 or p1 | p2 != nbrs:
        raise GraphError(f"(part1, part2) is not a partition of N({x})")
    fresh = [f"{x}.1", f"{x}.a", f"{x}.b", f"{x}.2"]
    labels: list[str] = []
    for lab in G.labels:
        if lab == x:
            labels.extend(fresh)
        else:
            labels.append(lab)
    edges = [e for e in G.edges() if x not in e]
    edges += [(fresh[0], fresh[1]), (fresh[1], fresh[2]), (fresh[2], fresh[3])]
    edges += [(fresh[0], y) for y in spec.part1]
    edges += [(fresh[3], y) for y in spec.part2]
    return Graph(labels, edges)


def bridge_lozin_spec(G: Graph, shape: DumbbellShape | None = None, index: int = 0) -> LozinSpec:
    """Canonical partition for stretching the bridge vertex bridge[index]:
    part1 = the neighbors on the cycle-1 side (for the first bridge vertex,
    its two cycle-1 neighbors), part2 = everything else."""
    if shape is None:
        shape = find_dumbbell(G)
    if not 0 <= index < shape.l:
        raise GraphError(f"bridge index {index} out of range (l={shape.l})")
    x = shape.bridge[index]
    nbrs = set(G.neighbors(x))
    if index == 0:
        cyc = shape.cycle1
        pos = cyc.index(x)
        part1 = {cyc[(pos - 1) % shape.n], cyc[(pos + 1) % shape.n]}
    else:
        part1 = {shape.bridge[index - 1]}
    part2 = nbrs - part1
    return LozinSpec(vertex=x, part1=tuple(sorted(part1)), part2=tuple(sorted(part2)))


def bridge_lozin(G: Graph, shape: DumbbellShape | None = None, index: int = 0) -> Graph:
    return lozin_transform(G, bridge_lozin_spec(G, shape, index))
