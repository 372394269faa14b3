"""Immutable simple graphs with bitset adjacency.

Vertex sets are plain ints used as bitmasks over vertex indices, so every
deletion / neighborhood / distance operator needed by the regularity
characterizations is a handful of word operations.  Structural
classification (forest / unicyclic / bicyclic-with-dumbbell) lives here
too, since the closed-form engines dispatch on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_VERTICES = 63


class GraphError(ValueError):
    """Raised for malformed graph input or out-of-range operations."""


def _bit(i: int) -> int:
    return 1 << i


def _bits(mask: int):
    """Iterate set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph; immutable after construction.

    ``labels`` gives the external name of each vertex index; ``adj[i]`` is
    the bitmask of neighbors of vertex i.
    """

    __slots__ = ("labels", "adj", "n", "_index")

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[str, str]]):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise GraphError("duplicate vertex labels")
        if len(labels) > MAX_VERTICES:
            raise GraphError(f"too many vertices ({len(labels)} > {MAX_VERTICES})")
        self.labels = labels
        self.n = len(labels)
        self._index = {lab: i for i, lab in enumerate(labels)}
        adj = [0] * self.n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop edge at {u!r}")
            i, j = self._index[u], self._index[v]
            adj[i] |= _bit(j)
            adj[j] |= _bit(i)
        self.adj = tuple(adj)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edge_list(cls, text: str) -> "Graph":
        """Parse the edge-list format: one edge per line "label1 label2",
        '#' starts a comment, blank lines ignored."""
        labels: list[str] = []
        seen: set[str] = set()
        edges: list[tuple[str, str]] = []
        got_line = False
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            got_line = True
            parts = line.split()
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: expected two labels, got {parts!r}")
            u, v = parts
            if u == v:
                raise GraphError(f"line {lineno}: loop edge at {u!r}")
            for lab in (u, v):
                if lab not in seen:
                    seen.add(lab)
                    labels.append(lab)
            edges.append((u, v))
        if not got_line:
            raise GraphError("empty edge-list document")
        return cls(labels, edges)

    @classmethod
    def from_json_dict(cls, d: dict) -> "Graph":
        return cls(d["vertices"], [tuple(e) for e in d["edges"]])

    def to_json_dict(self) -> dict:
        return {"vertices": list(self.labels), "edges": [list(e) for e in self.edges()]}

    def to_edge_list(self) -> str:
        lines = [f"{u} {v}" for u, v in self.edges()]
        for lab in self.labels:
            if not self.adj[self.index(lab)]:
                lines.append(f"# isolated: {lab}")
        return "\n".join(lines) + "\n"

    # -- basic queries -----------------------------------------------------

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"no vertex {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for lab in labels:
            m |= _bit(self.index(lab))
        return m

    def labels_of(self, mask: int) -> list[str]:
        return [self.labels[i] for i in _bits(mask)]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[str, str]]:
        out = []
        for i in range(self.n):
            for j in _bits(self.adj[i] >> (i + 1) << (i + 1)):
                out.append((self.labels[i], self.labels[j]))
        return out

    def edge_count(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def degree(self, label: str) -> int:
        return bin(self.adj[self.index(label)]).count("1")

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self.adj[self.index(u)] & _bit(self.index(v)))

    def neighbors(self, label: str) -> list[str]:
        return self.labels_of(self.adj[self.index(label)])

    def neighborhood_closed(self, label: str) -> int:
        i = self.index(label)
        return self.adj[i] | _bit(i)

    # -- deletion operators ------------------------------------------------

    def induced(self, keep_mask: int) -> "Graph":
        """Induced subgraph on the vertices of keep_mask; labels retained."""
        keep = list(_bits(keep_mask))
        labels = [self.labels[i] for i in keep]
        edges = []
        for a, i in enumerate(keep):
            for j in _bits(self.adj[i] & keep_mask):
                if j > i:
                    edges.append((self.labels[i], self.labels[j]))
        return Graph(labels, edges)

    def delete_vertices(self, verts: Iterable[str] | int) -> "Graph":
        mask = verts if isinstance(verts, int) else self.mask(verts)
        return self.induced(self.full_mask & ~mask)

    def delete_closed_neighborhood(self, label: str) -> "Graph":
        return self.induced(self.full_mask & ~self.neighborhood_closed(label))

    def delete_edge(self, u: str, v: str) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"no edge {u!r}-{v!r}")
        drop = {(u, v), (v, u)}
        return Graph(self.labels, [e for e in self.edges() if e not in drop])

    def delete_edge_neighborhood(self, u: str, v: str) -> "Graph":
        """The graph G_e: induced on V minus N[u] and N[v]."""
        if not self.has_edge(u, v):
            raise GraphError(f"no edge {u!r}-{v!r}")
        mask = self.neighborhood_closed(u) | self.neighborhood_closed(v)
        return self.induced(self.full_mask & ~mask)

    # -- distance and shells -----------------------------------------------

    def distances_from(self, source_mask: int) -> list[float]:
        """BFS distance from a vertex set; inf for unreachable."""
        dist = [float("inf")] * self.n
        frontier = source_mask
        seen = source_mask
        d = 0
        while frontier:
            for i in _bits(frontier):
                dist[i] = d
            nxt = 0
            for i in _bits(frontier):
                nxt |= self.adj[i]
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
        return dist

    def distance(self, u: str, v: str) -> float:
        return self.distances_from(_bit(self.index(u)))[self.index(v)]

    def gamma(self, h_mask: int) -> int:
        """Vertices at distance exactly 1 from H (neighbors of H outside H)."""
        if not h_mask:
            raise GraphError("gamma of empty set")
        nb = 0
        for i in _bits(h_mask):
            nb |= self.adj[i]
        return nb & ~h_mask

    def shell_k(self, h_mask: int, k: int) -> "Graph":
        """Induced subgraph on vertices at distance >= k from H (k >= 1)."""
        if not h_mask:
            raise GraphError("shell of empty set")
        if k < 1:
            raise GraphError("shell_k requires k >= 1")
        dist = self.distances_from(h_mask)
        keep = 0
        for i in range(self.n):
            if dist[i] >= k:
                keep |= _bit(i)
        return self.induced(keep)

    def shell_0(self, h_mask: int) -> "Graph":
        """Distance-0 shell: keep vertices outside H plus H-vertices of
        degree >= 3, but drop every edge with both ends in H."""
        if not h_mask:
            raise GraphError("shell of empty set")
        keep = []
        for i in range(self.n):
            if not (h_mask >> i) & 1 or bin(self.adj[i]).count("1") >= 3:
                keep.append(i)
        keep_set = set(keep)
        labels = [self.labels[i] for i in keep]
        edges = []
        for i in keep:
            for j in _bits(self.adj[i]):
                if j > i and j in keep_set:
                    if (h_mask >> i) & 1 and (h_mask >> j) & 1:
                        continue
                    edges.append((self.labels[i], self.labels[j]))
        return Graph(labels, edges)

    # -- cycle structure ---------------------------------------------------

    def components(self) -> list[int]:
        """Connected components as vertex masks."""
        out = []
        seen = 0
        for i in range(self.n):
            if (seen >> i) & 1:
                continue
            comp = _bit(i)
            frontier = comp
            while frontier:
                nxt = 0
                for j in _bits(frontier):
                    nxt |= self.adj[j]
                frontier = nxt & ~comp
                comp |= frontier
            out.append(comp)
            seen |= comp
        return out

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1

    def core_mask(self) -> int:
        """Strip degree<=1 vertices repeatedly; what remains carries every
        cycle."""
        alive = self.full_mask
        changed = True
        while changed:
            changed = False
            for i in _bits(alive):
                if bin(self.adj[i] & alive).count("1") <= 1:
                    alive &= ~_bit(i)
                    changed = True
        return alive

    def has_cycle(self, mask: int | None = None) -> bool:
        if mask is None:
            return self.core_mask() != 0
        sub_alive = mask
        changed = True
        while changed:
            changed = False
            for i in _bits(sub_alive):
                if bin(self.adj[i] & sub_alive).count("1") <= 1:
                    sub_alive &= ~_bit(i)
                    changed = True
        return sub_alive != 0

    def cyclomatic_number(self) -> int:
        return self.edge_count() - self.n + len(self.components())


@dataclass(frozen=True)
class DumbbellShape:
    """Decomposition of a bicyclic graph's unique dumbbell C_n.P_l.C_m.

    ``bridge`` lists the l path vertices with bridge[0] in cycle1 and
    bridge[-1] in cycle2 (for l=1 the single vertex lies on both cycles).
    Cycles are swapped on construction so that n mod 3 <= m mod 3; the
    ``swapped`` flag records whether that happened.
    """

    n: int
    m: int
    l: int
    cycle1: tuple[str, ...]
    cycle2: tuple[str, ...]
    bridge: tuple[str, ...]
    swapped: bool = False


@dataclass(frozen=True)
class GraphClass:
    kind: str  # "Forest" | "Unicyclic" | "Bicyclic" | "Other"
    cycle: tuple[str, ...] | None = None
    shape: DumbbellShape | None = None
    reason: str | None = None


def _walk_from(G: Graph, core: int, junctions: int, start: int, first: int):
    """Follow degree-2 core vertices from junction `start` in direction
    `first` until another junction is hit.  Returns (endpoint, path) where
    path = [start, first, ..., endpoint]."""
    path = [start, first]
    prev, cur = start, first
    while not (junctions >> cur) & 1:
        nxt_mask = G.adj[cur] & core & ~_bit(prev)
        nxt = next(_bits(nxt_mask))
        path.append(nxt)
        prev, cur = cur, nxt
    return cur, path


def _normalize_shape(G: Graph, cyc1: list[int], cyc2: list[int], bridge: list[int]) -> DumbbellShape:
    n, m, l = len(cyc1), len(cyc2), len(bridge)
    swapped = False
    if n % 3 > m % 3:
        cyc1, cyc2 = cyc2, cyc1
        n, m = m, n
        bridge = bridge[::-1]
        swapped = True
    lab = G.labels
    return DumbbellShape(
        n=n, m=m, l=l,
        cycle1=tuple(lab[i] for i in cyc1),
        cycle2=tuple(lab[i] for i in cyc2),
        bridge=tuple(lab[i] for i in bridge),
        swapped=swapped,
    )


def find_dumbbell(G: Graph) -> DumbbellShape:
    """Locate the dumbbell of a connected bicyclic graph.

    Raises GraphError for anything else (theta graphs included: their two
    cycles share at least two vertices, so no dumbbell exists).
    """
    if not G.is_connected():
        raise GraphError("not connected")
    if G.edge_count() != G.n + 1:
        raise GraphError("not bicyclic (|E| != |V|+1)")
    core = G.core_mask()
    deg = {i: bin(G.adj[i] & core).count("1") for i in _bits(core)}
    big = sorted(i for i, d in deg.items() if d >= 3)
    if len(big) == 1 and deg[big[0]] == 4:
        s = big[0]
        junctions = _bit(s)
        dirs = list(_bits(G.adj[s] & core))
        end, path = _walk_from(G, core, junctions, s, dirs[0])
        assert end == s
        cyc1 = path[:-1]
        rest = [d for d in dirs if d not in cyc1]
        end, path = _walk_from(G, core, junctions, s, rest[0])
        assert end == s
        cyc2 = path[:-1]
        return _normalize_shape(G, cyc1, cyc2, [s])
    if len(big) == 2 and deg[big[0]] == 3 and deg[big[1]] == 3:
        u, v = big
        junctions = _bit(u) | _bit(v)
        loops_u, to_v = [], []
        for d in _bits(G.adj[u] & core):
            end, path = _walk_from(G, core, junctions, u, d)
            (loops_u if end == u else to_v).append(path)
        if not loops_u:
            raise GraphError("no dumbbell (theta graph: cycles share >= 2 vertices)")
        cyc1 = loops_u[0][:-1]
        bridge = to_v[0]
        loops_v = []
        for d in _bits(G.adj[v] & core):
            if d == bridge[-2]:
                continue
            end, path = _walk_from(G, core, junctions, v, d)
            if end == v:
                loops_v.append(path)
                break
        cyc2 = loops_v[0][:-1]
        return _normalize_shape(G, cyc1, cyc2, bridge)
    raise GraphError("no dumbbell")


def classify(G: Graph) -> GraphClass:
    cyc = G.cyclomatic_number()
    if cyc == 0:
        return GraphClass(kind="Forest")
    if cyc == 1:
        core = G.core_mask()
        # order the unique cycle by walking it
        start = next(_bits(core))
        cycle = [start]
        prev, cur = start, next(_bits(G.adj[start] & core))
        while cur != start:
            cycle.append(cur)
            nxt = next(_bits(G.adj[cur] & core & ~_bit(prev)))
            prev, cur = cur, nxt
        return GraphClass(kind="Unicyclic", cycle=tuple(G.labels[i] for i in cycle))
    if cyc == 2:
        if not G.is_connected():
            return GraphClass(kind="Other", reason="disconnected multi-cycle graph")
        try:
            shape = find_dumbbell(G)
        except GraphError as exc:
            return GraphClass(kind="Other", reason=str(exc))
        return GraphClass(kind="Bicyclic", shape=shape)
    return GraphClass(kind="Other", reason=f"cyclomatic number {cyc} > 2")


def decycling_number(G: Graph) -> int:
    """Minimum number of vertices whose deletion leaves an acyclic graph.

    Exhaustive by increasing subset size; capped at 20 vertices.
    """
    if G.n > 20:
        raise GraphError("decycling_number limited to 20 vertices")
    if not G.has_cycle():
        return 0
    from itertools import combinations

    verts = range(G.n)
    for k in range(1, G.n + 1):
        for combo in combinations(verts, k):
            drop = 0
            for i in combo:
                drop |= _bit(i)
            if not G.has_cycle(G.full_mask & ~drop):
                return k
    return G.n  # unreachable


# -- standard constructions ------------------------------------------------


def path_graph(l: int, prefix: str = "p") -> Graph:
    if l < 1:
        raise GraphError("path needs >= 1 vertex")
    labels = [f"{prefix}{i}" for i in range(1, l + 1)]
    return Graph(labels, [(labels[i], labels[i + 1]) for i in range(l - 1)])


def cycle_graph(n: int, prefix: str = "x") -> Graph:
    if n < 3:
        raise GraphError("cycle needs >= 3 vertices")
    labels = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def dumbbell_graph(n: int, m: int, l: int) -> Graph:
    """The dumbbell C_n.P_l.C_m with labels x1..xn, y1..ym, z2..z(l-1).

    The bridge path runs x1, z2, ..., z(l-1), y1; for l=1 the two cycles
    share the single vertex x1 (and the second cycle is x1, y2, ..., ym).
    """
    if n < 3 or m < 3:
        raise GraphError("cycle lengths must be >= 3")
    if l < 1:
        raise GraphError("bridge needs >= 1 vertex")
    xs = [f"x{i}" for i in range(1, n + 1)]
    edges = [(xs[i], xs[(i + 1) % n]) for i in range(n)]
    if l == 1:
        ys = ["x1"] + [f"y{i}" for i in range(2, m + 1)]
    else:
        ys = [f"y{i}" for i in range(1, m + 1)]
    edges += [(ys[i], ys[(i + 1) % m]) for i in range(m)]
    labels = xs + [y for y in ys if y != "x1"]
    if l >= 2:
        bridge = ["x1"] + [f"z{i}" for i in range(2, l)] + ["y1"]
        labels += bridge[1:-1]
        edges += [(bridge[i], bridge[i + 1]) for i in range(l - 1)]
    return Graph(labels, edges)


def cycle_path_graph(n: int, l: int) -> Graph:
    """C_n with a path P_l glued at one vertex (the path's first vertex is
    the cycle vertex x1)."""
    if l < 1:
        raise GraphError("path needs >= 1 vertex")
    G = cycle_graph(n)
    labels = list(G.labels) + [f"z{i}" for i in range(2, l + 1)]
    edges = G.edges()
    chain = ["x1"] + [f"z{i}" for i in range(2, l + 1)]
    edges += [(chain[i], chain[i + 1]) for i in range(l - 1)]
    return Graph(labels, edges)
