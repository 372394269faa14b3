"""Independent ground truth for regularity via Hochster's formula.

A squarefree monomial ideal is the Stanley-Reisner ideal of the complex
whose minimal non-faces are the generator supports (for an edge ideal this
is the independence complex of the graph).  Then

    reg(I) = max{ d + 2 : some W subseteq vars has H~_d(Delta_W) != 0 },

with reduced homology computed over GF(2) by bitset Gaussian elimination
(a rational mode with signed boundaries is available for spot checks).
Non-squarefree ideals are polarized first; polarization preserves graded
Betti numbers.

The subset sweep prunes exactly: subsets whose restricted complex is a
simplex or a cone are acyclic and contribute nothing, and no homology can
live above the top face dimension.  Those prunings never change the table,
so pruned and unpruned sweeps agree bit for bit.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import Graph, _bit, _bits
from .ideals import IdealError, MonomialIdeal, polarize
from .regularity import RegularityResult

DEFAULT_SWEEP_CAP = 15
HARD_CAP = 24
ENV_MAX_VARS = "EDGEREG_MAX_VARS"


class OracleCapError(RuntimeError):
    """Input exceeds a configured oracle resource cap."""


def effective_cap(max_vars: int | None = None) -> int:
    if max_vars is not None:
        return max_vars
    env = os.environ.get(ENV_MAX_VARS)
    return int(env) if env else DEFAULT_SWEEP_CAP


class SimplicialComplex:
    """Face predicate: S is a face iff it contains no minimal non-face."""

    __slots__ = ("nvars", "labels", "mnf", "mnf_by_vertex", "is_graph", "adj", "_alpha_memo")

    def __init__(self, labels, mnf_masks):
        self.labels = tuple(labels)
        self.nvars = len(self.labels)
        mnf = sorted(set(mnf_masks))
        # enforce the antichain invariant
        mnf = [m for m in mnf if not any(o != m and o & m == o for o in mnf)]
        self.mnf = tuple(mnf)
        by_v = [[] for _ in range(self.nvars)]
        for m in self.mnf:
            for v in _bits(m):
                by_v[v].append(m)
        self.mnf_by_vertex = tuple(tuple(ms) for ms in by_v)
        self.is_graph = all(bin(m).count("1") == 2 for m in self.mnf)
        adj = [0] * self.nvars
        if self.is_graph:
            for m in self.mnf:
                a, b = _bits(m)
                adj[a] |= _bit(b)
                adj[b] |= _bit(a)
        self.adj = tuple(adj)
        self._alpha_memo: dict[int, int] = {0: 0}

    @classmethod
    def from_squarefree_ideal(cls, I: MonomialIdeal) -> "SimplicialComplex":
        if not I.is_squarefree():
            raise IdealError("Stanley-Reisner complex needs a squarefree ideal")
        if I.is_zero():
            raise IdealError("zero ideal has no Stanley-Reisner data")
        masks = []
        for g in I.gens:
            m = 0
            for i, e in enumerate(g):
                if e:
                    m |= _bit(i)
            masks.append(m)
        return cls(I.variables, masks)

    @classmethod
    def independence_complex(cls, G: Graph) -> "SimplicialComplex":
        masks = [G.mask(e) for e in G.edges()]
        if not masks:
            raise IdealError("graph has no edges (zero edge ideal)")
        return cls(G.labels, masks)

    # -- face machinery ----------------------------------------------------

    def restricted_mnf(self, W: int) -> list[int]:
        return [m for m in self.mnf if m & W == m]

    def cone_or_simplex(self, W: int) -> bool:
        """True when Delta_W is a simplex or has a cone vertex (both are
        acyclic, so the subset contributes nothing to any Betti number)."""
        if self.is_graph:
            adj = self.adj
            m = W
            while m:
                low = m & -m
                if not adj[low.bit_length() - 1] & W:
                    return True
                m ^= low
            return False
        covered = 0
        for m in self.mnf:
            if m & W == m:
                covered |= m
        return covered != W  # includes the simplex case (covered == 0 != W)

    def faces_by_size(self, W: int, smax: int | None = None) -> list[list[int]]:
        """faces[s] = all faces of cardinality s inside W, s = 0..smax."""
        verts = list(_bits(W))
        top = len(verts) if smax is None else min(smax, len(verts))
        faces: list[list[int]] = [[] for _ in range(top + 1)]
        faces[0].append(0)
        by_v = self.mnf_by_vertex

        def grow(start: int, cur: int, size: int):
            for k in range(start, len(verts)):
                v = verts[k]
                new = cur | _bit(v)
                blocked = False
                for m in by_v[v]:
                    if m & new == m:  # m subseteq new implies m subseteq W
                        blocked = True
                        break
                if blocked:
                    continue
                faces[size + 1].append(new)
                if size + 1 < top:
                    grow(k + 1, new, size + 1)

        if top >= 1:
            grow(0, 0, 0)
        return faces

    def alpha(self, W: int) -> int:
        """Largest face size inside W for graph complexes (the independence
        number of the induced subgraph); memoized across the whole sweep."""
        memo = self._alpha_memo
        adj = self.adj

        def rec(mask: int) -> int:
            got = memo.get(mask)
            if got is not None:
                return got
            low = mask & -mask
            v = low.bit_length() - 1
            rest = mask ^ low
            take = 1 + rec(rest & ~adj[v])
            skip = rec(rest) if adj[v] & rest else take - 1
            out = take if take >= skip else skip
            memo[mask] = out
            return out

        return rec(W)

    def max_face_bound(self, W: int) -> int:
        """Upper bound on the largest face size inside W (exact for graph
        complexes)."""
        if self.is_graph:
            return self.alpha(W)
        size = bin(W).count("1")
        # each member of a greedy family of disjoint restricted non-faces
        # forces at least one vertex out of any face
        used = 0
        disjoint = 0
        for m in self.mnf:
            if m & W == m and not m & used:
                used |= m
                disjoint += 1
        return size - disjoint


# -- homology ranks --------------------------------------------------------


def _rank_gf2(row_index: dict[int, int], cols: list[int]) -> int:
    """Rank of the boundary matrix over GF(2); columns are face masks, the
    row space is indexed by their facets."""
    pivots: dict[int, int] = {}
    rank = 0
    for f in cols:
        col = 0
        m = f
        while m:
            low = m & -m
            col |= 1 << row_index[f ^ low]
            m ^= low
        while col:
            p = col.bit_length() - 1
            piv = pivots.get(p)
            if piv is None:
                pivots[p] = col
                rank += 1
                break
            col ^= piv
    return rank


def _rank_rational(row_index: dict[int, int], cols: list[int]) -> int:
    """Rank of the signed boundary matrix over the rationals (fraction
    Gaussian elimination; spot-check scale only)."""
    nrows = len(row_index)
    columns: list[dict[int, Fraction]] = []
    for f in cols:
        col: dict[int, Fraction] = {}
        sign = 1
        m = f
        while m:
            low = m & -m
            col[row_index[f ^ low]] = Fraction(sign)
            sign = -sign
            m ^= low
        columns.append(col)
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for col in columns:
        while col:
            p = max(col)
            piv = pivots.get(p)
            if piv is None:
                pivots[p] = col
                rank += 1
                break
            factor = col[p] / piv[p]
            new = dict(col)
            for r, val in piv.items():
                acc = new.get(r, Fraction(0)) - factor * val
                if acc:
                    new[r] = acc
                else:
                    new.pop(r, None)
            col = new
    return rank


_RANK = {"gf2": _rank_gf2, "q": _rank_rational}


def _homology_from_faces(faces: list[list[int]], field: str = "gf2") -> list[int]:
    """Reduced homology ranks [H~_{-1}, H~_0, ...] from faces grouped by
    cardinality (faces[s] has the size-s faces; faces[0] = [empty])."""
    rank_fn = _RANK[field]
    top = len(faces) - 1
    ranks = []
    boundary_ranks = [0] * (top + 2)  # boundary_ranks[s]: rank of d: C_s -> C_{s-1}
    for s in range(1, top + 1):
        if faces[s]:
            row_index = {f: i for i, f in enumerate(faces[s - 1])}
            boundary_ranks[s] = rank_fn(row_index, faces[s])
    for s in range(top + 1):  # homological dimension d = s - 1
        h = len(faces[s]) - boundary_ranks[s] - boundary_ranks[s + 1]
        ranks.append(h)
    return ranks


def reduced_homology_ranks(cx: SimplicialComplex, W: int, field: str = "gf2") -> list[int]:
    """Ranks of H~_d(Delta_W) for d = -1, 0, ..., |W|-1."""
    if bin(W).count("1") > HARD_CAP:
        raise OracleCapError(f"subset larger than {HARD_CAP} vertices")
    faces = cx.faces_by_size(W)
    ranks = _homology_from_faces(faces, field)
    want = bin(W).count("1") + 1
    ranks += [0] * (want - len(ranks))
    return ranks[:want]


# -- Betti tables ----------------------------------------------------------


@dataclass
class BettiTable:
    """Sparse graded Betti numbers of R/I: (i, j) -> rank."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    coefficient_field: str = "gf2"
    partial: bool = False
    subsets_visited: int = 0

    def add(self, i: int, j: int, rank: int):
        if rank:
            self.entries[(i, j)] = self.entries.get((i, j), 0) + rank

    def reg_quotient(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    def reg_ideal(self) -> int:
        return self.reg_quotient() + 1

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["i", "j", "rank"])
        for (i, j), r in sorted(self.entries.items()):
            w.writerow([i, j, r])
        return buf.getvalue()


def _subsets_by_size(n: int):
    masks = sorted(range(1, 1 << n), key=lambda m: bin(m).count("1"))
    return masks


def _accumulate(table: BettiTable, W: int, ranks: list[int]):
    j = bin(W).count("1")
    for d, r in enumerate(ranks, start=-1):
        if r:
            table.add(j - d - 1, j, r)


def betti_table_unpruned(cx: SimplicialComplex, field_name: str = "gf2") -> BettiTable:
    """Every subset, every dimension; no shortcuts.  Reference
    implementation for the pruning-equivalence tests."""
    table = BettiTable(coefficient_field=field_name)
    for W in _subsets_by_size(cx.nvars):
        table.subsets_visited += 1
        _accumulate(table, W, reduced_homology_ranks(cx, W, field_name))
    return table


def subset_pruned_sweep(
    cx: SimplicialComplex, budget: int | None = None, field_name: str = "gf2"
) -> BettiTable:
    """Full Betti table with exact prunings: cones/simplices are skipped
    (zero contribution) and no dimension above the top face is touched.
    ``budget`` caps the number of surviving subsets processed; exceeding it
    returns a partial table flagged lower-bound-only."""
    table = BettiTable(coefficient_field=field_name)
    for W in _subsets_by_size(cx.nvars):
        if cx.cone_or_simplex(W):
            continue
        if budget is not None and table.subsets_visited >= budget:
            table.partial = True
            break
        table.subsets_visited += 1
        smax = cx.max_face_bound(W)
        faces = cx.faces_by_size(W, smax=smax)
        _accumulate(table, W, _homology_from_faces(faces, field_name))
    return table


def _reg_only_sweep(
    cx: SimplicialComplex, budget: int | None = None, field_name: str = "gf2"
) -> tuple[int, bool, int]:
    """max{d+2 : H~_d(Delta_W) != 0} with the reg-directed pruning: per
    subset, dimensions that cannot beat the current best are skipped.
    Returns (reg, partial, subsets_visited)."""
    best = 0
    visited = 0
    partial = False
    for W in _subsets_by_size(cx.nvars):
        if cx.cone_or_simplex(W):
            continue
        if budget is not None and visited >= budget:
            partial = True
            break
        visited += 1
        smax = cx.max_face_bound(W)
        if smax + 1 <= best:
            continue
        faces = cx.faces_by_size(W, smax=smax)
        top = len(faces) - 1
        while top > 0 and not faces[top]:
            top -= 1
        rank_fn = _RANK[field_name]
        b_ranks: dict[int, int] = {}

        def brank(s: int) -> int:
            if s not in b_ranks:
                if s <= 0 or s > top or not faces[s]:
                    b_ranks[s] = 0
                else:
                    row_index = {f: i for i, f in enumerate(faces[s - 1])}
                    b_ranks[s] = rank_fn(row_index, faces[s])
            return b_ranks[s]

        for d in range(top - 1, best - 2, -1):  # d+2 > best  <=>  d >= best-1
            s = d + 1
            h = len(faces[s]) - brank(s) - brank(s + 1)
            if h:
                best = max(best, d + 2)
                break
    return best, partial, visited


# -- public oracle entry points --------------------------------------------


def regularity_oracle_squarefree(
    I: MonomialIdeal,
    field_name: str = "gf2",
    max_vars: int | None = None,
    budget: int | None = None,
) -> tuple[RegularityResult, BettiTable]:
    """Regularity plus the full Betti table of R/I for a squarefree ideal."""
    if I.is_zero():
        raise IdealError("zero ideal")
    cap = effective_cap(max_vars)
    if len(I.variables) > min(cap, HARD_CAP):
        raise OracleCapError(
            f"{len(I.variables)} variables exceeds the oracle cap {min(cap, HARD_CAP)}"
        )
    cx = SimplicialComplex.from_squarefree_ideal(I)
    table = subset_pruned_sweep(cx, budget=budget, field_name=field_name)
    result = RegularityResult(
        reg_ideal=table.reg_ideal(),
        method="Oracle",
        witnesses={
            "field": field_name,
            "variables": len(I.variables),
            "subsets_visited": table.subsets_visited,
            "partial": table.partial,
        },
    )
    return result, table


def regularity_oracle(
    I: MonomialIdeal,
    field_name: str = "gf2",
    max_vars: int | None = None,
    budget: int | None = None,
) -> RegularityResult:
    """Regularity of an arbitrary monomial ideal: polarize (which preserves
    graded Betti numbers), then sweep the Stanley-Reisner complex."""
    if I.is_zero():
        raise IdealError("zero ideal")
    pol = polarize(I)
    cap = effective_cap(max_vars)
    nv = len(pol.variables)
    if nv > min(cap, HARD_CAP):
        raise OracleCapError(
            f"polarized ideal needs {nv} variables, cap is {min(cap, HARD_CAP)}"
        )
    cx = SimplicialComplex.from_squarefree_ideal(pol)
    reg, partial, visited = _reg_only_sweep(cx, budget=budget, field_name=field_name)
    return RegularityResult(
        reg_ideal=reg,
        method="Oracle",
        witnesses={
            "field": field_name,
            "variables": nv,
            "subsets_visited": visited,
            "partial": partial,
        },
    )


def graph_regularity_oracle(G: Graph, field_name: str = "gf2", max_vars: int | None = None) -> int:
    """reg(I(G)) straight from the independence complex."""
    cap = effective_cap(max_vars)
    if G.n > min(cap, HARD_CAP):
        raise OracleCapError(f"{G.n} vertices exceeds the oracle cap {min(cap, HARD_CAP)}")
    cx = SimplicialComplex.independence_complex(G)
    reg, partial, _ = _reg_only_sweep(cx, field_name=field_name)
    assert not partial
    return reg
