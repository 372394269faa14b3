"""Small-scale monomial-ideal arithmetic.

Monomials are exponent tuples over a named variable list.  Everything here
is exact and deliberately naive: powers by enumerating q-fold products,
colon by the gcd rule, polarization by exponent flattening.  The
even-connection search and the associated graph G' implement the
colon-ideal characterization (I^{s+1} : e_1...e_s)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, GraphError

POWER_GENERATOR_CAP = 5000


class IdealError(ValueError):
    """Raised for malformed ideals or exceeded caps."""


Monomial = tuple[int, ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def _mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _minimalize(gens: list[Monomial]) -> list[Monomial]:
    """Keep the antichain of divisibility-minimal monomials."""
    uniq = sorted(set(gens), key=lambda g: (sum(g), g))
    out: list[Monomial] = []
    for g in uniq:
        if not any(_mono_divides(h, g) for h in out):
            out.append(g)
    return out


class MonomialIdeal:
    """Minimal monomial generating set over a named variable list.

    Generators are stored canonically: minimalized, sorted by degree then
    lexicographically by exponent vector.
    """

    __slots__ = ("variables", "gens", "_index")

    def __init__(self, variables, gens):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise IdealError("duplicate variable names")
        nv = len(self.variables)
        clean: list[Monomial] = []
        for g in gens:
            g = tuple(g)
            if len(g) != nv or any(e < 0 for e in g):
                raise IdealError(f"bad exponent vector {g!r}")
            if any(g):
                clean.append(g)
        self.gens = tuple(_minimalize(clean))
        self._index = {v: i for i, v in enumerate(self.variables)}

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.variables == other.variables
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.variables, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({len(self.variables)} vars, {len(self.gens)} gens)"

    def is_zero(self) -> bool:
        return not self.gens

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def monomial(self, pairs: dict[str, int]) -> Monomial:
        exp = [0] * len(self.variables)
        for v, e in pairs.items():
            exp[self._index[v]] = e
        return tuple(exp)

    def format_monomial(self, g: Monomial) -> str:
        parts = []
        for v, e in zip(self.variables, g):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return " ".join(parts) if parts else "1"

    def to_text(self) -> str:
        """Debug format: one generator per line, space-separated
        variable^exponent tokens."""
        return "\n".join(self.format_monomial(g) for g in self.gens) + "\n"

    @classmethod
    def from_text(cls, variables, text: str) -> "MonomialIdeal":
        variables = tuple(variables)
        index = {v: i for i, v in enumerate(variables)}
        gens = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            exp = [0] * len(variables)
            for tok in line.split():
                if "^" in tok:
                    v, e = tok.rsplit("^", 1)
                    exp[index[v]] += int(e)
                else:
                    exp[index[tok]] += 1
            gens.append(tuple(exp))
        return cls(variables, gens)

    def gen_strings(self) -> list[str]:
        return [self.format_monomial(g) for g in self.gens]


def edge_ideal(G: Graph) -> MonomialIdeal:
    nv = len(G.labels)
    gens = []
    for u, v in G.edges():
        exp = [0] * nv
        exp[G.index(u)] = 1
        exp[G.index(v)] = 1
        gens.append(tuple(exp))
    return MonomialIdeal(G.labels, gens)


def power(I: MonomialIdeal, q: int, cap: int = POWER_GENERATOR_CAP) -> MonomialIdeal:
    """I^q by minimalizing all q-fold products of generators."""
    if q < 1:
        raise IdealError("power needs q >= 1")
    if I.is_zero():
        return I
    count = 0
    prods = []
    for combo in itertools.combinations_with_replacement(I.gens, q):
        g = combo[0]
        for h in combo[1:]:
            g = _mono_mul(g, h)
        prods.append(g)
        count += 1
        if count > cap:
            raise IdealError(f"power generator cap exceeded ({cap})")
    return MonomialIdeal(I.variables, prods)


def colon_by_monomial(I: MonomialIdeal, M: Monomial) -> MonomialIdeal:
    """(I : M) = minimalization of { g / gcd(g, M) }."""
    M = tuple(M)
    gens = [_mono_div(g, _mono_gcd(g, M)) for g in I.gens]
    return MonomialIdeal(I.variables, gens)


def polarize(I: MonomialIdeal) -> MonomialIdeal:
    """Standard polarization: x^k becomes x.1 x.2 ... x.k.

    Every variable (even exponent-1 ones) is renamed "label.j" so the
    output naming is uniform."""
    height = [1] * len(I.variables)
    for g in I.gens:
        for i, e in enumerate(g):
            height[i] = max(height[i], e)
    new_vars = []
    offset = []
    for v, h in zip(I.variables, height):
        offset.append(len(new_vars))
        new_vars.extend(f"{v}.{j}" for j in range(1, h + 1))
    gens = []
    for g in I.gens:
        exp = [0] * len(new_vars)
        for i, e in enumerate(g):
            for j in range(e):
                exp[offset[i] + j] = 1
        gens.append(tuple(exp))
    return MonomialIdeal(new_vars, gens)


def depolarization_names(I: MonomialIdeal) -> MonomialIdeal:
    """Rename polarized variables back to graph-flavored names:
    "x.1" -> "x" and "x.j" -> "x'"*(j-1) — so a squarefree polarization can
    be compared with a whiskered edge ideal by generator strings."""
    ren = []
    for v in I.variables:
        base, _, j = v.rpartition(".")
        ren.append(base + "'" * (int(j) - 1) if base else v)
    return MonomialIdeal(ren, I.gens)


# -- even-connections and Banerjee's graph G' ------------------------------


@dataclass(frozen=True)
class EvenConnection:
    u: str
    v: str
    path: tuple[str, ...]
    edges_used: tuple[tuple[str, str], ...]


def even_connections(G: Graph, M: list[tuple[str, str]]) -> list[EvenConnection]:
    """All pairs (u, v) even-connected with respect to the edge product M.

    A witness is an alternating walk u = p_0, p_1, ..., p_{2s+1} = v whose
    edges at positions (2j+1, 2j+2) are drawn from M — each distinct edge
    at most as often as it occurs in M — and whose remaining steps are
    edges of G.  One witness per unordered endpoint pair, s >= 1.
    """
    mult: dict[frozenset, int] = {}
    for u, v in M:
        if not G.has_edge(u, v):
            raise GraphError(f"M contains a non-edge {u!r}-{v!r}")
        mult[frozenset((u, v))] = mult.get(frozenset((u, v)), 0) + 1
    q = len(M)
    found: dict[frozenset, EvenConnection] = {}
    order = G.labels

    def record(u, v, path, used):
        key = frozenset((u, v))
        if key not in found:
            found[key] = EvenConnection(
                u=u, v=v, path=tuple(path), edges_used=tuple(used)
            )

    def extend(u, cur, path, counts, used, consumed):
        # cur sits at an even position; take one G-edge then one M-edge,
        # after which a further G-edge ends a valid walk.
        for w in G.neighbors(cur):
            for e, c in counts.items():
                if c == 0 or w not in e:
                    continue
                other = next(iter(e - {w})) if len(e) == 2 else w
                counts2 = dict(counts)
                counts2[e] -= 1
                used2 = used + [tuple(sorted(e))]
                path2 = path + [w, other]
                for t in G.neighbors(other):
                    record(u, t, path2 + [t], used2)
                if consumed + 1 < q:
                    extend(u, other, path2, counts2, used2, consumed + 1)

    for u in order:
        extend(u, u, [u], mult, [], 0)
    return sorted(
        found.values(), key=lambda ec: (order.index(ec.u), order.index(ec.v))
    )


def banerjee_graph(G: Graph, M: list[tuple[str, str]]) -> Graph:
    """G' from the colon characterization: G plus an edge for each
    even-connected pair u != v and a whisker u-u' for each u even-connected
    to itself."""
    conns = even_connections(G, M)
    labels = list(G.labels)
    edges = G.edges()
    have = {frozenset(e) for e in edges}
    for ec in conns:
        if ec.u == ec.v:
            w = ec.u + "'"
            labels.append(w)
            edges.append((ec.u, w))
        elif frozenset((ec.u, ec.v)) not in have:
            edges.append((ec.u, ec.v))
            have.add(frozenset((ec.u, ec.v)))
    return Graph(labels, edges)


def b_sequence(G: Graph, q_max: int, cap: int = 22):
    """b_q = reg(I(G)^q) - 2q computed by the oracle for q = 1..q_max.

    Returns (values, truncated_at): truncated_at is the first q whose
    polarized ideal exceeds the variable cap (None when complete).
    """
    from .oracle import regularity_oracle

    I = edge_ideal(G)
    values: list[int] = []
    for q in range(1, q_max + 1):
        Iq = power(I, q)
        pol = polarize(Iq)
        if len(pol.variables) > cap:
            return values, q
        res = regularity_oracle(Iq, max_vars=cap)
        values.append(res.reg_ideal - 2 * q)
    return values, None
