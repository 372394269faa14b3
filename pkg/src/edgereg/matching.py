"""Exact induced matching number and its closed forms.

The brute force is a memoized branch over the lowest-indexed vertex that
still has a live neighbor: either it stays unmatched (delete it) or one of
its incident edges joins the matching (delete both closed neighborhoods,
which is exactly the induced-matching distance condition).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _bit, _bits


@dataclass(frozen=True)
class MatchingResult:
    size: int
    witness: tuple[tuple[str, str], ...]


def induced_matching_number(G: Graph) -> MatchingResult:
    adj = G.adj
    memo: dict[int, tuple[int, tuple]] = {}

    def rec(alive: int) -> tuple[int, tuple]:
        got = memo.get(alive)
        if got is not None:
            return got
        v = -1
        m = alive
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if adj[i] & alive:
                v = i
                break
            m ^= low
        if v < 0:
            memo[alive] = (0, ())
            return 0, ()
        best = rec(alive & ~_bit(v))
        closed_v = adj[v] | _bit(v)
        for u in _bits(adj[v] & alive):
            rest = alive & ~(closed_v | adj[u] | _bit(u))
            s, w = rec(rest)
            if s + 1 > best[0]:
                best = (s + 1, ((v, u),) + w)
        memo[alive] = best
        return best

    size, wit = rec(G.full_mask)
    witness = tuple(
        (G.labels[a], G.labels[b]) for a, b in sorted(tuple(sorted(e)) for e in wit)
    )
    return MatchingResult(size=size, witness=witness)


def matching_number(G: Graph) -> int:
    """Ordinary matching number (edges pairwise disjoint only)."""
    adj = G.adj
    memo: dict[int, int] = {}

    def rec(alive: int) -> int:
        got = memo.get(alive)
        if got is not None:
            return got
        v = -1
        m = alive
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if adj[i] & alive:
                v = i
                break
            m ^= low
        if v < 0:
            memo[alive] = 0
            return 0
        best = rec(alive & ~_bit(v))
        for u in _bits(adj[v] & alive):
            best = max(best, 1 + rec(alive & ~(_bit(v) | _bit(u))))
        memo[alive] = best
        return best

    return rec(G.full_mask)


# -- closed forms ----------------------------------------------------------


def xi3(k: int) -> int:
    """1 when k = 0,1 (mod 3), else 0."""
    if k < 0:
        raise ValueError("xi3 needs k >= 0")
    return 0 if k % 3 == 2 else 1


def nu_closed_path(l: int) -> int:
    """nu(P_l) = floor((l+1)/3)."""
    if l < 1:
        raise ValueError("path needs l >= 1")
    return (l + 1) // 3


def nu_closed_cycle(n: int) -> int:
    """nu(C_n) = floor(n/3)."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return n // 3


def nu_closed_cycle_path(n: int, l: int) -> int:
    """nu(C_n.P_l) = floor(n/3) + floor((l - xi3(n) + 1)/3)."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    if l < 1:
        raise ValueError("path needs l >= 1")
    return n // 3 + (l - xi3(n) + 1) // 3


def nu_closed_dumbbell(n: int, m: int, l: int) -> int:
    """nu(C_n.P_l.C_m) = floor(n/3) + floor(m/3)
    + floor((l - xi3(n) - xi3(m) + 1)/3)."""
    if n < 3 or m < 3:
        raise ValueError("cycles need n,m >= 3")
    if l < 1:
        raise ValueError("bridge needs l >= 1")
    return n // 3 + m // 3 + (l - xi3(n) - xi3(m) + 1) // 3
