"""Verification sweeps: every closed form against the homology oracle.

Each suite returns a SweepReport whose rows are the artifact of record
(CSV export); the acceptance tests and the CLI `verify` verb both run
these functions.  All suites are deterministic for a fixed seed.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import random
import time
from dataclasses import dataclass, field

from .graphs import Graph, classify, dumbbell_graph, cycle_graph, path_graph, cycle_path_graph
from .ideals import (
    banerjee_graph,
    colon_by_monomial,
    depolarization_names,
    edge_ideal,
    polarize,
    power,
)
from .lozin import bridge_lozin
from .matching import (
    induced_matching_number,
    nu_closed_cycle,
    nu_closed_cycle_path,
    nu_closed_dumbbell,
    nu_closed_path,
)
from .oracle import graph_regularity_oracle, regularity_oracle
from .regularity import (
    bounds,
    compute_regularity,
    reg_cycle_power,
    reg_dumbbell_power,
)


@dataclass
class SweepReport:
    suite: str
    rows: list[dict] = field(default_factory=list)

    def add(self, instance: str, expected, actual, elapsed_ms: float = 0.0, **params):
        self.rows.append(
            {
                "instance": instance,
                "params": params,
                "closed_form": expected,
                "oracle": actual,
                "agree": expected == actual,
                "elapsed_ms": round(elapsed_ms, 2),
            }
        )

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.rows if not r["agree"]]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "suite": self.suite,
            "total": self.total,
            "agreements": self.total - len(self.failures),
            "failures": len(self.failures),
        }

    def to_json_dict(self) -> dict:
        return {"schema": "edgereg/1", "summary": self.summary(), "rows": self.rows}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["instance", "params", "closed_form", "oracle", "agree", "elapsed_ms"])
        for r in self.rows:
            w.writerow(
                [
                    r["instance"],
                    json.dumps(r["params"], sort_keys=True),
                    r["closed_form"],
                    r["oracle"],
                    int(r["agree"]),
                    r["elapsed_ms"],
                ]
            )
        return buf.getvalue()


@dataclass(frozen=True)
class GeneratorConfig:
    """Deterministic random bicyclic graphs: pick (n, m, l) uniformly from
    the ranges, build the dumbbell, then attach leaves to uniformly chosen
    vertices.  Identical config => identical sequence."""

    seed: int
    n_range: tuple[int, int] = (3, 7)
    m_range: tuple[int, int] = (3, 7)
    l_range: tuple[int, int] = (1, 4)
    leaves_range: tuple[int, int] = (0, 3)
    max_vertices: int | None = None


def generate_bicyclic(config: GeneratorConfig, count: int) -> list[Graph]:
    rng = random.Random(config.seed)
    out = []
    while len(out) < count:
        n = rng.randint(*config.n_range)
        m = rng.randint(*config.m_range)
        l = rng.randint(*config.l_range)
        t = rng.randint(*config.leaves_range)
        if config.max_vertices is not None and n + m + l - 2 + t > config.max_vertices:
            continue
        G = dumbbell_graph(n, m, l)
        for i in range(t):
            anchor = rng.choice(G.labels)
            labels = list(G.labels) + [f"w{i + 1}"]
            G = Graph(labels, G.edges() + [(anchor, f"w{i + 1}")])
        out.append(G)
    return out


def generate_random_graphs(seed: int, count: int, max_vertices: int = 10) -> list[Graph]:
    """Seeded random graphs with at least one edge (for the bounds suite)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, max_vertices)
        labels = [f"v{i}" for i in range(1, n + 1)]
        p = rng.uniform(0.15, 0.5)
        edges = [
            (labels[i], labels[j])
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p
        ]
        if not edges:
            continue
        out.append(Graph(labels, edges))
    return out


# -- suites ----------------------------------------------------------------


def suite_nu_formulas(
    nm_range=(3, 9), l_range=(1, 7), path_max=20, cycle_max=15, cp_n_max=9, cp_l_max=7
) -> SweepReport:
    rep = SweepReport("nu-formulas")
    for l in range(1, path_max + 1):
        rep.add(f"P_{l}", nu_closed_path(l), induced_matching_number(path_graph(l)).size, l=l)
    for n in range(3, cycle_max + 1):
        rep.add(f"C_{n}", nu_closed_cycle(n), induced_matching_number(cycle_graph(n)).size, n=n)
    for n in range(3, cp_n_max + 1):
        for l in range(1, cp_l_max + 1):
            rep.add(
                f"C_{n}.P_{l}",
                nu_closed_cycle_path(n, l),
                induced_matching_number(cycle_path_graph(n, l)).size,
                n=n,
                l=l,
            )
    lo, hi = nm_range
    for n in range(lo, hi + 1):
        for m in range(n, hi + 1):
            for l in range(l_range[0], l_range[1] + 1):
                rep.add(
                    f"C_{n}.P_{l}.C_{m}",
                    nu_closed_dumbbell(n, m, l),
                    induced_matching_number(dumbbell_graph(n, m, l)).size,
                    n=n,
                    m=m,
                    l=l,
                )
    return rep


def _dumbbell_params(nm_range, l_range, max_vertices):
    lo, hi = nm_range
    for n in range(lo, hi + 1):
        for m in range(n, hi + 1):
            for l in range(l_range[0], l_range[1] + 1):
                if n + m + l - 2 <= max_vertices:
                    yield n, m, l


def _dumbbell_reg_row(params):
    n, m, l = params
    t0 = time.perf_counter()
    closed = compute_regularity(dumbbell_graph(n, m, l)).reg_ideal
    oracle = graph_regularity_oracle(dumbbell_graph(n, m, l), max_vars=15)
    ms = (time.perf_counter() - t0) * 1000
    return f"C_{n}.P_{l}.C_{m}", closed, oracle, ms, {"n": n, "m": m, "l": l}


def suite_dumbbell_reg(nm_range=(3, 7), l_range=(1, 4), max_vertices=15, jobs=1) -> SweepReport:
    rep = SweepReport("dumbbell-reg")
    params = list(_dumbbell_params(nm_range, l_range, max_vertices))
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            results = pool.map(_dumbbell_reg_row, params)
    else:
        results = [_dumbbell_reg_row(p) for p in params]
    for inst, closed, oracle, ms, kw in results:
        rep.add(inst, closed, oracle, ms, **kw)
    return rep


def _bicyclic_reg_row(G: Graph):
    t0 = time.perf_counter()
    res = compute_regularity(G)
    oracle = graph_regularity_oracle(G, max_vars=13)
    ms = (time.perf_counter() - t0) * 1000
    return res, oracle, ms


def suite_bicyclic_reg(count=200, seed=20240917, max_vertices=13, jobs=1) -> SweepReport:
    rep = SweepReport("bicyclic-reg")
    config = GeneratorConfig(
        seed=seed, n_range=(3, 7), m_range=(3, 7), l_range=(1, 4),
        leaves_range=(0, 4), max_vertices=max_vertices,
    )
    graphs = generate_bicyclic(config, count)
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            results = pool.map(_bicyclic_reg_row, graphs)
    else:
        results = [_bicyclic_reg_row(G) for G in graphs]
    for idx, (res, oracle, ms) in enumerate(results):
        rep.add(
            f"random-{idx}", res.reg_ideal, oracle, ms,
            method=res.method, n=res.witnesses.get("n"), m=res.witnesses.get("m"),
            l=res.witnesses.get("l"),
        )
    return rep


POWER_INSTANCES = [
    (3, 3, 1, 2),
    (3, 3, 2, 2),
    (3, 4, 1, 2),
    (3, 4, 2, 2),
    (4, 4, 2, 2),
    (3, 3, 1, 3),
]


def _power_row(params):
    n, m, l, q = params
    t0 = time.perf_counter()
    closed = reg_dumbbell_power(n, m, l, q)
    I = edge_ideal(dumbbell_graph(n, m, l))
    oracle = regularity_oracle(power(I, q), max_vars=22).reg_ideal
    ms = (time.perf_counter() - t0) * 1000
    return f"I(C_{n}.P_{l}.C_{m})^{q}", closed, oracle, ms, {"n": n, "m": m, "l": l, "q": q}


def suite_powers(jobs=1) -> SweepReport:
    rep = SweepReport("powers")
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            results = pool.map(_power_row, POWER_INSTANCES)
    else:
        results = [_power_row(p) for p in POWER_INSTANCES]
    for inst, closed, oracle, ms, kw in results:
        rep.add(inst, closed, oracle, ms, **kw)
    return rep


def suite_cycle_powers(n_range=(4, 7)) -> SweepReport:
    rep = SweepReport("cycle-powers")
    for n in range(n_range[0], n_range[1] + 1):
        t0 = time.perf_counter()
        closed = reg_cycle_power(n, 2)
        oracle = regularity_oracle(power(edge_ideal(cycle_graph(n)), 2), max_vars=22).reg_ideal
        ms = (time.perf_counter() - t0) * 1000
        rep.add(f"I(C_{n})^2", closed, oracle, ms, n=n, q=2)
    return rep


def suite_colon_degree2(max_vertices=9, qs=(1, 2)) -> SweepReport:
    """For each dumbbell with l <= 2 and each q-fold edge product M:
    the colon (I^{q+1}:M) is generated in degree 2, its polarization is the
    edge ideal of the associated graph G', and reg of that ideal is at most
    reg I(G)."""
    rep = SweepReport("colon-degree2")
    for n, m, l in _dumbbell_params((3, 7), (1, 2), max_vertices):
        G = dumbbell_graph(n, m, l)
        I = edge_ideal(G)
        reg_g = compute_regularity(G).reg_ideal
        edges = G.edges()
        for q in qs:
            for combo in itertools.combinations_with_replacement(edges, q):
                t0 = time.perf_counter()
                M = I.monomial({})
                for u, v in combo:
                    M = tuple(
                        a + b for a, b in zip(M, I.monomial({u: 1, v: 1}))
                    )
                Iq1 = power(I, q + 1)
                col = colon_by_monomial(Iq1, M)
                deg2 = col.max_degree() == 2 and all(sum(g) == 2 for g in col.gens)
                pol = depolarization_names(polarize(col))
                Gp = banerjee_graph(G, list(combo))
                same = set(pol.gen_strings()) == set(edge_ideal(Gp).gen_strings())
                reg_col = regularity_oracle(col, max_vars=22).reg_ideal
                ok = deg2 and same and reg_col <= reg_g
                ms = (time.perf_counter() - t0) * 1000
                rep.add(
                    f"(I(C_{n}.P_{l}.C_{m})^{q + 1}:{'*'.join('.'.join(e) for e in combo)})",
                    True,
                    ok,
                    ms,
                    n=n, m=m, l=l, q=q,
                    degree2=deg2, banerjee_match=same,
                    reg_colon=reg_col, reg_graph=reg_g,
                )
    return rep


def _lozin_row(params):
    n, m, l = params
    G = dumbbell_graph(n, m, l)
    t0 = time.perf_counter()
    L = bridge_lozin(G)
    nu_ok = (
        induced_matching_number(L).size == induced_matching_number(G).size + 1
    )
    reg_ok = graph_regularity_oracle(L, max_vars=15) == graph_regularity_oracle(G, max_vars=15) + 1
    ms = (time.perf_counter() - t0) * 1000
    return f"L(C_{n}.P_{l}.C_{m})", nu_ok and reg_ok, ms, {"n": n, "m": m, "l": l}


def suite_lozin(max_vertices=12, jobs=1) -> SweepReport:
    rep = SweepReport("lozin")
    params = list(_dumbbell_params((3, 7), (1, 4), max_vertices))
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            results = pool.map(_lozin_row, params)
    else:
        results = [_lozin_row(p) for p in params]
    for inst, ok, ms, kw in results:
        rep.add(inst, True, ok, ms, **kw)
    return rep


def _reg_or_one(G: Graph, cap: int = 12) -> int:
    """Oracle reg(I(G)), with the zero-ideal convention reg = 1 for
    edgeless graphs (reg R/0 = 0)."""
    if G.edge_count() == 0:
        return 1
    return graph_regularity_oracle(G, max_vars=cap)


def _bounds_row(args):
    idx, G = args
    rng = random.Random(900_000 + idx)
    t0 = time.perf_counter()
    b = bounds(G)
    reg = graph_regularity_oracle(G, max_vars=10)
    checks = {
        "ok_katzman": b.katzman_lower <= reg,
        "ok_decycling": b.decycling_upper is None or reg <= b.decycling_upper,
        "ok_hamiltonian": b.hamiltonian_upper is None or reg <= b.hamiltonian_upper,
    }
    # induced-subgraph monotonicity on a random nonempty vertex subset
    keep = 0
    while not keep:
        keep = rng.getrandbits(G.n) & G.full_mask
    checks["ok_monotone"] = _reg_or_one(G.induced(keep)) <= reg
    # vertex deletion: reg(G) <= max{reg(G-x), reg(G-N[x]) + 1}
    x = rng.choice(G.labels)
    checks["ok_delete_vertex"] = reg <= max(
        _reg_or_one(G.delete_vertices([x])),
        _reg_or_one(G.delete_closed_neighborhood(x)) + 1,
    )
    # edge deletion: reg(G) <= max{2, reg(G-e), reg(G_e) + 1}
    u, v = rng.choice(G.edges())
    checks["ok_delete_edge"] = reg <= max(
        2,
        _reg_or_one(G.delete_edge(u, v)),
        _reg_or_one(G.delete_edge_neighborhood(u, v)) + 1,
    )
    ms = (time.perf_counter() - t0) * 1000
    return checks, reg, b, ms


def suite_bounds(count=300, seed=20240918, max_vertices=10, jobs=1) -> SweepReport:
    """Criteria for 300 seeded random graphs: the three numeric bounds,
    induced-subgraph monotonicity, the two deletion inequalities, and
    Kalai-Meshulam disjoint-union additivity on the small instances."""
    rep = SweepReport("bounds")
    graphs = generate_random_graphs(seed, count, max_vertices)
    work = list(enumerate(graphs))
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            results = pool.map(_bounds_row, work)
    else:
        results = [_bounds_row(w) for w in work]
    for idx, (checks, reg, b, ms) in enumerate(results):
        rep.add(
            f"random-{idx}", True, all(checks.values()), ms,
            reg=reg, nu=b.nu, decycling=b.decycling, **checks,
        )
    # disjoint unions of consecutive small instances: reg R/I adds exactly
    small = [G for G in graphs if G.n <= 6]
    for k in range(0, min(len(small), 60) - 1, 2):
        G1, G2 = small[k], small[k + 1]
        labels = [f"a.{lab}" for lab in G1.labels] + [f"b.{lab}" for lab in G2.labels]
        edges = [(f"a.{u}", f"a.{v}") for u, v in G1.edges()] + [
            (f"b.{u}", f"b.{v}") for u, v in G2.edges()
        ]
        U = Graph(labels, edges)
        t0 = time.perf_counter()
        r = graph_regularity_oracle(U, max_vars=12)
        r1 = graph_regularity_oracle(G1, max_vars=12)
        r2 = graph_regularity_oracle(G2, max_vars=12)
        ms = (time.perf_counter() - t0) * 1000
        rep.add(
            f"disjoint-union-{k}", (r1 - 1) + (r2 - 1), r - 1, ms,
            n1=G1.n, n2=G2.n,
        )
    return rep


SUITES = {
    "nu-formulas": suite_nu_formulas,
    "dumbbell-reg": suite_dumbbell_reg,
    "bicyclic-reg": suite_bicyclic_reg,
    "powers": suite_powers,
    "cycle-powers": suite_cycle_powers,
    "colon-degree2": suite_colon_degree2,
    "lozin": suite_lozin,
    "bounds": suite_bounds,
}
