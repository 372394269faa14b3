import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgereg.graphs import Graph, cycle_graph, cycle_path_graph, dumbbell_graph, path_graph
from edgereg.matching import (
    induced_matching_number,
    matching_number,
    nu_closed_cycle,
    nu_closed_cycle_path,
    nu_closed_dumbbell,
    nu_closed_path,
    xi3,
)

from conftest import EXAMPLE_NU_PLUS_3, graph_from


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    labels = [f"v{i}" for i in range(n)]
    edges = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph(labels, edges)


class TestBruteForce:
    def test_paper_values(self):
        assert induced_matching_number(path_graph(5)).size == 2
        assert induced_matching_number(cycle_graph(7)).size == 2
        assert induced_matching_number(graph_from(EXAMPLE_NU_PLUS_3)).size == 3

    def test_edgeless(self):
        G = Graph(["a", "b"], [])
        res = induced_matching_number(G)
        assert res.size == 0 and res.witness == ()

    def test_witness_is_induced_matching(self):
        rng = random.Random(3)
        for _ in range(25):
            G = random_graph(rng, rng.randint(3, 11))
            res = induced_matching_number(G)
            verts = [v for e in res.witness for v in e]
            assert len(set(verts)) == 2 * res.size
            induced = G.induced(G.mask(verts))
            assert induced.edge_count() == res.size

    def test_witness_deterministic(self):
        G = dumbbell_graph(5, 5, 3)
        assert induced_matching_number(G).witness == induced_matching_number(G).witness

    def test_match_at_least_nu(self):
        rng = random.Random(5)
        for _ in range(25):
            G = random_graph(rng, rng.randint(3, 10))
            assert matching_number(G) >= induced_matching_number(G).size

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_induced_subgraph_monotone(self, data):
        n = data.draw(st.integers(3, 12))
        edges = data.draw(
            st.sets(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                    lambda e: e[0] < e[1]
                ),
                max_size=20,
            )
        )
        labels = [f"v{i}" for i in range(n)]
        G = Graph(labels, [(labels[a], labels[b]) for a, b in edges])
        keep = data.draw(st.integers(1, G.full_mask))
        H = G.induced(keep & G.full_mask)
        assert induced_matching_number(H).size <= induced_matching_number(G).size


class TestClosedForms:
    def test_xi3(self):
        assert xi3(3) == 1 and xi3(5) == 0 and xi3(7) == 1
        assert [xi3(k) for k in range(6)] == [1, 1, 0, 1, 1, 0]
        with pytest.raises(ValueError):
            xi3(-1)

    def test_plug_ins(self):
        assert nu_closed_dumbbell(3, 3, 1) == 2
        assert nu_closed_dumbbell(5, 5, 3) == 3
        assert nu_closed_cycle_path(3, 3) == 2

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            nu_closed_path(0)
        with pytest.raises(ValueError):
            nu_closed_cycle(2)
        with pytest.raises(ValueError):
            nu_closed_dumbbell(3, 3, 0)

    def test_paths_and_cycles_vs_brute(self):
        for l in range(1, 16):
            assert nu_closed_path(l) == induced_matching_number(path_graph(l)).size
        for n in range(3, 13):
            assert nu_closed_cycle(n) == induced_matching_number(cycle_graph(n)).size

    def test_cycle_path_vs_brute(self):
        for n in range(3, 8):
            for l in range(1, 6):
                assert (
                    nu_closed_cycle_path(n, l)
                    == induced_matching_number(cycle_path_graph(n, l)).size
                )

    def test_dumbbell_vs_brute_small(self):
        for n in range(3, 7):
            for m in range(n, 7):
                for l in range(1, 5):
                    assert (
                        nu_closed_dumbbell(n, m, l)
                        == induced_matching_number(dumbbell_graph(n, m, l)).size
                    )

    def test_lozin_step_formula(self):
        for n in range(3, 8):
            for m in range(n, 8):
                for l in range(1, 6):
                    assert nu_closed_dumbbell(n, m, l + 3) == nu_closed_dumbbell(n, m, l) + 1
