import pytest

from edgereg.graphs import GraphError, classify, dumbbell_graph, path_graph
from edgereg.lozin import LozinSpec, bridge_lozin, lozin_transform
from edgereg.matching import induced_matching_number
from edgereg.oracle import graph_regularity_oracle

from conftest import CASE_IV_A, CASE_IV_B, graph_from


class TestTransform:
    def test_shared_vertex_split(self):
        G = dumbbell_graph(3, 3, 1)
        spec = LozinSpec(vertex="x1", part1=("x2", "x3"), part2=("y2", "y3"))
        L = lozin_transform(G, spec)
        cls = classify(L)
        assert cls.kind == "Bicyclic"
        assert (cls.shape.n, cls.shape.m, cls.shape.l) == (3, 3, 4)

    def test_bridge_vertex(self):
        G = dumbbell_graph(3, 5, 2)
        L = bridge_lozin(G, index=0)
        s = classify(L).shape
        assert (s.n, s.m, s.l) == (3, 5, 5)

    def test_leaf_stretch(self):
        G = path_graph(4)
        L = lozin_transform(G, LozinSpec(vertex="p4", part1=("p3",), part2=()))
        assert classify(L).kind == "Forest"
        assert L.n == 7 and L.edge_count() == 6  # path lengthened by 3

    def test_invalid_partition(self):
        G = dumbbell_graph(3, 3, 1)
        with pytest.raises(GraphError):
            lozin_transform(G, LozinSpec(vertex="x1", part1=("x2",), part2=("y2", "y3")))
        with pytest.raises(GraphError):
            lozin_transform(
                G, LozinSpec(vertex="x1", part1=("x2", "x3"), part2=("x3", "y2", "y3"))
            )

    def test_fresh_labels(self):
        L = bridge_lozin(dumbbell_graph(3, 3, 1))
        for lab in ("x1.1", "x1.a", "x1.b", "x1.2"):
            assert lab in L.labels
        assert "x1" not in L.labels


class TestBridgeLozin:
    @pytest.mark.parametrize(
        "n,m,l,idx,expected",
        [
            (5, 5, 1, 0, (5, 5, 4)),
            (5, 5, 2, 0, (5, 5, 5)),
            (4, 5, 2, 1, (4, 5, 5)),
            (3, 4, 3, 1, (3, 4, 6)),
            (3, 4, 3, 2, (3, 4, 6)),
        ],
    )
    def test_round_trips(self, n, m, l, idx, expected):
        L = bridge_lozin(dumbbell_graph(n, m, l), index=idx)
        s = classify(L).shape
        assert (s.n, s.m, s.l) == expected

    def test_bad_index(self):
        with pytest.raises(GraphError):
            bridge_lozin(dumbbell_graph(3, 3, 1), index=1)

    def test_case_iv_fixtures_nu_shift(self):
        for text in (CASE_IV_A, CASE_IV_B):
            G = graph_from(text)
            L = bridge_lozin(G)
            assert (
                induced_matching_number(L).size == induced_matching_number(G).size + 1
            )


class TestShiftProperties:
    @pytest.mark.parametrize("n,m,l", [(3, 3, 1), (3, 4, 1), (3, 3, 2), (4, 4, 1), (3, 5, 2)])
    def test_nu_and_reg_shift(self, n, m, l):
        G = dumbbell_graph(n, m, l)
        L = bridge_lozin(G)
        nu_g = induced_matching_number(G).size
        nu_l = induced_matching_number(L).size
        assert nu_l == nu_g + 1
        reg_g = graph_regularity_oracle(G, max_vars=15)
        reg_l = graph_regularity_oracle(L, max_vars=15)
        assert reg_l == reg_g + 1
        assert reg_l - nu_l == reg_g - nu_g  # the shift-invariant offset
