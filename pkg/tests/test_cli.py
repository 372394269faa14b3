import json

import pytest

from edgereg.cli import main
from edgereg.graphs import Graph, cycle_graph, dumbbell_graph

from conftest import EXAMPLE_NU_PLUS_3


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        payload = json.loads(captured.out) if captured.out.strip() else None
        err = json.loads(captured.err) if captured.err.strip() else None
        return code, payload, err

    return _run


@pytest.fixture
def example_file(tmp_path):
    p = tmp_path / "example.edges"
    p.write_text(EXAMPLE_NU_PLUS_3)
    return str(p)


def write_graph(tmp_path, G: Graph, name="g.edges") -> str:
    p = tmp_path / name
    p.write_text(G.to_edge_list())
    return str(p)


class TestClassify:
    def test_bicyclic(self, run, example_file):
        code, out, _ = run("classify", "-i", example_file)
        assert code == 0
        assert out["schema"] == "edgereg/1"
        assert out["class"] == "Bicyclic"
        assert (out["shape"]["n"], out["shape"]["m"], out["shape"]["l"]) == (5, 5, 3)

    def test_json_graph_input(self, run, tmp_path):
        p = tmp_path / "c7.json"
        p.write_text(json.dumps(cycle_graph(7).to_json_dict()))
        code, out, _ = run("classify", "-i", str(p))
        assert code == 0 and out["class"] == "Unicyclic"

    def test_loop_file_exit_2(self, run, tmp_path):
        p = tmp_path / "bad.edges"
        p.write_text("a a\n")
        code, out, err = run("classify", "-i", str(p))
        assert code == 2 and out is None and "error" in err

    def test_missing_file_exit_2(self, run):
        code, _, err = run("classify", "-i", "/nonexistent/g.edges")
        assert code == 2 and "error" in err


class TestNuAndReg:
    def test_nu(self, run, example_file):
        code, out, _ = run("nu", "-i", example_file)
        assert code == 0 and out["nu"] == 3
        assert len(out["witness"]) == 3

    def test_reg_example(self, run, example_file):
        code, out, _ = run("reg", "-i", example_file)
        assert code == 0
        assert out["reg"] == 6 and out["nu"] == 3
        assert out["method"] == "BicyclicCaseIII"
        assert out["bounds"]["katzman_lower"] == 4

    def test_reg_c7(self, run, tmp_path):
        path = write_graph(tmp_path, cycle_graph(7))
        code, out, _ = run("reg", "-i", path)
        assert code == 0 and out["reg"] == 3 and out["method"] == "Cycle"

    def test_reg_with_oracle_agrees(self, run, tmp_path):
        path = write_graph(tmp_path, dumbbell_graph(3, 4, 2))
        code, out, _ = run("reg", "-i", path, "--oracle")
        assert code == 0
        assert out["oracle_reg"] == out["reg"]

    def test_reg_oracle_betti_csv(self, run, tmp_path):
        path = write_graph(tmp_path, cycle_graph(5))
        csv_path = str(tmp_path / "betti.csv")
        code, out, _ = run("reg", "-i", path, "--oracle", "--csv", csv_path)
        assert code == 0 and out["betti_csv"] == csv_path
        lines = open(csv_path).read().strip().splitlines()
        assert lines[0] == "i,j,rank" and "3,5,1" in lines

    def test_reg_rational_field(self, run, tmp_path):
        path = write_graph(tmp_path, cycle_graph(5))
        code, out, _ = run("reg", "-i", path, "--oracle", "--field", "q")
        assert code == 0 and out["oracle_reg"] == 3


class TestPowerReg:
    def test_c3p2c3_squared(self, run, tmp_path):
        path = write_graph(tmp_path, dumbbell_graph(3, 3, 2))
        code, out, _ = run("power-reg", "-i", path, "-q", "2")
        assert code == 0
        assert out["closed_form"] == 5 and out["method"] == "DumbbellPower"

    def test_q1_equals_reg(self, run, tmp_path):
        path = write_graph(tmp_path, dumbbell_graph(3, 3, 1))
        code, out, _ = run("power-reg", "-i", path, "-q", "1")
        assert code == 0 and out["closed_form"] == 3

    def test_long_bridge_default_caps_exit_3(self, run, tmp_path):
        # closed form refused (l=3) and the oracle exceeds the default cap:
        # only the lower bound 2q + nu - 1 = 6 is reported
        path = write_graph(tmp_path, dumbbell_graph(5, 5, 3))
        code, out, _ = run("power-reg", "-i", path, "-q", "2")
        assert code == 3
        assert out["power_lower_bound"] == 6
        assert "closed_form_refused" in out and "error" in out

    def test_oracle_fallback_small(self, run, tmp_path):
        # no closed form for a cycle power via this verb's dumbbell branch,
        # but the oracle is feasible: reg I(C_4)^2 = 4
        path = write_graph(tmp_path, cycle_graph(4))
        code, out, _ = run("power-reg", "-i", path, "-q", "2", "--max-vars", "22")
        assert code == 0 and out["oracle_reg"] == 4

    def test_cross_check(self, run, tmp_path):
        path = write_graph(tmp_path, dumbbell_graph(3, 3, 1))
        code, out, _ = run("power-reg", "-i", path, "-q", "2", "--oracle", "--max-vars", "22")
        assert code == 0
        assert out["oracle_reg"] == out["closed_form"] == 5


class TestLozinAndColon:
    def test_lozin(self, run, tmp_path):
        path = write_graph(tmp_path, dumbbell_graph(3, 3, 1))
        code, out, _ = run("lozin", "-i", path)
        assert code == 0
        assert out["class"] == "Bicyclic" and out["shape"]["l"] == 4

    def test_lozin_bad_index(self, run, tmp_path):
        path = write_graph(tmp_path, dumbbell_graph(3, 3, 1))
        code, _, err = run("lozin", "-i", path, "--bridge-index", "5")
        assert code == 2 and "error" in err

    def test_colon(self, run, tmp_path):
        path = write_graph(tmp_path, dumbbell_graph(3, 3, 1))
        code, out, _ = run("colon", "-i", path, "--edges", "x2-x3")
        assert code == 0
        assert out["max_degree"] == 2
        assert "x1^2" in out["colon_generators"]
        assert any(ec["u"] == ec["v"] == "x1" for ec in out["even_connections"])
        assert "x1'" in out["banerjee_graph"]["vertices"]

    def test_colon_non_edge(self, run, tmp_path):
        path = write_graph(tmp_path, dumbbell_graph(3, 3, 1))
        code, _, err = run("colon", "-i", path, "--edges", "x2-y2")
        assert code == 2 and "error" in err


class TestOracleVerb:
    def test_betti_output(self, run, tmp_path):
        path = write_graph(tmp_path, cycle_graph(5))
        code, out, _ = run("oracle", "-i", path)
        assert code == 0
        assert out["oracle_reg"] == 3 and not out["partial"]
        assert {"i": 3, "j": 5, "rank": 1} in out["betti"]

    def test_cap_exit_3(self, run, tmp_path):
        path = write_graph(tmp_path, Graph(
            [f"v{i}" for i in range(17)],
            [(f"v{i}", f"v{i + 1}") for i in range(16)],
        ))
        code, _, err = run("oracle", "-i", path)
        assert code == 3 and "error" in err


class TestVerifyAndGen:
    def test_verify_small_sweep(self, run):
        code, out, _ = run("verify", "dumbbell-reg", "--n", "3..4", "--l", "1..2")
        assert code == 0
        assert out["summary"]["failures"] == 0
        assert out["summary"]["total"] > 0

    def test_verify_unknown_suite(self, run):
        code, _, err = run("verify", "no-such-suite")
        assert code == 2 and "error" in err

    def test_gen_deterministic(self, run, tmp_path):
        d1, d2 = tmp_path / "a", tmp_path / "b"
        d1.mkdir(), d2.mkdir()
        code1, out1, _ = run("gen", "--seed", "7", "--count", "3", "--out-dir", str(d1))
        code2, out2, _ = run("gen", "--seed", "7", "--count", "3", "--out-dir", str(d2))
        assert code1 == code2 == 0
        for p1, p2 in zip(out1["files"], out2["files"]):
            assert open(p1).read() == open(p2).read()

    def test_gen_output_is_bicyclic(self, run, tmp_path):
        code, out, _ = run(
            "gen", "--seed", "11", "--count", "2", "--out-dir", str(tmp_path)
        )
        assert code == 0
        from edgereg.graphs import classify

        for p in out["files"]:
            G = Graph.from_edge_list(open(p).read())
            assert classify(G).kind == "Bicyclic"
