import json
from pathlib import Path

import pytest

from cellposet.cli import main

DATA = Path(__file__).parent / "data"
TORUS = str(DATA / "torus_crystallization.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestInvariants:
    def test_bundled_torus_fixture(self, capsys):
        code, out, _ = run(capsys, "invariants", TORUS)
        assert code == 0
        data = json.loads(out)
        assert data == {
            "f": [1, 3, 9, 6],
            "h": [1, 0, 6, -1],
            "betti_gf2": [0, 2, 1],
            "h_double_prime": [1, 0, 0, 1],
        }

    def test_poset_file(self, capsys, tmp_path):
        code, out, _ = run(capsys, "build", "rp", "--n", "3",
                           "--out", str(tmp_path / "rp.json"))
        assert code == 0
        code, out, _ = run(capsys, "invariants", str(tmp_path / "rp.json"))
        assert code == 0
        assert json.loads(out)["betti_gf2"] == [0, 1, 1]


class TestBuild:
    def test_product_spheres_reduce(self, capsys, tmp_path):
        out_file = tmp_path / "final.json"
        code, out, _ = run(capsys, "build", "product-spheres",
                           "--n", "2", "--m", "2", "--reduce",
                           "--out", str(out_file))
        assert code == 0
        data = json.loads(out)
        assert data["vertices"] == 14
        assert len(data["steps"]) == 5
        final = json.loads(out_file.read_text())
        assert len(final["vertices"]) == 14

    def test_from_json_graph_summary(self, capsys):
        code, out, _ = run(capsys, "build", "from-json", TORUS)
        assert code == 0
        data = json.loads(out)
        assert data["admissible"] is True and data["vertices"] == 6

    def test_from_json_rejects_broken_graph(self, capsys, tmp_path):
        src = json.loads(Path(TORUS).read_text())
        src["edges"] = src["edges"][:-1]
        bad = tmp_path / "broken.json"
        bad.write_text(json.dumps(src))
        code, out, _ = run(capsys, "build", "from-json", str(bad))
        assert code == 1
        assert json.loads(out)["admissible"] is False


class TestReduce:
    def test_symbolic_schedule_with_certificate(self, capsys, tmp_path):
        graph_file = tmp_path / "lambda.json"
        run(capsys, "build", "product-spheres", "--n", "1", "--m", "2",
            "--out", str(graph_file))
        cert_file = tmp_path / "cert.json"
        code, out, _ = run(capsys, "reduce", str(graph_file),
                           "--schedule", "symbolic", "--n", "1", "--m", "2",
                           "--certificate", str(cert_file))
        assert code == 0
        assert json.loads(out) == {"vertices": 8, "steps": 2}
        cert = json.loads(cert_file.read_text())
        assert [c["step"] for c in cert] == [1, 2]
        assert all(c["dipole"] for c in cert)

    def test_greedy_on_minimal_graph_is_a_no_op(self, capsys):
        code, out, _ = run(capsys, "reduce", TORUS, "--schedule", "greedy")
        assert code == 0
        assert json.loads(out) == {"vertices": 6, "steps": 0}

    def test_symbolic_needs_dimensions(self, capsys):
        code, _, err = run(capsys, "reduce", TORUS, "--schedule", "symbolic")
        assert code == 2 and "requires" in err

    def test_wrong_schedule_pair_fails_cleanly(self, capsys, tmp_path):
        # symbolic schedule for (2,1) against the (1,2) graph: labels differ
        graph_file = tmp_path / "lambda.json"
        run(capsys, "build", "product-spheres", "--n", "1", "--m", "2",
            "--out", str(graph_file))
        code, _, err = run(capsys, "reduce", str(graph_file),
                           "--schedule", "symbolic", "--n", "2", "--m", "1")
        assert code == 2 and "unknown vertex" in err


class TestCheck:
    def test_sphere_ok(self, capsys):
        code, out, _ = run(capsys, "check", "sphere-h", "--h", "1,1,1,1")
        assert code == 0 and json.loads(out)["ok"] is True

    def test_sphere_failure_exits_one(self, capsys):
        code, out, _ = run(capsys, "check", "sphere-h", "--h", "1,0,6,-1")
        assert code == 1
        assert json.loads(out)["failed_condition"] == "nonnegativity"

    def test_rp(self, capsys):
        code, out, _ = run(capsys, "check", "rp-h", "--n", "3",
                           "--h", "1,0,3,0")
        assert code == 0 and json.loads(out)["ok"] is True

    def test_manifold_with_witness(self, capsys):
        code, out, _ = run(capsys, "check", "manifold-h", "--d", "4",
                           "--h", "1,0,6,0,1")
        assert code == 0
        assert json.loads(out)["witness"] == [1, 0, 0, 0]

    def test_bad_vector_is_usage_error(self, capsys):
        code, _, err = run(capsys, "check", "sphere-h", "--h", "1,x,1")
        assert code == 2 and "bad integer vector" in err


class TestExport:
    def test_dot_output(self, capsys):
        code, out, _ = run(capsys, "export", TORUS, "--format", "dot")
        assert code == 0
        assert out.startswith("graph {")
        assert out.count(" -- ") == 9

    def test_poset_file_rejected(self, capsys, tmp_path):
        run(capsys, "build", "rp", "--n", "3", "--out",
            str(tmp_path / "rp.json"))
        code, _, err = run(capsys, "export", str(tmp_path / "rp.json"))
        assert code == 2 and "graph JSON" in err


class TestUsage:
    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_file(self, capsys):
        code, _, err = run(capsys, "invariants", "no-such-file.json")
        assert code == 2
