import json
import subprocess
import sys

import pytest

from oddthick import generators as gen
from oddthick.canonical import canonical_form
from oddthick.cli import main
from oddthick.coloring import VertexColoring
from oddthick.formats import to_dimacs, to_edge_list, to_graph6
from oddthick.instances import EXAMPLE_GRAPH, EXAMPLE_NOT_ODD, EXAMPLE_ODD

C5 = to_graph6(gen.cycle(5))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def example_files(tmp_path):
    g6 = tmp_path / "example.g6"
    g6.write_text(to_graph6(EXAMPLE_GRAPH) + "\n")
    bad = tmp_path / "not_odd.json"
    bad.write_text(json.dumps(VertexColoring(EXAMPLE_NOT_ODD).to_json()))
    good = tmp_path / "odd.json"
    good.write_text(json.dumps(list(EXAMPLE_ODD)))
    return g6, good, bad


class TestSolve:
    def test_odd_c5(self, capsys):
        code, out, _ = run(capsys, "solve", "--odd", "--graph6", C5)
        assert code == 0
        assert out.splitlines()[0] == "chi_o = 5"
        assert out.splitlines()[1] == "witness: 1 2 3 4 5"

    def test_chromatic(self, capsys):
        code, out, _ = run(capsys, "solve", "--graph6", C5)
        assert code == 0 and out.startswith("chi = 3")

    def test_budget_unknown(self, capsys):
        g = to_graph6(gen.star_subdivision(6))
        code, out, _ = run(capsys, "solve", "--odd", "--graph6", g, "--budget-nodes", "3")
        assert code == 3 and "unknown" in out

    @pytest.mark.parametrize("fmt", ["edgelist", "dimacs", "graph"])
    def test_file_formats(self, capsys, tmp_path, fmt):
        path = tmp_path / "g.txt"
        path.write_text(to_dimacs(gen.cycle(5)) if fmt == "dimacs" else to_edge_list(gen.cycle(5)))
        code, out, _ = run(capsys, "solve", "--odd", f"--{fmt}", str(path))
        assert code == 0 and out.startswith("chi_o = 5")

    def test_report_is_reproducible(self, capsys, tmp_path):
        for d in ("a", "b"):
            assert run(capsys, "solve", "--odd", "--graph6", C5, "--out", str(tmp_path / d))[0] == 0
        assert (tmp_path / "a/solve.json").read_bytes() == (tmp_path / "b/solve.json").read_bytes()


class TestVerify:
    def test_not_odd_reports_vertex_two(self, capsys, example_files):
        g6, _, bad = example_files
        code, out, _ = run(capsys, "verify", "--coloring", str(bad), "--graph", str(g6))
        assert code == 1
        assert "parity failure at vertex 2 (v3)" in out

    def test_odd(self, capsys, example_files):
        g6, good, _ = example_files
        code, out, _ = run(capsys, "verify", "--coloring", str(good), "--graph", str(g6))
        assert code == 0 and "odd coloring with 4 colors" in out

    def test_wrong_length(self, capsys, tmp_path, example_files):
        g6, _, _ = example_files
        short = tmp_path / "short.json"
        short.write_text("[1, 2]")
        code, _, err = run(capsys, "verify", "--coloring", str(short), "--graph", str(g6))
        assert code == 2 and "covers 2 vertices" in err


class TestOtherCommands:
    def test_generate(self, capsys, tmp_path):
        code, out, _ = run(capsys, "generate", "join", "5", "6", "--out", str(tmp_path))
        assert code == 0
        assert out.strip() == to_graph6(gen.join(gen.cycle(5), gen.complete(6)))
        assert (tmp_path / "join_5_6.g6").exists()

    def test_thickness(self, capsys, tmp_path):
        code, out, _ = run(capsys, "thickness", "--graph6", to_graph6(gen.complete(6)), "--out", str(tmp_path))
        assert code == 0 and out.strip() == "theta = 2"
        doc = json.loads((tmp_path / "thickness.json").read_text())
        assert len(doc["certificate"]) == 2

    def test_thickness_unknown(self, capsys):
        code, out, _ = run(capsys, "thickness", "--graph6", to_graph6(gen.complete(9)), "--budget-nodes", "50")
        assert code == 3 and "2 <= theta <= 3" in out

    def test_critical(self, capsys, tmp_path):
        code, out, _ = run(capsys, "critical", "--k", "4", "--n-max", "5", "--out", str(tmp_path))
        assert code == 0
        assert to_graph6(canonical_form(gen.cycle(5))) in out
        assert "3 critical graphs" in out
        assert (tmp_path / "critical_k4.csv").exists()

    def test_critical_threads_do_not_change_output(self, capsys, tmp_path):
        run(capsys, "critical", "--k", "4", "--n-max", "5", "--out", str(tmp_path / "a"))
        run(capsys, "critical", "--k", "4", "--n-max", "5", "--threads", "2", "--out", str(tmp_path / "b"))
        for name in ("critical_k4.jsonl", "critical_k4.csv"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    def test_critical_minor(self, capsys):
        code, out, _ = run(capsys, "critical", "--k", "4", "--n-max", "5", "--minor")
        assert code == 0 and "2 minor-critical graphs" in out

    def test_discharge(self, capsys, tmp_path):
        code, out, _ = run(capsys, "discharge", "--graph6", to_graph6(gen.cycle(6)), "--out", str(tmp_path))
        assert code == 0
        assert "S = -6  S* = -6" in out
        doc = json.loads((tmp_path / "discharge.json").read_text())
        assert len(doc["vertex_violations"]) == 6

    def test_discharge_rejects_non_planar_layer(self, capsys, tmp_path):
        part = tmp_path / "p.json"
        part.write_text(json.dumps([[list(e) for e in gen.complete(5).edges()]]))
        code, out, _ = run(capsys, "discharge", "--graph6", to_graph6(gen.complete(5)), "--partition", str(part))
        assert code == 1 and "not planar" in out

    def test_claims_subset(self, capsys, tmp_path):
        code, out, _ = run(capsys, "claims", "--tier", "smoke", "--only", "chi_o_c5", "--out", str(tmp_path))
        assert code == 0 and "chi_o_c5" in out and "confirmed" in out


class TestUsage:
    def test_parse_error_exit_two(self, capsys):
        code, _, err = run(capsys, "solve", "--graph6", "bad!")
        assert code == 2 and "at byte 3" in err

    def test_missing_input(self, capsys):
        code, _, err = run(capsys, "solve")
        assert code == 2 and "exactly one" in err

    def test_unknown_command(self, capsys):
        assert run(capsys, "bogus")[0] == 2

    def test_unknown_claim(self, capsys, tmp_path):
        code, _, err = run(capsys, "claims", "--only", "nope", "--out", str(tmp_path))
        assert code == 2 and "nope" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "solve", "--graph", "/nonexistent/file.g6")
        assert code == 2 and "cannot read" in err

    def test_console_script(self):
        proc = subprocess.run(
            [sys.executable, "-m", "oddthick.cli", "solve", "--odd", "--graph6", C5],
            capture_output=True, text=True, check=False,
        )
        assert proc.returncode == 0 and proc.stdout.startswith("chi_o = 5")
