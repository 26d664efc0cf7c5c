import subprocess
import sys

import pytest

from hgcolor.cli import main

PATH_HG = "a b c\nc d\nd e\n"
TRIANGLE_HG = "a b\nb c\na c\n"


@pytest.fixture
def path_file(tmp_path):
    f = tmp_path / "path.hg"
    f.write_text(PATH_HG)
    return str(f)


@pytest.fixture
def triangle_file(tmp_path):
    f = tmp_path / "tri.hg"
    f.write_text(TRIANGLE_HG)
    return str(f)


class TestCheck:
    def test_reports_structure(self, path_file, capsys):
        assert main(["check", path_file]) == 0
        out = capsys.readouterr().out
        assert "max_degree:  2" in out
        assert "rank:        3" in out
        assert "alpha_acyclic: yes" in out

    def test_parse_error_exit_2(self, tmp_path, capsys):
        f = tmp_path / "bad.hg"
        f.write_text("a b\na b\n")
        assert main(["check", str(f)]) == 2
        assert "line 2" in capsys.readouterr().err


class TestColorAndVerify:
    @pytest.mark.parametrize("method", ["greedy", "exact", "tree"])
    def test_color_then_verify(self, path_file, tmp_path, method, capsys):
        out = tmp_path / "c.coloring"
        assert main(["color", path_file, "--method", method, "--out", str(out)]) == 0
        assert main(["verify", path_file, str(out)]) == 0
        assert "ok: proper" in capsys.readouterr().out

    def test_tree_emits_bound_line(self, path_file, tmp_path):
        out = tmp_path / "c.coloring"
        main(["color", path_file, "--method", "tree", "--out", str(out)])
        assert "bound: max_degree+rank-1 = 4" in out.read_text()

    def test_tree_on_cyclic_input_exit_1(self, triangle_file, capsys):
        assert main(["color", triangle_file, "--method", "tree"]) == 1
        assert "alpha-acyclic" in capsys.readouterr().err

    def test_tampered_coloring_exit_1(self, path_file, tmp_path, capsys):
        out = tmp_path / "c.coloring"
        main(["color", path_file, "--method", "greedy", "--out", str(out)])
        lines = out.read_text().splitlines()
        # copy the color of an adjacent incidence: a and b share edge 0
        colors = {tuple(l.split()[:2]): l.split()[2] for l in lines[1:]}
        tampered = []
        for l in lines:
            parts = l.split()
            if parts[:2] == ["a", "0"]:
                l = f"a 0 {colors[('b', '0')]}"
            tampered.append(l)
        out.write_text("\n".join(tampered) + "\n")
        assert main(["verify", path_file, str(out)]) == 1
        assert "conflict" in capsys.readouterr().out

    def test_partial_coloring_exit_1(self, path_file, tmp_path, capsys):
        out = tmp_path / "c.coloring"
        main(["color", path_file, "--out", str(out)])
        lines = out.read_text().splitlines()
        out.write_text("\n".join(lines[:-1]) + "\n")
        assert main(["verify", path_file, str(out)]) == 1
        assert "missing" in capsys.readouterr().err


class TestAcyclicity:
    def test_gyo_trace_format(self, path_file, capsys):
        assert main(["acyclicity", path_file]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[-1] == "residual: empty"
        assert all(line.split()[0] in ("ear-vertex", "contained-edge", "empty-edge")
                   for line in out[:-1])

    def test_triangle_nonempty(self, triangle_file, capsys):
        assert main(["acyclicity", triangle_file]) == 0
        assert "residual: nonempty" in capsys.readouterr().out

    def test_brute_method(self, triangle_file, capsys):
        assert main(["acyclicity", triangle_file, "--method", "brute"]) == 0
        assert "alpha-acyclic: no" in capsys.readouterr().out


class TestComplete:
    def test_writes_output_and_embedding(self, path_file, tmp_path, capsys):
        out = tmp_path / "star.hg"
        emb = tmp_path / "emb.txt"
        code = main(["complete", path_file, "--out", str(out),
                     "--embedding-out", str(emb)])
        assert code == 0
        assert "check regular: pass" in capsys.readouterr().out
        assert "->" in emb.read_text()

    def test_cap_exit_3(self, tmp_path, capsys):
        f = tmp_path / "big.hg"
        f.write_text("a b c d\na e\na f\na g\n")
        assert main(["complete", str(f), "--cap", "50"]) == 3
        assert "capped" in capsys.readouterr().err


class TestAuditAndBounds:
    def test_zeta_on_generated_c6(self, tmp_path, capsys):
        g = tmp_path / "c6.graph"
        assert main(["gen", "biregular", "--seed", "1", "--a", "2", "--b", "2",
                     "--n-u", "3", "--out", str(g)]) == 0
        assert main(["audit", "zeta", str(g), "--t", "1"]) == 0
        out = capsys.readouterr().out
        assert "max_ratio: 1" in out
        # every slack column entry is zero on the 6-cycle
        rows = [l.split() for l in out.splitlines()
                if len(l.split()) == 4 and l.split()[1].isdigit()]
        assert len(rows) == 6
        assert all(r[-1] == "0" for r in rows)

    def test_sparsity_report(self, tmp_path, capsys):
        g = tmp_path / "c6.graph"
        main(["gen", "biregular", "--seed", "1", "--a", "2", "--b", "2",
              "--n-u", "3", "--out", str(g)])
        assert main(["audit", "sparsity", str(g), "--t", "1"]) == 0
        out = capsys.readouterr().out
        assert "sigma_emp: 1/3" in out
        assert "asymptotic_target: 0.444444" in out

    def test_zeta_requires_biregular_exit_1(self, tmp_path, capsys):
        g = tmp_path / "bad.graph"
        g.write_text("parts: u0 u1\nu0 w0\nu0 w1\nu1 w0\n")
        assert main(["audit", "zeta", str(g), "--t", "1"]) == 1

    def test_bounds_table(self, path_file, tmp_path, capsys):
        kv = tmp_path / "bounds.kv"
        assert main(["bounds", path_file, "--exact", "--out", str(kv)]) == 0
        out = capsys.readouterr().out
        assert "acyclic_linear" in out
        text = kv.read_text()
        assert "exact=4" in text and "clique_lower=4" in text


class TestGen:
    def test_hypergraph_classes_write_parseable_files(self, tmp_path):
        from hgcolor import parse_hypergraph

        for klass, extra in (
            ("acyclic-linear", ["--edges", "4", "--rank", "3", "--degree", "3"]),
            ("uniform-acyclic-linear", ["--edges", "4", "--k", "3", "--degree", "2"]),
            ("linear", ["--vertices", "9", "--edges", "4", "--k", "3"]),
            ("quasi-linear", ["--vertices", "8", "--edges", "4", "--k", "3", "--t", "2"]),
        ):
            out = tmp_path / f"{klass}.hg"
            assert main(["gen", klass, "--seed", "7", *extra, "--out", str(out)]) == 0
            parse_hypergraph(out.read_text())

    def test_generation_failure_exit_3(self, capsys):
        assert main(["gen", "biregular", "--seed", "0", "--a", "3", "--b", "3",
                     "--n-u", "3", "--max-tries", "50"]) == 3
        assert "capped" in capsys.readouterr().err

    def test_deterministic_stdout(self, capsys):
        main(["gen", "linear", "--seed", "5", "--vertices", "9", "--edges", "3", "--k", "3"])
        first = capsys.readouterr().out
        main(["gen", "linear", "--seed", "5", "--vertices", "9", "--edges", "3", "--k", "3"])
        assert capsys.readouterr().out == first


class TestUsage:
    def test_unknown_flag_exit_2(self, capsys):
        assert main(["check", "--nope"]) == 2

    def test_module_entry_point(self, tmp_path):
        f = tmp_path / "h.hg"
        f.write_text(PATH_HG)
        proc = subprocess.run(
            [sys.executable, "-m", "hgcolor", "check", str(f)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "alpha_acyclic: yes" in proc.stdout
