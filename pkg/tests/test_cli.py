from minorient.cli import main
from minorient.io import dump_dag, load_dag
from minorient import Dag

from test_orient import demo_dag


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestGen:
    def test_writes_loadable_graph(self, tmp_path, capsys):
        out = tmp_path / "g.dag"
        code, _ = run(capsys, "gen", "--n", "8", "--p", "0.2", "--seed", "4", "--out", str(out))
        assert code == 0
        g = load_dag(out)
        assert g.n == 8

    def test_stdout_mode(self, capsys):
        code, text = run(capsys, "gen", "--n", "3", "--p", "0.0", "--seed", "1")
        assert code == 0
        assert text.splitlines()[0] == "3"


class TestVerify:
    def test_atomic(self, tmp_path, capsys):
        gpath = tmp_path / "g.dag"
        dump_dag(demo_dag(), gpath)
        tpath = tmp_path / "t.tgt"
        tpath.write_text("0 4\n")
        code, text = run(capsys, "verify", "--graph", str(gpath), "--targets", str(tpath))
        assert code == 0
        assert "count: 1" in text

    def test_default_targets_are_all_edges(self, tmp_path, capsys):
        gpath = tmp_path / "g.dag"
        dump_dag(demo_dag(), gpath)
        code, text = run(capsys, "verify", "--graph", str(gpath))
        assert code == 0
        assert "count: 2" in text

    def test_certificate_prints_closure(self, tmp_path, capsys):
        gpath = tmp_path / "g.dag"
        dump_dag(demo_dag(), gpath)
        code, text = run(capsys, "verify", "--graph", str(gpath), "--certificate")
        assert code == 0
        assert " d" in text and text.strip().splitlines()[-1].endswith(("d", "u"))

    def test_cost_flags(self, tmp_path, capsys):
        gpath = tmp_path / "g.dag"
        dump_dag(demo_dag(), gpath)
        wpath = tmp_path / "w.wts"
        wpath.write_text("4 0.5\n")
        code, text = run(
            capsys,
            "verify", "--graph", str(gpath), "--k", "2",
            "--alpha", "1", "--beta", "0.5", "--weights", str(wpath),
        )
        assert code == 0
        assert "objective:" in text

    def test_input_error_exit_code(self, tmp_path, capsys):
        gpath = tmp_path / "g.dag"
        dump_dag(demo_dag(), gpath)
        tpath = tmp_path / "t.tgt"
        tpath.write_text("0 1\n")  # not an edge
        code, _ = run(capsys, "verify", "--graph", str(gpath), "--targets", str(tpath))
        assert code == 1


class TestOracle:
    def test_matches_verify(self, tmp_path, capsys):
        gpath = tmp_path / "g.dag"
        dump_dag(demo_dag(), gpath)
        code, text = run(capsys, "oracle", "--graph", str(gpath))
        assert code == 0
        assert "optimum: 2" in text

    def test_budget_exit_code(self, tmp_path, capsys):
        gpath = tmp_path / "g.dag"
        dump_dag(Dag(12, [(i, i + 1) for i in range(11)]), gpath)
        code, _ = run(capsys, "oracle", "--graph", str(gpath))
        assert code == 2


class TestStab:
    def test_solves_instance_file(self, tmp_path, capsys):
        path = tmp_path / "i.stab"
        path.write_text("3 0\n1 0\n2 1\n0 2\n")
        code, text = run(capsys, "stab", str(path))
        assert code == 0
        assert "optimum: 1" in text


class TestSearch:
    def test_subsetsearch_with_hop(self, tmp_path, capsys):
        gpath = tmp_path / "g.dag"
        dump_dag(demo_dag(), gpath)
        out = tmp_path / "rounds.csv"
        code, text = run(
            capsys,
            "search", "--graph", str(gpath), "--target-node", "4", "--hop", "1",
            "--out", str(out),
        )
        assert code == 0
        assert "interventions:" in text
        assert out.read_text().splitlines()[0] == "round,step,intervention,new_arcs"

    def test_random_algo(self, tmp_path, capsys):
        gpath = tmp_path / "g.dag"
        dump_dag(demo_dag(), gpath)
        code, text = run(
            capsys,
            "search", "--graph", str(gpath), "--algo", "random", "--seed", "2",
        )
        assert code == 0


class TestExperiments:
    def test_exp1_writes_csv(self, tmp_path, capsys):
        out = tmp_path / "e1.csv"
        code, _ = run(
            capsys,
            "exp1", "--n-list", "8", "--p-list", "0.1", "--trials", "1",
            "--seed", "3", "--out", str(out),
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "n,p,seed,m,frac,t_size,nu1_subset,nu1_full"
        assert len(lines) == 1 + 4

    def test_exp2_writes_csv(self, tmp_path, capsys):
        out = tmp_path / "e2.csv"
        code, _ = run(
            capsys,
            "exp2", "--n-list", "7", "--p-list", "0.1", "--trials", "1",
            "--seed", "3", "--out", str(out),
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "n,p,seed,r,target_node,algo,interventions,nu1_full,nu1_subset"
        assert len(lines) == 1 + 3


class TestSearchNodesFile:
    def test_subset_from_file(self, tmp_path, capsys):
        gpath = tmp_path / "g.dag"
        dump_dag(demo_dag(), gpath)
        nodes = tmp_path / "h.txt"
        nodes.write_text("0 4\n5\n")
        code, text = run(capsys, "search", "--graph", str(gpath), "--nodes", str(nodes))
        assert code == 0
        assert "interventions:" in text
