import random
import subprocess
import sys

import pytest

from conftest import FIG_B_ARCS, FIG_B_WEIGHTS

from dss import (
    Digraph,
    GraphClass,
    ParseError,
    ProblemKind,
    Solution,
    SolutionFlags,
    WeightedInstance,
    emit_instance,
    emit_solution,
    parse_edge_list,
    parse_instance,
    parse_solution,
    random_instance,
)
from dss.cli import main

FIG_B_TEXT = """\
# second worked tree, maximal minimization
problem maximal-ssg
budget 4
node v1 1
node v2 1
node v3 2
node v4 2
node v5 1
node v6 3
node v7 2
node v8 3
arc v8 v5
arc v5 v4
arc v5 v2
arc v8 v7
arc v7 v6
arc v7 v3
arc v7 v1
"""


class TestInstanceFormat:
    def test_parse_worked_tree(self):
        inst, labels = parse_instance(FIG_B_TEXT)
        assert labels == [f"v{i}" for i in range(1, 9)]
        assert inst.kind is ProblemKind.MAXIMAL_SSG
        assert inst.budget == 4
        assert inst.weights == FIG_B_WEIGHTS
        assert set(inst.graph.arcs) == set(FIG_B_ARCS)

    def test_round_trip(self):
        inst, labels = parse_instance(FIG_B_TEXT)
        text = emit_instance(inst, labels)
        inst2, labels2 = parse_instance(text)
        assert inst2 == inst and labels2 == labels

    def test_round_trip_random(self):
        for seed in range(10):
            rng = random.Random(seed)
            inst = random_instance(
                GraphClass.GENERAL, rng.randint(1, 9), seed=seed
            )
            labels = [f"n{i}" for i in range(inst.graph.n)]
            inst2, labels2 = parse_instance(emit_instance(inst, labels))
            assert inst2 == inst and labels2 == labels

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("budget 4\nnode a 1\n", "missing problem"),
            ("problem ssg\nnode a 1\n", "missing budget"),
            ("problem nope\nbudget 1\n", "line 1"),
            ("problem ssg\nbudget -1\n", "line 2"),
            ("problem ssg\nbudget 1\nnode a 1\nnode a 2\n", "duplicate node"),
            ("problem ssg\nbudget 1\nnode a 1\narc a b\n", "undeclared"),
            ("problem ssg\nbudget 1\nnode a 1\narc a a\n", "loop"),
            (
                "problem ssg\nbudget 1\nnode a 1\nnode b 1\narc a b\narc a b\n",
                "duplicate arc",
            ),
            ("problem ssg\nbudget 1\nfrobnicate\n", "unknown directive"),
        ],
    )
    def test_parse_errors(self, text, fragment):
        with pytest.raises(ParseError) as exc:
            parse_instance(text)
        assert fragment in str(exc.value)


class TestSolutionFormat:
    def test_round_trip(self):
        sol = Solution(frozenset({0, 2}), 3)
        labels = ["a", "b", "c"]
        flags = SolutionFlags(True, True, True, None)
        text = emit_solution(sol, labels, flags)
        selected, weight, parsed = parse_solution(text)
        assert selected == ["a", "c"]
        assert weight == 3
        assert parsed == flags

    def test_maximality_flag_round_trip(self):
        sol = Solution(frozenset(), 0)
        flags = SolutionFlags(False, True, True, False)
        selected, weight, parsed = parse_solution(emit_solution(sol, [], flags))
        assert parsed == flags

    def test_size_mismatch(self):
        with pytest.raises(ParseError):
            parse_solution("weight 1\nsize 2\nselect a\n")


class TestEdgeList:
    def test_parse(self):
        graph, labels = parse_edge_list("edge a b\nedge b c\n")
        assert labels == ["a", "b", "c"]
        assert graph.edges == ((0, 1), (1, 2))

    def test_rejects_loop_and_duplicate(self):
        with pytest.raises(ParseError):
            parse_edge_list("edge a a\n")
        with pytest.raises(ParseError):
            parse_edge_list("edge a b\nedge b a\n")


@pytest.fixture
def inst_file(tmp_path):
    path = tmp_path / "inst.txt"
    path.write_text(FIG_B_TEXT)
    return str(path)


class TestCliSolve:
    def test_tree_dp_matches_brute(self, inst_file, tmp_path, capsys):
        out_a = tmp_path / "a.txt"
        out_b = tmp_path / "b.txt"
        assert main(["solve", inst_file, "--algorithm", "tree-dp", "--out", str(out_a)]) == 0
        assert main(["solve", inst_file, "--algorithm", "brute", "--out", str(out_b)]) == 0
        _, wa, _ = parse_solution(out_a.read_text())
        _, wb, _ = parse_solution(out_b.read_text())
        assert wa == wb

    def test_star_tree_dp(self, tmp_path, capsys):
        path = tmp_path / "star.txt"
        path.write_text(
            "problem ssg\nbudget 8\nnode x0 3\nnode x1 5\nnode x2 7\nnode r 0\n"
            "arc x0 r\narc x1 r\narc x2 r\n"
        )
        assert main(["solve", str(path), "--algorithm", "tree-dp"]) == 0
        out = capsys.readouterr().out
        assert "weight 8" in out
        assert "feasible true" in out

    def test_non_tree_with_tree_dp_is_structure_error(self, tmp_path, capsys):
        path = tmp_path / "tourn.txt"
        path.write_text(
            "problem ssg\nbudget 2\nnode a 1\nnode b 1\nnode c 1\n"
            "arc a b\narc b c\narc a c\n"
        )
        assert main(["solve", str(path), "--algorithm", "tree-dp"]) == 2

    def test_parse_error_exit_code(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("problem ssg\n")
        assert main(["solve", str(path)]) == 3

    def test_auto_on_tournament(self, tmp_path, capsys):
        path = tmp_path / "tourn.txt"
        path.write_text(
            "problem ssg\nbudget 2\nnode a 1\nnode b 1\nnode c 1\n"
            "arc a b\narc b c\narc a c\n"
        )
        assert main(["solve", str(path)]) == 0
        assert "weight 2" in capsys.readouterr().out


class TestCliCheck:
    def test_empty_solution_feasible_for_ssg(self, tmp_path, capsys):
        inst = tmp_path / "i.txt"
        inst.write_text("problem ssg\nbudget 3\nnode a 1\nnode b 2\narc a b\n")
        sol = tmp_path / "s.txt"
        sol.write_text("weight 0\nsize 0\n")
        assert main(["check", str(inst), str(sol)]) == 0
        assert "feasible true" in capsys.readouterr().out

    def test_empty_solution_infeasible_for_maximal(self, tmp_path, capsys):
        inst = tmp_path / "i.txt"
        inst.write_text("problem maximal-ssg\nbudget 3\nnode a 1\nnode b 2\narc a b\n")
        sol = tmp_path / "s.txt"
        sol.write_text("weight 0\nsize 0\n")
        assert main(["check", str(inst), str(sol)]) == 1
        out = capsys.readouterr().out
        assert "maximality violated witness=node b" in out

    def test_closure_witness(self, tmp_path, capsys):
        inst = tmp_path / "i.txt"
        inst.write_text("problem ssg\nbudget 3\nnode a 1\nnode b 2\narc a b\n")
        sol = tmp_path / "s.txt"
        sol.write_text("weight 1\nsize 1\nselect a\n")
        assert main(["check", str(inst), str(sol)]) == 1
        assert "closure violated witness=arc a -> b" in capsys.readouterr().out

    def test_unknown_label_is_parse_error(self, tmp_path, capsys):
        inst = tmp_path / "i.txt"
        inst.write_text("problem ssg\nbudget 3\nnode a 1\n")
        sol = tmp_path / "s.txt"
        sol.write_text("weight 0\nsize 1\nselect z\n")
        assert main(["check", str(inst), str(sol)]) == 3


class TestCliClassify:
    def test_worked_tree(self, inst_file, capsys):
        assert main(["classify", inst_file]) == 0
        out = capsys.readouterr().out
        assert "class in-rooted-tree" in out
        assert "nodes 8" in out


class TestCliGenerate:
    def test_random_round_trips(self, tmp_path, capsys):
        out = tmp_path / "g.txt"
        assert main(
            ["generate", "random", "--graph-class", "dag", "--n", "7",
             "--seed", "5", "--out", str(out)]
        ) == 0
        inst, _ = parse_instance(out.read_text())
        assert inst.graph.n == 7

    def test_subset_sum(self, capsys):
        assert main(
            ["generate", "subset-sum", "--values", "3,5,7", "--budget", "8"]
        ) == 0
        inst, _ = parse_instance(capsys.readouterr().out)
        assert inst.graph.n == 4 and inst.budget == 8

    def test_clique_from_edge_list(self, tmp_path, capsys):
        edges = tmp_path / "e.txt"
        edges.write_text("edge a b\nedge b c\nedge c d\nedge d a\n")
        assert main(
            ["generate", "clique", "--edges", str(edges), "--clique-size", "2"]
        ) == 0
        inst, _ = parse_instance(capsys.readouterr().out)
        assert inst.graph.n == 2 * 4 + 6 * 4

    def test_independent_set(self, tmp_path, capsys):
        edges = tmp_path / "e.txt"
        edges.write_text("edge a b\nedge b c\n")
        assert main(
            ["generate", "independent-set", "--edges", str(edges),
             "--kind", "maximal-ssgw"]
        ) == 0
        inst, _ = parse_instance(capsys.readouterr().out)
        assert inst.kind is ProblemKind.MAXIMAL_SSGW

    def test_hard_maximal(self, tmp_path, capsys):
        src = tmp_path / "src.txt"
        src.write_text(
            "problem ssg\nbudget 4\nnode a 2\nnode b 2\nnode c 2\narc a b\n"
        )
        assert main(
            ["generate", "hard-maximal", "--instance", str(src), "--p", "2"]
        ) == 0
        out = capsys.readouterr().out
        inst, _ = parse_instance(out)
        assert inst.kind is ProblemKind.MAXIMAL_SSG
        assert "threshold" in out.splitlines()[0]


class TestCliBench:
    def test_csv_shape(self, tmp_path):
        out = tmp_path / "bench.csv"
        assert main(
            ["bench", "--classes", "dag", "--sizes", "6", "--seeds", "0,1",
             "--kinds", "ssg", "--k-list", "0,1", "--out", str(out)]
        ) == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("instance-id,class,n,kind,algorithm,k")
        # 2 seeds x 2 k values + 2 summary rows.
        assert len(lines) == 1 + 4 + 2
        assert any(line.startswith("summary-ptas-k0") for line in lines)

    def test_rejects_weak_kind(self):
        assert main(["bench", "--kinds", "ssgw"]) == 2


class TestConsoleScript:
    def test_entry_point(self, tmp_path):
        inst = tmp_path / "i.txt"
        inst.write_text("problem ssg\nbudget 3\nnode a 1\nnode b 2\narc a b\n")
        proc = subprocess.run(
            [sys.executable, "-m", "dss.cli", "solve", str(inst)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "weight 3" in proc.stdout
