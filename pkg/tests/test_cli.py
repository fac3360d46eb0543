"""Tests for the command-line entry point: reports and exit codes."""
import json

import pytest

from cli import EXIT_CAP, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main, render
from fixtures.hachimori import DELTA1, LABELS

FIVE_CYCLE = "13\n14\n24\n25\n35\n"
FIVE_CYCLE_PARTITION = "- : 13\n4 : 14\n2 : 24\n5 : 25\n35 : 35\n"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def run_json(capsys, *argv):
    code, captured = run(capsys, *argv, "--json")
    return code, json.loads(captured.out)


@pytest.fixture
def five_cycle_file(tmp_path):
    path = tmp_path / "five_cycle.txt"
    path.write_text(FIVE_CYCLE)
    return path


class TestAnalyze:
    def test_cylinder(self, capsys):
        code, report = run_json(capsys, "analyze", "--fixture", "cylinder")
        assert code == EXIT_OK
        assert report["cohen_macaulay"] is False
        assert report["buchsbaum"] is True
        assert report["partitionable"] is False
        assert report["h"] == [1, 3, 3, -1]
        assert (report["depth"], report["sdepth"]) == (2, 2)
        assert report["stanley_ideal"] is True

    def test_complex_file(self, capsys, five_cycle_file):
        code, report = run_json(capsys, "analyze", "--complex", str(five_cycle_file))
        assert code == EXIT_OK
        assert report["shellable"] is True
        assert len(report["shelling"]) == 5
        assert report["fhr_identity"] is True

    def test_non_squarefree_ideal(self, capsys, tmp_path):
        path = tmp_path / "ideal.txt"
        path.write_text("x1^2, x1*x2\n")
        code, report = run_json(capsys, "analyze", "--ideal", str(path))
        assert code == EXIT_OK
        assert report["depth"] == 0
        assert report["pretty_clean"] is True
        assert report["stanley_ideal"] is True

    def test_cap_notice(self, capsys):
        code, report = run_json(capsys, "analyze", "--fixture", "cylinder", "--shelling-cap", "2")
        assert code == EXIT_CAP
        assert report["shellable"] is None
        assert report["cap_exceeded"]

    def test_dunce_hat(self, capsys):
        code, report = run_json(capsys, "analyze", "--fixture", "dunce-hat")
        assert code == EXIT_OK
        assert (report["depth"], report["sdepth"]) == (3, 3)
        assert report["cohen_macaulay"] is True
        assert report["shellable"] is False
        assert report["partitionable"] is True
        assert report["r"] == [0, 11, 5, 1]
        assert report["stanley_ideal"] is True

    def test_single_simplex(self, capsys, tmp_path):
        path = tmp_path / "simplex.txt"
        path.write_text("123\n")
        code, report = run_json(capsys, "analyze", "--complex", str(path))
        assert code == EXIT_OK
        assert report["cohen_macaulay"] is True
        assert report["shellable"] is True
        assert (report["depth"], report["sdepth"]) == (3, 3)
        assert report["stanley_ideal"] is True

    def test_threads_give_identical_output(self, capsys):
        single = run(capsys, "analyze", "--fixture", "cylinder", "--threads", "1")
        pooled = run(capsys, "analyze", "--fixture", "cylinder", "--threads", "4")
        assert single[0] == pooled[0] == EXIT_OK
        assert single[1].out == pooled[1].out

    def test_text_output(self, capsys):
        code, captured = run(capsys, "analyze", "--fixture", "cylinder")
        assert code == EXIT_OK
        assert "cohen_macaulay: false" in captured.out

    def test_bad_field(self, capsys):
        code, captured = run(capsys, "analyze", "--fixture", "cylinder", "--field", "p:4")
        assert code == EXIT_USAGE
        assert "error" in captured.err

    def test_unknown_fixture(self, capsys):
        code, _ = run(capsys, "analyze", "--fixture", "torus")
        assert code == EXIT_USAGE

    def test_subject_required(self, capsys):
        code, _ = run(capsys, "analyze")
        assert code == EXIT_USAGE


class TestVerify:
    def test_partition(self, capsys, tmp_path, five_cycle_file):
        partition = tmp_path / "p.txt"
        partition.write_text(FIVE_CYCLE_PARTITION)
        code, report = run_json(
            capsys, "verify", "partition", str(partition), "--complex", str(five_cycle_file)
        )
        assert code == EXIT_OK
        assert report["certificate"]["ok"] is True
        assert report["nice"] is True

    def test_broken_partition(self, capsys, tmp_path, five_cycle_file):
        partition = tmp_path / "p.txt"
        partition.write_text("- : 13\n4 : 14\n")
        code, report = run_json(
            capsys, "verify", "partition", str(partition), "--complex", str(five_cycle_file)
        )
        assert code == EXIT_VIOLATION
        assert report["certificate"]["reason"] == "face not covered"

    def test_doubly_covered_face(self, capsys, tmp_path, five_cycle_file):
        partition = tmp_path / "p.txt"
        partition.write_text(FIVE_CYCLE_PARTITION.replace("35 : 35", "3 : 35"))
        code, report = run_json(
            capsys, "verify", "partition", str(partition), "--complex", str(five_cycle_file)
        )
        assert code == EXIT_VIOLATION
        assert report["certificate"]["reason"] == "face covered more than once"
        assert report["certificate"]["witness"] == ["3"]

    def test_dunce_hat_partition(self, capsys, tmp_path, dunce_hat):
        partition = tmp_path / "p.txt"
        partition.write_text(dunce_hat.partitions["listed"])
        code, report = run_json(
            capsys, "verify", "partition", str(partition), "--fixture", "dunce-hat"
        )
        assert code == EXIT_OK
        assert report["nice"] is True
        assert report["r"] == [0, 11, 5, 1]

    def test_delta1_shelling(self, capsys, tmp_path):
        complex_path = tmp_path / "delta1.txt"
        complex_path.write_text("labels: " + " ".join(LABELS) + "\n" + DELTA1 + "\n")
        order = tmp_path / "order.txt"
        order.write_text(DELTA1 + "\n")
        code, report = run_json(
            capsys, "verify", "shelling", str(order), "--complex", str(complex_path)
        )
        assert code == EXIT_OK
        assert report["certificate"]["ok"] is True

    def test_shelling(self, capsys, tmp_path, five_cycle_file):
        good = tmp_path / "good.txt"
        good.write_text("13,14,24,25,35\n")
        bad = tmp_path / "bad.txt"
        bad.write_text("13,24,14,25,35\n")
        assert run(capsys, "verify", "shelling", str(good), "--complex", str(five_cycle_file))[0] == EXIT_OK
        code, report = run_json(
            capsys, "verify", "shelling", str(bad), "--complex", str(five_cycle_file)
        )
        assert code == EXIT_VIOLATION
        assert report["certificate"]["witness"] == {"i": 1, "j": 2}

    def test_filtration(self, capsys, tmp_path):
        ideal = tmp_path / "ideal.txt"
        ideal.write_text("x1*x2\n")
        filtration = tmp_path / "f.json"
        filtration.write_text(json.dumps([
            {"w": [["x1", 1]], "P": ["x2"]},
            {"w": [], "P": ["x1"]},
        ]))
        code, report = run_json(
            capsys, "verify", "filtration", str(filtration), "--ideal", str(ideal)
        )
        assert code == EXIT_OK
        assert report["class"] == "clean"

    def test_missing_artifact(self, capsys, tmp_path, five_cycle_file):
        code, _ = run(
            capsys, "verify", "partition", str(tmp_path / "none.txt"), "--complex", str(five_cycle_file)
        )
        assert code == EXIT_USAGE


class TestGorenstein:
    def test_template(self, capsys):
        code, report = run_json(capsys, "gorenstein", "--m", "2", "--verify-shelling")
        assert code == EXIT_OK
        assert report["shelling"]["ok"] is True
        assert report["witnesses"]["ok"] is True
        assert report["order"][0] == ["1", "3"]

    def test_inline_substitution(self, capsys):
        code, report = run_json(capsys, "gorenstein", "--m", "2", "--subst", "x1^2,x2,x3*x4,x5,x6")
        assert code == EXIT_OK
        assert report["instance"]["stanley_ideal"] is True

    def test_wrong_substitution_length(self, capsys):
        code, _ = run(capsys, "gorenstein", "--m", "2", "--subst", "x1,x2,x3")
        assert code == EXIT_USAGE


class TestSearches:
    def test_random_is_reproducible(self, capsys):
        first = run_json(capsys, "random", "--seed", "7", "--n", "5")
        second = run_json(capsys, "random", "--seed", "7", "--n", "5")
        assert first == second
        assert first[1]["seed"] == 7

    def test_clean_dunce_hat(self, capsys):
        code, report = run_json(capsys, "clean", "--fixture", "dunce-hat")
        assert code == EXIT_VIOLATION
        assert report["filtration"] == "none"

    def test_pretty_clean_ideal(self, capsys, tmp_path):
        path = tmp_path / "ideal.txt"
        path.write_text("x1^2\nx1*x2\n")
        code, report = run_json(capsys, "pretty-clean", "--ideal", str(path))
        assert code == EXIT_OK
        assert report["route"] == "box-pretty-clean"

    def test_sdepth(self, capsys):
        code, report = run_json(capsys, "sdepth", "--fixture", "cylinder")
        assert code == EXIT_OK
        assert report["sdepth"] == 2

    def test_sdepth_target_infeasible(self, capsys):
        code, report = run_json(capsys, "sdepth", "--fixture", "cylinder", "--target", "3")
        assert code == EXIT_VIOLATION
        assert report["sdepth"] is None

    def test_shell_cylinder(self, capsys):
        code, report = run_json(capsys, "shell", "--fixture", "cylinder")
        assert code == EXIT_VIOLATION
        assert report["order"] == "none"

    def test_shell_cap(self, capsys):
        code, report = run_json(capsys, "shell", "--fixture", "dunce-hat", "--shelling-cap", "5")
        assert code == EXIT_CAP
        assert report["cap_exceeded"] is True


def test_render_nests_dicts():
    text = render({"a": 1, "b": {"c": ["x", "y"]}})
    assert text == "a: 1\nb:\n  c: x y"
