import json
import subprocess
import sys

import pytest

from wordpowers.cli import main


def run(capsys, *argv):
    code = main(["--quiet", *argv])
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_detect_json(capsys):
    # 0211: blocks 02|11 and 1|1 both end at 4; the shorter block length wins
    code, doc = run_json(capsys, "detect", "--pattern", "congruential:2:3", "--word", "0211")
    assert code == 0
    assert doc == {
        "pattern": "congruential:2:3",
        "word": "0211",
        "found": True,
        "occurrence": {"kind": "congruential", "start": 3, "m": 1, "r": 2, "sums": [1, 1]},
    }
    code, doc = run_json(capsys, "detect", "--pattern", "congruential:2:3", "--word", "0102")
    assert (code, doc["found"], doc["occurrence"]) == (0, False, None)


def test_detect_expect_exit_codes(capsys):
    assert run(capsys, "detect", "--pattern", "square", "--word", "010", "--expect", "avoid")[0] == 0
    assert run(capsys, "detect", "--pattern", "square", "--word", "0110", "--expect", "avoid")[0] == 1
    assert run(capsys, "detect", "--pattern", "square", "--word", "0110", "--expect", "found")[0] == 0
    assert run(capsys, "detect", "--pattern", "square", "--word", "010", "--expect", "found")[0] == 1


def test_detect_text_output(capsys):
    code, out = run(capsys, "detect", "--pattern", "square", "--word", "0110")
    assert code == 0
    assert out.strip() == "found square: start=2 m=1 r=2 sums=[1, 1]"
    assert run(capsys, "detect", "--pattern", "square", "--word", "012")[1].strip() == "avoids"


def test_detect_adjacent_pair(capsys):
    code, doc = run_json(capsys, "detect", "--pattern", "adjacent-equal-sum", "--word", "1,0,1")
    assert code == 0
    assert doc["occurrence"] == {"kind": "adjacent-equal-sum", "i": 1, "j": 1, "j_prime": 3, "sum": 1}
    # every factor sum is 1, -1 or 0 and no two adjacent nonzero ones agree
    code, doc = run_json(capsys, "detect", "--pattern", "adjacent-equal-sum", "--word", "1,-1,1")
    assert doc["found"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ("detect", "--pattern", "cube", "--word", "01"),
        ("detect", "--pattern", "square", "--word", "0x1"),
        ("search", "--r", "1", "--k", "3"),
        ("construct", "--prime", "9"),
        ("table", "--rows", "2-2"),
        ("morphism", "--power", "2"),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code = main(["--quiet", *argv])
    assert code == 2
    assert "wordpowers: error:" in capsys.readouterr().err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["search", "--r", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["search", "--r", "2", "--k", "3", "--budget", "0"])
    assert exc.value.code == 2


def test_search_golden(capsys):
    code, doc = run_json(capsys, "search", "--r", "2", "--k", "3")
    assert code == 0
    assert doc == {"r": 2, "k": 3, "l": 7, "witness": "0102010", "nodes": 117, "complete": True}


def test_search_budget_exit_3(capsys):
    code, doc = run_json(capsys, "search", "--r", "2", "--k", "5", "--budget", "100")
    assert code == 3
    assert doc["complete"] is False and doc["nodes"] == 100


def test_search_threads_match_serial(capsys):
    serial = run_json(capsys, "search", "--r", "2", "--k", "4")[1]
    par = run_json(capsys, "search", "--r", "2", "--k", "4", "--threads", "2", "--parallel-depth", "3")[1]
    assert par == serial


def test_table(capsys):
    code, doc = run_json(capsys, "table", "--rows", "2:2,2:3,3:2")
    assert code == 0
    assert [row["match"] for row in doc["rows"]] == [True, True, True]
    code, _ = run(capsys, "table", "--rows", "2:5", "--budget", "10")
    assert code == 3


def test_construct(capsys):
    code, doc = run_json(capsys, "construct", "--prime", "3", "--verify")
    assert code == 0
    assert doc["word"] == "0,1,2,0,1"
    assert doc["verified"] is True
    assert doc["params"]["word_len"] == 5


def test_morphism_builtin(capsys):
    code, out = run(capsys, "morphism", "--name", "psi", "--power", "2")
    assert code == 0
    assert out.strip() == "0,1,0,-1,0,1,-1,1,0,-1,0,1,0,-1,1,-1"
    code, out = run(capsys, "morphism", "--name", "phi", "--power", "1")
    assert out.strip() == "0,1,0',-1"
    code, out = run(capsys, "morphism", "--name", "phi", "--power", "2", "--coding", "tau")
    assert out.strip() == "0,1,0,-1,0,1,-1,1,0,-1,0,1,0,-1,1,-1"


def test_morphism_seed_file(capsys, tmp_path):
    path = tmp_path / "thue.txt"
    path.write_text("# Thue-Morse\n0 -> 0 1\n1 -> 1 0\n")
    code, doc = run_json(capsys, "morphism", "--seed-file", str(path), "--power", "3")
    assert code == 0
    assert doc["word"] == "0,1,1,0,1,0,0,1"
    assert doc["length"] == 8
    assert run(capsys, "morphism", "--seed-file", str(tmp_path / "missing"), "--power", "1")[0] == 2


def test_verify(capsys):
    code, doc = run_json(capsys, "verify", "--length", "200")
    assert code == 0 and doc["passed"]
    assert run(capsys, "verify", "--zeta-lemma", "3")[0] == 0
    assert run(capsys, "verify", "--tau-phi-psi", "3")[0] == 0


def test_ramsey(capsys):
    code, doc = run_json(capsys, "ramsey", "omega", "--t", "3", "--k", "2")
    assert (code, doc["value"]) == (0, 7)
    code, doc = run_json(capsys, "ramsey", "w1", "--t", "3", "--k", "2", "--cap", "5")
    assert (code, doc["value"]) == (3, None)
    code, _ = run_json(capsys, "ramsey", "omega", "--t", "3", "--k", "3", "--budget", "5")
    assert code == 3
    code, doc = run_json(capsys, "ramsey", "check-bounds", "--t", "2", "--k", "2")
    assert code == 0 and doc["passed"]


def test_repeated_runs_are_byte_identical():
    argv = [sys.executable, "-m", "wordpowers", "--quiet", "search", "--r", "3", "--k", "2", "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    doc = json.loads(first)
    assert (doc["l"], doc["witness"], doc["complete"]) == (9, "001101100", True)
