import json
import subprocess
import sys
from pathlib import Path

import pytest

from wefsub import cli

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), err


def fx(name):
    return FIXTURES / name


def test_allocate_binary(capsys):
    code, report, _ = run(capsys, "allocate", "--algo", "binary", fx("binary_five.json"))
    assert code == 0
    assert report["subsidies"] == ["1", "0"]
    assert report["total_subsidy"] == "1"
    assert report["bound"] == "2"
    assert report["bounds"]["binary_refined"] == "1"
    assert report["bundles"] == [[4], [0, 1, 2, 3]]
    assert report["wef"] and report["wefable"] and report["wef01"]


def test_allocate_auto_picks_declared_class(capsys):
    code, report, _ = run(capsys, "allocate", fx("seven_halves.json"))
    assert code == 0
    assert report["algorithm"] == "identical"
    assert report["subsidies"] == ["6/7", "0"]
    assert report["bound"] == "1"


def test_allocate_general_on_heavy_tail(capsys):
    _, report, _ = run(capsys, "allocate", "--algo", "general", fx("heavy_tail.json"))
    assert report["bundles"] == [[], [0, 1]]
    assert report["subsidies"] == ["6/5", "0"]
    assert report["bounds"] == {"general": "100", "general_lower": "100"}


def test_allocate_no_items(capsys):
    code, report, _ = run(capsys, "allocate", fx("no_items.json"))
    assert code == 0
    assert report["bundles"] == [[], []]
    assert report["subsidies"] == ["0", "0"]


def test_allocate_class_mismatch(capsys):
    code, report, err = run(capsys, "allocate", "--algo", "identical", fx("binary_five.json"))
    assert code == 1 and report is None
    assert "identical" in err


def test_allocate_invalid_instance(capsys):
    code, _, err = run(capsys, "allocate", fx("bad_weight.json"))
    assert code == 1
    assert "non-positive weight" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "allocate", tmp_path / "nope.json")
    assert code == 1 and "cannot read" in err


def test_check_positive_cycle(capsys):
    code, report, _ = run(capsys, "check", fx("heavy_tail.json"), fx("split.json"))
    assert code == 0
    assert report == {"verdict": "not WEF-able", "cycle": [0, 1], "cycle_cost": "49/10"}


def test_check_with_subsidies(capsys):
    _, report, _ = run(
        capsys, "check", fx("two_three.json"), fx("split.json"), "--subsidies", fx("two_three_subsidies.json")
    )
    assert report == {"verdict": "WEF-able", "min_subsidies": ["0", "2"], "subsidies": "WEF"}


def test_check_incomplete_allocation(capsys):
    code, _, err = run(capsys, "check", fx("heavy_tail.json"), fx("missing_item.json"))
    assert code == 1
    assert "incomplete allocation" in err


def test_oracle_heavy_tail(capsys):
    _, report, _ = run(capsys, "oracle", fx("heavy_tail.json"))
    assert report["optimum"] == "6/5"
    assert report["witness"] == [[], [0, 1]]
    assert report["algorithms"] == {"general": "6/5"}


def test_oracle_two_fans(capsys):
    _, report, _ = run(capsys, "oracle", fx("two_fans.json"))
    assert report["optimum"] == "2"
    assert set(report["algorithms"]) == {"general", "binary"}


def test_oracle_single_agent(capsys):
    _, report, _ = run(capsys, "oracle", fx("single_agent.json"))
    assert report["optimum"] == "0"


def test_gen_round_trips_into_allocate(capsys, tmp_path):
    code, report, _ = run(capsys, "gen", "--family", "ex4.1", "--weights", "1,2,3", "--value", "2")
    assert code == 0
    assert report["tight_total"] == "4"
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(report))
    _, allocated, _ = run(capsys, "allocate", path)
    assert allocated["total_subsidy"] == "4"


def test_gen_bad_parameters(capsys):
    code, _, err = run(capsys, "gen", "--family", "ex4.1", "--weights", "1,3/2")
    assert code == 1 and "integer" in err


def test_verify_runner(capsys):
    code, report, _ = run(capsys, "verify", "--count", "25", "--class", "identical", "--seed", "3")
    assert code == 0
    assert report["failures"] == []


@pytest.mark.parametrize(
    "argv",
    [
        ["allocate", "binary_five.json"],
        ["check", "heavy_tail.json", "split.json"],
        ["oracle", "two_fans.json"],
        ["gen", "--family", "thm3.11", "--weights", "3,1,2"],
    ],
)
def test_output_is_byte_identical_across_processes(argv):
    cmd = [sys.executable, "-m", "wefsub", *argv]
    first = subprocess.run(cmd, cwd=FIXTURES, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, cwd=FIXTURES, capture_output=True, check=True).stdout
    assert first == second and first


def test_failed_recheck_exits_2(capsys, monkeypatch):
    monkeypatch.setattr(cli.envy_graph, "check_wef", lambda *args: False)
    code, report, err = run(capsys, "allocate", fx("heavy_tail.json"))
    assert code == 2 and report is None
    assert "not make the allocation WEF" in err


def test_gen_accepts_descriptive_names(capsys):
    _, short, _ = run(capsys, "gen", "--family", "prop5.1", "--weights", "1,2,3")
    _, long, _ = run(capsys, "gen", "--family", "two-fans", "--weights", "1,2,3")
    assert short == long
    assert long["tight_total"] == "2"
