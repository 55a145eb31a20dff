from __future__ import annotations

import json
import subprocess
import sys

import pytest

from kustab.chern import NumChern
from kustab.cli import main, parse_class
from kustab.kulattice import named_class
from kustab.variety import GM


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    data = json.loads(out)
    assert data["schema"] == "1"
    return code, data


def test_chi_gram_entry(capsys):
    code, out, _ = run(capsys, "chi", "--left", "@b1", "--right", "@b2")
    assert (code, out.strip()) == (0, "-3")


def test_region_failure_exit_code(capsys):
    code, out, _ = run(capsys, "region", "--s", "0", "--q", "-1", "--region", "2")
    assert code == 1
    assert "not in region: below Li boundary" in out


def test_region_inside_with_window(capsys):
    code, data = run_json(capsys, "region", "--s", "-49/100", "--q", "24/500", "--region", "2")
    assert code == 0 and data["in_region"] is True
    assert data["window"] == ["-1/5", "-24/245"]


def test_serre_check(capsys):
    code, data = run_json(
        capsys, "serre-check", "--p3", "1/4,1/100", "--p2", "-49/100,241/5000",
        "--p1", "-51/100,57/1000",
    )
    cert = data["certificate"]
    assert code == 0 and cert["passes"] and cert["lattice_fixed"]
    assert cert["serre_matrix"] == [["1", "0"], ["0", "1"]]


def test_serre_check_rejects_point_outside(capsys):
    code, data = run_json(
        capsys, "serre-check", "--p3", "1/4,1/100", "--p2", "-49/100,241/5000",
        "--p1", "-51/100,2651/50000",
    )
    assert code == 1 and data["error"] == "OutsideRegion"


def test_charge(capsys):
    code, data = run_json(capsys, "charge", "--s", "-1/2", "--q", "1/20", "--class", "@b1")
    assert (data["re"], data["im"]) == ("7/2", "5")
    code, data = run_json(capsys, "charge", "--beta", "1/100", "--alpha-sq", "1/40000",
                          "--mu", "0", "--class", "@d2")
    assert (data["re"], data["im"]) == ("10", "39/10")


def test_mutate_and_coords(capsys):
    code, out, _ = run(capsys, "mutate", "--functor", "LO", "--class", "@d1")
    assert out.strip() == "(-3, 1, 1/5, -1/12)"
    code, data = run_json(capsys, "coords", "--class", "@Q1", "--lattice", "1")
    assert data["coords"] == ["-1", "1"] and data["integral"]
    code, data = run_json(capsys, "coords", "--class", "@O", "--lattice", "1")
    assert code == 1 and data["error"] == "NotInLattice"


def test_ell(capsys):
    code, data = run_json(capsys, "ell", "--radius", "10")
    assert data["ell"] == "-1"
    assert [1, -1] in data["witnesses"]


def test_slope_and_wall(capsys):
    code, out, _ = run(capsys, "slope", "--s", "0", "--q", "1/8", "--class", "0,0,1")
    assert out.strip() == "inf"
    code, data = run_json(capsys, "wall", "--s", "0", "--q", "1/8", "--class", "@O(1)")
    assert data["b_minus"]["a"] == "1" and data["b_minus"]["b"] == "0"


def test_orbit_solve(capsys):
    code, data = run_json(capsys, "orbit-solve", "--pa", "-7/10,9/40", "--pb", "-3/5,3/25",
                          "--region", "1")
    assert code == 0
    num, _, den = data["transform"]["det"].partition("/")
    assert int(num) > 0


def test_usage_errors(capsys):
    code, _, err = run(capsys, "chi", "--left", "@nope", "--right", "@b1")
    assert code == 2 and "unknown" in err
    with pytest.raises(SystemExit) as exc:
        main(["region", "--s", "x", "--q", "0", "--region", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_genus_flag_and_config(capsys, tmp_path):
    code, data = run_json(capsys, "--genus", "10", "class", "@E2")
    assert data["class"] == {"rk": "2", "c1": "-1", "ch2": "1/6"}
    code, _, _ = run(capsys, "--genus", "7", "class", "@O")
    assert code == 1
    cfg = tmp_path / "v.json"
    cfg.write_text('{"genus": 12}')
    code, data = run_json(capsys, "--config", str(cfg), "class", "@E2")
    assert data["class"]["ch2"] == "2/11"
    # flags are also accepted after the subcommand
    code, data = run_json(capsys, "class", "@E2", "--genus", "8")
    assert data["class"]["ch2"] == "1/7"


@pytest.mark.parametrize("name", ["b1", "b2", "c1", "d2", "U", "Udual", "O(-2)", "Q1", "conic"])
def test_class_json_round_trip(capsys, name):
    code, data = run_json(capsys, "class", "@" + name)
    text = json.dumps(data["class"])
    assert parse_class(text, GM) == named_class(name, GM)
    # and the comma form
    v = NumChern.from_json(data["class"])
    comma = ",".join(v.to_json()[k] for k in ("rk", "c1", "ch2", "ch3"))
    assert parse_class(comma, GM) == v


def test_figure(capsys, tmp_path):
    out = tmp_path / "fig.svg"
    code, data = run_json(capsys, "figure", "--kind", "regions", "--out", str(out))
    assert code == 0 and out.read_text().startswith("<?xml")


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "kustab", "chi", "--left", "@b1", "--right", "@b1"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and res.stdout.strip() == "-2"
