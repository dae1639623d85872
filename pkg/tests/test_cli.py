from __future__ import annotations

import os
import subprocess
import sys

import pytest

from helpers import LET, MINICORPUS
from holtptp.cli import main, output_name, parse_config
from holtptp.formats import FORMAT_NAMES


def test_output_name():
    assert output_name("LET_THM", "tf0-ii", "chainy") == "LET_THM_tf0-ii_chainy.p"


def test_translate_single_theorem(tmp_path, capsys):
    rc = main(["translate", "--theory", str(LET), "--out", str(tmp_path), "--format", "th0-ii", "--theorem", "let_thm"])
    assert rc == 0
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == ["LET_THM_th0-ii_bushy.p"]
    conj = [line for line in (tmp_path / files[0]).read_text().splitlines() if ", conjecture," in line]
    assert conj == [
        "thf(conj, conjecture, ![A: del, B: del, F: $i]: ((mem @ F @ (arr @ A @ B)) => "
        "(![X: $i]: ((mem @ X @ A) => ((ap @ (ap @ (let @ A @ B) @ F) @ X) = (ap @ F @ X))))))."
    ]
    assert "wrote 1 file" in capsys.readouterr().out


def test_translate_all_formats_then_check(tmp_path, capsys):
    assert main(["translate", "--theory", str(LET), "--out", str(tmp_path), "--mode", "chainy"]) == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == sorted(output_name("LET_THM", f, "chainy") for f in FORMAT_NAMES)
    capsys.readouterr()
    assert main(["check", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "8 clean, 0 with violations" in out


def test_parallel_equals_serial(tmp_path):
    serial, parallel = tmp_path / "serial", tmp_path / "parallel"
    assert main(["translate", "--theory", str(MINICORPUS), "--out", str(serial), "--format", "tf0-ii"]) == 0
    assert main(["translate", "--theory", str(MINICORPUS), "--out", str(parallel), "--format", "tf0-ii",
                 "--jobs", "3"]) == 0
    s = {p.name: p.read_bytes() for p in serial.iterdir()}
    p = {p.name: p.read_bytes() for p in parallel.iterdir()}
    assert s == p and len(s) > 20


def test_no_special_types_flag(tmp_path):
    args = ["translate", "--theory", str(MINICORPUS), "--format", "tf0-ii", "--theorem", "ADD_ONE"]
    main(args + ["--out", str(tmp_path / "on")])
    main(args + ["--out", str(tmp_path / "off"), "--no-special-types"])
    on = next((tmp_path / "on").iterdir()).read_text()
    off = next((tmp_path / "off").iterdir()).read_text()
    assert "i_num" in on and "bridge_" in on
    assert "i_num" not in off and "bridge_" not in off


def test_check_reports_violations(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("GRUNGE_NO_COLOR", "1")
    bad = tmp_path / "goal_tf0-i_bushy.p"
    bad.write_text("tff(a, conjecture, !>[A: $tType]: ![X: A]: (X = X)).\n")
    assert main(["check", str(bad)]) == 1
    out = capsys.readouterr().out
    assert out.startswith("FAIL ")
    assert "tf0-no-type-quant" in out
    assert "\033[" not in out


def test_colour_is_on_by_default(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("GRUNGE_NO_COLOR", raising=False)
    good = tmp_path / "x.p"
    good.write_text("fof(a, conjecture, $true).\n")
    assert main(["check", str(good)]) == 0
    assert "\033[32m" in capsys.readouterr().out


def test_check_syntax_error(tmp_path, capsys):
    bad = tmp_path / "x.p"
    bad.write_text("fof(a, conjecture, p(X).\n")
    assert main(["check", str(bad)]) == 1
    assert "syntax error" in capsys.readouterr().out


def test_classify_outputs(tmp_path, capsys):
    assert main(["classify", "--theory", str(MINICORPUS), "--out", str(tmp_path)]) == 0
    table = (tmp_path / "minicorpus_categories.txt").read_text()
    assert table == capsys.readouterr().out
    rows = table.splitlines()
    assert rows[0].split() == ["category", "count"]
    assert [r.split()[0] for r in rows[1:]] == ["UniFO", "MonoFO", "PolyFO", "MonoHO", "PolyHO", "total"]
    assert rows[-1].split() == ["total", "47"]
    lines = (tmp_path / "minicorpus_categories.csv").read_text().splitlines()
    assert lines[0] == "formula,role,category"
    assert len(lines) == 48


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["translate"],
        ["translate", "--theory", "x.holt", "--format", "th2"],
        ["translate", "--theory", "x.holt", "--mode", "leafy"],
        ["translate", "--theory", "x.holt", "--jobs", "0"],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_missing_theory_file(tmp_path):
    assert main(["translate", "--theory", str(tmp_path / "nope.holt")]) == 2


def test_unknown_theorem(tmp_path):
    assert main(["translate", "--theory", str(LET), "--out", str(tmp_path), "--theorem", "NOPE"]) == 2


def test_check_without_files(tmp_path):
    assert main(["check", str(tmp_path)]) == 2


def test_malformed_theory_exits_one(tmp_path, capsys):
    bad = tmp_path / "bad.holt"
    bad.write_text("(axiom a (c nothing bool))\n")
    assert main(["classify", "--theory", str(bad), "--out", str(tmp_path)]) == 1
    assert "bad.holt:" in capsys.readouterr().err


def test_config_parsing():
    cfg = parse_config(["translate", "--theory", "t.holt", "--format", "fof-ii", "--no-special-types", "--jobs", "4"])
    assert cfg.formats == ("fof-ii",) and not cfg.special_types and cfg.jobs == 4
    assert parse_config(["translate", "--theory", "t.holt"]).formats == FORMAT_NAMES


def test_cli_does_not_import_sklearn():
    code = "import sys, holtptp.cli; sys.exit('sklearn' in sys.modules)"
    assert subprocess.run([sys.executable, "-c", code], env=os.environ.copy()).returncode == 0


def test_console_entry_point(tmp_path):
    env = dict(os.environ, GRUNGE_NO_COLOR="1")
    done = subprocess.run([sys.executable, "-m", "holtptp.cli", "classify", "--theory", str(LET),
                           "--out", str(tmp_path)], capture_output=True, text=True, env=env)
    assert done.returncode == 0
    assert "total" in done.stdout
