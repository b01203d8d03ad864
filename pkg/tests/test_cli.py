import json
import subprocess
import sys

import pytest

from clusterpolylog import cli
from clusterpolylog.cluster import cl_space


def run(args, env=None):
    p = subprocess.run([sys.executable, "-m", "clusterpolylog", *args],
                       capture_output=True, text=True, env=env)
    return p.returncode, [json.loads(l) for l in p.stdout.splitlines() if l.strip()]


def test_dim_cl_pass():
    code, recs = run(["dim-cl", "--weight", "2", "--points", "5"])
    assert code == 0
    (r,) = recs
    assert r["verdict"] == "pass" and r["computed"] == "4" and r["expected"] == "4"
    assert set(r) >= {"suite", "params", "verdict", "expected", "computed", "elapsed_ms", "version_hash"}


def test_psi_pass():
    code, recs = run(["verify-psi", "--N", "3", "--degree", "8"])
    assert code == 0 and recs[0]["verdict"] == "pass"


def test_guard_overflow_exit_3():
    code, recs = run(["dim-cl", "--weight", "6", "--points", "10", "--guard-limit", "100000"])
    assert code == 3 and recs[0]["verdict"] == "too-large"


def test_usage_errors_exit_2():
    assert run(["no-such-command"])[0] == 2
    assert run(["dim-cl", "--bogus", "1"])[0] == 2


def test_failing_check_exit_1(capsys):
    rep = cli.Reporter(sys.stdout)
    rep.check("demo", {}, lambda: False)
    assert rep.exit_code() == 1


def test_report_determinism(tmp_path):
    outs = []
    for i in range(2):
        f = tmp_path / ("r%d.jsonl" % i)
        assert cli.run(["dim-inv", "--weight", "3", "--out", str(f)]) == 0
        recs = [json.loads(l) for l in f.read_text().splitlines()]
        for r in recs:
            r.pop("elapsed_ms")
        outs.append(recs)
    assert outs[0] == outs[1]


def test_cache_round_trip(tmp_path):
    s = cl_space(2, 5)
    cli.cache_store(tmp_path, 2, 5, s)
    t = cli.cache_load(tmp_path, 2, 5)
    assert t.rank == s.rank == 4
    assert all(t.contains(r.d) for r in s.rows())


def test_cache_empty_list(tmp_path, capsys):
    assert cli.run(["cache", "list", "--cache-dir", str(tmp_path)]) == 0
    assert capsys.readouterr().out == ""


def test_cache_used_by_dim_cl(tmp_path, capsys):
    assert cli.run(["dim-cl", "--weight", "2", "--points", "5", "--cache-dir", str(tmp_path)]) == 0
    assert (tmp_path / "cl_n2_p5.txt").exists()
    capsys.readouterr()
    assert cli.run(["cache", "list", "--cache-dir", str(tmp_path)]) == 0
    assert "cl_n2_p5.txt" in capsys.readouterr().out


@pytest.mark.parametrize("damage", ["flip", "header", "garbage"])
def test_cache_corruption_detected(tmp_path, capsys, damage):
    p = cli.cache_store(tmp_path, 2, 5, cl_space(2, 5))
    text = p.read_text()
    if damage == "flip":
        text = text.replace("1*", "2*", 1)
    elif damage == "header":
        text = text.split("\n", 1)[1]
    else:
        text += "not a row\n"
    p.write_text(text)
    if damage == "flip":
        assert cli.cache_load(tmp_path, 2, 5) is None
    capsys.readouterr()
    code = cli.run(["cache", "verify", "--cache-dir", str(tmp_path)])
    recs = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    assert code == 1 and recs[0]["verdict"] == "fail"
    assert not p.exists() and p.with_suffix(".invalid").exists()


def test_cache_clear(tmp_path, capsys):
    cli.cache_store(tmp_path, 2, 5, cl_space(2, 5))
    assert cli.run(["cache", "clear", "--cache-dir", str(tmp_path)]) == 0
    assert not list(tmp_path.iterdir())


def test_gangl4_subcommand():
    code, recs = run(["verify-gangl4"])
    assert code == 0
    assert all(r["verdict"] in ("pass", "skipped") for r in recs)
