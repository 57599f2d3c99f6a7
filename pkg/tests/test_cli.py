from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from heckebraid.braid import read_braid_file, torus
from heckebraid.cli import main
from heckebraid.homfly import homfly, parse_homfly, skein_oracle
from heckebraid.laurent import parse_poly
from heckebraid.permutation import Permutation, to_index
from heckebraid.search import verify_kernel


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_hecke_examples():
    code, out = run("hecke", "-n", "2", "-b", "1")
    assert code == 0 and out == "1\t2 1\t1\n"
    code, out = run("hecke", "-n", "2", "-b", "-1")
    assert code == 0 and len(out.splitlines()) == 2
    code, out = run("hecke", "-n", "3", "-b", "")
    assert out == "0\t1 2 3\t1\n"


def test_hecke_dump_reparses():
    code, out = run("hecke", "-n", "4", "-b", "1 -2 3 1 2 -3 -1", "--mod", "3")
    assert code == 0
    for line in out.splitlines():
        j, word, poly = line.split("\t")
        p = Permutation.parse(word)
        assert to_index(p) == int(j)
        assert parse_poly(poly) is not None


def test_hecke_json_mirrors_text():
    _, text = run("hecke", "-n", "3", "-b", "-1 2")
    _, js = run("hecke", "-n", "3", "-b", "-1 2", "--format", "json")
    data = json.loads(js)
    rows = ["\t".join((str(c["index"]), c["word"], c["poly"])) for c in data["coordinates"]]
    assert rows == text.splitlines()


def test_homfly_examples():
    assert run("homfly", "-n", "2", "-b", "1") == (0, "1 * a^-1 * q^1 * d^1\n")
    assert run("homfly", "-n", "3", "-b", "2 1") == (0, "1 * a^-2 * q^2 * d^1\n")
    code, out = run("homfly", "gen", "torus", "2", "3")
    assert code == 0
    assert parse_homfly(out).equivalent(skein_oracle(torus(2, 3)))


def test_homfly_reduced():
    code, out = run("homfly", "gen", "torus", "2", "3", "--reduced")
    assert code == 0 and parse_homfly(out) == homfly(torus(2, 3)).reduced()
    code, _ = run("homfly", "-n", "2", "-b", "1 1", "--reduced")
    assert code == 2


def test_homfly_json_roundtrip():
    _, out = run("homfly", "gen", "weaving", "3", "2", "--format", "json")
    data = json.loads(out)
    from heckebraid.homfly import homfly_from_json
    assert homfly_from_json(data["homfly"]) == homfly(read_braid_file("n=3\n1 -2 1 -2"))


def test_verify_examples():
    assert run("verify", "--fixture", "b5_mod2")[0] == 0
    assert run("verify", "--fixture", "b4_mod4")[0] == 0
    code, out = run("verify", "--fixture", "b5_mod2", "--mod", "5")
    assert code == 1 and "not trivial" in out
    code, out = run("verify", "-n", "2", "-b", "1 -1", "--mod", "2", "--format", "json")
    assert code == 0 and json.loads(out)["trivial"] is True
    assert run("verify", "-n", "2", "-b", "1")[0] == 2


def test_gen_roundtrip(tmp_path):
    code, out = run("gen", "torus", "6", "41")
    assert code == 0
    b = read_braid_file(out)
    assert b == torus(6, 41) and len(b) == 205
    f = tmp_path / "w.braid"
    assert run("gen", "weaving", "4", "3", "-o", str(f))[0] == 0
    code, out = run("hecke", "--file", str(f))
    assert code == 0 and out


def test_bench_csv():
    code, out = run("bench", "--family", "torus", "--strands", "5", "--max-crossings", "60")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 15
    assert rows[-1]["crossings"] == "60" and rows[-1]["strands"] == "5"
    assert int(rows[-1]["peak_polys"]) == 120
    assert all(float(r["wall_time_s"]) >= 0 for r in rows)


def test_search_writes_witness_files_and_log(tmp_path):
    code, out = run("search", "-n", "3", "--mod", "2", "--max-len", "4", "--seed", "2",
                    "--bucket", "8", "--out", str(tmp_path))
    assert code == 0
    log = json.loads((tmp_path / "search_log.json").read_text())
    assert [g["generation"] for g in log["generations"]] == [1, 2, 3, 4]
    for w in tmp_path.glob("witness_*.braid"):
        assert verify_kernel(read_braid_file(w.read_text()), 2)


def test_threads_identical_outputs():
    for cmd in ("hecke", "homfly"):
        _, one = run(cmd, "gen", "torus", "5", "6")
        _, many = run(cmd, "gen", "torus", "5", "6", "--threads", "4")
        assert one == many


@pytest.mark.parametrize("argv", [
    ("hecke", "-n", "2", "-b", "3"),
    ("hecke", "-n", "2", "-b", "0"),
    ("hecke",),
    ("hecke", "-n", "21", "-b", "1"),
    ("hecke", "-n", "3", "-b", "1", "--mod", "1"),
    ("hecke", "gen", "spiral", "2", "3"),
    ("hecke", "-b", "1", "--fixture", "b4_mod2"),
    ("nonsense",),
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_resource_error_exit():
    # a dense 11! vector is refused
    assert run("hecke", "-n", "11", "-b", "1")[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "heckebraid", "homfly", "-n", "2", "-b", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "1 * a^-1 * q^1 * d^1\n"
