import csv
import io
import json
import subprocess
import sys

import pytest

from rootedmaps import cache, cli
from rootedmaps.errors import NonIntegerResult
from rootedmaps.recurrences import RecurrenceEngine, q_count


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_process(*argv):
    proc = subprocess.run([sys.executable, "-m", "rootedmaps", *argv],
                          capture_output=True, text=True, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


def test_q_example():
    assert run("q", "--genus", "1", "--edges", "3") == (0, "20\n", "")


def test_poly_example():
    assert run("poly", "--genus", "0", "--edges", "2")[1] == "0,2,5,2\n"


def test_asymptotics_example():
    code, out, _ = run("asymptotics", "--genus-max", "1")
    assert code == 0
    assert "tau=1/3" in out and "t=1/24" in out


def test_asymptotics_pi_power():
    out = run("asymptotics", "--genus-max", "2", "--digits", "12")[1].splitlines()
    assert "t=7/(4320*sqrt(pi))" in out[1]
    assert "t~0.000914196084452" in out[1]


def test_other_subcommands():
    assert run("m", "--genus", "1", "--vertices", "2", "--faces", "2")[1] == "167\n"
    assert run("hz", "--genus", "1", "--edges-max", "4")[1].split() == ["0", "0", "1", "10", "70"]
    assert run("genus-poly", "--edges", "2")[1] == "0,2,5,2\n0,1\n"
    assert run("series", "--genus", "1", "--order", "4")[1].split() == ["0", "0", "1", "20", "307"]
    assert run("bivariate", "--genus", "1")[1] == "0 0 1\n"


def test_rg_plain_and_json():
    code, out, _ = run("rg", "--genus", "1")
    assert code == 0
    assert "alpha_2 = 1/6" in out
    doc = json.loads(run("rg", "--genus", "1", "--format", "json")[1])
    assert doc["alpha"][1] == "1/6"
    assert len(doc["alpha"]) == 2 and len(doc["beta"]) == 1


def test_csv_and_json_agree():
    args = ["q", "--edges", "40", "--all-genera", "--all-edges"]
    rows = list(csv.DictReader(io.StringIO(run(*args, "--format", "csv")[1])))
    doc = json.loads(run(*args, "--format", "json")[1])
    assert len(rows) == len(doc)
    for r, d in zip(rows, doc):
        assert int(r["genus"]) == d["genus"] and int(r["edges"]) == d["edges"]
        assert r["count"] == d["count"]
        assert isinstance(d["count"], str)
        assert int(d["count"]) == q_count(d["genus"], d["edges"])
    assert any(int(d["count"]) > 2 ** 53 for d in doc)


def test_output_is_ascii():
    for args in (["q", "--edges", "30", "--all-genera", "--format", "json"],
                 ["asymptotics", "--genus-max", "3"], ["rg", "--genus", "2"]):
        out = run(*args)[1]
        assert out.isascii()
        assert "\r" not in out


def test_usage_errors_exit_1():
    code, out, err = run("q", "--genus", "1")
    assert code == 1 and out == "" and "--edges" in err
    assert run("nosuchcommand")[0] == 1
    assert run("q", "--edges", "-3")[0] == 1
    assert run("verify", "--edges-max", "9")[0] == 1


def test_global_options_before_or_after_subcommand(tmp_path):
    assert run("--threads", "1", "q", "--edges", "2")[1] == "9\n"
    assert run("q", "--edges", "2", "--threads", "1")[1] == "9\n"
    assert run("--cache-dir", str(tmp_path), "q", "--edges", "2")[0] == 0
    assert (tmp_path / cache.FILENAME).exists()


def test_verify_passes():
    code, out, _ = run("verify", "--edges-max", "3")
    assert code == 0
    assert "FAIL" not in out
    assert out.splitlines()[-1].startswith("all ")


class _CorruptEngine(RecurrenceEngine):
    def hz(self, g, n):
        v = super().hz(g, n)
        return v + 1 if (g, n) == (0, 2) else v


class _BrokenEngine(RecurrenceEngine):
    def q_count(self, g, n):
        raise NonIntegerResult(f"Q_{g}^{n}", "1/2")


def test_verify_failure_exit_2(monkeypatch):
    monkeypatch.setattr(cli, "default_engine", _CorruptEngine)
    code, out, err = run("verify", "--edges-max", "2")
    assert code == 2
    assert "FAIL hz(g=0, n=2)" in out
    assert "hz(g=0, n=2)" in err


def test_consistency_error_exit_3(monkeypatch):
    monkeypatch.setattr(cli, "default_engine", _BrokenEngine)
    code, _, err = run("q", "--edges", "3")
    assert code == 3
    assert "NonIntegerResult" in err


def test_cache_round_trip_is_byte_identical(tmp_path):
    d = str(tmp_path)
    for args in (["q", "--genus", "2", "--edges", "12"],
                 ["poly", "--genus", "1", "--edges", "6"],
                 ["m", "--genus", "1", "--vertices", "3", "--faces", "2"],
                 ["rg", "--genus", "3"],
                 ["asymptotics", "--genus-max", "4"]):
        assert run_process("--cache-dir", d, *args)[0] == 0
    first = (tmp_path / cache.FILENAME).read_bytes()
    # fresh process: reload, recompute from cache, save again
    code, out, _ = run_process("--cache-dir", d, "q", "--genus", "2", "--edges", "12")
    assert code == 0 and out == f"{q_count(2, 12)}\n"
    assert (tmp_path / cache.FILENAME).read_bytes() == first
    doc = json.loads(first)
    assert doc["schemaVersion"] == cache.SCHEMA_VERSION
    assert set(doc["tables"]) == {"Q", "Qpoly", "M", "R_g", "tau"}


def test_cache_version_mismatch_refused(tmp_path):
    path = tmp_path / cache.FILENAME
    path.write_text('{"schemaVersion":99,"tables":{}}\n')
    code, _, err = run("--cache-dir", str(tmp_path), "q", "--edges", "2")
    assert code == 1
    assert "schema version" in err
    assert path.read_text() == '{"schemaVersion":99,"tables":{}}\n'


def test_cache_document_dumps_canonically():
    from rootedmaps.genus_series import GenusSeries
    e, s = RecurrenceEngine(), GenusSeries()
    e.q_count(1, 5)
    s.rg(2)
    text = cache.dumps(cache.build_document(e, s))
    assert text.endswith("}\n") and " " not in text
    e2, s2 = RecurrenceEngine(), GenusSeries()
    cache.apply_document(json.loads(text), e2, s2)
    assert cache.dumps(cache.build_document(e2, s2)) == text


@pytest.mark.parametrize("args", [["q", "--genus", "1", "--edges", "3"]])
def test_module_entry_point(args):
    assert run_process(*args)[:2] == (0, "20\n")
