import io
import json
import subprocess
import sys

from tiltrep.cli import run
from tiltrep.closedform import dn_rank2
from tiltrep.rep import rep_from_json


def _run(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


def test_build_text_and_json():
    code, text = _run("build", "dn-rank2", "--n", "5", "--i", "1", "--j", "2", "--m", "1")
    assert code == 0 and "quiver D~5 over q" in text
    code, js = _run("build", "dn-rank2", "--n", "5", "--i", "1", "--j", "2", "--m", "1", "--format", "json")
    assert code == 0
    assert rep_from_json(js).same_data(dn_rank2(5, 1, 2, 1))


def test_output_is_deterministic():
    argv = ("functor", "dn", "--n", "6", "--i", "2", "--j", "3", "--m", "2", "--format", "json")
    assert _run(*argv)[1] == _run(*argv)[1]


def test_compare_reports_certificate():
    code, text = _run("compare", "dn-rank2", "--n", "5", "--i", "1", "--j", "3", "--m", "2")
    assert code == 0
    assert text.startswith("dn-rank2(n=5,i=1,j=3,m=2): ISOMORPHIC")
    assert "certificate" in text
    assert _run("compare", "dn-rank2", "--n", "5", "--i", "1", "--j", "3", "--m", "2")[1] == text


def test_compare_e6_over_prime_field():
    code, text = _run("compare", "e6-rank3", "--series", "1", "--m", "2", "--field", "fp:101")
    assert code == 0 and "ISOMORPHIC" in text


def test_usage_errors_exit_2(capsys):
    assert _run("build", "dn-rank2", "--n", "4")[0] == 2
    assert _run("build", "dn-rank2", "--n", "4", "--i", "2", "--j", "1", "--m", "0")[0] == 2
    assert _run("build", "dn-rank2", "--n", "4", "--i", "1", "--j", "2", "--m", "0", "--field", "fp:4")[0] == 2
    assert _run("describe", "file")[0] == 2
    assert _run("nonsense")[0] == 2
    assert "usage error" in capsys.readouterr().err


def test_describe():
    code, text = _run("describe", "dn", "--n", "5")
    assert code == 0 and "D~5" in text
    code, js = _run("describe", "canonical", "--p", "3", "--q", "2", "--s", "2", "--format", "json")
    assert code == 0 and json.loads(js)


def test_export_roundtrip_and_describe_file(tmp_path):
    path = tmp_path / "n.json"
    code, _ = _run("export", "e6-rank3", "--series", "2", "--m", "2", "-o", str(path))
    assert code == 0
    N = rep_from_json(path.read_text())
    assert N.dims[0] == 8
    code, text = _run("describe", "file", "--input", str(path))
    assert code == 0 and "E~6" in text


def test_verify_subset():
    code, text = _run("verify", "A6,A7", "--max-n", "5")
    assert code == 0
    lines = [ln for ln in text.splitlines() if ln.startswith("A")]
    assert lines[0].startswith("A6 PASS") and lines[1].startswith("A7 PASS")


def test_verify_json():
    code, js = _run("verify", "A9", "--format", "json")
    assert code == 0
    assert json.loads(js)[0]["passed"] is True


def test_verify_failure_exits_1():
    # the series-2 hub rows of A4 do not hold; the exit status reports it
    code, text = _run("verify", "A4", "--max-m", "2")
    assert code == 1 and "A4 FAIL" in text


def test_console_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "tiltrep", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("tiltrep ")
