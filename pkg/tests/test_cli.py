import io
import json
import re
import subprocess
import sys

import pytest

from bikei.cli import main
from bikei.polynomial import EnhancementPolynomial

from conftest import DATA


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


Z4_MATRIX = """4
3 1 3 1 3 3 3 3
4 2 4 2 2 2 2 2
1 3 1 3 1 1 1 1
2 4 2 4 4 4 4 4
"""


def test_verify_z4():
    code, text = run("verify", "--tsr", "4", "1", "2", "3")
    assert code == 0
    assert "birack: yes, involutory: yes" in text and "bikei: yes" in text and "N=1" in text
    assert text.endswith(Z4_MATRIX)


def test_verify_z11():
    code, text = run("verify", "--tsr", "11", "6", "5", "3")
    assert code == 0
    assert "involutory: no" in text and "biquandle: yes" in text and "N=1" in text


def test_verify_matrix_file():
    code, text = run("verify", "--matrix", str(DATA / "z4_bikei.txt"))
    assert code == 0 and text.endswith(Z4_MATRIX)


def test_verify_bad_column(capsys):
    code, _ = run("verify", "--matrix", str(DATA / "bad_column.txt"))
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_verify_missing_file():
    assert run("verify", "--matrix", "/nonexistent/file.txt")[0] == 2


def test_verify_failing_axioms(tmp_path):
    # every column is a bijection, yet the table is not a birack
    f = tmp_path / "m.txt"
    f.write_text("2\n1 2 1 2\n2 1 2 1\n")
    code, text = run("verify", "--matrix", str(f))
    assert code == 1
    assert "FAIL" in text


def test_verify_json():
    code, text = run("verify", "--tsr", "3", "2", "2", "1", "--format", "json")
    data = json.loads(text)
    assert code == 0
    assert all(c["passed"] for c in data["axioms"])
    assert data["flags"]["kei"] is True and data["rank"] == 1


def test_classify():
    assert run("classify", "--tsr", "3", "2", "2", "1")[1] == (
        "birack: yes, involutory: yes, rack: yes, quandle: yes, biquandle: yes, "
        "bikei: yes, kei: yes, N=1\n")
    code, text = run("classify", "--constant", "2,1", "1,2")
    assert code == 0 and "involutory: yes" in text and "N=2" in text


def test_constant_not_commuting():
    assert run("classify", "--constant", "2,3,1", "2,1,3")[0] == 2


@pytest.mark.parametrize("argv,total", [
    (["--tsr", "3", "2", "2", "1", "--braid", "s1 s1 s1"], 9),
    (["--tsr", "3", "2", "2", "1", "--braid", ""], 3),
    (["--tsr", "3", "2", "2", "1", "--gauss", "O+1 U+2 O+3 U+1 O+2 U+3"], 9),
    (["--tsr", "11", "6", "5", "3", "--presentation", str(DATA / "vk33_down.txt"), "--oriented"], 1),
    (["--tsr", "11", "6", "5", "3", "--presentation", str(DATA / "vk33_up.txt"), "--oriented"], 11),
    (["--constant", "2,1", "1,2", "--braid", ""], 2),
])
def test_invariant_totals(argv, total):
    code, text = run("invariant", *argv)
    assert code == 0
    assert text.startswith(f"total: {total}\n")
    code, js = run("invariant", *argv, "--format", "json")
    assert json.loads(js)["total"] == total


def test_invariant_needs_orientation(capsys):
    code, _ = run("invariant", "--tsr", "11", "6", "5", "3", "--braid", "s1 s1 s1")
    assert code == 3
    assert "--oriented" in capsys.readouterr().err


# a constant action birack has no (t,s,r) form, so counting goes through the budgeted search
CYCLIC = ["invariant", "--constant", "2,3,1", "1,2,3", "--oriented", "--braid", "s1 s1 s1"]


def test_invariant_budget():
    assert run(*CYCLIC, "--budget", "2")[0] == 4
    assert run(*CYCLIC, "--budget", "1000")[0] == 0


def test_budget_env(monkeypatch):
    monkeypatch.setenv("BIKEI_BUDGET", "2")
    assert run(*CYCLIC)[0] == 4
    assert run(*CYCLIC, "--budget", "1000")[0] == 0


def test_invariant_parse_error(capsys):
    assert run("invariant", "--tsr", "3", "2", "2", "1", "--braid", "s1 q1")[0] == 2
    assert "q1" in capsys.readouterr().err


@pytest.mark.parametrize("enh,expect", [("image", "3u + 6u^3"), ("colgroup", "3u^2 + 6u^6"),
                                        ("writhe", "9")])
def test_enhancements_text_and_json_agree(enh, expect):
    base = ["invariant", "--tsr", "3", "2", "2", "1", "--braid", "s1 s1 s1", "--enhancement", enh]
    code, text = run(*base)
    assert code == 0 and f"{enh}: {expect}\n" in text
    code, js = run(*base, "--format", "json")
    data = json.loads(js)
    poly = EnhancementPolynomial.from_json(data["polynomial"])
    assert str(poly) == expect
    assert poly.at_one() == data["total"] == 9
    assert sum(e["count"] for e in data["per_framing"]) == data["total"]
    numbers = [int(v) for v in re.findall(r"\d+", text.split("\n")[0])]
    assert numbers == [data["total"]]


def test_per_framing_lines():
    code, text = run("invariant", "--constant", "2,1", "1,2", "--braid", "")
    assert text == "total: 2\nframing (0): 2\nframing (1): 0\n"


def test_byte_identical_repeat():
    argv = ["invariant", "--tsr", "4", "1", "2", "3", "--braid", "s1 S2 s1 S2", "--enhancement", "image"]
    assert run(*argv) == run(*argv)
    argv = ["search", "--tables", "2", "--pred", "involutory"]
    assert run(*argv) == run(*argv)


def test_present():
    code, text = run("present", "--braid", "s1 s1 s1")
    assert code == 0
    assert "B(a,b)=(c,d)" in text and "writhe: 3" in text
    data = json.loads(run("present", "--braid", "s1 s1", "--format", "json")[1])
    assert data["writhe"] == [0, 0] and len(data["relations"]) == 2


def test_search_tsr_all():
    code, text = run("search", "--tsr-all", "4")
    assert code == 0
    assert "(t,s,r)=(1,2,3) involutory N=1\n" in text
    assert run("search", "--tsr-all", "65")[0] == 4


def test_search_tables():
    code, text = run("search", "--tables", "1", "--pred", "birack")
    assert code == 0 and text.endswith("1 structures\n")
    code, text = run("search", "--tables", "2", "--pred", "involutory")
    assert text.endswith(": 4 structures\n")
    hits = json.loads(run("search", "--tables", "2", "--pred", "involutory", "--format", "json")[1])
    assert len(hits) == 4
    assert run("search", "--tables", "5")[0] == 4


def test_search_converse():
    code, text = run("search", "--converse", "2")
    assert code == 0 and "column_not_involutory: 0" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bikei", "classify", "--tsr", "4", "1", "2", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "bikei: yes" in proc.stdout
