import io
import subprocess
import sys

import pytest

from rennerhecke.catalog import from_text, rook_data, to_text
from rennerhecke.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_catalog_prints_data():
    code, text = call("catalog", "--rook", "3")
    assert code == 0 and from_text(text) == rook_data(3)
    code, text = call("catalog")
    assert "rook-2" in text.split()


def test_validate(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(to_text(rook_data(3)))
    assert call("validate", str(good)) == (0, "valid\n")
    bad = tmp_path / "bad.json"
    data = rook_data(3)
    bad.write_text(to_text(data.replace(lambda_upper=[set(), {"s2"}, {"s1"}])))
    code, text = call("validate", str(bad))
    assert code == 1 and "[a" in text
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert call("validate", str(broken))[0] == 2
    assert call("validate", str(tmp_path / "missing.json"))[0] == 2


def test_elements():
    code, text = call("elements", "--rook", "2")
    assert code == 0
    lines = text.splitlines()
    assert lines[:3] == ["1\t0", "s1\t1", ". e1 .\t0"]
    assert lines[-1] == "# 7 elements"


def test_elements_from_file(tmp_path):
    path = tmp_path / "r3.json"
    path.write_text(to_text(rook_data(3)))
    code, text = call("elements", str(path))
    assert code == 0 and text.splitlines()[-1] == "# 34 elements"


def test_mul():
    assert call("mul", "--rook", "2", "s . e1 .", "s . e1 .") == (0, ". e0 .\n")
    assert call("mul", "--rook", "3", "s1 s2 . e1 . s1", "1")[1].strip() == "s1 . e1 . s1"


def test_hecke_mul():
    code, text = call("hecke-mul", "--rook", "2", "e1", "s . e1 . ")
    assert code == 0 and text.strip() == "q * [. e0 .]"
    assert call("hecke-mul", "--rook", "2", "s", "s")[1].strip() == "q * [1] + (q-1) * [s1]"


def test_verify():
    code, text = call("verify", "--rook", "3")
    assert code == 0
    assert "monoid relations: 0 failures" in text and "Hecke relations: 0 failures" in text


@pytest.mark.parametrize("argv", [
    ["mul", "--rook", "2", "x", "s"],
    ["mul", "s", "s"],
    ["mul", "--rook", "0", "s", "s"],
    ["oracle-compare", "--n", "2", "--p", "4"],
    ["catalog", "--name", "nothing"],
    ["nonsense"],
    [],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_oracle_compare_reports_agreement_count(tmp_path):
    table = tmp_path / "table.tsv"
    code, text = call("oracle-compare", "--n", "2", "--p", "2", "--emit-table", str(table))
    assert text.startswith("M_2(F_2): ")
    assert "/343 entries match" in text
    assert table.read_text().startswith("# left\tright\tresult\tcoefficient\n")
    assert code == (0 if "343/343" in text.splitlines()[0] else 1)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rennerhecke", "mul", "--rook", "2", "s", "s"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1\n"
