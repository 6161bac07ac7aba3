import json

import pytest

from weierstrass.cli import main, parse_spec
from weierstrass.core import from_generators
from weierstrass.errors import SpecParseError
from weierstrass.families import komeda


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_inv_json(capsys):
    code, out, _ = run(capsys, "inv", "gens:6,7,8", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert (d["genus"], d["weight"], d["effective_weight"], d["lambda"]) == (9, 17, 12, 1)
    assert d["is_primitive"] is False
    assert d["wt_minus_ew"] == d["composite_gap_pairs"] == 5
    assert d["g_minus_lambda"] == 8


def test_inv_empty_gaps(capsys):
    code, out, _ = run(capsys, "inv", "gaps:", "--format", "json")
    assert code == 0 and json.loads(out)["genus"] == 0


@pytest.mark.parametrize("spec", ["gens:2,4", "gens:7,6", "gaps:1,2,4,8", "family:nope"])
def test_inv_input_errors(capsys, spec):
    code, out, err = run(capsys, "inv", spec)
    assert code == 2 and out == "" and "error" in err


def test_family_spec_forms():
    assert parse_spec("family:komeda m=5") == komeda(5)
    assert parse_spec("family:two-gen e=3,d=7") == from_generators([3, 7])
    with pytest.raises(SpecParseError):
        parse_spec("family:komeda m=x")


def test_chain_exit_codes(capsys):
    code, out, _ = run(capsys, "chain", "gens:2,11", "--format", "json")
    assert code == 0 and len(json.loads(out)["steps"]) == 4
    code, out, _ = run(capsys, "chain", "family:komeda", "m=5")
    assert code == 3 and "KomedaException" in out
    code, out, _ = run(capsys, "chain", "gens:1", "--format", "json")
    assert code == 0 and json.loads(out)["steps"] == []


def test_table_counts(capsys):
    code, out, _ = run(capsys, "table", "counts", "--max-genus", "8", "--format", "csv")
    assert code == 0
    assert [int(line.split(",")[1]) for line in out.splitlines()[1:]] == [1, 1, 2, 4, 7, 12, 23, 39, 67]
    code, out, _ = run(capsys, "table", "counts", "--max-genus", "0", "--format", "csv")
    assert out.splitlines() == ["g,count", "0,1"]


def test_table_deligne(capsys):
    code, out, _ = run(capsys, "table", "deligne", "--max-genus", "6", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 50
    assert all(r["bound_holds"] for r in rows)
    assert all(r["equality"] == r["negatively_graded"] for r in rows)


def test_table_primitivity_and_families(capsys):
    code, out, _ = run(capsys, "table", "primitivity", "--max-genus", "5", "--format", "json")
    assert code == 0 and all(r["primitive"] == r["wt_equals_ew"] for r in json.loads(out))
    code, out, _ = run(capsys, "table", "families", "--max-genus", "10", "--format", "json")
    assert code == 0 and all(r["ok"] for r in json.loads(out))


def test_conjecture_small(capsys):
    code, out, _ = run(capsys, "conjecture", "max-ew", "--max-genus", "9", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["ok"]
    row = d["rows"][9]
    assert row["max_ew"] == row["bound"] == 12
    assert "gens:8,9,10,11,12,13" in row["witnesses"] and row["sporadic"]
    code, out, _ = run(capsys, "conjecture", "max-ew", "--max-genus", "1", "--format", "json")
    assert json.loads(out)["rows"][1]["max_ew"] == 0


def test_enumerate_deterministic_across_jobs(capsys):
    outputs = set()
    for jobs in ("1", "3"):
        code, out, _ = run(capsys, "enumerate", "--max-genus", "12", "--jobs", jobs, "--format", "json", "--quiet")
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_rho_and_family(capsys):
    code, out, _ = run(capsys, "rho", "-g", "2", "-r", "2", "-d", "5", "--seq", "0,3,5")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "family", "two-gen", "e=3", "d=7", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["ok"] and d["predicted"]["codim"] == 6


def test_check_identities(capsys):
    code, out, _ = run(capsys, "check-identities", "--max-genus", "7", "--samples", "200", "--format", "json")
    assert code == 0 and json.loads(out)["ok"]


def test_out_file(tmp_path, capsys):
    path = tmp_path / "inv.json"
    code, out, _ = run(capsys, "inv", "gens:3,4", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["is_symmetric"] is True


def test_usage_errors(capsys):
    assert main(["enumerate"]) == 2
    assert main(["enumerate", "--max-genus", "3", "--jobs", "0"]) == 2
    capsys.readouterr()
