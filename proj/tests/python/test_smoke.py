import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import matchless

SCHEMA = Path(os.environ.get("MATCHLESS_SCHEMA", Path(__file__).parents[2] / "schemas" / "report.schema.json"))


def test_version():
    assert matchless.__version__ == "0.1.0"


def test_family_roundtrip():
    fam = matchless.Family(4, [[1, 2], [3], [1, 2]])
    assert len(fam) == 2
    assert [1, 2] in fam
    assert fam.sets == [[3], [1, 2]]
    again = matchless.parse_family(fam.to_text())
    assert again == fam
    assert fam.to_text().startswith("FAMILY v1\nn=4\n")


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        matchless.parse_family("FAMILY v2\nn=3\n")


def test_construct_and_sizes():
    p = matchless.construct("P m=1 s=3 l=1")
    assert len(p) == 26
    assert matchless.closed_form_size("P m=1 s=3 l=1") == 26
    assert matchless.size_P(1, 3, 1) == 26
    assert len(matchless.layer(p, 2)) == 10


def test_nu_and_shifting():
    fam = matchless.Family(4, [[2, 3], [3, 4], [2, 4], [1, 4]])
    value, witness = matchless.nu(fam)
    assert value == 2
    assert witness == [[2, 3], [1, 4]]
    assert matchless.has_matching(fam, 2)
    assert not matchless.has_matching(fam, 3)
    assert not matchless.is_shifted(fam)
    closed = matchless.shift_closure(fam)
    assert matchless.is_shifted(closed)
    assert len(closed) == len(fam)


def test_formulas_are_exact():
    assert matchless.binom(100, 50) == 100891344545564193334812497256
    assert matchless.binom(-1, 0) == 0
    assert matchless.kleitman_value(5, 3) == 26
    verdict = matchless.check_low_layers(5, 1, 5)
    assert verdict["holds"] is True
    assert verdict["rhs"] == Fraction(20, 3)
    assert verdict["regime_note"] is None
    assert matchless.check_hm_calc(3, 8, 2)["holds"]
    with pytest.raises(ValueError):
        matchless.check_hm_calc(3, 4, 2)
    assert matchless.smallest_t(1) == 4
    assert matchless.find_valid_t(1, 40, 1) == 0
    assert matchless.find_valid_t(1, 2, 2) is None


def test_oracles():
    r = matchless.oracle_e(5, 3)
    assert r["value"] == 26
    assert len(r["witness"]) == 26
    assert not matchless.has_matching(r["witness"], 3)
    assert matchless.oracle_ek(6, 2, 3)["value"] == 10
    assert matchless.oracle_ek(6, 2, 3, shifted_only=False)["value"] == 10
    with pytest.raises(RuntimeError):
        matchless.oracle_e(8, 3)


def test_run_cli(monkeypatch):
    monkeypatch.setenv("MATCHLESS_TEST", "1")
    code, out, err = matchless.run_cli(["oracle", "e", "4", "2"])
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["value"] == "8"
    assert payload["elapsed_ms"] == 0.0
    code, _, err = matchless.run_cli(["kleitman", "5"])
    assert code == 2 and err
    code, _, err = matchless.run_cli(["oracle", "e", "8", "3"])
    assert code == 3 and "resource cap" in err


def test_report_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(SCHEMA.read_text())
    for grid in ["lemma34:m=2,s=4..7,l=2", "ek-max:n=6..7,k=2,s=3", "find-t:m=1,s=2..3,l=1", "oracle-e:n=6..8,s=4"]:
        report = json.loads(matchless.report(grid, "json", 2))
        jsonschema.validate(report, schema)
        assert report["summary"]["total"] == len(report["points"])


def test_report_csv():
    text = matchless.report("kleitman:n=5..6,s=3", "csv")
    lines = text.strip().splitlines()
    assert lines[0].startswith("index,target,params,status")
    assert lines[1].split(",")[8] == "26"
    with pytest.raises(ValueError):
        matchless.report("kleitman:n=5,s=3", "xml")
