import json
import os
import subprocess

import pytest

import syzygy


def test_good_primes():
    assert syzygy.binom_mod(6, 3, 5) == 20 % 5
    assert syzygy.is_good(5, 9) == (True, "exceptional")
    assert syzygy.is_good(2, 9)[0] is False
    assert syzygy.exceptional_prime(13) == 7
    assert syzygy.exceptional_prime(10) is None


def test_betti_of_two_squares():
    ideal = syzygy.generate("ci", [2, 2])
    table = syzygy.betti(ideal)
    cells = {(c["i"], c["j"]): c["beta"] for c in table["entries"]}
    assert cells == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert all(table["column_complete"])


def test_audit_report():
    ideal = syzygy.generate("edge", [4, 0, 1, 1, 2, 2, 3, 0, 3])
    rep = syzygy.audit(ideal, checks=["m_bounds", "koszul_subadditivity"])
    assert rep["overall"] == "verified"
    assert {c["id"] for c in rep["checks"]} <= {
        "m_bounds",
        "koszul_subadditivity.max",
        "koszul_subadditivity.step",
        "koszul_subadditivity.plus_one",
    }
    assert "m_bounds" in syzygy.audit_check_ids()


def test_template_matches_cli():
    text = syzygy.template_text(2, 14, 9)
    assert "valid when p is good for i" in text
    cli = os.environ.get("SYZYGY_CLI")
    if cli:
        out = subprocess.run([cli, "template", "--q", "2"], capture_output=True, text=True, check=True)
        assert out.stdout == text


def test_parse_error_location():
    bad = {"field": {"characteristic": 0}, "variables": ["x"], "generators": [[{"coefficient": 1, "exponents": [1, 1]}]]}
    with pytest.raises(syzygy.ParseError) as err:
        syzygy.betti(json.dumps(bad))
    assert "/generators/0/0/exponents" in str(err.value)
