"""
Unit tests for the SweepTable model
"""

import json

from ideal_divisors.oracle import SearchBudget
from ideal_divisors.sweep import SweepTable


def _table(budget=None):
    return SweepTable.constructor(
        5,
        12,
        [2, 5, 11],
        [4, 1, 1],
        [1, 1, 4],
        ["inert", "ramified", "split"],
        ["1", "", "3,9,4,5"],
        [1, 1, 3],
        ["found", "found", "exhausted"],
        ["2,0,0,0,0", "1,-1,0,0,0", "-2,-1,0,0,0;none;1,2,0,0,0;2,1,0,1,0"],
        budget=budget,
    )


def test_constructor_coords_and_vars():
    """
    One row per prime
    """
    table = _table()
    assert table["prime"].data.tolist() == [2, 5, 11]
    assert table["divisors"].data.tolist() == [1, 1, 4]
    assert table.attrs["data_model"] == "SweepTable"
    assert table.attrs["lam"] == 5
    assert "max_support" not in table.attrs
    assert table.sweeptable_acc.nprimes == 3


def test_constructor_budget_attrs():
    """
    The search budget is kept in the attributes
    """
    table = _table(SearchBudget(2, 2, 500))
    assert table.attrs["max_support"] == 2
    assert table.attrs["coeff_bound"] == 2
    assert table.attrs["max_candidates"] == 500


def test_rows():
    """
    Rows parse u and generators back into integers
    """
    rows = _table().sweeptable_acc.rows()
    assert rows[0] == {
        "q": 2,
        "f": 4,
        "e": 1,
        "kind": "inert",
        "u": [1],
        "divisors": 1,
        "generatorsFound": 1,
        "outcome": "found",
        "generators": [[2, 0, 0, 0, 0]],
    }
    assert rows[1]["u"] == []
    assert rows[2]["generators"][1] is None
    assert rows[2]["evidence"] == "bounded evidence"
    assert "evidence" not in rows[0]


def test_to_json_lines():
    """
    Compact JSON, one row per line
    """
    lines = _table().sweeptable_acc.to_json_lines().split("\n")
    assert len(lines) == 3
    assert lines[1].startswith('{"q":5,"f":1,"e":1,"kind":"ramified"')
    assert json.loads(lines[2])["generatorsFound"] == 3


def test_to_text():
    """
    Header, pandas table and evidence footer
    """
    text = _table(SearchBudget(2, 2)).sweeptable_acc.to_text()
    lines = text.split("\n")
    assert lines[0] == "lambda=5 q_max=12 support=2 bound=2"
    assert "generators_found" in lines[1]
    assert "3,9,4,5" in text
    assert lines[-1] == "missing generators are bounded evidence only"


def test_sizeof():
    """
    Size is reported from the data
    """
    table = _table()
    assert table.__sizeof__() == int(table.nbytes)
