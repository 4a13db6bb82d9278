"""Test functions to test the msgpack encode/decode functions."""

import xarray

from ideal_divisors.cyclotomic import CyclotomicInteger
from ideal_divisors.oracle import (
    OracleReport,
    SearchOutcome,
    SearchResult,
    brute_force_divisor_check,
)
from ideal_divisors.utilities import decode, encode


def test_encode_decode_sweeptable(sweep_table):
    """SweepTables come back as plain datasets with the same data."""
    encoded = encode(sweep_table)
    assert isinstance(encoded, bytes)

    decoded = decode(encoded)
    assert isinstance(decoded, xarray.Dataset)
    assert decoded["prime"].data.tolist() == sweep_table["prime"].data.tolist()
    assert decoded["u"].data.tolist() == sweep_table["u"].data.tolist()
    assert decoded.attrs["lam"] == 5


def test_encode_decode_search_result(divisors_of_11):
    """Search results are encoded through their dict form."""
    result = SearchResult(
        divisors_of_11[1],
        SearchOutcome.FOUND,
        CyclotomicInteger(5, [-2, -1, 0, 0, 0]),
        42,
    )
    decoded = decode(encode(result))
    assert decoded == result.to_dict()


def test_encode_decode_oracle_report(small_budget):
    """Oracle reports keep origin, context and records."""
    report = brute_force_divisor_check(
        11, 5, CyclotomicInteger(5, [2, 1, 0, 0, 0]), small_budget
    )
    decoded = decode(encode(report))
    assert decoded["origin"] == "brute_force_divisor_check"
    assert decoded["context"] == report.context
    assert [r["divides"] for r in decoded["data"]] == [
        False,
        True,
        False,
        False,
    ]


def test_encode_plain_values():
    """Values msgpack already knows pass straight through."""
    assert decode(encode({"a": [1, 2]})) == {"a": [1, 2]}
    assert isinstance(encode(OracleReport()), bytes)
