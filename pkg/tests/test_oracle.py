"""Oracle suite tests: case counts, pass/fail reporting, caps."""

from __future__ import annotations

import math

import pytest

from eolab.oracle import (
    OracleCapError,
    brute_force_witness,
    check_hasse,
    check_inversion_equiv,
    check_preorder_laws,
    check_theorem3_finite,
    check_theorem10,
)
from eolab.search import InsufficientEnumerationError

from conftest import load_program


@pytest.mark.parametrize("n", [1, 3, 4])
def test_preorder_laws_pass(n):
    report = check_preorder_laws(n)
    m = math.factorial(n)
    assert report.passed
    assert report.checked == m + m**3 + m**2
    assert report.suite == "preorder"


def test_preorder_cap():
    with pytest.raises(OracleCapError):
        check_preorder_laws(6)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_inversion_equiv_pass(n):
    report = check_inversion_equiv(n)
    assert report.passed
    assert report.checked == math.factorial(n) ** 2


def test_inversion_cap():
    with pytest.raises(OracleCapError):
        check_inversion_equiv(7)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_theorem10_pass(n):
    report = check_theorem10(n)
    assert report.passed
    assert report.checked == math.factorial(n) ** 2


def test_theorem3_pass():
    report = check_theorem3_finite(3, {4, 8, 15})
    assert report.passed
    assert report.checked == 6
    report = check_theorem3_finite(5, {2, 3, 5, 7, 11})
    assert report.passed
    assert report.checked == 120


def test_theorem3_support_size_enforced():
    with pytest.raises(OracleCapError):
        check_theorem3_finite(3, {1, 2})


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hasse_pass(n):
    report = check_hasse(n)
    assert report.passed
    assert report.checked == math.factorial(n) ** 2 + 1


def test_hasse_cap():
    with pytest.raises(OracleCapError):
        check_hasse(6)


def test_report_json_shape():
    doc = check_theorem10(2).to_json()
    assert set(doc) == {"suite", "params", "checked", "failures"}
    assert doc["failures"] == []
    assert doc["params"] == {"n": 2}


def test_brute_force_identical_programs():
    evens = load_program("evens")
    report = brute_force_witness(evens, evens, k=3, w=2, relation="eo_leq")
    assert report.status == "witness_found"
    assert report.choices_a == (0, 0, 0)
    assert report.choices_b == (0, 0, 0)
    assert report.nodes_explored == 1


def test_brute_force_window_one_refutation():
    report = brute_force_witness(
        load_program("evens"), load_program("alternating"), k=2, w=1, relation="eo_leq"
    )
    assert report.status == "space_exhausted"
    assert report.nodes_explored == 1


def test_brute_force_caps():
    evens = load_program("evens")
    with pytest.raises(OracleCapError):
        brute_force_witness(evens, evens, k=7, w=2, relation="eo_leq")
    with pytest.raises(OracleCapError):
        brute_force_witness(evens, evens, k=2, w=4, relation="eo_leq")


def test_brute_force_truncation():
    guarded = load_program("evens_only")
    with pytest.raises(InsufficientEnumerationError):
        brute_force_witness(guarded, guarded, k=6, w=2, relation="uniform", round_cap=4)


def test_determinism():
    assert check_theorem10(3) == check_theorem10(3)
    assert check_hasse(3) == check_hasse(3)
