"""Differential-operator generators, the window matrices, central defects."""

from fractions import Fraction

import pytest

from fockcheck.charged import ChargedState, enumerate_charged_basis, hA_mode
from fockcheck.fock import FockState, enumerate_basis
from fockcheck.grading import dg
from fockcheck.heisenberg import h_mode
from fockcheck.winf import (
    MatrixLift,
    glinf_matrix,
    jk_mode_charged,
    jk_mode_neutral,
    matrix_commutator,
    scalar_defect_check,
)

CBASIS = enumerate_charged_basis(16)
NBASIS = enumerate_basis(16)


def test_j0_equals_charged_current():
    for n in range(-4, 5):
        for mono in CBASIS:
            v = ChargedState.monomial(mono)
            assert jk_mode_charged(0, n).apply(v) == hA_mode(n).apply(v), (n, mono)


def test_j0_equals_neutral_current():
    for n in range(-4, 5):
        for mono in NBASIS:
            v = FockState.monomial(mono)
            assert jk_mode_neutral(0, n).apply(v) == h_mode(n).apply(v), (n, mono)


def test_j1_zero_on_single_particle():
    # frozen from the window matrix: slot 1 carries eigenvalue 1
    v = ChargedState.monomial(((-1,), ()))
    assert jk_mode_charged(1, 0).apply(v) == v
    w = ChargedState.monomial(((-2,), ()))
    assert jk_mode_charged(1, 0).apply(w) == w.scale(2)


def test_j1_preserves_charge():
    for n in (-2, -1, 0, 1, 2):
        for mono in NBASIS:
            out = jk_mode_neutral(1, n).apply(FockState.monomial(mono))
            assert {dg(m) for m in out.terms} <= {dg(mono)}, (n, mono)


def test_glinf_matrix_examples():
    assert glinf_matrix(0, 0, 3) == {(j, j): Fraction(1) for j in range(-3, 4)}
    assert glinf_matrix(0, 2, 3) == {(j - 2, j): Fraction(1) for j in range(-3, 4)}
    assert glinf_matrix(1, 0, 3) == {(j, j): Fraction(j) for j in range(-3, 4) if j}
    # k = 2 entries are j(j+1)
    m = glinf_matrix(2, 1, 3)
    assert m[(2, 3)] == Fraction(12)
    assert (-1, 0) not in m and (-2, -1) not in m  # columns j = 0, -1 vanish


def test_matrix_commutator_of_shifts_vanishes():
    a = glinf_matrix(0, 2, 8)
    b = glinf_matrix(0, -2, 8)
    assert matrix_commutator(a, b, 5) == {}


def test_lift_of_identity_counts_charge():
    # sum_j E_{jj} lifts to the charge operator
    lift = MatrixLift(glinf_matrix(0, 0, 10))
    from fockcheck.charged import charge

    for mono in CBASIS:
        v = ChargedState.monomial(mono)
        assert lift.apply(v) == v.scale(charge(mono)), mono


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_j0_column_defect_is_m(m):
    report = scalar_defect_check(0, m, 0, -m, CBASIS, expected_scalar=Fraction(m))
    assert report.passed, report.failures[:2]


def test_non_pairing_defect_vanishes():
    report = scalar_defect_check(0, 1, 0, 2, CBASIS, expected_scalar=Fraction(0))
    assert report.passed


def test_frozen_defect_value_1111():
    # regression value frozen from the first verified run
    report = scalar_defect_check(1, 1, 1, -1, CBASIS, expected_scalar=Fraction(0))
    assert report.passed, report.failures[:2]


@pytest.mark.parametrize("k1,k2", [(1, 0), (2, 0), (2, 1), (2, 2)])
def test_general_defects_are_scalar(k1, k2):
    for n1 in range(-3, 4):
        for n2 in range(-3, 4):
            report = scalar_defect_check(k1, n1, k2, n2, CBASIS)
            assert report.passed, (k1, n1, k2, n2, report.failures[:1])
