"""Normal ordering of mode pairs and the lazy quadratic operators."""

from fractions import Fraction

import pytest

from fockcheck.fock import FockState, apply_mode, enumerate_basis, weight2
from fockcheck.modeops import (
    AffineOperator,
    FermionBilinear,
    bilinear_mode,
    compose_families,
    normal_order_pair,
    parity_flip,
    zero_operator,
)
from fockcheck.heisenberg import h_family, h_mode
from fockcheck.virasoro import l_half_family


def test_normal_order_pair_cases():
    # two creators stay put
    assert normal_order_pair(-3, -1) == ((-3, -1), 1, 0)
    # annihilator left of its matching creator swaps with a contraction
    assert normal_order_pair(1, -1) == ((-1, 1), -1, 1)
    # creator left of annihilator is already ordered
    assert normal_order_pair(-1, 1) == ((-1, 1), 1, 0)
    # non-matching annihilator-creator still swaps, no contraction
    assert normal_order_pair(3, -1) == ((-1, 3), -1, 0)


def test_contraction_equals_vacuum_expectation():
    vac = FockState.vacuum()
    for p in range(-7, 8, 2):
        for q in range(-7, 8, 2):
            plain = apply_mode(p, apply_mode(q, vac)).coefficient(())
            (_, _), _, contraction = normal_order_pair(p, q)
            assert contraction == plain, (p, q)


def test_normal_ordered_pair_kills_vacuum():
    # :phi_p phi_q: |0> has no vacuum component for any p, q
    vac = FockState.vacuum()
    for p in range(-7, 8, 2):
        for q in range(-7, 8, 2):
            (p2, q2), sign, _ = normal_order_pair(p, q)
            out = apply_mode(p2, apply_mode(q2, vac)).scale(sign)
            assert out.coefficient(()) == 0, (p, q)
            if p > 0 or q > 0:
                assert out.is_zero, (p, q)


DIAGONAL = FermionBilinear(Fraction(1), 0, 0, 0, 1, 1)


def test_diagonal_field_is_zero_operator():
    basis = enumerate_basis(12)
    for e in range(-9, 4):
        op = bilinear_mode(DIAGONAL, e)
        for mono in basis:
            assert op.apply(FockState.monomial(mono)).is_zero, (e, mono)


def test_low_exponent_modes_vanish_on_cut_basis():
    # the mode at exponent e shifts weight by e+1; when that lands below
    # zero weight nothing survives
    bil = FermionBilinear(Fraction(1, 2), 0, 0, 0, 1, -1)
    for mono in enumerate_basis(8):
        w2 = weight2(mono)
        for e in range(-w2 // 2 - 6, -w2 // 2 - 1):
            if w2 + 2 * (e + 1) < 0:
                out = bilinear_mode(bil, e).apply(FockState.monomial(mono))
                assert out.is_zero, (e, mono)


def test_support_bound_is_sound():
    # summands outside the declared support act as zero on the monomial
    basis = enumerate_basis(10)
    for n in (-2, 0, 1, 3):
        op = h_mode(n)
        for mono in basis:
            v = FockState.monomial(mono)
            inside = set(op.support(mono))
            margin = range(min(inside, default=0) - 6, max(inside, default=0) + 7)
            for i in margin:
                if i in inside:
                    continue
                assert op.apply_term(i, v).is_zero, (n, mono, i)


def test_weight_homogeneity():
    for fam, shift_of in ((h_family(), lambda n: -4 * n), (l_half_family(), lambda n: -2 * n)):
        for n in range(-3, 4):
            op = fam.mode(n)
            for mono in enumerate_basis(10):
                out = op.apply(FockState.monomial(mono))
                for m in out.terms:
                    assert weight2(m) == weight2(mono) + shift_of(n), (fam.name, n, mono)


def test_compose_families_affine_identity():
    fam = compose_families("h+0", [(Fraction(1), h_family()), (Fraction(0), l_half_family())])
    for n in range(-2, 3):
        for mono in enumerate_basis(8):
            v = FockState.monomial(mono)
            assert fam.mode(n).apply(v) == h_family().mode(n).apply(v)


def test_parity_flip_modes():
    flipped = parity_flip(l_half_family())
    for n in range(-3, 4):
        sign = -1 if n % 2 else 1
        for mono in enumerate_basis(8):
            v = FockState.monomial(mono)
            assert flipped.mode(n).apply(v) == l_half_family().mode(n).apply(v).scale(sign)


def test_affine_operator_scalar_part():
    op = AffineOperator([], Fraction(5, 3))
    v = FockState.monomial((0, 1))
    assert op.apply(v) == v.scale(Fraction(5, 3))
    assert zero_operator().apply(v).is_zero


def test_bilinear_rejects_bad_signs():
    with pytest.raises(ValueError):
        FermionBilinear(Fraction(1), 0, 0, 0, 2, 1)
