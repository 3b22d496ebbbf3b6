"""Charged two-fermion space, its currents, and the intertwining map."""

from fractions import Fraction

import pytest

from fockcheck.charged import (
    MINUS,
    PLUS,
    ChargedState,
    apply_charged_mode,
    charge,
    charged_mode_of,
    cweight2,
    enumerate_charged_basis,
    format_charged_state,
    from_charged,
    from_charged_monomial,
    hA_mode,
    lA_family,
    neutral_mode_of,
    to_charged,
    to_charged_monomial,
)
from fockcheck.fock import FockState, annihilation, creation, enumerate_basis
from fockcheck.grading import dg
from fockcheck.heisenberg import h_mode
from fockcheck.virasoro import central_charge

CBASIS = enumerate_charged_basis(16)
NBASIS = enumerate_basis(16)


def test_vacuum_axioms():
    vac = ChargedState.vacuum()
    for species in (PLUS, MINUS):
        for m in range(0, 4):
            assert apply_charged_mode(species, m, vac).is_zero


def test_pairing_examples():
    vac = ChargedState.vacuum()
    s = apply_charged_mode(MINUS, -1, vac)
    assert apply_charged_mode(PLUS, 0, s) == vac
    t = apply_charged_mode(PLUS, -1, vac)
    assert apply_charged_mode(MINUS, 0, t) == vac


def test_clifford_relations_transport_grid():
    for m in range(-4, 4):
        for n in range(-4, 4):
            for mono in CBASIS:
                v = ChargedState.monomial(mono)
                for sa, sb in ((PLUS, MINUS), (PLUS, PLUS), (MINUS, MINUS)):
                    got = apply_charged_mode(sa, m, apply_charged_mode(sb, n, v)) + apply_charged_mode(
                        sb, n, apply_charged_mode(sa, m, v)
                    )
                    want = v if (sa != sb and m + n == -1) else ChargedState.zero()
                    assert got == want, (sa, m, sb, n, mono)


def test_hA_bracket():
    for m in range(-3, 4):
        for n in range(-3, 4):
            for mono in CBASIS:
                v = ChargedState.monomial(mono)
                got = hA_mode(m).apply(hA_mode(n).apply(v)) - hA_mode(n).apply(hA_mode(m).apply(v))
                want = v.scale(m) if m == -n else ChargedState.zero()
                assert got == want, (m, n, mono)


@pytest.mark.parametrize("lam,b", [(Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(1, 3)), (Fraction(1), Fraction(0))])
def test_charged_virasoro_brackets(lam, b):
    fam = lA_family(lam, b)
    c = central_charge(lam)
    for m in range(-2, 3):
        for n in range(-2, 3):
            for mono in CBASIS:
                v = ChargedState.monomial(mono)
                lhs = fam.mode(m).apply(fam.mode(n).apply(v)) - fam.mode(n).apply(fam.mode(m).apply(v))
                rhs = fam.mode(m + n).apply(v).scale(m - n)
                if m == -n:
                    rhs = rhs + v.scale(Fraction(m**3 - m, 12) * c)
                assert lhs == rhs, (lam, b, m, n, mono)


def test_mode_dictionary_entries():
    assert charged_mode_of(creation(1)) == (PLUS, -1)  # phi[-3/2]
    assert charged_mode_of(creation(0)) == (MINUS, -1)  # phi[-1/2]
    assert charged_mode_of(annihilation(0)) == (PLUS, 0)
    assert charged_mode_of(annihilation(1)) == (MINUS, 0)
    for t in range(-15, 16, 2):
        species, m = charged_mode_of(t)
        assert neutral_mode_of(species, m) == t


def test_dictionary_transports_anticommutators():
    # {D(phi_s), D(phi_t)} = delta(s, -t) on the charged space
    for s in range(-9, 10, 2):
        for t in range(-9, 10, 2):
            da, db = charged_mode_of(s), charged_mode_of(t)
            for mono in CBASIS[:15]:
                v = ChargedState.monomial(mono)
                got = apply_charged_mode(*da, apply_charged_mode(*db, v)) + apply_charged_mode(
                    *db, apply_charged_mode(*da, v)
                )
                want = v if s == -t else ChargedState.zero()
                assert got == want, (s, t, mono)


def test_state_map_examples():
    assert to_charged(FockState.vacuum()) == ChargedState.vacuum()
    v1 = FockState.monomial((1,))
    assert to_charged(v1) == ChargedState.monomial(((-1,), ()))
    sign, image = to_charged_monomial((0, 2))
    assert image == ((), (-2, -1)) and sign in (1, -1)


def test_state_map_charge_and_weight():
    for mono in NBASIS:
        sign, image = to_charged_monomial(mono)
        assert charge(image) == dg(mono)
        from fockcheck.fock import weight2

        assert cweight2(image) == weight2(mono)


def test_state_map_bijection_and_round_trip():
    images = set()
    for mono in NBASIS:
        sign, image = to_charged_monomial(mono)
        back_sign, back = from_charged_monomial(image)
        assert back == mono and sign * back_sign == 1
        images.add(image)
    assert images == set(CBASIS)
    for mono in NBASIS:
        v = FockState.monomial(mono, Fraction(3, 7))
        assert from_charged(to_charged(v)) == v


def test_heisenberg_intertwining():
    for n in range(-4, 5):
        for mono in NBASIS:
            v = FockState.monomial(mono)
            assert to_charged(h_mode(n).apply(v)) == hA_mode(n).apply(to_charged(v)), (n, mono)


def test_charged_render():
    s = ChargedState.monomial(((-2,), (-1,)), Fraction(-1))
    assert format_charged_state(s) == "-1 psi+[-2] psi-[-1] |0>"
    assert format_charged_state(ChargedState.zero()) == "0"
