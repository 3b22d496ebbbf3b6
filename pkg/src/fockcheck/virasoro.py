"""Virasoro operator families on the neutral-fermion Fock space.

Conventions: a weight-two field ``L(z) = sum_n L_n z^{-n-2}``, so the mode
``L_n`` is the coefficient at exponent ``-n-2``.  The families here are

* ``L^{1/2}``: modes of ``(1/2):(d phi)(z) phi(z):`` (central charge 1/2);
* ``L~^{1/2}``: the sign-flipped family ``n -> (-1)^n L^{1/2}_n``;
* ``L^1``: the Sugawara bilinear ``(1/2) sum_k :h_{n-k} h_k:`` in Heisenberg
  modes (central charge 1);
* ``L~^1``: ``(1/2) L^{1/2}_{2n} + (1/32) delta(n)`` (central charge 1);
* ``L^{lambda,b}``: the two-parameter deformation of ``L^1`` by ``h`` and a
  constant, with central charge ``-12*lambda**2 + 12*lambda - 2``.

Heisenberg quadratics are normal ordered with annihilators right: in
``:h_a h_b:`` the larger mode index acts first.  This is the unique choice
making ``L^1_0`` diagonal with eigenvalue ``n**2/2`` on the charge-``n``
vacuum-like vector.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .fock import FockState, Monomial, add_term, weight2
from .heisenberg import h_family, h_mode
from .modeops import (
    AffineOperator,
    FermionBilinear,
    OperatorFamily,
    bilinear_mode,
    compose_families,
    parity_flip,
    zero_operator,
)

L_HALF_BILINEAR = FermionBilinear(Fraction(1, 2), 0, 1, 0, 1, 1)
L_HALF_TILDE_BILINEAR = FermionBilinear(Fraction(1, 2), 0, 1, 0, -1, -1)

WEIGHT2_VARIANTS = {
    1: FermionBilinear(Fraction(1), 0, 1, 0, 1, 1),  # :(d phi)(z) phi(z):
    2: FermionBilinear(Fraction(1), 0, 1, 0, -1, -1),  # :(d phi)(-z) phi(-z):
    3: FermionBilinear(Fraction(1), 0, 1, 0, 1, -1),  # :(d phi)(z) phi(-z):
    4: FermionBilinear(Fraction(1), 0, 1, 0, -1, 1),  # :(d phi)(-z) phi(z):
}


def central_charge(lam: Fraction) -> Fraction:
    """Central charge of the two-parameter family; independent of b."""
    lam = Fraction(lam)
    return -12 * lam * lam + 12 * lam - 2


def l_half_mode(n: int):
    return bilinear_mode(L_HALF_BILINEAR, -n - 2)


def l_half_family() -> OperatorFamily:
    return OperatorFamily("L1/2", l_half_mode)


def l_half_tilde_mode(n: int):
    """Mode of the reflected field; equals (-1)**n times l_half_mode(n)."""
    return bilinear_mode(L_HALF_TILDE_BILINEAR, -n - 2)


def l_half_tilde_family() -> OperatorFamily:
    return OperatorFamily("L1/2~", l_half_tilde_mode)


def l_half_tilde_family_flip() -> OperatorFamily:
    """The same family built through the generic parity flip."""
    return parity_flip(l_half_family())


def weight2_field(variant: int) -> OperatorFamily:
    """One of the four weight-two fermion bilinears, as a mode family."""
    bil = WEIGHT2_VARIANTS[variant]
    return OperatorFamily(f"w2.{variant}", lambda n: bilinear_mode(bil, -n - 2))


@lru_cache(maxsize=None)
def _sugawara_on_monomial(n: int, mono: Monomial) -> tuple[tuple[Monomial, Fraction], ...]:
    acc: dict[Monomial, Fraction] = {}
    bound = weight2(mono) // 4
    v = FockState.monomial(mono, Fraction(1, 2))
    for k in range(n - bound, bound + 1):
        a, b = sorted((n - k, k))
        out = h_mode(a).apply(h_mode(b).apply(v))
        for m, c in out.terms.items():
            add_term(acc, m, c)
    return tuple(sorted(acc.items()))


class SugawaraOperator:
    """``L^1_n = (1/2) sum_k :h_{n-k} h_k:`` with lazily bounded support.

    ``h_k`` kills any state of weight below ``2k``, so on a monomial of
    twice-weight ``w`` only ``n - w//4 <= k <= w//4`` contribute.  The
    action on a monomial is pure and is memoised across bracket grids.
    """

    def __init__(self, n: int):
        self.n = n

    def apply(self, state: FockState) -> FockState:
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in state.terms.items():
            for m, c in _sugawara_on_monomial(self.n, mono):
                add_term(acc, m, coeff * c)
        return FockState(acc)


def sugawara_l1_mode(n: int) -> SugawaraOperator:
    return SugawaraOperator(n)


def sugawara_family() -> OperatorFamily:
    return OperatorFamily("L1", sugawara_l1_mode)


def l1_tilde_family() -> OperatorFamily:
    """``n -> (1/2) L^{1/2}_{2n} + (1/32) delta(n)``."""
    lhalf = l_half_family()
    return OperatorFamily(
        "L1~",
        lambda n: AffineOperator(
            [(Fraction(1, 2), l_half_mode(2 * n))],
            Fraction(1, 32) if n == 0 else 0,
        ),
    )


def l1_tilde_field_mode(n: int) -> AffineOperator:
    """The same mode read off the field form
    ``(1/8 z^2)(:(d phi)(z) phi(z): + :(d phi)(-z) phi(-z):) + 1/(32 z^4)``.

    The ``z^-2`` prefactor moves the coefficient of ``(z^2)^{-n-2}`` to the
    plain exponent ``-2n-2`` of the bilinear sum."""
    e = -2 * n - 2
    return AffineOperator(
        [
            (Fraction(1, 8), bilinear_mode(WEIGHT2_VARIANTS[1], e)),
            (Fraction(1, 8), bilinear_mode(WEIGHT2_VARIANTS[2], e)),
        ],
        Fraction(1, 32) if n == 0 else 0,
    )


def lambda_b_constant(lam: Fraction, b: Fraction) -> Fraction:
    """Constant part of the two-parameter family: (b^2 + 2Kb - 3K^2)/2 with
    K = (1 - 2 lam)/4.  This is the unique value closing the Virasoro
    bracket; it vanishes at (1/2, 0) and equals 1/32 at (1/2, -1/4)."""
    K = Fraction(1 - 2 * Fraction(lam), 4)
    b = Fraction(b)
    return (b * b + 2 * K * b - 3 * K * K) / 2


def lambda_family(lam: Fraction, b: Fraction) -> OperatorFamily:
    """The deformation ``L^1_n - (1/2-lam)((2n+1)/2) h_n - b h_n + M delta(n)``."""
    lam, b = Fraction(lam), Fraction(b)
    M = lambda_b_constant(lam, b)

    def h_coeff(n: int) -> Fraction:
        return -(Fraction(1, 2) - lam) * Fraction(2 * n + 1, 2) - b

    return compose_families(
        f"L({lam},{b})",
        [(Fraction(1), sugawara_family()), (h_coeff, h_family())],
        scalar=lambda n: M if n == 0 else Fraction(0),
    )


def doubling_construct(base: OperatorFamily, c: Fraction, N: int) -> OperatorFamily:
    """Mode-dilution of a central-charge-c family into one of charge N*c:
    ``n -> (1/N) base(N n) + ((N^2-1)/(24 N)) c delta(n)``."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    c = Fraction(c)
    shift = Fraction(N * N - 1, 24 * N) * c

    def mode(n: int) -> AffineOperator:
        return AffineOperator([(Fraction(1, N), base.mode(N * n))], shift if n == 0 else 0)

    return OperatorFamily(f"{base.name}^(x{N})", mode)


def h_derivative_family() -> OperatorFamily:
    """Modes of ``d/dz h(z)`` in the weight-two indexing: the coefficient at
    ``z^{-m-2}`` is ``-(m+1) h_{m/2}`` for even m and zero otherwise."""

    def mode(m: int):
        if m % 2:
            return zero_operator()
        return AffineOperator([(Fraction(-(m + 1)), h_mode(m // 2))])

    return OperatorFamily("dh", mode)


def h_square_family() -> OperatorFamily:
    """Modes of the Heisenberg square ``:h(w) h(w):`` in the weight-two
    indexing: ``2 L^1_{m/2}`` at even m, zero at odd m."""

    def mode(m: int):
        if m % 2:
            return zero_operator()
        return AffineOperator([(Fraction(2), sugawara_l1_mode(m // 2))])

    return OperatorFamily("h^2", mode)
