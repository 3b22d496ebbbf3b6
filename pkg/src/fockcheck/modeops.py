"""Normal-ordered quadratic operators in fermion modes.

Operators of interest are formally infinite sums ``sum_i c_i :phi_{p_i} phi_{q_i}:``
with constant ``p_i + q_i``.  They are never materialised: a
:class:`QuadraticModeOperator` carries a coefficient rule ``i -> (p, q, c)``
plus a support bound mapping each monomial to the finitely many ``i`` whose
summand can act on it without annihilating everything.  A summand acts
nonzero only if every annihilator among its two factors targets an index
present in the monomial, or both factors create, which pins ``i`` to a
finite window.

Normal ordering of a pair subtracts the vacuum expectation.  As an action
this means: when the left factor annihilates and the right one creates, the
pair acts as minus the swapped product; in every other arrangement it acts
as written (rightmost factor first).

Mode extraction from bilinear fields uses the expansion
``phi(s*z) = sum_m phi_{-m-1/2} s^m z^m`` with field derivatives taken before
evaluation, so ``F(z) = pref * z^shift :(d^a phi)(s1 z)(d^b phi)(s2 z):``
has integer powers of ``z`` only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .fock import FockState, Monomial, add_term, apply_mode, apply_mode_to_monomial, check_mode

Pair = tuple[int, int, Fraction]  # left twice-mode, right twice-mode, coefficient


def normal_order_pair(p: int, q: int) -> tuple[tuple[int, int], int, Fraction]:
    """Data of ``:phi_p phi_q:`` with annihilators moved right.

    Returns ``((p', q'), sign, contraction)`` where the normal-ordered pair
    equals ``sign * phi_p' phi_q'`` as an operator and
    ``phi_p phi_q - contraction`` as a reordering identity; the contraction
    is the vacuum expectation ``<0| phi_p phi_q |0> = delta(p, -q) [p > 0]``.
    """
    check_mode(p)
    check_mode(q)
    if p > 0 and q < 0:
        return (q, p), -1, Fraction(1) if p == -q else Fraction(0)
    return (p, q), 1, Fraction(0)


def apply_pair_to_monomial(
    p: int, q: int, mono: Monomial, acc: dict[Monomial, Fraction], coeff: Fraction
) -> None:
    """Accumulate ``coeff * :phi_p phi_q: mono`` into ``acc``."""
    if p > 0 and q < 0:
        first, second, sign = p, q, -1
    else:
        first, second, sign = q, p, 1
    hit = apply_mode_to_monomial(first, mono)
    if hit is None:
        return
    s1, mid = hit
    hit = apply_mode_to_monomial(second, mid)
    if hit is None:
        return
    s2, out = hit
    add_term(acc, out, coeff * (sign * s1 * s2))


class QuadraticModeOperator:
    """Lazy sum ``scalar + sum_i c_i :phi_{p_i} phi_{q_i}:`` with finite action.

    ``rule(i)`` yields the ``i``-th summand; ``support(mono)`` yields every
    ``i`` whose summand can act nonzero on ``mono`` (a finite, possibly
    overcomplete, set).  All summands must share the same mode sum
    ``p_i + q_i`` so the operator shifts weight homogeneously.
    """

    def __init__(
        self,
        rule: Callable[[int], Pair],
        support: Callable[[Monomial], Iterable[int]],
        scalar: Fraction | int = 0,
        pair_sum2: int | None = None,
    ):
        self.rule = rule
        self.support = support
        self.scalar = Fraction(scalar)
        self.pair_sum2 = pair_sum2

    @property
    def weight_shift2(self) -> int | None:
        """Twice the weight shift of every summand (-(p+q) for modes p, q)."""
        return None if self.pair_sum2 is None else -self.pair_sum2

    def apply(self, state: FockState) -> FockState:
        acc: dict[Monomial, Fraction] = {}
        for mono, c in state.terms.items():
            if self.scalar:
                add_term(acc, mono, self.scalar * c)
            for i in self.support(mono):
                p, q, w = self.rule(i)
                if w:
                    apply_pair_to_monomial(p, q, mono, acc, w * c)
        return FockState(acc)

    def apply_term(self, i: int, state: FockState) -> FockState:
        """Action of the single summand ``i``; used to probe support soundness."""
        acc: dict[Monomial, Fraction] = {}
        p, q, w = self.rule(i)
        if w:
            for mono, c in state.terms.items():
                apply_pair_to_monomial(p, q, mono, acc, w * c)
        return FockState(acc)


def zero_operator() -> QuadraticModeOperator:
    return QuadraticModeOperator(lambda i: (1, 1, Fraction(0)), lambda mono: (), 0, None)


@dataclass(frozen=True)
class FermionBilinear:
    """``prefactor * z^zshift :(d^dleft phi)(sleft*z) (d^dright phi)(sright*z):``."""

    prefactor: Fraction
    zshift: int
    dleft: int
    dright: int
    sleft: int
    sright: int

    def __post_init__(self):
        if self.sleft not in (1, -1) or self.sright not in (1, -1):
            raise ValueError("evaluation signs must be +1 or -1")
        if self.dleft < 0 or self.dright < 0:
            raise ValueError("derivative orders must be non-negative")


def _falling(m: int, order: int) -> int:
    out = 1
    for step in range(order):
        out *= m - step
    return out


def bilinear_mode(bil: FermionBilinear, exponent: int) -> QuadraticModeOperator:
    """Coefficient of ``z**exponent`` in the bilinear field, as a lazy operator.

    With ``T = exponent - zshift + dleft + dright`` the summand at free index
    ``i`` pairs the modes ``-i-1/2`` and ``-(T-i)-1/2``; its coefficient
    collects the derivative falling factorials and the evaluation signs.
    """
    T = exponent - bil.zshift + bil.dleft + bil.dright
    pref, a, b = bil.prefactor, bil.dleft, bil.dright
    sl, sr = bil.sleft, bil.sright

    def rule(i: int) -> Pair:
        j = T - i
        c = pref * _falling(i, a) * _falling(j, b)
        if sl < 0 and (i - a) % 2:
            c = -c
        if sr < 0 and (j - b) % 2:
            c = -c
        return -(2 * i + 1), -(2 * j + 1), c

    def support(mono: Monomial) -> Iterable[int]:
        hits = set(range(0, T + 1))  # both factors create
        for n in mono:
            hits.add(-n - 1)  # left factor annihilates n
            hits.add(T + n + 1)  # right factor annihilates n
        return sorted(hits)

    return QuadraticModeOperator(rule, support, 0, pair_sum2=-2 * T - 2)


class AffineOperator:
    """Finite combination ``sum_j c_j * op_j + scalar * Id`` acting by linearity."""

    def __init__(self, parts: Sequence[tuple[Fraction | int, object]], scalar: Fraction | int = 0):
        self.parts = [(Fraction(c), op) for c, op in parts if c]
        self.scalar = Fraction(scalar)

    def apply(self, state: FockState) -> FockState:
        out = state.scale(self.scalar) if self.scalar else FockState.zero()
        for c, op in self.parts:
            out = out + op.apply(state).scale(c)
        return out


class ModeOperator:
    """A single Clifford mode as an operator (used by the relation harness)."""

    def __init__(self, t: int):
        self.t = check_mode(t)

    def apply(self, state: FockState) -> FockState:
        return apply_mode(self.t, state)


@dataclass(frozen=True)
class OperatorFamily:
    """Mode-indexed family ``n -> operator``, addressable by name."""

    name: str
    mode: Callable[[int], object]
    index_set: str = "all integers"


def compose_families(
    name: str,
    parts: Sequence[tuple[Callable[[int], Fraction] | Fraction | int, OperatorFamily]],
    scalar: Callable[[int], Fraction] | None = None,
) -> OperatorFamily:
    """Pointwise affine combination of families.

    Coefficients may be constants or functions of the mode index; ``scalar``
    supplies an optional identity part per mode (e.g. a delta at mode zero).
    """
    coerced = [(c if callable(c) else (lambda n, c=Fraction(c): c), fam) for c, fam in parts]

    def mode(n: int) -> AffineOperator:
        return AffineOperator(
            [(c(n), fam.mode(n)) for c, fam in coerced],
            scalar(n) if scalar else 0,
        )

    return OperatorFamily(name, mode)


def parity_flip(family: OperatorFamily) -> OperatorFamily:
    """The family ``n -> (-1)^n * mode(n)``."""

    def mode(n: int) -> AffineOperator:
        return AffineOperator([(Fraction(-1) if n % 2 else Fraction(1), family.mode(n))])

    return OperatorFamily(f"{family.name}~", mode)


def commutator_apply(left, right, state: FockState) -> FockState:
    """``[left, right]`` applied to a state."""
    return left.apply(right.apply(state)) - right.apply(left.apply(state))


def anticommutator_apply(left, right, state: FockState) -> FockState:
    """``{left, right}`` applied to a state."""
    return left.apply(right.apply(state)) + right.apply(left.apply(state))
