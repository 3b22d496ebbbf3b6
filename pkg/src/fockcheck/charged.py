"""Charged-fermion Fock space, its current algebra, and the intertwining
map from the neutral-fermion space.

Two species of modes ``psi+_n`` and ``psi-_n`` (n integer) satisfy
``{psi+_m, psi-_n} = delta(m+n+1)`` with all same-species anticommutators
zero; modes with ``n <= -1`` create, ``n >= 0`` annihilate the vacuum.
A monomial is a pair of strictly increasing tuples of negative integers
``(plus, minus)`` standing for the product with every ``psi+`` factor left
of every ``psi-`` factor and each block ordered by increasing mode index.

The neutral space maps onto this one by the mode dictionary

    odd  neutral index 2j+1  <->  psi+_{-j-1}
    even neutral index 2j    <->  psi-_{-j-1}

extended to annihilators so that all anticommutators transport exactly.
Under the dictionary the neutral charge grading becomes the particle-number
charge ``len(plus) - len(minus)``, and weights match when ``psi+_{-j-1}``
and ``psi-_{-j-1}`` are weighted ``2j + 3/2`` and ``2j + 1/2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .fock import Monomial, add_term
from .modeops import OperatorFamily

ChargedMonomial = tuple[tuple[int, ...], tuple[int, ...]]

CVACUUM: ChargedMonomial = ((), ())

PLUS, MINUS = 1, -1


def charge(mono: ChargedMonomial) -> int:
    return len(mono[0]) - len(mono[1])


def cweight2(mono: ChargedMonomial) -> int:
    """Twice the weight transported from the neutral space."""
    plus, minus = mono
    return sum(-4 * p - 1 for p in plus) + sum(-4 * q - 3 for q in minus)


class ChargedState:
    """Finite linear combination of charged monomials, exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[ChargedMonomial, Fraction] | None = None):
        self.terms = terms if terms is not None else {}

    @classmethod
    def zero(cls) -> "ChargedState":
        return cls()

    @classmethod
    def vacuum(cls) -> "ChargedState":
        return cls({CVACUUM: Fraction(1)})

    @classmethod
    def monomial(cls, mono: ChargedMonomial, coeff: Fraction | int = 1) -> "ChargedState":
        coeff = Fraction(coeff)
        return cls({mono: coeff} if coeff else {})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: ChargedMonomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def __add__(self, other: "ChargedState") -> "ChargedState":
        acc = dict(self.terms)
        for mono, c in other.terms.items():
            add_term(acc, mono, c)
        return ChargedState(acc)

    def __sub__(self, other: "ChargedState") -> "ChargedState":
        acc = dict(self.terms)
        for mono, c in other.terms.items():
            add_term(acc, mono, -c)
        return ChargedState(acc)

    def scale(self, factor: Fraction | int) -> "ChargedState":
        factor = Fraction(factor)
        if not factor:
            return ChargedState()
        return ChargedState({m: factor * c for m, c in self.terms.items()})

    __rmul__ = scale

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChargedState):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        return f"ChargedState({format_charged_state(self)!r})"

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: (cweight2(item[0]), item[0]))


def apply_charged_mode_to_monomial(
    species: int, m: int, mono: ChargedMonomial
) -> tuple[int, ChargedMonomial] | None:
    """Signed action of one charged mode on a monomial, or None when zero.

    Signs count the factors the moving operator anticommutes past in the
    canonical product: a ``psi-`` factor or annihilator passes the whole
    ``psi+`` block first.
    """
    plus, minus = mono
    if species == PLUS:
        if m <= -1:  # create psi+_m
            if m in plus:
                return None
            pos = _insert_pos(plus, m)
            sign = -1 if pos % 2 else 1
            return sign, (plus[:pos] + (m,) + plus[pos:], minus)
        target = -1 - m  # annihilate against psi-_{-1-m}
        pos = _find_pos(minus, target)
        if pos is None:
            return None
        sign = -1 if (len(plus) + pos) % 2 else 1
        return sign, (plus, minus[:pos] + minus[pos + 1 :])
    if m <= -1:  # create psi-_m
        if m in minus:
            return None
        pos = _insert_pos(minus, m)
        sign = -1 if (len(plus) + pos) % 2 else 1
        return sign, (plus, minus[:pos] + (m,) + minus[pos:])
    target = -1 - m  # annihilate against psi+_{-1-m}
    pos = _find_pos(plus, target)
    if pos is None:
        return None
    sign = -1 if pos % 2 else 1
    return sign, (plus[:pos] + plus[pos + 1 :], minus)


def _insert_pos(block: tuple[int, ...], m: int) -> int:
    pos = 0
    while pos < len(block) and block[pos] < m:
        pos += 1
    return pos


def _find_pos(block: tuple[int, ...], m: int) -> int | None:
    try:
        return block.index(m)
    except ValueError:
        return None


def apply_charged_mode(species: int, m: int, state: ChargedState) -> ChargedState:
    acc: dict[ChargedMonomial, Fraction] = {}
    for mono, c in state.terms.items():
        hit = apply_charged_mode_to_monomial(species, m, mono)
        if hit is not None:
            sign, out = hit
            add_term(acc, out, sign * c)
    return ChargedState(acc)


class ChargedModeOperator:
    def __init__(self, species: int, m: int):
        self.species = species
        self.m = m

    def apply(self, state: ChargedState) -> ChargedState:
        return apply_charged_mode(self.species, self.m, state)


def enumerate_charged_basis(weight_cut2: int) -> list[ChargedMonomial]:
    """All charged monomials of transported twice-weight <= weight_cut2."""
    out = []
    for pweight, plus in _blocks(weight_cut2, 1):  # psi+_{-j-1} costs 4j+3
        for _, minus in _blocks(weight_cut2 - pweight, 3):  # psi-_{-j-1} costs 4j+1
            out.append((plus, minus))
    out.sort(key=lambda m: (cweight2(m), m))
    return out


def _blocks(budget: int, offset: int) -> list[tuple[int, tuple[int, ...]]]:
    # strictly increasing tuples of modes -1, -2, ... with cost 4j + (4 - offset)
    found: list[tuple[int, tuple[int, ...]]] = []

    def extend(prefix: tuple[int, ...], j: int, used: int) -> None:
        found.append((used, prefix))
        jj = j
        while 4 * jj + 4 - offset <= budget - used:
            extend((-jj - 1,) + prefix, jj + 1, used + 4 * jj + 4 - offset)
            jj += 1

    extend((), 0, 0)
    return found


# -- mode bilinears ----------------------------------------------------------


@dataclass(frozen=True)
class ChargedBilinear:
    """``prefactor * z^zshift :(d^dleft X)(z) (d^dright Y)(z):`` for species X, Y."""

    prefactor: Fraction
    zshift: int
    left_species: int
    dleft: int
    right_species: int
    dright: int


def _falling(m: int, order: int) -> int:
    out = 1
    for step in range(order):
        out *= m - step
    return out


class ChargedQuadraticOperator:
    """Lazy ``sum_a c_a :X_a Y_{T-a}:`` over charged mode pairs."""

    def __init__(self, rule, support, scalar: Fraction | int = 0):
        self.rule = rule
        self.support = support
        self.scalar = Fraction(scalar)

    def apply(self, state: ChargedState) -> ChargedState:
        acc: dict[ChargedMonomial, Fraction] = {}
        for mono, c in state.terms.items():
            if self.scalar:
                add_term(acc, mono, self.scalar * c)
            for a in self.support(mono):
                sp_l, ml, sp_r, mr, w = self.rule(a)
                if w:
                    _apply_charged_pair(sp_l, ml, sp_r, mr, mono, acc, w * c)
        return ChargedState(acc)


def _apply_charged_pair(sp_l, ml, sp_r, mr, mono, acc, coeff) -> None:
    # normal order: left annihilator against right creator acts as the
    # swapped product with a minus sign; otherwise right factor first
    if ml >= 0 and mr <= -1:
        order = ((sp_l, ml), (sp_r, mr))
        sign = -1
    else:
        order = ((sp_r, mr), (sp_l, ml))
        sign = 1
    hit = apply_charged_mode_to_monomial(order[0][0], order[0][1], mono)
    if hit is None:
        return
    s1, mid = hit
    hit = apply_charged_mode_to_monomial(order[1][0], order[1][1], mid)
    if hit is None:
        return
    s2, out = hit
    add_term(acc, out, coeff * (sign * s1 * s2))


def charged_bilinear_mode(bil: ChargedBilinear, exponent: int) -> ChargedQuadraticOperator:
    """Coefficient of ``z**exponent`` of the bilinear, as a lazy operator.

    Fields expand as ``X(z) = sum_n X_n z^{-n-1}``; with
    ``T = -exponent + zshift - 2 - dleft - dright`` the summand at free index
    ``a`` pairs ``X_a`` with ``Y_{T-a}``.
    """
    T = -exponent + bil.zshift - 2 - bil.dleft - bil.dright
    pref, a_ord, b_ord = bil.prefactor, bil.dleft, bil.dright
    sp_l, sp_r = bil.left_species, bil.right_species

    def rule(a: int):
        b = T - a
        c = pref * _falling(-a - 1, a_ord) * _falling(-b - 1, b_ord)
        return sp_l, a, sp_r, b, c

    def support(mono: ChargedMonomial) -> Iterable[int]:
        plus, minus = mono
        hits = set(range(T + 1, 0))  # both create: T+1 <= a <= -1
        left_targets = minus if sp_l == PLUS else plus
        right_targets = minus if sp_r == PLUS else plus
        for x in left_targets:
            hits.add(-1 - x)  # left factor annihilates
        for x in right_targets:
            hits.add(T + 1 + x)  # right factor annihilates
        return sorted(hits)

    return ChargedQuadraticOperator(rule, support)


class ChargedAffineOperator:
    def __init__(self, parts: Sequence[tuple[Fraction | int, object]], scalar: Fraction | int = 0):
        self.parts = [(Fraction(c), op) for c, op in parts if c]
        self.scalar = Fraction(scalar)

    def apply(self, state: ChargedState) -> ChargedState:
        out = state.scale(self.scalar) if self.scalar else ChargedState.zero()
        for c, op in self.parts:
            out = out + op.apply(state).scale(c)
        return out


H_CHARGED_BILINEAR = ChargedBilinear(Fraction(1), 0, PLUS, 0, MINUS, 0)


def hA_mode(n: int) -> ChargedQuadraticOperator:
    """Mode n of the charged current ``:psi+(z) psi-(z):``."""
    return charged_bilinear_mode(H_CHARGED_BILINEAR, -n - 1)


def hA_family() -> OperatorFamily:
    return OperatorFamily("hA", hA_mode)


def lA_mode(lam: Fraction, n: int) -> ChargedAffineOperator:
    """Mode n of ``(1-lam):(d psi+) psi-: + lam :(d psi-) psi+:``."""
    lam = Fraction(lam)
    e = -n - 2
    return ChargedAffineOperator(
        [
            (1 - lam, charged_bilinear_mode(ChargedBilinear(Fraction(1), 0, PLUS, 1, MINUS, 0), e)),
            (lam, charged_bilinear_mode(ChargedBilinear(Fraction(1), 0, MINUS, 1, PLUS, 0), e)),
        ]
    )


def lA_lambda_b_mode(lam: Fraction, b: Fraction, n: int) -> ChargedAffineOperator:
    """Two-parameter charged Virasoro mode; the ``b`` terms shift by the
    current and a constant ``b(b - 2 lam + 1)/2`` at mode zero."""
    lam, b = Fraction(lam), Fraction(b)
    parts: list[tuple[Fraction, object]] = [(Fraction(1), lA_mode(lam, n))]
    if b:
        parts.append((-b, hA_mode(n)))
    scalar = b * (b - 2 * lam + 1) / 2 if n == 0 else Fraction(0)
    return ChargedAffineOperator(parts, scalar)


def lA_family(lam: Fraction, b: Fraction = Fraction(0)) -> OperatorFamily:
    return OperatorFamily(f"LA({lam},{b})", lambda n: lA_lambda_b_mode(lam, b, n))


# -- the mode dictionary and the state isomorphism ---------------------------


def charged_mode_of(t: int) -> tuple[int, int]:
    """Image of a neutral mode (twice-encoded) under the mode dictionary."""
    if t % 2 == 0:
        raise ValueError("neutral modes are half-integers")
    if t % 4 == 1:  # the modes -2j-3/2: creation of odd indices / psi+ side
        return PLUS, (t - 1) // 4
    return MINUS, (t - 3) // 4


def neutral_mode_of(species: int, m: int) -> int:
    """Inverse of the mode dictionary."""
    return 4 * m + 1 if species == PLUS else 4 * m + 3


def _charged_factor_of_index(n: int) -> tuple[int, int]:
    # creation of neutral index n, as a charged creation factor
    if n % 2:
        return PLUS, -(n - 1) // 2 - 1
    return MINUS, -n // 2 - 1


def _perm_sign(seq: Sequence, key: Callable) -> int:
    ranked = [key(x) for x in seq]
    inversions = sum(
        1 for i in range(len(ranked)) for j in range(i + 1, len(ranked)) if ranked[i] > ranked[j]
    )
    return -1 if inversions % 2 else 1


def to_charged_monomial(mono: Monomial) -> tuple[int, ChargedMonomial]:
    """Signed dictionary image of a neutral monomial.

    Factors map in their written order (largest index leftmost) and are then
    sorted into the charged canonical order, every swap of the mutually
    anticommuting creation factors contributing a sign.
    """
    factors = [_charged_factor_of_index(n) for n in reversed(mono)]
    plus = tuple(sorted(m for sp, m in factors if sp == PLUS))
    minus = tuple(sorted(m for sp, m in factors if sp == MINUS))
    # canonical rank: psi+ block (by mode) then psi- block (by mode)
    sign = _perm_sign(factors, key=lambda f: (0, f[1]) if f[0] == PLUS else (1, f[1]))
    return sign, (plus, minus)


def from_charged_monomial(mono: ChargedMonomial) -> tuple[int, Monomial]:
    """Signed inverse image of a charged monomial."""
    plus, minus = mono
    indices = [2 * (-m - 1) + 1 for m in plus] + [2 * (-m - 1) for m in minus]
    sign = _perm_sign(indices, key=lambda n: -n)  # neutral order: decreasing index
    return sign, tuple(sorted(indices))


def to_charged(state) -> ChargedState:
    """Linear extension of the monomial dictionary (the state isomorphism)."""
    acc: dict[ChargedMonomial, Fraction] = {}
    for mono, c in state.terms.items():
        sign, image = to_charged_monomial(mono)
        add_term(acc, image, sign * c)
    return ChargedState(acc)


def from_charged(state: ChargedState):
    from .fock import FockState

    acc: dict[Monomial, Fraction] = {}
    for mono, c in state.terms.items():
        sign, image = from_charged_monomial(mono)
        add_term(acc, image, sign * c)
    return FockState(acc)


class ConjugatedOperator:
    """A charged operator pulled back to the neutral space through the
    state isomorphism."""

    def __init__(self, charged_op):
        self.charged_op = charged_op

    def apply(self, state):
        return from_charged(self.charged_op.apply(to_charged(state)))


# -- text form ---------------------------------------------------------------


def format_charged_monomial(mono: ChargedMonomial) -> str:
    plus, minus = mono
    factors = [f"psi+[{m}]" for m in plus] + [f"psi-[{m}]" for m in minus]
    return " ".join(factors + ["|0>"]) if factors else "|0>"


def format_charged_state(state: ChargedState) -> str:
    if state.is_zero:
        return "0"
    parts: list[str] = []
    for i, (mono, c) in enumerate(state.sorted_terms()):
        mag = abs(c)
        body = format_charged_monomial(mono) if mag == 1 else f"{mag} {format_charged_monomial(mono)}"
        if i == 0:
            parts.append(("-1 " + format_charged_monomial(mono)) if (c < 0 and mag == 1) else (f"-{body}" if c < 0 else body))
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)
