"""Neutral-fermion Fock space: canonical monomials, exact states, mode action.

The space is spanned by monomials of creation modes applied to the vacuum.
A monomial is stored as a strictly increasing tuple of non-negative integers
``(n_1, ..., n_k)``, standing for the product

    phi[-n_k-1/2] ... phi[-n_2-1/2] phi[-n_1-1/2] |0>

written with the most negative mode leftmost.  Every sign in the package is
derived from this single factor-order convention.

Mode indices are half-integers.  They are encoded throughout as *twice* the
value, an odd ``int``: ``t = 2*m``.  Negative ``t`` creates the index
``n = (-t-1)//2``, positive ``t`` annihilates ``n = (t-1)//2``.  The modes
satisfy the Clifford relations ``{phi_m, phi_n} = delta(m, -n)``.

Coefficients are ``fractions.Fraction``; no floating point exists anywhere
in this package.
"""

from __future__ import annotations

import re
from bisect import bisect_left
from fractions import Fraction
from typing import Iterable, Iterator

Monomial = tuple[int, ...]

VACUUM: Monomial = ()


def creation(n: int) -> int:
    """Twice-encoded mode creating index ``n`` (the mode -n-1/2)."""
    if n < 0:
        raise ValueError(f"monomial index must be >= 0, got {n}")
    return -(2 * n + 1)


def annihilation(n: int) -> int:
    """Twice-encoded mode annihilating index ``n`` (the mode n+1/2)."""
    if n < 0:
        raise ValueError(f"monomial index must be >= 0, got {n}")
    return 2 * n + 1


def check_mode(t: int) -> int:
    if t % 2 == 0:
        raise ValueError(f"fermion mode must be a half-integer, got {Fraction(t, 2)}")
    return t


def mode_value(t: int) -> Fraction:
    return Fraction(t, 2)


def weight2(mono: Monomial) -> int:
    """Twice the weight sum((n_i + 1/2)); always a non-negative integer."""
    return sum(2 * n + 1 for n in mono)


def weight(mono: Monomial) -> Fraction:
    return Fraction(weight2(mono), 2)


def apply_mode_to_monomial(t: int, mono: Monomial) -> tuple[int, Monomial] | None:
    """Action of the mode ``t`` (twice-encoded) on a basis monomial.

    Returns ``(sign, monomial)`` or ``None`` when the result is zero.  The
    sign is ``(-1)**g`` where ``g`` counts the factors standing to the left
    of the affected slot in the canonical product, i.e. the occupied indices
    strictly greater than the target index.
    """
    if t < 0:
        n = (-t - 1) // 2
        pos = bisect_left(mono, n)
        if pos < len(mono) and mono[pos] == n:
            return None
        sign = -1 if (len(mono) - pos) % 2 else 1
        return sign, mono[:pos] + (n,) + mono[pos:]
    n = (t - 1) // 2
    pos = bisect_left(mono, n)
    if pos == len(mono) or mono[pos] != n:
        return None
    sign = -1 if (len(mono) - pos - 1) % 2 else 1
    return sign, mono[:pos] + mono[pos + 1 :]


class FockState:
    """Finite linear combination of monomials with exact rational coefficients.

    Zero coefficients are never stored; the empty map is the zero state.
    Instances are treated as immutable values.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        self.terms = terms if terms is not None else {}

    @classmethod
    def zero(cls) -> "FockState":
        return cls()

    @classmethod
    def monomial(cls, mono: Iterable[int], coeff: Fraction | int = 1) -> "FockState":
        mono = tuple(mono)
        if any(b <= a for a, b in zip(mono, mono[1:])) or (mono and mono[0] < 0):
            raise ValueError(f"not a canonical monomial: {mono}")
        coeff = Fraction(coeff)
        return cls({mono: coeff} if coeff else {})

    @classmethod
    def vacuum(cls) -> "FockState":
        return cls({VACUUM: Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def __add__(self, other: "FockState") -> "FockState":
        acc = dict(self.terms)
        for mono, c in other.terms.items():
            add_term(acc, mono, c)
        return FockState(acc)

    def __sub__(self, other: "FockState") -> "FockState":
        acc = dict(self.terms)
        for mono, c in other.terms.items():
            add_term(acc, mono, -c)
        return FockState(acc)

    def __neg__(self) -> "FockState":
        return FockState({m: -c for m, c in self.terms.items()})

    def scale(self, factor: Fraction | int) -> "FockState":
        factor = Fraction(factor)
        if not factor:
            return FockState()
        return FockState({m: factor * c for m, c in self.terms.items()})

    __rmul__ = scale

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockState):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        return f"FockState({format_state(self)!r})"

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: (weight2(item[0]), item[0]))


def add_term(acc: dict[Monomial, Fraction], mono: Monomial, coeff: Fraction) -> None:
    """Accumulate ``coeff * mono`` into ``acc``, dropping exact zeros."""
    new = acc.get(mono, 0) + coeff
    if new:
        acc[mono] = new
    else:
        acc.pop(mono, None)


def apply_mode(t: int, state: FockState) -> FockState:
    """Linear extension of the Clifford mode action to states."""
    check_mode(t)
    acc: dict[Monomial, Fraction] = {}
    for mono, c in state.terms.items():
        hit = apply_mode_to_monomial(t, mono)
        if hit is not None:
            sign, out = hit
            add_term(acc, out, sign * c)
    return FockState(acc)


def enumerate_basis(weight_cut2: int) -> list[Monomial]:
    """All monomials of twice-weight at most ``weight_cut2``.

    Ordered by weight, then lexicographically on the index tuple, so reports
    and golden files are stable.
    """
    if weight_cut2 < 0:
        raise ValueError("weight cut must be non-negative")
    found: list[Monomial] = []

    def extend(prefix: tuple[int, ...], next_index: int, budget: int) -> None:
        found.append(prefix)
        n = next_index
        while 2 * n + 1 <= budget:
            extend(prefix + (n,), n + 1, budget - (2 * n + 1))
            n += 1

    extend((), 0, weight_cut2)
    found.sort(key=lambda m: (weight2(m), m))
    return found


# -- text form ---------------------------------------------------------------
#
# Monomials render as ``phi[-5/2] phi[-1/2] |0>`` and states as sums of
# ``coeff monomial`` terms; the same grammar is parsed back by the CLI.

_PHI_RE = re.compile(r"phi\[(-?\d+)/2\]")
_COEFF_RE = re.compile(r"(-?\d+)(?:/(\d+))?$")


def format_monomial(mono: Monomial) -> str:
    if not mono:
        return "|0>"
    factors = " ".join(f"phi[{-(2 * n + 1)}/2]" for n in reversed(mono))
    return f"{factors} |0>"


def format_state(state: FockState) -> str:
    if state.is_zero:
        return "0"
    parts: list[str] = []
    for i, (mono, c) in enumerate(state.sorted_terms()):
        mag = abs(c)
        body = format_monomial(mono) if mag == 1 else f"{mag} {format_monomial(mono)}"
        if i == 0:
            parts.append(("-1 " + format_monomial(mono)) if (c < 0 and mag == 1) else (f"-{body}" if c < 0 else body))
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def parse_fraction(text: str) -> Fraction:
    m = _COEFF_RE.match(text.strip())
    if not m:
        raise ValueError(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Fraction(num, den)


def _parse_term(text: str) -> FockState:
    tokens = text.split()
    if not tokens:
        raise ValueError("empty term")
    if tokens[-1] != "|0>":
        raise ValueError(f"term must end with |0>: {text!r}")
    coeff = Fraction(1)
    start = 0
    if _COEFF_RE.match(tokens[0]):
        coeff = parse_fraction(tokens[0])
        start = 1
    state = FockState.vacuum()
    for tok in reversed(tokens[start:-1]):
        m = _PHI_RE.fullmatch(tok)
        if not m:
            raise ValueError(f"bad factor {tok!r}")
        state = apply_mode(check_mode(int(m.group(1))), state)
    return state.scale(coeff)


def parse_state(text: str) -> FockState:
    """Parse the textual state grammar printed by :func:`format_state`."""
    text = text.strip()
    if text == "0":
        return FockState.zero()
    # split on top-level ' + ' / ' - ' separators
    out = FockState.zero()
    sign = 1
    if text.startswith("-"):
        # leading minus binds to the first coefficient
        first_rest = text[1:].lstrip()
        text = first_rest
        sign = -1
    for chunk in re.split(r"\s+([+-])\s+", text):
        if chunk == "+":
            sign = 1
        elif chunk == "-":
            sign = -1
        else:
            out = out + _parse_term(chunk).scale(sign)
    return out


def parse_half(text: str) -> int:
    """Parse a half-integer literal (``8`` or ``15/2``) to its twice-encoding."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        if den.strip() != "2":
            raise ValueError(f"half-integers must have denominator 2: {text!r}")
        return int(num)
    return 2 * int(text)


def iter_modes(max_index2: int) -> Iterator[int]:
    """All modes with |m| <= max_index2/2, in increasing order."""
    for t in range(-max_index2, max_index2 + 1):
        if t % 2:
            yield t
