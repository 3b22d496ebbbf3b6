"""Action of the differential-operator algebra on the circle (W_{1+infinity}).

The generators ``J^k_n = t^{n+k} (-d/dt)^k`` act on the charged space as the
modes of ``(-1)^k :psi+(w) (d^k psi-)(w):`` under the labelling
``J^k(w) = sum_n J^k_n w^{-n-k-1}``; the normalisation is anchored by
``J^0_n = hA_n``.  On the neutral space they act through the state
isomorphism.

On the monomial basis ``u_j = t^{-j}`` of Laurent polynomials the same
generator is the window matrix

    J^k_n  =  sum_j  j (j+1) ... (j+k-1)  E_{j-n, j}

and lifting ``E_{r,s}`` to the normal-ordered bilinear ``:psi+_{-r} psi-_{s-1}:``
reproduces the Fock operators exactly modulo a central scalar, which is what
the defect check certifies.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .charged import (
    MINUS,
    PLUS,
    ChargedBilinear,
    ChargedMonomial,
    ChargedState,
    ConjugatedOperator,
    charged_bilinear_mode,
    format_charged_state,
    _apply_charged_pair,
)
from .modeops import OperatorFamily
from .verify import VerificationReport, _Timer

Matrix = dict[tuple[int, int], Fraction]


def jk_mode_charged(k: int, n: int):
    """Mode n of ``(-1)^k :psi+(w) (d^k psi-)(w):``."""
    if k < 0:
        raise ValueError("differential order must be non-negative")
    sign = Fraction(-1) ** k
    bil = ChargedBilinear(sign, 0, PLUS, 0, MINUS, k)
    return charged_bilinear_mode(bil, -(n + k + 1))


def jk_charged_family(k: int) -> OperatorFamily:
    return OperatorFamily(f"J{k}", lambda n: jk_mode_charged(k, n))


def jk_mode_neutral(k: int, n: int) -> ConjugatedOperator:
    """The same generator on the neutral space, through the isomorphism."""
    return ConjugatedOperator(jk_mode_charged(k, n))


def jk_neutral_family(k: int) -> OperatorFamily:
    return OperatorFamily(f"J{k}(neutral)", lambda n: jk_mode_neutral(k, n))


def _rising(j: int, k: int) -> int:
    out = 1
    for step in range(k):
        out *= j + step
    return out


def glinf_matrix(k: int, n: int, radius: int) -> Matrix:
    """Window matrix of ``t^{n+k}(-d/dt)^k`` on the basis ``u_j = t^{-j}``.

    The entry at ``(j-n, j)`` is the rising factorial ``j (j+1)...(j+k-1)``;
    only columns ``|j| <= radius`` are materialised.
    """
    out: Matrix = {}
    for j in range(-radius, radius + 1):
        c = _rising(j, k)
        if c:
            out[(j - n, j)] = Fraction(c)
    return out


def matrix_commutator(a: Matrix, b: Matrix, radius: int) -> Matrix:
    """``[a, b]`` restricted to entries whose intermediate sums stay inside
    the materialised columns; callers size the window accordingly."""
    out: Matrix = {}
    for (r, t), x in a.items():
        for (t2, s), y in b.items():
            if t == t2 and abs(r) <= radius and abs(s) <= radius:
                _madd(out, (r, s), x * y)
    for (r, t), x in b.items():
        for (t2, s), y in a.items():
            if t == t2 and abs(r) <= radius and abs(s) <= radius:
                _madd(out, (r, s), -x * y)
    return out


def _madd(mat: Matrix, key: tuple[int, int], val: Fraction) -> None:
    new = mat.get(key, 0) + val
    if new:
        mat[key] = new
    else:
        mat.pop(key, None)


class MatrixLift:
    """Fock-space lift ``E_{r,s} -> :psi+_{-r} psi-_{s-1}:`` of a window matrix."""

    def __init__(self, matrix: Matrix):
        self.matrix = matrix

    def apply(self, state: ChargedState) -> ChargedState:
        acc: dict[ChargedMonomial, Fraction] = {}
        for mono, c in state.terms.items():
            for (r, s), w in self.matrix.items():
                _apply_charged_pair(PLUS, -r, MINUS, s - 1, mono, acc, w * c)
        return ChargedState(acc)


def _max_slot(basis: Sequence[ChargedMonomial]) -> int:
    top = 1
    for plus, minus in basis:
        if plus:
            top = max(top, -plus[0])
        if minus:
            top = max(top, -minus[0] + 1)
    return top


def scalar_defect_check(
    k1: int,
    n1: int,
    k2: int,
    n2: int,
    basis: Sequence[ChargedMonomial],
    expected_scalar: Fraction | None = None,
) -> VerificationReport:
    """Certify that ``[J1, J2]`` on the Fock space differs from the lifted
    matrix commutator by one scalar across the whole tested basis.

    The window is sized from the basis so every matrix entry that can touch
    a tested state is exact; an undersized window would surface as a
    non-scalar defect, never as a silent pass.
    """
    report = VerificationReport(
        "winf_scalar_defect", {"k1": k1, "n1": n1, "k2": k2, "n2": n2, "basis": len(basis)}
    )
    with _Timer() as timer:
        shift = abs(n1) + abs(n2) + k1 + k2
        inner = _max_slot(basis) + shift + 2
        radius = inner + shift + 2
        m1 = glinf_matrix(k1, n1, radius)
        m2 = glinf_matrix(k2, n2, radius)
        lifted = MatrixLift(matrix_commutator(m1, m2, inner))
        op1 = jk_mode_charged(k1, n1)
        op2 = jk_mode_charged(k2, n2)
        scalar = expected_scalar
        for mono in basis:
            v = ChargedState.monomial(mono)
            bracket = op1.apply(op2.apply(v)) - op2.apply(op1.apply(v))
            defect = bracket - lifted.apply(v)
            report.cases_run += 1
            found = defect.coefficient(mono)
            if defect != v.scale(found):
                report.record(
                    witness=f"defect not scalar on {format_charged_state(v)}",
                    lhs=format_charged_state(defect),
                    rhs=f"{found} * state",
                )
                continue
            if scalar is None:
                scalar = found
            elif found != scalar:
                report.record(
                    witness=f"defect scalar varies on {format_charged_state(v)}",
                    lhs=str(found),
                    rhs=str(scalar),
                )
    report.elapsed_ms = timer.ms
    return report
