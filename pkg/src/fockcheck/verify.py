"""Generic exact relation checking over operator families and finite bases.

Every check evaluates an operator identity on a finite grid of mode pairs
and basis vectors with exact rational arithmetic; a check fails on any
nonzero defect, so there is no tolerance anywhere.  Failures are data, not
exceptions, and carry a full witness (the basis vector plus both sides) so
a red check is reproducible from its report alone.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .fock import FockState


@dataclass
class VerificationReport:
    """Machine-readable outcome of one exact check."""

    check: str
    params: dict
    cases_run: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, witness: str, lhs: str, rhs: str) -> None:
        self.failures.append({"witness": witness, "lhs": lhs, "rhs": rhs})

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "cases_run": self.cases_run,
            "failures": self.failures,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary(self) -> str:
        status = "pass" if self.passed else f"FAIL ({len(self.failures)} defects)"
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.check}: {status} [{self.cases_run} cases, {self.elapsed_ms} ms] {params}"


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = int(1000 * (time.perf_counter() - self.start))


@dataclass(frozen=True)
class BracketSpec:
    """A (anti)commutation relation ``[left_m, right_n]_± = expected(m, n)``.

    ``expected(m, n)`` returns ``(ops, scalar)`` with ``ops`` a finite list of
    ``(coefficient, operator)`` summands and ``scalar`` the identity part.
    """

    name: str
    kind: str  # "commutator" | "anticommutator"
    left: Callable[[int], object]
    right: Callable[[int], object]
    expected: Callable[[int, int], tuple[list[tuple[Fraction, object]], Fraction]]

    def __post_init__(self):
        if self.kind not in ("commutator", "anticommutator"):
            raise ValueError(f"unknown bracket kind {self.kind!r}")


def bracket_check(
    spec: BracketSpec,
    mode_pairs: Iterable[tuple[int, int]],
    basis: Sequence,
    state_of: Callable = None,
    render: Callable = None,
) -> VerificationReport:
    """Evaluate a bracket relation on every (mode pair, basis vector).

    ``basis`` holds monomials; ``state_of`` lifts one to a state and
    ``render`` pretty-prints states for witnesses (defaults target the
    neutral Fock space).
    """
    from .fock import FockState as NS, format_state

    state_of = state_of or (lambda mono: NS.monomial(mono))
    render = render or format_state
    pairs = list(mode_pairs)
    report = VerificationReport(spec.name, {})
    sign = 1 if spec.kind == "anticommutator" else -1
    with _Timer() as timer:
        for m, n in pairs:
            left_m = spec.left(m)
            right_n = spec.right(n)
            ops, scalar = spec.expected(m, n)
            for mono in basis:
                v = state_of(mono)
                lhs = left_m.apply(right_n.apply(v)) + right_n.apply(left_m.apply(v)).scale(sign)
                rhs = v.scale(scalar)
                for c, op in ops:
                    if c:
                        rhs = rhs + op.apply(v).scale(c)
                report.cases_run += 1
                if lhs != rhs:
                    report.record(
                        witness=f"(m={m}, n={n}) on {render(v)}",
                        lhs=render(lhs),
                        rhs=render(rhs),
                    )
    report.elapsed_ms = timer.ms
    report.params = {"kind": spec.kind, "pairs": len(pairs), "basis": len(basis)}
    return report


def field_identity_check(
    name: str,
    left_mode: Callable[[int], object],
    right_mode: Callable[[int], object],
    modes: Iterable[int],
    basis: Sequence,
    state_of: Callable = None,
    render: Callable = None,
) -> VerificationReport:
    """Assert ``left_mode(n) v == right_mode(n) v`` exactly over the grid."""
    from .fock import FockState as NS, format_state

    state_of = state_of or (lambda mono: NS.monomial(mono))
    render = render or format_state
    modes = list(modes)
    report = VerificationReport(name, {"modes": len(modes), "basis": len(basis)})
    with _Timer() as timer:
        for n in modes:
            a = left_mode(n)
            b = right_mode(n)
            for mono in basis:
                v = state_of(mono)
                lhs = a.apply(v)
                rhs = b.apply(v)
                report.cases_run += 1
                if lhs != rhs:
                    report.record(witness=f"(n={n}) on {render(v)}", lhs=render(lhs), rhs=render(rhs))
    report.elapsed_ms = timer.ms
    return report


def fraction_free_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank over the rationals by fraction-free (Bareiss) elimination."""
    mat = []
    for row in rows:
        denom = 1
        for x in row:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
        mat.append([int(x * denom) for x in row])
    if not mat:
        return 0
    n_rows, n_cols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if mat[r][col]), None)
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        pivot = mat[rank][col]
        for r in range(rank + 1, n_rows):
            for c in range(col + 1, n_cols):
                mat[r][c] = (pivot * mat[r][c] - mat[r][col] * mat[rank][c]) // prev
            mat[r][col] = 0
        prev = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a) or 1


def state_vector(state: FockState, basis_index: dict) -> list[Fraction]:
    """Coordinates of a state in a listed basis; fails on out-of-basis terms."""
    coords = [Fraction(0)] * len(basis_index)
    for mono, c in state.terms.items():
        coords[basis_index[mono]] = c
    return coords
