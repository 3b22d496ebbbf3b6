"""Truncated bivariate character series and the graded-dimension identities.

A series lives in variables ``z`` (integer exponents) and ``q^(1/2)``:
coefficients are integers keyed by ``(zexp, qhalf)`` with ``qhalf`` counting
half-units of ``q``.  Truncation is explicit state: coefficients above
``qmax_half`` are unknown rather than zero, and multiplication takes the
minimum bound of its operands, so boundary coefficients can never silently
go wrong.

The three realisations of the graded dimension ``tr q^{L0} z^{h0}`` are

* the basis trace over monomials (``z^dg q^weight``);
* the product  prod_i (1 + z q^{2i-1/2}) (1 + z^{-1} q^{2i-3/2});
* the sum     (1 / prod_i (1 - q^{2i})) * sum_n z^n q^{n^2 + n/2};

and the package also checks the two classical Jacobi identities that fall
out of comparing them.
"""

from __future__ import annotations

from fractions import Fraction

from .fock import enumerate_basis, weight2
from .grading import dg, partition_count, partitions, vacuum_like, weight
from .heisenberg import raising_string
from .verify import VerificationReport, _Timer


class CharacterSeries:
    """Integer series in z and q^(1/2), exact below an explicit q-truncation."""

    __slots__ = ("coeffs", "qmax_half")

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None, qmax_half: int = 0):
        self.qmax_half = qmax_half
        self.coeffs = {}
        if coeffs:
            for (z, qh), c in coeffs.items():
                if c and qh <= qmax_half:
                    self.coeffs[(z, qh)] = c

    @classmethod
    def one(cls, qmax_half: int) -> "CharacterSeries":
        return cls({(0, 0): 1}, qmax_half)

    @classmethod
    def term(cls, z: int, qhalf: int, coeff: int, qmax_half: int) -> "CharacterSeries":
        return cls({(z, qhalf): coeff}, qmax_half)

    def coefficient(self, z: int, qhalf: int) -> int:
        if qhalf > self.qmax_half:
            raise ValueError(f"coefficient at q^{Fraction(qhalf, 2)} is beyond the truncation")
        return self.coeffs.get((z, qhalf), 0)

    def __add__(self, other: "CharacterSeries") -> "CharacterSeries":
        bound = min(self.qmax_half, other.qmax_half)
        acc = {k: c for k, c in self.coeffs.items() if k[1] <= bound}
        for k, c in other.coeffs.items():
            if k[1] <= bound:
                acc[k] = acc.get(k, 0) + c
        return CharacterSeries(acc, bound)

    def __sub__(self, other: "CharacterSeries") -> "CharacterSeries":
        return self + other.scale(-1)

    def scale(self, factor: int) -> "CharacterSeries":
        return CharacterSeries({k: factor * c for k, c in self.coeffs.items()}, self.qmax_half)

    def __mul__(self, other: "CharacterSeries") -> "CharacterSeries":
        bound = min(self.qmax_half, other.qmax_half)
        acc: dict[tuple[int, int], int] = {}
        for (z1, q1), c1 in self.coeffs.items():
            if q1 > bound:
                continue
            for (z2, q2), c2 in other.coeffs.items():
                qh = q1 + q2
                if qh <= bound:
                    key = (z1 + z2, qh)
                    acc[key] = acc.get(key, 0) + c1 * c2
        return CharacterSeries(acc, bound)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterSeries):
            return NotImplemented
        bound = min(self.qmax_half, other.qmax_half)
        trim = lambda s: {k: c for k, c in s.coeffs.items() if k[1] <= bound}
        return trim(self) == trim(other)

    def differs_at(self, other: "CharacterSeries") -> tuple[int, int] | None:
        """First (z, qhalf) where the two series disagree below both bounds."""
        bound = min(self.qmax_half, other.qmax_half)
        keys = {k for k in self.coeffs if k[1] <= bound} | {k for k in other.coeffs if k[1] <= bound}
        for key in sorted(keys, key=lambda k: (k[1], k[0])):
            if self.coeffs.get(key, 0) != other.coeffs.get(key, 0):
                return key
        return None

    def records(self) -> list[dict]:
        return [
            {"z": z, "qhalf": qh, "coeff": c}
            for (z, qh), c in sorted(self.coeffs.items(), key=lambda item: (item[0][1], item[0][0]))
        ]


def binomial_factor(z: int, qhalf: int, coeff: int, qmax_half: int) -> CharacterSeries:
    """The factor ``1 + coeff * z^z q^(qhalf/2)``."""
    return CharacterSeries({(0, 0): 1, (z, qhalf): coeff}, qmax_half)


def geometric_factor(qhalf: int, qmax_half: int) -> CharacterSeries:
    """``1 / (1 - q^(qhalf/2))`` expanded to the truncation."""
    if qhalf <= 0:
        raise ValueError("geometric factor needs a positive q-exponent")
    acc = {(0, k): 1 for k in range(0, qmax_half + 1, qhalf)}
    return CharacterSeries(acc, qmax_half)


def char_trace(weight_cut2: int) -> CharacterSeries:
    """Basis trace sum of ``z^dg(v) q^weight(v)``; complete up to that weight."""
    acc: dict[tuple[int, int], int] = {}
    for mono in enumerate_basis(weight_cut2):
        key = (dg(mono), weight2(mono))
        acc[key] = acc.get(key, 0) + 1
    return CharacterSeries(acc, weight_cut2)


def char_product_form(qmax_half: int) -> CharacterSeries:
    """``prod_{i>=1} (1 + z q^{2i-1+1/2})(1 + z^{-1} q^{2i-2+1/2})`` truncated."""
    out = CharacterSeries.one(qmax_half)
    i = 1
    while 4 * i - 3 <= qmax_half:  # the lighter factor of round i
        if 4 * i - 1 <= qmax_half:
            out = out * binomial_factor(1, 4 * i - 1, 1, qmax_half)
        out = out * binomial_factor(-1, 4 * i - 3, 1, qmax_half)
        i += 1
    return out


def char_sum_form(qmax_half: int) -> CharacterSeries:
    """``(1/prod(1-q^{2i})) sum_n z^n q^{n/2} q^{n^2}`` truncated."""
    euler = CharacterSeries.one(qmax_half)
    i = 1
    while 4 * i <= qmax_half:
        euler = euler * geometric_factor(4 * i, qmax_half)
        i += 1
    theta: dict[tuple[int, int], int] = {}
    n = 0
    while True:
        plus_qh = 2 * n * n + n
        minus_qh = 2 * n * n - n
        if min(plus_qh, minus_qh) > qmax_half and n > 0:
            break
        if plus_qh <= qmax_half:
            theta[(n, plus_qh)] = 1
        if n and minus_qh <= qmax_half:
            theta[(-n, minus_qh)] = 1
        n += 1
    return euler * CharacterSeries(theta, qmax_half)


def jacobi_check(which: str, qmax: int) -> VerificationReport:
    """Coefficient-exact comparison of one of the two Jacobi identities.

    ``DA``: prod (1-q^{2i})(1+z q^{2i-1/2})(1+z^{-1} q^{2i-3/2})
            = sum_m z^m q^{m(2m+1)/2}
    ``A``:  prod (1-q^i)(1-z q^{i-1})(1-z^{-1} q^i)
            = sum_m (-1)^m z^m q^{m(m-1)/2}   (the triple product)
    """
    report = VerificationReport("jacobi", {"which": which, "qmax": qmax})
    qmax_half = 2 * qmax
    with _Timer() as timer:
        lhs = CharacterSeries.one(qmax_half)
        rhs: dict[tuple[int, int], int] = {}
        if which == "DA":
            i = 1
            while 4 * i - 3 <= qmax_half:
                for z, qh in ((0, 4 * i), (1, 4 * i - 1), (-1, 4 * i - 3)):
                    if qh <= qmax_half:
                        lhs = lhs * binomial_factor(z, qh, 1 if z else -1, qmax_half)
                i += 1
            m = 0
            while True:
                hit = False
                for mm in (m, -m) if m else (0,):
                    qh = mm * (2 * mm + 1)
                    if 0 <= qh <= qmax_half:
                        rhs[(mm, qh)] = rhs.get((mm, qh), 0) + 1
                        hit = True
                if not hit and m > 0:
                    break
                m += 1
        elif which == "A":
            i = 1
            while 2 * (i - 1) <= qmax_half:
                for z, qh in ((0, 2 * i), (1, 2 * (i - 1)), (-1, 2 * i)):
                    if qh <= qmax_half:
                        lhs = lhs * binomial_factor(z, qh, -1, qmax_half)
                i += 1
            m = 0
            while True:
                hit = False
                for mm in (m, -m) if m else (0,):
                    qh = mm * (mm - 1)
                    if 0 <= qh <= qmax_half:
                        rhs[(mm, qh)] = rhs.get((mm, qh), 0) + (1 if mm % 2 == 0 else -1)
                        hit = True
                if not hit and m > 0:
                    break
                m += 1
        else:
            raise ValueError(f"unknown identity {which!r}")
        rhs_series = CharacterSeries(rhs, qmax_half)
        report.cases_run = qmax_half + 1
        where = lhs.differs_at(rhs_series)
        if where is not None:
            z, qh = where
            report.record(
                witness=f"coefficient at z^{z} q^{Fraction(qh, 2)}",
                lhs=str(lhs.coeffs.get((z, qh), 0)),
                rhs=str(rhs_series.coeffs.get((z, qh), 0)),
            )
    report.elapsed_ms = timer.ms
    return report


def character_triple_check(qmax_half: int) -> VerificationReport:
    """Trace = product form = sum form, coefficient-exact to the bound."""
    report = VerificationReport("character_triple", {"qmax_half": qmax_half})
    with _Timer() as timer:
        trace = char_trace(qmax_half)
        product = char_product_form(qmax_half)
        total = char_sum_form(qmax_half)
        report.cases_run = 2 * (qmax_half + 1)
        for name, other in (("product", product), ("sum", total)):
            where = trace.differs_at(other)
            if where is not None:
                z, qh = where
                report.record(
                    witness=f"trace vs {name} at z^{z} q^{Fraction(qh, 2)}",
                    lhs=str(trace.coeffs.get(where, 0)),
                    rhs=str(other.coeffs.get(where, 0)),
                )
    report.elapsed_ms = timer.ms
    return report


def virasoro_weight_check(nmax: int, kmax: int) -> VerificationReport:
    """Each spanning vector ``h_{-k_l}...h_{-k_1} v_n`` is an L0 eigenvector
    with eigenvalue ``2(k_1+...+k_l) + weight(v_n)``."""
    from .fock import FockState, format_state
    from .virasoro import l_half_mode

    report = VerificationReport("virasoro_weights", {"nmax": nmax, "kmax": kmax})
    l0 = l_half_mode(0)
    with _Timer() as timer:
        for n in range(-nmax, nmax + 1):
            vn = FockState.monomial(vacuum_like(n))
            base = weight(vacuum_like(n))
            for k in range(kmax + 1):
                for parts in partitions(k):
                    vec = raising_string(parts, vn)
                    expect = vec.scale(2 * k + base)
                    got = l0.apply(vec)
                    report.cases_run += 1
                    if got != expect:
                        report.record(
                            witness=f"n={n} partition={parts}",
                            lhs=format_state(got),
                            rhs=format_state(expect),
                        )
    report.elapsed_ms = timer.ms
    return report


def sector_refinement_check(weight_cut2: int) -> VerificationReport:
    """The z^n q^w coefficient of the trace equals p((w - weight(v_n))/2)."""
    report = VerificationReport("sector_refinement", {"weight_cut2": weight_cut2})
    with _Timer() as timer:
        trace = char_trace(weight_cut2)
        seen_charges = sorted({z for z, _ in trace.coeffs})
        for n in seen_charges:
            base2 = weight2(vacuum_like(n))
            for w2 in range(weight_cut2 + 1):
                diff = w2 - base2
                expect = partition_count(diff // 4) if diff >= 0 and diff % 4 == 0 else 0
                got = trace.coeffs.get((n, w2), 0)
                report.cases_run += 1
                if got != expect:
                    report.record(
                        witness=f"z^{n} q^{Fraction(w2, 2)}",
                        lhs=str(got),
                        rhs=str(expect),
                    )
    report.elapsed_ms = timer.ms
    return report
