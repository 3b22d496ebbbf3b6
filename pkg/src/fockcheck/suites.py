"""Named verification suites: one entry per checkable claim group.

Each suite function returns a list of :class:`VerificationReport`; the CLI
and the acceptance tests share these entry points, so what the test suite
certifies is exactly what the command line runs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from . import charged as ch
from . import virasoro as vir
from .fock import FockState, enumerate_basis, format_state, iter_modes, weight
from .grading import (
    dg,
    lemma_vector,
    partition_count,
    partitions,
    sector_basis,
    vacuum_like,
)
from .heisenberg import (
    h_family,
    h_family_bilinear,
    h_mode,
    highest_weight_check,
    spanning_check,
)
from .modeops import FermionBilinear, ModeOperator, OperatorFamily, bilinear_mode, zero_operator
from .verify import BracketSpec, VerificationReport, _Timer, bracket_check, field_identity_check
from .winf import jk_mode_charged, jk_mode_neutral, scalar_defect_check


def merge_reports(name: str, params: dict, reports: Sequence[VerificationReport]) -> VerificationReport:
    out = VerificationReport(name, params)
    for rep in reports:
        out.cases_run += rep.cases_run
        out.elapsed_ms += rep.elapsed_ms
        for failure in rep.failures:
            out.failures.append({**failure, "witness": f"[{rep.check}] {failure['witness']}"})
    return out


def square_grid(mmax: int) -> list[tuple[int, int]]:
    return [(m, n) for m in range(-mmax, mmax + 1) for n in range(-mmax, mmax + 1)]


def virasoro_expected(family: OperatorFamily, c: Fraction) -> Callable:
    c = Fraction(c)

    def expected(m: int, n: int):
        scalar = Fraction(m**3 - m, 12) * c if m == -n else Fraction(0)
        return [(Fraction(m - n), family.mode(m + n))], scalar

    return expected


def heisenberg_expected(m: int, n: int):
    return [], Fraction(m) if m == -n else Fraction(0)


def virasoro_bracket(name: str, family: OperatorFamily, c: Fraction, mmax: int, basis) -> VerificationReport:
    spec = BracketSpec(name, "commutator", family.mode, family.mode, virasoro_expected(family, c))
    report = bracket_check(spec, square_grid(mmax), basis)
    report.params.update({"family": family.name, "c": str(Fraction(c)), "mmax": mmax})
    return report


# -- suites ------------------------------------------------------------------


def suite_clifford(max_index2: int = 15, weight_cut2: int = 16) -> list[VerificationReport]:
    """{phi_m, phi_n} = delta(m, -n) over all mode pairs in range."""
    basis = enumerate_basis(weight_cut2)
    modes = list(iter_modes(max_index2))
    spec = BracketSpec(
        "clifford_anticommutator",
        "anticommutator",
        ModeOperator,
        ModeOperator,
        lambda s, t: ([], Fraction(1) if s == -t else Fraction(0)),
    )
    report = bracket_check(spec, [(s, t) for s in modes for t in modes], basis)
    report.params.update({"max_index2": max_index2, "weight_cut2": weight_cut2})
    return [report]


def suite_heisenberg(mmax: int = 5, weight_cut2: int = 20) -> list[VerificationReport]:
    """[h_m, h_n] = m delta(m+n) plus equality of the two h constructions."""
    basis = enumerate_basis(weight_cut2)
    spec = BracketSpec("heisenberg_bracket", "commutator", h_mode, h_mode, heisenberg_expected)
    bracket = bracket_check(spec, square_grid(mmax), basis)
    bracket.params.update({"mmax": mmax, "weight_cut2": weight_cut2})
    dual = field_identity_check(
        "heisenberg_dual_construction",
        h_family().mode,
        h_family_bilinear().mode,
        range(-mmax, mmax + 1),
        basis,
    )
    return [bracket, dual]


def suite_sectors(nmax: int = 4, kmax: int = 8) -> list[VerificationReport]:
    """Sector dimensions p(k) and the partition-indexed sector vectors."""
    dims = VerificationReport("sector_dimensions", {"nmax": nmax, "kmax": kmax})
    with _Timer() as timer:
        for n in range(-nmax, nmax + 1):
            for k in range(kmax + 1):
                got = len(sector_basis(n, k))
                expect = partition_count(k)
                dims.cases_run += 1
                if got != expect:
                    dims.record(witness=f"sector ({n}, {k})", lhs=str(got), rhs=f"p({k}) = {expect}")
    dims.elapsed_ms = timer.ms

    inj = VerificationReport("partition_vectors", {"kmax": kmax})
    with _Timer() as timer:
        for k in range(kmax + 1):
            sector = set(sector_basis(0, k))
            seen: dict = {}
            for parts in partitions(k):
                mono = lemma_vector(parts)
                inj.cases_run += 1
                if mono not in sector:
                    inj.record(witness=f"partition {parts}", lhs=str(mono), rhs=f"a monomial of sector (0, {k})")
                if mono in seen:
                    inj.record(witness=f"partitions {seen[mono]} and {parts}", lhs=str(mono), rhs="distinct monomials")
                seen[mono] = parts
    inj.elapsed_ms = timer.ms
    return [dims, inj]


def suite_decomposition(
    hw_nmax: int = 4, hw_mmax: int = 5, span_nmax: int = 3, span_kmax: int = 5
) -> list[VerificationReport]:
    """Highest-weight structure of each charge sector plus spanning ranks."""
    hw = merge_reports(
        "highest_weight_all",
        {"nmax": hw_nmax, "mmax": hw_mmax},
        [highest_weight_check(n, hw_mmax) for n in range(-hw_nmax, hw_nmax + 1)],
    )
    span = merge_reports(
        "spanning_all",
        {"nmax": span_nmax, "kmax": span_kmax},
        [
            spanning_check(n, k)
            for n in range(-span_nmax, span_nmax + 1)
            for k in range(span_kmax + 1)
        ],
    )
    return [hw, span]


def suite_virasoro_half(mmax: int = 4, weight_cut2: int = 20) -> list[VerificationReport]:
    basis = enumerate_basis(weight_cut2)
    half = Fraction(1, 2)
    return [
        virasoro_bracket("virasoro_half", vir.l_half_family(), half, mmax, basis),
        virasoro_bracket("virasoro_half_tilde", vir.l_half_tilde_family(), half, mmax, basis),
        field_identity_check(
            "half_tilde_is_flip",
            vir.l_half_tilde_family().mode,
            vir.l_half_tilde_family_flip().mode,
            range(-mmax, mmax + 1),
            enumerate_basis(min(weight_cut2, 12)),
        ),
    ]


def suite_virasoro_one(mmax: int = 4, weight_cut2: int = 20) -> list[VerificationReport]:
    basis = enumerate_basis(weight_cut2)
    small = enumerate_basis(min(weight_cut2, 16))
    one = Fraction(1)
    reports = [
        virasoro_bracket("virasoro_one_sugawara", vir.sugawara_family(), one, mmax, basis),
        virasoro_bracket("virasoro_one_tilde", vir.l1_tilde_family(), one, mmax, basis),
        field_identity_check(
            "l1_tilde_mode_relation",
            vir.l1_tilde_family().mode,
            lambda n: vir.l1_tilde_field_mode(n),
            range(-mmax, mmax + 1),
            small,
        ),
    ]
    return reports


LAMBDA_PAIRS = (
    (Fraction(0), Fraction(0)),
    (Fraction(1), Fraction(0)),
    (Fraction(1, 3), Fraction(2, 5)),
    (Fraction(1, 2), Fraction(-1, 4)),
)


def suite_virasoro_lambda(
    pairs: Sequence[tuple[Fraction, Fraction]] = LAMBDA_PAIRS,
    mmax: int = 3,
    weight_cut2: int = 16,
) -> list[VerificationReport]:
    basis = enumerate_basis(weight_cut2)
    reports = []
    for lam, b in pairs:
        family = vir.lambda_family(lam, b)
        reports.append(virasoro_bracket(f"virasoro_lambda", family, vir.central_charge(lam), mmax, basis))
    reports.append(
        field_identity_check(
            "lambda_specialises_to_one",
            vir.lambda_family(Fraction(1, 2), Fraction(0)).mode,
            vir.sugawara_family().mode,
            range(-mmax, mmax + 1),
            basis,
        )
    )
    reports.append(
        field_identity_check(
            "lambda_specialises_to_one_tilde",
            vir.lambda_family(Fraction(1, 2), Fraction(-1, 4)).mode,
            vir.l1_tilde_family().mode,
            range(-mmax, mmax + 1),
            basis,
        )
    )
    return reports


def suite_doubling(weight_cut2: int = 16) -> list[VerificationReport]:
    half = Fraction(1, 2)
    basis = enumerate_basis(weight_cut2)
    doubled = vir.doubling_construct(vir.l_half_family(), half, 2)
    tripled = vir.doubling_construct(vir.l_half_family(), half, 3)
    flipped = vir.l_half_tilde_family_flip()
    return [
        field_identity_check(
            "doubling_n2_gives_one_tilde", doubled.mode, vir.l1_tilde_family().mode, range(-4, 5), basis
        ),
        virasoro_bracket("doubling_n3_bracket", tripled, Fraction(3, 2), 2, basis),
        virasoro_bracket("parity_flip_bracket", flipped, half, 4, enumerate_basis(min(weight_cut2, 20))),
        field_identity_check(
            "doubling_n1_identity",
            vir.doubling_construct(vir.l_half_family(), half, 1).mode,
            vir.l_half_family().mode,
            range(-4, 5),
            enumerate_basis(min(weight_cut2, 12)),
        ),
    ]


def suite_eigenvalues(nmax: int = 5, weight_cut2: int = 16) -> list[VerificationReport]:
    """Vacuum-like eigenvalue pins and joint diagonalisation of (h_0, L0)."""
    report = VerificationReport("eigenvalue_pins", {"nmax": nmax})
    l0 = vir.l_half_mode(0)
    h0 = h_mode(0)
    with _Timer() as timer:
        for n in range(-nmax, nmax + 1):
            v = FockState.monomial(vacuum_like(n))
            expect_l0 = Fraction(n * n) + Fraction(n, 2)
            for name, op, expect in (("L0", l0, expect_l0), ("h0", h0, Fraction(n))):
                got = op.apply(v)
                report.cases_run += 1
                if got != v.scale(expect):
                    report.record(
                        witness=f"{name} on vacuum-like n={n}",
                        lhs=format_state(got),
                        rhs=format_state(v.scale(expect)),
                    )
    report.elapsed_ms = timer.ms

    joint = VerificationReport("joint_eigenbasis", {"weight_cut2": weight_cut2})
    with _Timer() as timer:
        for mono in enumerate_basis(weight_cut2):
            v = FockState.monomial(mono)
            joint.cases_run += 1
            if h0.apply(v) != v.scale(dg(mono)) or l0.apply(v) != v.scale(weight(mono)):
                joint.record(
                    witness=format_state(v),
                    lhs=f"h0 -> {format_state(h0.apply(v))}; L0 -> {format_state(l0.apply(v))}",
                    rhs=f"dg = {dg(mono)}, weight = {weight(mono)}",
                )
    joint.elapsed_ms = timer.ms
    return [report, joint]


def suite_identities(mmax: int = 4, weight_cut2: int = 16) -> list[VerificationReport]:
    """The weight-two field identities and the vanishing of :phi(z) phi(z):."""
    basis = enumerate_basis(weight_cut2)
    v3 = vir.weight2_field(3)
    v4 = vir.weight2_field(4)
    v1 = vir.weight2_field(1)
    v2 = vir.weight2_field(2)

    def hderiv_rhs(m: int):
        from .modeops import AffineOperator

        return AffineOperator([(Fraction(1, 2), v3.mode(m)), (Fraction(1, 2), v4.mode(m))])

    def hsquare_rhs(m: int):
        from .modeops import AffineOperator

        parts = [(Fraction(1, 4), v1.mode(m)), (Fraction(1, 4), v2.mode(m))]
        if m % 2 == 0:
            parts.append((Fraction(-1, 2), h_mode(m // 2)))
        return AffineOperator(parts)

    reports = [
        field_identity_check(
            "heisenberg_derivative_identity",
            vir.h_derivative_family().mode,
            hderiv_rhs,
            range(-2 * mmax, 2 * mmax + 1),
            basis,
        ),
        field_identity_check(
            "heisenberg_square_identity",
            vir.h_square_family().mode,
            hsquare_rhs,
            range(-2 * mmax, 2 * mmax + 1),
            basis,
        ),
    ]
    diagonal = FermionBilinear(Fraction(1), 0, 0, 0, 1, 1)  # :phi(z) phi(z):
    reports.append(
        field_identity_check(
            "diagonal_bilinear_vanishes",
            lambda e: bilinear_mode(diagonal, e),
            lambda e: zero_operator(),
            range(-9, 4),
            basis,
        )
    )
    h_bil = FermionBilinear(Fraction(1, 2), 0, 0, 0, 1, -1)
    reports.append(
        field_identity_check(
            "heisenberg_field_odd_modes_only",
            lambda e: bilinear_mode(h_bil, 2 * e),  # even exponents must vanish
            lambda e: zero_operator(),
            range(-5, 5),
            basis,
        )
    )
    return reports


def suite_characters(qmax_half: int = 19, jac_qmax: int = 12) -> list[VerificationReport]:
    from .qchar import character_triple_check, jacobi_check, sector_refinement_check

    return [
        character_triple_check(qmax_half),
        jacobi_check("DA", jac_qmax),
        jacobi_check("A", jac_qmax),
        sector_refinement_check(qmax_half),
    ]


def suite_iso(weight_cut2: int = 16, mmax: int = 4, max_index2: int = 15) -> list[VerificationReport]:
    """Dictionary transport, Heisenberg intertwining, basis bijectivity."""
    cbasis = ch.enumerate_charged_basis(weight_cut2)
    modes = list(iter_modes(max_index2))
    spec = BracketSpec(
        "dictionary_clifford_transport",
        "anticommutator",
        lambda t: ch.ChargedModeOperator(*ch.charged_mode_of(t)),
        lambda t: ch.ChargedModeOperator(*ch.charged_mode_of(t)),
        lambda s, t: ([], Fraction(1) if s == -t else Fraction(0)),
    )
    transport = bracket_check(
        spec,
        [(s, t) for s in modes for t in modes],
        cbasis,
        state_of=ch.ChargedState.monomial,
        render=ch.format_charged_state,
    )
    transport.params.update({"max_index2": max_index2, "weight_cut2": weight_cut2})

    basis = enumerate_basis(weight_cut2)
    intertwine = VerificationReport("heisenberg_intertwining", {"mmax": mmax, "weight_cut2": weight_cut2})
    with _Timer() as timer:
        for n in range(-mmax, mmax + 1):
            hn = h_mode(n)
            han = ch.hA_mode(n)
            for mono in basis:
                v = FockState.monomial(mono)
                lhs = ch.to_charged(hn.apply(v))
                rhs = han.apply(ch.to_charged(v))
                intertwine.cases_run += 1
                if lhs != rhs:
                    intertwine.record(
                        witness=f"h_{n} on {format_state(v)}",
                        lhs=ch.format_charged_state(lhs),
                        rhs=ch.format_charged_state(rhs),
                    )
    intertwine.elapsed_ms = timer.ms

    bij = VerificationReport("state_map_bijection", {"weight_cut2": weight_cut2})
    with _Timer() as timer:
        images = {}
        for mono in basis:
            sign, image = ch.to_charged_monomial(mono)
            bij.cases_run += 1
            if abs(sign) != 1:
                bij.record(witness=str(mono), lhs=f"sign {sign}", rhs="a unit sign")
            if image in images:
                bij.record(witness=f"{images[image]} and {mono}", lhs=str(image), rhs="distinct images")
            images[image] = mono
            back_sign, back = ch.from_charged_monomial(image)
            if back != mono or back_sign * sign != 1:
                bij.record(witness=str(mono), lhs=f"round trip {back_sign} * {back}", rhs="identity")
        expected_images = set(cbasis)
        got_images = set(images)
        bij.cases_run += 1
        if got_images != expected_images:
            missing = sorted(expected_images - got_images)[:3]
            extra = sorted(got_images - expected_images)[:3]
            bij.record(
                witness="image of the weight-truncated basis",
                lhs=f"missing {missing} extra {extra}",
                rhs="the charged basis at the same truncation",
            )
    bij.elapsed_ms = timer.ms
    return [transport, intertwine, bij]


def suite_winf(kmax: int = 2, nmax: int = 3, weight_cut2: int = 16, mmax: int = 4) -> list[VerificationReport]:
    cbasis = ch.enumerate_charged_basis(weight_cut2)
    basis = enumerate_basis(weight_cut2)
    reports = [
        field_identity_check(
            "j0_equals_heisenberg_charged",
            lambda n: jk_mode_charged(0, n),
            ch.hA_mode,
            range(-mmax, mmax + 1),
            cbasis,
            state_of=ch.ChargedState.monomial,
            render=ch.format_charged_state,
        ),
        field_identity_check(
            "j0_equals_heisenberg_neutral",
            lambda n: jk_mode_neutral(0, n),
            h_mode,
            range(-mmax, mmax + 1),
            basis,
        ),
    ]
    central = merge_reports(
        "j0_central_column",
        {"mmax": mmax},
        [scalar_defect_check(0, m, 0, -m, cbasis, expected_scalar=Fraction(m)) for m in range(1, mmax + 1)],
    )
    reports.append(central)
    grid = [
        (k1, n1, k2, n2)
        for k1 in range(kmax + 1)
        for k2 in range(k1 + 1)
        for n1 in range(-nmax, nmax + 1)
        for n2 in range(-nmax, nmax + 1)
    ]
    general = merge_reports(
        "winf_matrix_defects",
        {"kmax": kmax, "nmax": nmax, "weight_cut2": weight_cut2},
        [scalar_defect_check(k1, n1, k2, n2, cbasis) for k1, n1, k2, n2 in grid],
    )
    reports.append(general)

    charge_preserving = VerificationReport("j1_preserves_charge", {"weight_cut2": weight_cut2})
    with _Timer() as timer:
        for mono in basis:
            v = FockState.monomial(mono)
            out = jk_mode_neutral(1, 1).apply(v) + jk_mode_neutral(1, -1).apply(v)
            charge_preserving.cases_run += 1
            charges = {dg(m) for m in out.terms}
            if charges - {dg(mono)}:
                charge_preserving.record(
                    witness=format_state(v), lhs=f"charges {sorted(charges)}", rhs=str(dg(mono))
                )
    charge_preserving.elapsed_ms = timer.ms
    reports.append(charge_preserving)
    return reports


def suite_charged(
    mmax_h: int = 5,
    mmax: int = 3,
    weight_cut2: int = 16,
    lambdas: Sequence[Fraction] = (Fraction(0), Fraction(1, 2), Fraction(1)),
    bs: Sequence[Fraction] = (Fraction(0), Fraction(1, 3)),
) -> list[VerificationReport]:
    cbasis = ch.enumerate_charged_basis(weight_cut2)
    spec = BracketSpec(
        "charged_heisenberg_bracket", "commutator", ch.hA_mode, ch.hA_mode, heisenberg_expected
    )
    hrep = bracket_check(
        spec, square_grid(mmax_h), cbasis, state_of=ch.ChargedState.monomial, render=ch.format_charged_state
    )
    hrep.params.update({"mmax": mmax_h, "weight_cut2": weight_cut2})
    reports = [hrep]
    for lam in lambdas:
        for b in bs:
            family = ch.lA_family(lam, b)
            spec = BracketSpec(
                f"charged_virasoro", "commutator", family.mode, family.mode,
                virasoro_expected(family, vir.central_charge(lam)),
            )
            rep = bracket_check(
                spec, square_grid(mmax), cbasis,
                state_of=ch.ChargedState.monomial, render=ch.format_charged_state,
            )
            rep.params.update({"family": family.name, "c": str(vir.central_charge(lam)), "mmax": mmax})
            reports.append(rep)
    return reports


SUITES: dict[str, Callable[..., list[VerificationReport]]] = {
    "clifford": suite_clifford,
    "heisenberg": suite_heisenberg,
    "sectors": suite_sectors,
    "decomposition": suite_decomposition,
    "virasoro-half": suite_virasoro_half,
    "virasoro-one": suite_virasoro_one,
    "virasoro-lambda": suite_virasoro_lambda,
    "doubling": suite_doubling,
    "eigenvalues": suite_eigenvalues,
    "identities": suite_identities,
    "characters": suite_characters,
    "iso": suite_iso,
    "winf": suite_winf,
    "charged": suite_charged,
}


def run_suite(name: str, **params) -> list[VerificationReport]:
    return SUITES[name](**params)
