"""Named property suites: the checks behind the CLI and the acceptance run.

Every suite is deterministic in (d, trials, seed) and returns a list of
check dicts {"name", "pass", ...}; witnesses for failures are included as
strings.  All equalities are exact, with no tolerances anywhere.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import gma, invariants, pseudochar
from .detlaws import (
    GroupAlgebraElement,
    InvolutiveRepresentation,
    chi_alpha,
    closed_form_check_d4,
    eval_det_law,
    eval_pf_law,
    lambda_vector_of_matrix,
    newton_lambdas_from_traces,
    pfaffian_coeffs_from_lambdas,
    star,
)
from .errors import SymplawError
from .invariants import InvariantFunction, enumerate_trace_words, eval_invariant
from .matrices import RingMatrix, mat_det
from .symplectic import (
    SymplecticContext,
    matrix_poly_value,
    pfaffian,
    pfaffian_coeffs_of_matrix,
    power_traces,
    random_alternating,
    random_j_symmetric,
    random_matrix,
    reduced_pfaffian,
    sample_similitude,
    sample_symplectic,
    symplectic_transpose,
)
from .words import random_word

SUITE_NAMES = ("pfaffian", "det-law", "invariants", "gma", "pseudochar", "all")


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    d: int = 2
    trials: int = 100
    seed: int = 0
    input_paths: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.suite not in SUITE_NAMES:
            raise SymplawError(f"unknown suite {self.suite!r}; choose from {SUITE_NAMES}")
        if self.trials < 1:
            raise SymplawError("trials must be >= 1")
        if self.d < 1:
            raise SymplawError("d must be >= 1")


def _check(name: str, ok: bool, **extra) -> dict:
    out = {"name": name, "pass": bool(ok)}
    out.update(extra)
    return out


def _spread(trials: int, buckets: int) -> list:
    base, rem = divmod(trials, buckets)
    return [base + (1 if i < rem else 0) for i in range(buckets)]


# -- pfaffian suite ------------------------------------------------------


def suite_pfaffian(d: int, trials: int, seed: int) -> list:
    rng = random.Random(seed)
    checks = []

    sizes = [2 * k for k in range(1, d + 1)] or [2]
    bad = None
    for size, count in zip(sizes, _spread(trials, len(sizes))):
        for _ in range(count):
            a = random_alternating(size, rng)
            if pfaffian(a) ** 2 != mat_det(a):
                bad = f"size {size}: {a}"
                break
    checks.append(_check("pfaffian_squared_equals_det", bad is None, witness=bad))

    ctx = SymplecticContext(d)
    ok = True
    for _ in range(min(trials, 200)):
        m = random_matrix(2 * d, rng)
        if symplectic_transpose(ctx, symplectic_transpose(ctx, m)) != m:
            ok = False
            break
    checks.append(_check("symplectic_transpose_involutive", ok))

    ok = True
    for _ in range(min(trials, 50)):
        n = rng.choice([s for s in sizes if s <= 6] or [2])
        a = random_alternating(n, rng)
        g = random_matrix(n, rng)
        if pfaffian(g * a * g.transpose()) != mat_det(g) * pfaffian(a):
            ok = False
            break
    checks.append(_check("pfaffian_conjugation_covariance", ok))

    ok = all(
        reduced_pfaffian(SymplecticContext(k), RingMatrix.identity(2 * k)) == 1
        for k in range(1, max(d, 4) + 1)
    )
    checks.append(_check("reduced_pfaffian_normalization", ok))

    bad = None
    for dd in range(1, min(d, 3) + 1):
        cdd = SymplecticContext(dd)
        for _ in range(_spread(min(trials, 60), min(d, 3))[dd - 1]):
            m = random_j_symmetric(cdd, rng, 3)
            coeffs = pfaffian_coeffs_of_matrix(cdd, m)
            if not matrix_poly_value(coeffs, m).is_zero():
                bad = f"d={dd}: {m}"
                break
    checks.append(_check("pfaffian_cayley_hamilton", bad is None, witness=bad))

    bad = None
    for dd in range(1, min(d, 3) + 1):
        cdd = SymplecticContext(dd)
        for _ in range(_spread(min(trials, 60), min(d, 3))[dd - 1]):
            m = random_j_symmetric(cdd, rng, 3)
            lv = lambda_vector_of_matrix(m)
            if pfaffian_coeffs_from_lambdas(lv).coeffs != tuple(
                pfaffian_coeffs_of_matrix(cdd, m)
            ):
                bad = f"d={dd}: {m}"
                break
    checks.append(_check("recursion_matches_pfaffian_char_poly", bad is None, witness=bad))

    ok = True
    for _ in range(min(trials, 50)):
        dd = rng.randint(1, min(d, 2))
        cdd = SymplecticContext(dd)
        m = random_j_symmetric(cdd, rng, 3)
        x = random_matrix(2 * dd, rng, 3)
        if reduced_pfaffian(cdd, x * m * symplectic_transpose(cdd, x)) != mat_det(
            x
        ) * reduced_pfaffian(cdd, m):
            ok = False
            break
    checks.append(_check("transfer_identity", ok))

    ok = True
    for _ in range(min(trials, 50)):
        dd = rng.randint(1, min(d, 2))
        cdd = SymplecticContext(dd)
        m = random_j_symmetric(cdd, rng, 3)
        x = RingMatrix.scalar(2 * dd, Fraction(rng.randint(-3, 3))) + m * Fraction(
            rng.randint(-3, 3)
        )
        y = RingMatrix.scalar(2 * dd, Fraction(rng.randint(-3, 3))) + (m * m) * Fraction(
            rng.randint(-3, 3)
        )
        if reduced_pfaffian(cdd, x * y) != reduced_pfaffian(cdd, x) * reduced_pfaffian(cdd, y):
            ok = False
            break
    checks.append(_check("commuting_multiplicativity", ok))
    return checks


# -- determinant-law suite -------------------------------------------------


def suite_det_law(d: int, trials: int, seed: int) -> list:
    rng = random.Random(seed)
    checks = []

    ok = True
    for _ in range(min(trials, 50)):
        m = random_matrix(2 * d, rng, 4)
        lv = newton_lambdas_from_traces(power_traces(m, 2 * d), 2 * d)
        if lv.coeffs != lambda_vector_of_matrix(m).coeffs:
            ok = False
            break
    checks.append(_check("newton_matches_char_poly", ok))

    ok = True
    for dd in range(1, 5):
        lv = newton_lambdas_from_traces([Fraction(2 * dd)] * (2 * dd), 2 * dd)
        ts = pfaffian_coeffs_from_lambdas(lv)
        if ts.coeffs != tuple(math.comb(dd, i) for i in range(dd + 1)):
            ok = False
    checks.append(_check("binomial_values_at_identity", ok))

    ctx4 = SymplecticContext(4)
    bad = None
    for _ in range(min(trials, 50)):
        m = random_j_symmetric(ctx4, rng, 2)
        lv = lambda_vector_of_matrix(m)
        expected = pfaffian_coeffs_from_lambdas(lv).coeffs[4]
        a, b = closed_form_check_d4(lv, power_traces(m, 4))
        if a != expected or b != expected:
            bad = str(m)
            break
    checks.append(_check("d4_closed_forms", bad is None, witness=bad))

    ctx1 = SymplecticContext(1)
    ok = True
    for trial in range(min(trials, 100)):
        rep = InvolutiveRepresentation.from_images(
            [sample_symplectic(ctx1, seed * 31 + trial),
             sample_symplectic(ctx1, seed * 37 + trial + 1)]
        )
        w = random_word(rng, 2, 4)
        if not w:
            continue
        from .words import word_inv, word_mul

        t = lambda word: rep.rho_word(word).trace()  # noqa: E731
        g, gi = w, word_inv(w)
        g2 = word_mul(w, w)
        lhs = t(g) ** 2 + 2 * t(g) * t(gi) + t(gi) ** 2 - 2 * t(g2) - 2 * t(word_inv(g2)) - 8
        if lhs != 0 or 4 * t(g) ** 2 - 4 * t(g2) - 8 != 0:
            ok = False
            break
    checks.append(_check("sl2_trace_identities", ok))

    ctx = SymplecticContext(min(d, 2))
    ok = True
    sym_ok = True
    for trial in range(min(trials, 30)):
        rep = InvolutiveRepresentation.from_images(
            [sample_symplectic(ctx, seed * 41 + trial),
             sample_symplectic(ctx, seed * 43 + trial + 1)]
        )
        xs = []
        for _ in range(2):
            terms = {
                random_word(rng, 2, 3): Fraction(rng.randint(-3, 3), rng.randint(1, 2))
                for _ in range(3)
            }
            xs.append(GroupAlgebraElement(terms))
        x, y = xs
        if eval_det_law(rep, x * y) != eval_det_law(rep, x) * eval_det_law(rep, y):
            ok = False
        if eval_det_law(rep, star(rep, x)) != eval_det_law(rep, x):
            ok = False
        sym = x + star(rep, x)
        p = eval_pf_law(rep, sym)
        if p * p != eval_det_law(rep, sym):
            sym_ok = False
    checks.append(_check("det_law_multiplicative_star_invariant", ok))
    checks.append(_check("pf_law_squares_to_det", sym_ok))

    ok = True
    for trial in range(min(trials, 10)):
        dd = min(d, 2)
        cdd = SymplecticContext(dd)
        rep = InvolutiveRepresentation.from_images(
            [sample_symplectic(cdd, seed * 47 + trial) for _ in range(2)]
        )
        g1 = GroupAlgebraElement.from_word(((1, 1),))
        r1 = g1 + star(rep, g1)
        if not chi_alpha(rep, [r1], [dd]).is_zero():
            ok = False
            break
    checks.append(_check("chi_alpha_vanishes_on_matrix_models", ok))
    return checks


# -- invariants suite -------------------------------------------------------


def suite_invariants(d: int, trials: int, seed: int) -> list:
    rng = random.Random(seed)
    checks = []

    words = enumerate_trace_words(1, 2)
    checks.append(
        _check(
            "enumeration_desk_counts",
            [str(w) for w in words] == ["1", "1 1", "1 1*"]
            and len(enumerate_trace_words(2, 1)) == 2,
        )
    )

    gens = enumerate_trace_words(2, 3)
    bad = None
    conj_counts = _spread(min(trials, 200), 2)
    for dd, count in zip((1, 2) if d >= 2 else (1, 1), conj_counts):
        cdd = SymplecticContext(dd)
        for k in range(count):
            g = sample_symplectic(cdd, seed * 53 + 100 * dd + k)
            gi = g.inverse()
            mats = [random_matrix(2 * dd, rng, 3) for _ in range(2)]
            conj = [g * m * gi for m in mats]
            for w in gens:
                for i in range(1, 2 * dd + 1):
                    f = InvariantFunction.sigma(i, w, arity=2)
                    if eval_invariant(f, conj) != eval_invariant(f, mats):
                        bad = f"d={dd} f=sigma_{i}({w})"
                        break
                if bad:
                    break
            if bad:
                break
    checks.append(_check("generators_invariant_under_conjugation", bad is None, witness=bad))

    ok = True
    for k in range(min(trials, 20)):
        cdd = SymplecticContext(min(d, 2))
        h = sample_similitude(cdd, seed * 59 + k, factor=Fraction(k % 5 + 2))
        g = sample_symplectic(cdd, seed * 61 + k)
        from .symplectic import similitude

        if similitude(cdd, g * h * g.inverse()) != similitude(cdd, h):
            ok = False
            break
    checks.append(_check("similitude_conjugation_invariant", ok))

    pairs = [(d, m) for m in range(1, 4 if d == 1 else 3)]
    for dd, m in pairs:
        oracle = invariants.multilinear_invariant_dim(dd, m)
        span = invariants.trace_word_span_dim(dd, m, seed=seed)
        checks.append(
            _check(
                f"fft_desk_scale_d{dd}_m{m}",
                span == oracle,
                d=dd,
                m=m,
                oracle_dim=oracle,
                span_dim=span,
                match=span == oracle,
            )
        )
    return checks


# -- GMA suite ---------------------------------------------------------------


def _gma_checks(spec, label: str, expect_sch: bool, trials: int, seed: int) -> list:
    rng = random.Random(seed)
    checks = []
    report = gma.validate_standard_gma(spec)
    checks.append(_check(f"{label}_valid", report["valid"], violations=report["violations"]))

    sch, witness = gma.check_sch_condition(spec)
    checks.append(_check(f"{label}_sch_condition", sch is expect_sch, sch_condition=sch))

    if sch:
        ok = True
        for _ in range(min(trials, 50)):
            m = gma.random_symmetric_gma_element(spec, rng)
            if not gma.gma_chi_p(spec, m).is_zero():
                ok = False
                break
        checks.append(_check(f"{label}_chi_p_vanishes", ok))
    else:
        i, j, wit = witness
        chi = gma.gma_chi_p(spec, wit)
        nonzero = not chi.is_zero()
        checks.append(
            _check(
                f"{label}_chi_p_witness_nonzero",
                nonzero,
                witness_block=[i, j],
            )
        )
        in_kernel = nonzero and gma.kernel_probe(spec, chi, min(trials, 25), seed + 1)
        checks.append(_check(f"{label}_witness_in_kernel_of_D", in_kernel))

    ok = True
    for _ in range(min(trials, 50)):
        x = gma.random_gma_element(spec, rng)
        y = gma.random_gma_element(spec, rng)
        xy = spec.ring.reduce_matrix(x * y)
        yx = spec.ring.reduce_matrix(y * x)
        if spec.ring.reduce(xy.trace()) != spec.ring.reduce(yx.trace()):
            ok = False
            break
    checks.append(_check(f"{label}_trace_commutes", ok))

    ok = True
    for _ in range(min(trials, 50)):
        m = gma.random_symmetric_gma_element(spec, rng)
        _, det, pf = gma.gma_trace_det_pf(spec, m)
        if pf is None or pf * pf != det:
            ok = False
            break
    checks.append(_check(f"{label}_pf_squares_to_det", ok))
    return checks


def suite_gma(trials: int, seed: int, spec=None) -> list:
    if spec is not None:
        sch, _ = gma.check_sch_condition(spec)
        return _gma_checks(spec, "input_spec", sch, trials, seed)
    checks = []
    checks.extend(_gma_checks(gma.standard_fixture(), "standard", True, trials, seed))
    checks.extend(_gma_checks(gma.counterexample_fixture(), "counterexample", False, trials, seed))
    return checks


# -- pseudocharacter suite -----------------------------------------------------


def suite_pseudochar(d: int, trials: int, seed: int) -> list:
    rng = random.Random(seed)
    checks = []
    reps = {}
    for dd in sorted({1, min(d, 2)}):
        ctx = SymplecticContext(dd)
        reps[f"Sp_{2 * dd}"] = InvolutiveRepresentation.from_images(
            [sample_symplectic(ctx, seed * 67 + dd), sample_symplectic(ctx, seed * 71 + dd)],
            kind="Sp",
        )
        reps[f"GSp_{2 * dd}"] = InvolutiveRepresentation.from_images(
            [
                sample_similitude(ctx, seed * 73 + dd, factor=Fraction(2)),
                sample_similitude(ctx, seed * 79 + dd, factor=Fraction(3, 2)),
            ],
            kind="GSp",
        )
    per = max(1, trials // max(len(reps), 1))
    for offset, (name, rep) in enumerate(sorted(reps.items())):
        pc = pseudochar.Pseudocharacter(rep)
        report = pseudochar.verify_axioms(pc, per, seed + offset)
        checks.append(
            _check(f"axioms_{name}", report["passed"], failures=report["failures"][:1])
        )

    pc = pseudochar.Pseudocharacter(reps[f"Sp_{2 * min(d, 2)}"])
    clean = pseudochar.verify_axioms(pc, min(trials, 25), seed)
    detected = False
    if clean["passed"] and pc.cache:
        key = sorted(pc.cache, key=repr)[0]
        pc.cache[key] = pc.cache[key] + 1
        detected = not pseudochar.verify_axioms(pc, min(trials, 25), seed)["passed"]
    checks.append(_check("corrupted_cache_detected", clean["passed"] and detected))

    ok_agree = True
    ok_square = True
    ok_one = True
    for name, rep in reps.items():
        pc = pseudochar.Pseudocharacter(rep)
        d_law, p_law = pseudochar.comparison_to_det_law(pc)
        if p_law(GroupAlgebraElement.one()) != 1:
            ok_one = False
        for _ in range(max(1, min(trials, 100) // max(len(reps), 1))):
            terms = {
                random_word(rng, 2, 3): Fraction(rng.randint(-3, 3), rng.randint(1, 2))
                for _ in range(3)
            }
            x = GroupAlgebraElement(terms)
            if d_law(x) != eval_det_law(rep, x):
                ok_agree = False
            sym = x + star(rep, x)
            p = p_law(sym)
            if p != eval_pf_law(rep, sym):
                ok_agree = False
            if p * p != d_law(sym):
                ok_square = False
    checks.append(_check("comparison_agrees_with_det_laws", ok_agree))
    checks.append(_check("comparison_p_squared_equals_d", ok_square))
    checks.append(_check("comparison_p_at_identity", ok_one))

    gsp = pseudochar.Pseudocharacter(reps[f"GSp_{2 * min(d, 2)}"])
    ok = True
    for _ in range(min(trials, 25)):
        a = random_word(rng, 2, 3)
        b = random_word(rng, 2, 3)
        from .words import word_mul

        lhs = pseudochar.similitude_character(gsp, word_mul(a, b))
        rhs = pseudochar.similitude_character(gsp, a) * pseudochar.similitude_character(gsp, b)
        if lhs != rhs:
            ok = False
            break
    checks.append(_check("similitude_recovery_multiplicative", ok))
    return checks


# -- probe hook for the weak-law conjecture ------------------------------------


def weak_law_counterexample_probe(trials: int, seed: int) -> dict:
    """Randomized search for a weak law violating CH(P) <= ker(D); desk scale.

    Samples symmetric elements of the two GMA fixtures and kernel-probes
    their chi^P values.  No violation is expected; any hit is returned as a
    witness.
    """
    rng = random.Random(seed)
    for spec in (gma.standard_fixture(), gma.counterexample_fixture()):
        for k in range(trials):
            m = gma.random_symmetric_gma_element(spec, rng)
            chi = gma.gma_chi_p(spec, m)
            if chi.is_zero():
                continue
            if not gma.kernel_probe(spec, chi, 10, seed + k):
                return {"found": True, "witness": str(chi)}
    return {"found": False, "witness": None}


# -- dispatch -------------------------------------------------------------------


def run_suite(cfg: SuiteConfig, gma_spec=None) -> dict:
    checks: list = []
    if cfg.suite in ("pfaffian", "all"):
        checks.extend(suite_pfaffian(cfg.d, cfg.trials, cfg.seed))
    if cfg.suite in ("det-law", "all"):
        checks.extend(suite_det_law(cfg.d, cfg.trials, cfg.seed))
    if cfg.suite in ("invariants", "all"):
        checks.extend(suite_invariants(cfg.d, cfg.trials, cfg.seed))
    if cfg.suite in ("gma", "all"):
        checks.extend(suite_gma(cfg.trials, cfg.seed, gma_spec))
    if cfg.suite in ("pseudochar", "all"):
        checks.extend(suite_pseudochar(cfg.d, cfg.trials, cfg.seed))
    return {
        "suite": cfg.suite,
        "d": cfg.d,
        "trials": cfg.trials,
        "seed": cfg.seed,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }
