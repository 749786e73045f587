import random
from fractions import Fraction

import pytest

from symplaw.errors import MembershipError, StructureError
from symplaw.gma import (
    GmaSpec,
    GmaType,
    QuotientRing,
    build_J_delta,
    check_sch_condition,
    counterexample_fixture,
    delta_involution,
    gma_chi_p,
    gma_pfaffian,
    gma_trace_det_pf,
    in_span,
    kernel_probe,
    random_gma_element,
    random_symmetric_gma_element,
    standard_fixture,
    validate_standard_gma,
)
from symplaw.matrices import RingMatrix, mat_det
from symplaw.multipoly import MultiPoly
from symplaw.symplectic import is_alternating, pfaffian


def test_gma_type_validation():
    with pytest.raises(StructureError):
        GmaType(i0=(1,), i1=(), i2=(), sigma=(1,), dims=(3,))  # odd I0 block
    with pytest.raises(StructureError):
        GmaType(i0=(), i1=(1,), i2=(2,), sigma=(1, 2), dims=(1, 1))  # sigma fixes I1
    with pytest.raises(StructureError):
        GmaType(i0=(), i1=(1,), i2=(2,), sigma=(2, 1), dims=(1, 2))  # unequal pair dims


def test_build_j_delta_hand_cases():
    t = GmaType(i0=(1,), i1=(), i2=(), sigma=(1,), dims=(2,))
    assert build_J_delta(t) == RingMatrix([[0, 1], [-1, 0]])

    t = GmaType(i0=(), i1=(1,), i2=(2,), sigma=(2, 1), dims=(1, 1))
    assert build_J_delta(t) == RingMatrix([[0, -1], [1, 0]])

    t = GmaType(i0=(1,), i1=(2,), i2=(3,), sigma=(1, 3, 2), dims=(2, 1, 1))
    expected = RingMatrix(
        [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    )
    assert build_J_delta(t) == expected


def test_j_delta_alternating_unit_pfaffian():
    types = [
        GmaType(i0=(1,), i1=(), i2=(), sigma=(1,), dims=(4,)),
        GmaType(i0=(1, 2), i1=(), i2=(), sigma=(1, 2), dims=(2, 2)),
        GmaType(i0=(), i1=(1,), i2=(2,), sigma=(2, 1), dims=(2, 2)),
        GmaType(i0=(1,), i1=(2,), i2=(3,), sigma=(1, 3, 2), dims=(2, 2, 2)),
        GmaType(i0=(1,), i1=(), i2=(), sigma=(1,), dims=(8,)),
        GmaType(i0=(1, 4), i1=(2,), i2=(3,), sigma=(1, 3, 2, 4), dims=(4, 1, 1, 2)),
        GmaType(i0=(), i1=(1, 2), i2=(3, 4), sigma=(3, 4, 1, 2), dims=(2, 2, 2, 2)),
    ]
    for t in types:
        jd = build_J_delta(t)
        assert jd.rows == t.total <= 8
        assert is_alternating(jd)
        assert pfaffian(jd) in (Fraction(1), Fraction(-1))


def test_quotient_ring_reduction_and_span():
    ring = QuotientRing(("u", "v"), ((2, 0), (1, 1)))
    u, v = ring.variable("u"), ring.variable("v")
    assert ring.reduce(u * u).is_zero()
    assert ring.reduce(u * v).is_zero()
    assert ring.reduce(v * v) == v * v
    assert in_span(2 * u, (u,), ring)
    assert not in_span(v, (u,), ring)
    assert in_span(u * u, (v,), ring)  # reduces to zero


def test_delta_involution_sign_cases():
    # epsilon = +1: the off-diagonal slot is antisymmetric
    spec = GmaSpec(
        GmaType(i0=(), i1=(1,), i2=(2,), sigma=(2, 1), dims=(1, 1)),
        QuotientRing(("u", "v"), ((2, 0), (0, 2), (1, 1))),
        {(1, 2): (MultiPoly.variable("u").in_vars(("u", "v")),),
         (2, 1): (MultiPoly.variable("v").in_vars(("u", "v")),)},
        {frozenset((1, 2)): 1},
    )
    u = spec.ring.variable("u")
    m = RingMatrix([[Fraction(0), u], [Fraction(0), Fraction(0)]])
    assert delta_involution(spec, m) == -m

    ce = counterexample_fixture()
    u = ce.ring.variable("u")
    m = RingMatrix([[Fraction(0), u], [Fraction(0), Fraction(0)]])
    assert delta_involution(ce, m) == m  # the symmetric slot of the counterexample


def test_delta_involution_is_involutive_antihom():
    rng = random.Random(51)
    for spec in (standard_fixture(), counterexample_fixture()):
        for _ in range(10):
            x = random_gma_element(spec, rng)
            y = random_gma_element(spec, rng)
            assert delta_involution(spec, delta_involution(spec, x)) == x
            lhs = delta_involution(spec, spec.ring.reduce_matrix(x * y))
            rhs = spec.ring.reduce_matrix(
                delta_involution(spec, y) * delta_involution(spec, x)
            )
            assert lhs == rhs


def test_membership_enforced():
    spec = standard_fixture()
    bad = RingMatrix.identity(4).map_entries(lambda x: x)
    rows = [list(r) for r in bad.entries]
    rows[0][3] = spec.ring.variable("u")  # block (1,3) span is Q*v, not Q*u
    with pytest.raises(MembershipError):
        delta_involution(spec, RingMatrix(rows))


def test_validate_standard_fixture():
    report = validate_standard_gma(standard_fixture())
    assert report["valid"], report
    report = validate_standard_gma(counterexample_fixture())
    assert report["valid"], report


def test_validate_detects_closure_violation():
    # Q[u] with no relation u^2 = 0: span(1,2)*span(2,1) escapes Q
    ring = QuotientRing(("u",), ())
    u = ring.variable("u")
    spec = GmaSpec(
        GmaType(i0=(), i1=(1,), i2=(2,), sigma=(2, 1), dims=(1, 1)),
        ring,
        {(1, 2): (u,), (2, 1): (u,)},
        {frozenset((1, 2)): 1},
    )
    report = validate_standard_gma(spec)
    assert not report["valid"]
    assert any("closure" in v for v in report["violations"])

    # adding u^2 = 0 fixes it
    ring2 = QuotientRing(("u",), ((2,),))
    u2 = ring2.variable("u")
    spec2 = GmaSpec(spec.type, ring2, {(1, 2): (u2,), (2, 1): (u2,)}, {frozenset((1, 2)): 1})
    assert validate_standard_gma(spec2)["valid"]


def test_trace_det_pf_values():
    ce = counterexample_fixture()
    m = RingMatrix([[Fraction(3), Fraction(0)], [Fraction(0), Fraction(5)]])
    tr, det, pf = gma_trace_det_pf(ce, m)
    assert (tr, det) == (8, 15)
    assert pf is None  # diag(3, 5) is not symmetric here: involution swaps a and d
    sym = RingMatrix([[Fraction(3), Fraction(0)], [Fraction(0), Fraction(3)]])
    tr, det, pf = gma_trace_det_pf(ce, sym)
    assert (tr, det, pf) == (6, 9, 3)

    spec = standard_fixture()
    tr, det, pf = gma_trace_det_pf(spec, RingMatrix.identity(4))
    assert (tr, det, pf) == (4, 1, 1)


def test_trace_commutes():
    rng = random.Random(52)
    for spec in (standard_fixture(), counterexample_fixture()):
        for _ in range(25):
            x = random_gma_element(spec, rng)
            y = random_gma_element(spec, rng)
            xy = spec.ring.reduce_matrix(x * y)
            yx = spec.ring.reduce_matrix(y * x)
            assert spec.ring.reduce(xy.trace()) == spec.ring.reduce(yx.trace())


def test_pfaffian_routes_agree_when_alternating():
    # For all-plus tau signs the embedded MJ_delta is alternating, so the
    # direct Pfaffian and the recursion from D must agree.
    from symplaw.gma import gma_pf_coeffs

    rng = random.Random(53)
    spec = standard_fixture()
    for _ in range(20):
        m = random_symmetric_gma_element(spec, rng)
        mj = spec.ring.reduce_matrix(m * spec.J_delta)
        assert is_alternating(mj)
        direct = spec.ring.reduce(pfaffian(mj)) * pfaffian(spec.J_delta)
        assert direct == gma_pf_coeffs(spec, m)[-1]
        assert gma_pfaffian(spec, m) == direct


def test_pfaffian_squares_to_det_on_symmetric():
    rng = random.Random(54)
    for spec in (standard_fixture(), counterexample_fixture()):
        for _ in range(20):
            m = random_symmetric_gma_element(spec, rng)
            _, det, pf = gma_trace_det_pf(spec, m)
            assert pf is not None and pf * pf == det


def test_sch_condition():
    ok, witness = check_sch_condition(standard_fixture())
    assert ok and witness is None
    ok, witness = check_sch_condition(counterexample_fixture())
    assert not ok
    i, j, m = witness
    assert (i, j) == (1, 2)

    # pure I0 type: vacuously true
    pure = GmaSpec(
        GmaType(i0=(1,), i1=(), i2=(), sigma=(1,), dims=(2,)),
        QuotientRing((), ()),
        {},
        {},
    )
    ok, _ = check_sch_condition(pure)
    assert ok


def test_chi_p_vanishes_when_sch_holds():
    rng = random.Random(55)
    spec = standard_fixture()
    for _ in range(15):
        m = random_symmetric_gma_element(spec, rng)
        assert gma_chi_p(spec, m).is_zero()


def test_chi_p_nonzero_on_counterexample_and_kernel_probe():
    ce = counterexample_fixture()
    _, _, witness = check_sch_condition(ce)[1]
    sym_w = ce.ring.reduce_matrix(witness)  # already symmetric for epsilon = -1
    chi = gma_chi_p(ce, sym_w)
    assert not chi.is_zero()
    # chi^P(x, x) = x itself here; it must act as a kernel element of D
    assert kernel_probe(ce, chi, trials=25, seed=56)
    assert mat_det(RingMatrix.identity(2) + chi) == 1


def test_chi_p_nonzero_on_random_symmetric_counterexample_elements():
    rng = random.Random(57)
    ce = counterexample_fixture()
    found_nonzero = False
    for _ in range(20):
        m = random_symmetric_gma_element(ce, rng)
        chi = gma_chi_p(ce, m)
        if not chi.is_zero():
            found_nonzero = True
            assert kernel_probe(ce, chi, trials=10, seed=58)
    assert found_nonzero
