"""Symplectic generalized matrix algebras in standard (embedded) form.

A GMA type partitions the block indices into I0 (self-paired blocks
carrying an internal standard form), and I1/I2 (blocks swapped in pairs).
The associated form J_delta assembles J on I0 diagonal blocks and -Id/+Id
on the I1/I2 pairings; the involution is M -> J_delta tau(M)^T
J_delta^(-1) where tau rescales each off-diagonal block by a sign.

Block coefficient modules live inside a polynomial ring modulo a monomial
ideal, so products and span membership reduce to exact monomial
bookkeeping.  The trace/determinant land in Q; the Pfaffian-type law is
computed from MJ_delta when that matrix is alternating and otherwise from
the determinant through the coefficient recursion (the two agree whenever
both apply, since the law of degree d with value 1 at the identity is
unique).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .detlaws import LambdaVector, pfaffian_coeffs_from_lambdas
from .errors import DimensionError, MembershipError, StructureError, SymplawError
from .matrices import RingMatrix, char_poly, lambdas_from_char_poly, mat_det, matrix_rank
from .multipoly import MultiPoly, Ring, fresh_var
from .symplectic import is_alternating, pfaffian, standard_j

# -- quotient ring ------------------------------------------------------


@dataclass(frozen=True)
class QuotientRing:
    """Q[vars] / (monomial ideal); reduction drops divisible terms."""

    vars: tuple
    nil_monomials: tuple  # exponent tuples over `vars`

    def __post_init__(self):
        vs = tuple(self.vars)
        if list(vs) != sorted(vs):
            raise SymplawError(f"ring variables must be sorted: {vs}")
        nils = tuple(tuple(e) for e in self.nil_monomials)
        for e in nils:
            if len(e) != len(vs):
                raise DimensionError("nil monomial exponent length mismatch")
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "nil_monomials", nils)

    def reduce(self, x: Ring) -> Ring:
        if isinstance(x, Fraction):
            return x
        p = x.in_vars(self.vars) if set(x.vars) <= set(self.vars) else None
        if p is None:
            raise MembershipError(f"element uses variables outside the ring: {x.vars}")
        terms = {}
        for exp, coef in p.terms.items():
            if not any(all(e >= n for e, n in zip(exp, nil)) for nil in self.nil_monomials):
                terms[exp] = coef
        return MultiPoly(self.vars, terms)

    def reduce_matrix(self, m: RingMatrix) -> RingMatrix:
        return m.map_entries(self.reduce)

    def variable(self, name: str) -> MultiPoly:
        if name not in self.vars:
            raise MembershipError(f"unknown ring variable {name!r}")
        return MultiPoly.variable(name).in_vars(self.vars)


def _poly_coords(polys: Sequence[MultiPoly], vars_: tuple):
    """Common monomial coordinates for a family of polynomials."""
    monos = sorted({exp for p in polys for exp in p.in_vars(vars_).terms})
    rows = []
    for p in polys:
        terms = p.in_vars(vars_).terms
        rows.append([terms.get(mo, Fraction(0)) for mo in monos])
    return rows


def in_span(p: Ring, basis: Sequence[Ring], ring: QuotientRing) -> bool:
    """Is p a Q-linear combination of the basis elements, inside the quotient?"""
    p = ring.reduce(p if isinstance(p, MultiPoly) else MultiPoly.constant(p, ring.vars))
    if p.is_zero():
        return True
    polys = [ring.reduce(b if isinstance(b, MultiPoly) else MultiPoly.constant(b, ring.vars))
             for b in basis]
    base_rows = _poly_coords(polys + [p], ring.vars)
    without = matrix_rank(base_rows[:-1])
    with_p = matrix_rank(base_rows)
    return with_p == without


# -- GMA type -----------------------------------------------------------


@dataclass(frozen=True)
class GmaType:
    i0: tuple
    i1: tuple
    i2: tuple
    sigma: tuple  # 1-based images: sigma[i-1] is the partner of block i
    dims: tuple

    def __post_init__(self):
        i0, i1, i2 = tuple(self.i0), tuple(self.i1), tuple(self.i2)
        dims = tuple(int(x) for x in self.dims)
        sigma = tuple(int(x) for x in self.sigma)
        r = len(dims)
        object.__setattr__(self, "i0", i0)
        object.__setattr__(self, "i1", i1)
        object.__setattr__(self, "i2", i2)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "sigma", sigma)
        if sorted(i0 + i1 + i2) != list(range(1, r + 1)):
            raise StructureError("I0, I1, I2 must partition {1..r}")
        if len(sigma) != r or sorted(sigma) != list(range(1, r + 1)):
            raise StructureError("sigma must be a permutation of {1..r}")
        for i in range(1, r + 1):
            if sigma[sigma[i - 1] - 1] != i:
                raise StructureError("sigma must be an involution")
            if dims[sigma[i - 1] - 1] != dims[i - 1]:
                raise StructureError("paired blocks must have equal dimension")
        for i in i0:
            if sigma[i - 1] != i:
                raise StructureError("sigma must fix I0 pointwise")
            if dims[i - 1] % 2:
                raise StructureError("I0 block dimensions must be even")
        if sorted(self.apply(i) for i in i1) != sorted(i2):
            raise StructureError("sigma must map I1 onto I2")
        if any(d < 1 for d in dims):
            raise StructureError("block dimensions must be positive")
        if sum(dims) % 2:
            raise StructureError("total dimension must be even")

    @property
    def r(self) -> int:
        return len(self.dims)

    @property
    def total(self) -> int:
        return sum(self.dims)

    def apply(self, i: int) -> int:
        return self.sigma[i - 1]

    def offsets(self) -> list:
        out = [0]
        for d in self.dims:
            out.append(out[-1] + d)
        return out


def build_J_delta(t: GmaType) -> RingMatrix:
    """The block form: J on I0 diagonal blocks, -Id/(+Id) on the I1/I2 pairings."""
    n = t.total
    off = t.offsets()
    rows = [[Fraction(0)] * n for _ in range(n)]

    def put(i, j, block):
        for a in range(t.dims[i - 1]):
            for b in range(t.dims[j - 1]):
                rows[off[i - 1] + a][off[j - 1] + b] = block[a][b]

    for i in range(1, t.r + 1):
        di = t.dims[i - 1]
        if i in t.i0:
            put(i, i, standard_j(di // 2).entries)
        elif i in t.i1:
            put(i, t.apply(i), [[Fraction(-1) if a == b else Fraction(0) for b in range(di)]
                                for a in range(di)])
        else:
            put(i, t.apply(i), [[Fraction(1) if a == b else Fraction(0) for b in range(di)]
                                for a in range(di)])
    return RingMatrix(rows)


# -- GMA spec -----------------------------------------------------------


@dataclass(frozen=True)
class GmaSpec:
    type: GmaType
    ring: QuotientRing
    blocks: Mapping  # (i, j) -> tuple of MultiPoly spanning A_(i,j), i != j
    tau_signs: Mapping  # frozenset({i, j}) -> +-1
    J_delta: RingMatrix = field(init=False, repr=False)

    def __post_init__(self):
        blocks = {}
        for (i, j), basis in dict(self.blocks).items():
            if i == j:
                raise StructureError("diagonal blocks are implicitly Q and cannot be overridden")
            basis = tuple(self.ring.reduce(b) for b in basis)
            basis = tuple(b for b in basis if not b.is_zero())
            if basis:
                blocks[(i, j)] = basis
        signs = {}
        for key, s in dict(self.tau_signs).items():
            pair = frozenset(key)
            if s not in (1, -1):
                raise StructureError(f"tau sign must be +-1, got {s}")
            signs[pair] = int(s)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "tau_signs", signs)
        object.__setattr__(self, "J_delta", build_J_delta(self.type))

    @property
    def n(self) -> int:
        return self.type.total

    @property
    def d(self) -> int:
        return self.type.total // 2

    def span(self, i: int, j: int) -> tuple:
        return self.blocks.get((i, j), ())

    def sign(self, i: int, j: int) -> int:
        if i == j:
            return 1
        return self.tau_signs.get(frozenset((i, j)), 1)

    def block_of_entry(self, row: int, col: int) -> tuple:
        off = self.type.offsets()
        bi = next(k for k in range(1, self.type.r + 1) if off[k - 1] <= row < off[k])
        bj = next(k for k in range(1, self.type.r + 1) if off[k - 1] <= col < off[k])
        return bi, bj

    def check_membership(self, m: RingMatrix):
        if m.rows != self.n or m.cols != self.n:
            raise DimensionError(f"expected {self.n}x{self.n} matrix")
        off = self.type.offsets()
        for i in range(1, self.type.r + 1):
            for j in range(1, self.type.r + 1):
                basis = self.span(i, j)
                for a in range(off[i - 1], off[i]):
                    for b in range(off[j - 1], off[j]):
                        x = m[a, b]
                        if i == j:
                            ok = isinstance(x, Fraction) or self.ring.reduce(x).is_constant()
                        else:
                            ok = in_span(x, basis, self.ring)
                        if not ok:
                            raise MembershipError(
                                f"entry ({a},{b}) = {x} outside the declared span of block ({i},{j})"
                            )


def delta_involution(spec: GmaSpec, m: RingMatrix) -> RingMatrix:
    """M -> J_delta tau(M)^T J_delta^(-1) with tau the per-block sign rescaling."""
    spec.check_membership(m)
    off = spec.type.offsets()
    n = spec.n
    tau_rows = []
    for a in range(n):
        row = []
        for b in range(n):
            i, j = spec.block_of_entry(a, b)
            s = spec.sign(i, j)
            row.append(m[a, b] if s == 1 else -m[a, b])
        tau_rows.append(row)
    tau_m = RingMatrix(tau_rows)
    jd = spec.J_delta
    out = -(jd * tau_m.transpose() * jd)  # J_delta^(-1) = -J_delta
    return spec.ring.reduce_matrix(out)


def validate_standard_gma(spec: GmaSpec) -> dict:
    """Check the standard-GMA axioms; every violation is reported with indices."""
    violations = []
    t = spec.type
    ring = spec.ring

    def spans_equal(b1, b2):
        rows1 = _poly_coords(list(b1) + list(b2), ring.vars) if (b1 or b2) else []
        if not rows1:
            return True
        r_all = matrix_rank(rows1)
        r1 = matrix_rank(rows1[: len(b1)]) if b1 else 0
        r2 = matrix_rank(rows1[len(b1):]) if b2 else 0
        return r_all == r1 == r2

    for i in range(1, t.r + 1):
        for j in range(1, t.r + 1):
            if i == j:
                continue
            si, sj = t.apply(i), t.apply(j)
            if not spans_equal(spec.span(i, j), spec.span(sj, si)):
                violations.append(f"span({i},{j}) != span({sj},{si})")
            if spec.sign(i, j) != spec.sign(si, sj):
                violations.append(f"tau sign of ({i},{j}) differs from ({si},{sj})")
            for k in range(1, t.r + 1):
                target = spec.span(i, k)
                for x in spec.span(i, j):
                    for y in spec.span(j, k) if j != k else (MultiPoly.constant(1, ring.vars),):
                        prod = ring.reduce(x * y)
                        if prod.is_zero():
                            continue
                        if i == k:
                            if not prod.is_constant():
                                violations.append(
                                    f"closure: span({i},{j})*span({j},{k}) leaves Q at block ({i},{i})"
                                )
                        elif not in_span(prod, target, ring):
                            violations.append(
                                f"closure: span({i},{j})*span({j},{k}) not inside span({i},{k})"
                            )
                        if spec.sign(i, j) * spec.sign(j, k) != spec.sign(i, k):
                            violations.append(
                                f"tau signs not multiplicative on nonzero product ({i},{j},{k})"
                            )
    # involution consistency of the form itself
    jd = spec.J_delta
    if jd.transpose() != -jd:
        violations.append("J_delta is not alternating")
    if pfaffian(jd) not in (Fraction(1), Fraction(-1)):
        violations.append("Pf(J_delta) is not a unit sign")
    return {"valid": not violations, "violations": sorted(set(violations))}


# -- trace / determinant / Pfaffian law ---------------------------------


def _constant_or_raise(x: Ring, what: str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if x.is_constant():
        return x.constant_value()
    raise StructureError(f"{what} did not land in Q: {x}")


def gma_trace_det_pf(spec: GmaSpec, m: RingMatrix) -> tuple:
    """(trace, determinant, Pfaffian-law value) of a GMA element.

    The Pfaffian entry is None unless m is fixed by the involution.
    """
    spec.check_membership(m)
    trace = _constant_or_raise(spec.ring.reduce(m.trace()), "GMA trace")
    det = _constant_or_raise(spec.ring.reduce(mat_det(m)), "GMA determinant")
    pf = None
    if delta_involution(spec, m) == m:
        pf = gma_pfaffian(spec, m)
    return trace, det, pf


def gma_pfaffian(spec: GmaSpec, m: RingMatrix) -> Fraction:
    """The degree-d law with square det and value 1 at the identity."""
    if delta_involution(spec, m) != m:
        raise StructureError("Pfaffian law requires a symmetric GMA element")
    mj = spec.ring.reduce_matrix(m * spec.J_delta)
    if is_alternating(mj):
        pf_jd = pfaffian(spec.J_delta)
        return _constant_or_raise(
            spec.ring.reduce(pfaffian(mj)) * pf_jd, "GMA Pfaffian"
        )
    return gma_pf_coeffs(spec, m)[-1]


def gma_pf_coeffs(spec: GmaSpec, m: RingMatrix) -> list:
    """[T_0..T_d] for a symmetric GMA element, from the Lambda recursion."""
    var = fresh_var("t", spec.ring.vars)
    p = char_poly(m, var)
    lams = lambdas_from_char_poly(p, spec.n, var)
    consts = []
    for i, lam in enumerate(lams):
        if isinstance(lam, MultiPoly):
            lam = spec.ring.reduce(lam)
        consts.append(_constant_or_raise(lam, f"Lambda_{i} of a GMA element"))
    lv = LambdaVector(spec.n, consts)
    return list(pfaffian_coeffs_from_lambdas(lv).coeffs)


def gma_chi_p(spec: GmaSpec, m: RingMatrix) -> RingMatrix:
    """chi^P(m, m) = sum (-1)^i T_i m^(d-i): zero iff the Pfaffian CH identity holds at m."""
    if delta_involution(spec, m) != m:
        raise StructureError("chi^P is evaluated at symmetric elements")
    coeffs = gma_pf_coeffs(spec, m)
    d = spec.d
    acc = RingMatrix.zeros(spec.n)
    power = RingMatrix.identity(spec.n)
    powers = [power]
    for _ in range(d):
        power = spec.ring.reduce_matrix(power * m)
        powers.append(power)
    for i, c in enumerate(coeffs):
        term = powers[d - i] * c
        acc = acc + term if i % 2 == 0 else acc - term
    return spec.ring.reduce_matrix(acc)


def check_sch_condition(spec: GmaSpec) -> tuple:
    """Test x* = -x for every spanning x of the I1/I2 pairing blocks.

    Returns (True, None) or (False, (i, sigma(i), witness_matrix)).
    """
    t = spec.type
    for i in sorted(t.i1 + t.i2):
        j = t.apply(i)
        for x in spec.span(i, j):
            m = _embed_at(spec, i, j, x)
            if delta_involution(spec, m) != -m:
                return False, (i, j, m)
    return True, None


def _embed_at(spec: GmaSpec, i: int, j: int, x: MultiPoly) -> RingMatrix:
    off = spec.type.offsets()
    rows = [[Fraction(0)] * spec.n for _ in range(spec.n)]
    rows[off[i - 1]][off[j - 1]] = x
    return RingMatrix(rows)


# -- random elements and kernel probes ----------------------------------


def random_gma_element(spec: GmaSpec, rng: random.Random, magnitude: int = 4) -> RingMatrix:
    off = spec.type.offsets()
    rows = [[Fraction(0)] * spec.n for _ in range(spec.n)]
    for i in range(1, spec.type.r + 1):
        for j in range(1, spec.type.r + 1):
            basis = None if i == j else spec.span(i, j)
            for a in range(off[i - 1], off[i]):
                for b in range(off[j - 1], off[j]):
                    if i == j:
                        rows[a][b] = Fraction(rng.randint(-magnitude, magnitude))
                    elif basis:
                        acc: Ring = Fraction(0)
                        for p in basis:
                            acc = acc + Fraction(rng.randint(-magnitude, magnitude)) * p
                        rows[a][b] = acc
    return spec.ring.reduce_matrix(RingMatrix(rows))


def random_symmetric_gma_element(spec: GmaSpec, rng: random.Random, magnitude: int = 4) -> RingMatrix:
    x = random_gma_element(spec, rng, magnitude)
    return spec.ring.reduce_matrix(x + delta_involution(spec, x))


def kernel_probe(spec: GmaSpec, witness: RingMatrix, trials: int, seed: int) -> bool:
    """D(1 + witness * s) = 1 for sampled s: the witness behaves as a kernel element."""
    rng = random.Random(seed)
    ident = RingMatrix.identity(spec.n)
    for _ in range(trials):
        s = random_gma_element(spec, rng)
        probe = spec.ring.reduce_matrix(ident + witness * s)
        if _constant_or_raise(spec.ring.reduce(mat_det(probe)), "kernel probe") != 1:
            return False
    return True


# -- fixtures ------------------------------------------------------------


def standard_fixture() -> GmaSpec:
    """Valid standard GMA: one I0 block of size 2 plus an I1/I2 pair, all tau signs +1."""
    t = GmaType(i0=(1,), i1=(2,), i2=(3,), sigma=(1, 3, 2), dims=(2, 1, 1))
    ring = QuotientRing(("u", "v"), ((2, 0), (0, 2), (1, 1)))
    u, v = ring.variable("u"), ring.variable("v")
    blocks = {(1, 2): (u,), (3, 1): (u,), (2, 1): (v,), (1, 3): (v,)}
    signs = {frozenset((1, 2)): 1, frozenset((1, 3)): 1, frozenset((2, 3)): 1}
    return GmaSpec(t, ring, blocks, signs)


def counterexample_fixture() -> GmaSpec:
    """tau sign -1 on the pairing block: Cayley-Hamilton for D but not for P."""
    t = GmaType(i0=(), i1=(1,), i2=(2,), sigma=(2, 1), dims=(1, 1))
    ring = QuotientRing(("u", "v"), ((2, 0), (0, 2), (1, 1)))
    u, v = ring.variable("u"), ring.variable("v")
    blocks = {(1, 2): (u,), (2, 1): (v,)}
    signs = {frozenset((1, 2)): -1}
    return GmaSpec(t, ring, blocks, signs)
