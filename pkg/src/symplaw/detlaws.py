"""Determinant-law and Pfaffian-law coefficient calculus.

Group-algebra elements over a free group carry the involution
w* = lambda(w) w^(-1); a representation into GSp_2d(Q) evaluates the
determinant law D = det(rho(.)) and the Pfaffian law P = reduced
Pfaffian of rho(.) on symmetric elements.  The coefficient vectors
(Lambda_i from D, T_i from P) are tied by the convolution recursion
Lambda_i = sum_j T_j T_(i-j), which determines P from D whenever 2 is
invertible; that recursion is also what extends P to non-symmetric
arguments and what feeds the polarized Cayley-Hamilton forms chi_alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    DimensionError,
    GeneratorError,
    SpectrumError,
    StructureError,
    SymplawError,
)
from .matrices import RingMatrix, char_poly, lambdas_from_char_poly, mat_det
from .multipoly import MultiPoly, Ring, fresh_var
from .symplectic import SymplecticContext, reduced_pfaffian, similitude
from .words import Word, format_word, max_generator, word_inv, word_mul

# -- group algebra ----------------------------------------------------


def _coerce_coef(c) -> Ring:
    if isinstance(c, (Fraction, MultiPoly)):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be exact: {c!r}")


def _coef_is_zero(c: Ring) -> bool:
    return c.is_zero() if isinstance(c, MultiPoly) else c == 0


class GroupAlgebraElement:
    """Finite linear combination of reduced free-group words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Ring]):
        clean = {}
        for w, c in terms.items():
            c = _coerce_coef(c)
            if not _coef_is_zero(c):
                clean[tuple(w)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GroupAlgebraElement is immutable")

    @staticmethod
    def from_word(w: Word, coef=1) -> "GroupAlgebraElement":
        return GroupAlgebraElement({w: coef})

    @staticmethod
    def one(coef=1) -> "GroupAlgebraElement":
        return GroupAlgebraElement({(): coef})

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return GroupAlgebraElement(terms)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def scale(self, c) -> "GroupAlgebraElement":
        c = _coerce_coef(c)
        return GroupAlgebraElement({w: c * x for w, x in self.terms.items()})

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        terms: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = word_mul(w1, w2)
                terms[w] = terms.get(w, Fraction(0)) + c1 * c2
        return GroupAlgebraElement(terms)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        z = Fraction(0)
        return all(self.terms.get(k, z) == other.terms.get(k, z) for k in keys)

    def __hash__(self):
        return hash(frozenset(self.terms))

    def max_generator(self) -> int:
        return max((max_generator(w) for w in self.terms), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = [f"({c})*{format_word(w)}" for w, c in sorted(self.terms.items())]
        return " + ".join(parts)

    __repr__ = __str__


# -- representations --------------------------------------------------


@dataclass(frozen=True)
class InvolutiveRepresentation:
    """Generator images in GSp_2d(Q) together with their similitude factors."""

    ctx: SymplecticContext
    generator_images: tuple
    lambda_values: tuple
    kind: str = "Sp"
    _inverses: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if self.kind not in ("Sp", "GSp"):
            raise SymplawError(f"kind must be Sp or GSp, got {self.kind!r}")
        images = tuple(self.generator_images)
        lams = tuple(Fraction(x) for x in self.lambda_values)
        if len(images) != len(lams):
            raise DimensionError("one lambda per generator image required")
        for m, lam in zip(images, lams):
            got = similitude(self.ctx, m)
            if got != lam:
                raise StructureError(f"declared similitude {lam} but M^j M = {got} Id")
        if self.kind == "Sp" and any(lam != 1 for lam in lams):
            raise StructureError("Sp representation must have all similitudes equal to 1")
        object.__setattr__(self, "generator_images", images)
        object.__setattr__(self, "lambda_values", lams)
        object.__setattr__(self, "_inverses", tuple(m.inverse() for m in images))

    @staticmethod
    def from_images(images: Sequence[RingMatrix], kind: str = "Sp") -> "InvolutiveRepresentation":
        if not images:
            raise DimensionError("need at least one generator image")
        n = images[0].rows
        if n % 2:
            raise DimensionError("images must be 2d x 2d")
        ctx = SymplecticContext(n // 2)
        lams = tuple(similitude(ctx, m) for m in images)
        return InvolutiveRepresentation(ctx, tuple(images), lams, kind)

    @property
    def num_generators(self) -> int:
        return len(self.generator_images)

    def _check_word(self, w: Word):
        top = max_generator(w)
        if top > self.num_generators:
            raise GeneratorError(f"word uses g{top} but only {self.num_generators} generators exist")

    def rho_word(self, w: Word) -> RingMatrix:
        self._check_word(w)
        m = RingMatrix.identity(self.ctx.n)
        for gen, sign in w:
            m = m * (self.generator_images[gen - 1] if sign > 0 else self._inverses[gen - 1])
        return m

    def lambda_of_word(self, w: Word) -> Fraction:
        self._check_word(w)
        lam = Fraction(1)
        for gen, sign in w:
            lam *= self.lambda_values[gen - 1] if sign > 0 else 1 / self.lambda_values[gen - 1]
        return lam

    def rho(self, x: GroupAlgebraElement) -> RingMatrix:
        """Linear extension of the word map over Fraction or MultiPoly coefficients."""
        acc = RingMatrix.zeros(self.ctx.n)
        for w, c in x.terms.items():
            acc = acc + self.rho_word(w) * c
        return acc


def star(rep: InvolutiveRepresentation, x: GroupAlgebraElement) -> GroupAlgebraElement:
    """Linear extension of w -> lambda(w) w^(-1); an involution."""
    terms: dict = {}
    for w, c in x.terms.items():
        wi = word_inv(w)
        terms[wi] = terms.get(wi, Fraction(0)) + rep.lambda_of_word(w) * c
    return GroupAlgebraElement(terms)


def eval_det_law(rep: InvolutiveRepresentation, x: GroupAlgebraElement) -> Ring:
    """D(x) = det(rho(x))."""
    return mat_det(rep.rho(x))


def eval_pf_law(rep: InvolutiveRepresentation, x: GroupAlgebraElement) -> Ring:
    """P(x) = reduced Pfaffian of rho(x); requires star(x) = x."""
    if star(rep, x) != x:
        raise StructureError("Pfaffian law is only defined on symmetric elements")
    return reduced_pfaffian(rep.ctx, rep.rho(x))


# -- coefficient vectors ----------------------------------------------


@dataclass(frozen=True)
class LambdaVector:
    """[L_0..L_2d] from D(t - r) = sum (-1)^i L_i t^(2d-i); L_0 = 1."""

    dim: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.dim + 1:
            raise DimensionError(f"need {self.dim + 1} coefficients, got {len(self.coeffs)}")
        if self.coeffs[0] != 1:
            raise StructureError("Lambda_0 must be 1")


@dataclass(frozen=True)
class PfaffianCoeffVector:
    """[T_0..T_d] from P(t - r) = sum (-1)^i T_i t^(d-i); T_0 = 1."""

    dim: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.dim + 1:
            raise DimensionError(f"need {self.dim + 1} coefficients, got {len(self.coeffs)}")
        if self.coeffs[0] != 1:
            raise StructureError("T_0 must be 1")


def lambda_vector_of_matrix(m: RingMatrix) -> LambdaVector:
    var = "t"
    taken: set = set()
    for row in m.entries:
        for x in row:
            if isinstance(x, MultiPoly):
                taken.update(x.vars)
    var = fresh_var(var, taken)
    return LambdaVector(m.rows, lambdas_from_char_poly(char_poly(m, var), m.rows, var))


def newton_lambdas_from_traces(traces: Sequence, n: int) -> LambdaVector:
    """Newton's identities: i*L_i = sum_(k=1..i) (-1)^(k-1) L_(i-k) s_k."""
    if n < 1:
        raise SymplawError("degree must be >= 1")
    if len(traces) < n:
        raise DimensionError(f"need {n} power traces, got {len(traces)}")
    lams: list = [Fraction(1)]
    for i in range(1, n + 1):
        acc: Ring = Fraction(0)
        for k in range(1, i + 1):
            term = lams[i - k] * traces[k - 1]
            acc = acc + term if (k - 1) % 2 == 0 else acc - term
        lams.append(acc * Fraction(1, i))
    return LambdaVector(n, lams)


def pfaffian_coeffs_from_lambdas(lv: LambdaVector) -> PfaffianCoeffVector:
    """Solve Lambda_i = sum_j T_j T_(i-j) with T_0 = 1 and T_i = 0 for i > d.

    The residual rows i = d+1..2d must hold as well; if they fail the
    Lambda spectrum is not a doubled (symmetric) spectrum.
    """
    if lv.dim % 2:
        raise DimensionError("LambdaVector dimension must be even (2d)")
    d = lv.dim // 2
    half = Fraction(1, 2)
    ts: list = [Fraction(1)]
    for i in range(1, d + 1):
        acc: Ring = lv.coeffs[i]
        for j in range(1, i):
            acc = acc - ts[j] * ts[i - j]
        ts.append(acc * half)
    for i in range(d + 1, 2 * d + 1):
        acc = Fraction(0)
        for j in range(max(0, i - d), min(i, d) + 1):
            acc = acc + ts[j] * ts[i - j]
        if not acc == lv.coeffs[i]:
            raise SpectrumError(
                f"Lambda_{i} inconsistent with a squared degree-{d} polynomial"
            )
    return PfaffianCoeffVector(d, ts)


def pf_law_from_det(rep: InvolutiveRepresentation, x: GroupAlgebraElement) -> Ring:
    """P extended to arbitrary elements through the coefficient recursion.

    On symmetric elements this agrees with eval_pf_law; elsewhere it is the
    canonical degree-d law determined by D alone.
    """
    lv = lambda_vector_of_matrix(rep.rho(x))
    return pfaffian_coeffs_from_lambdas(lv).coeffs[-1]


# -- d = 4 closed forms ------------------------------------------------

# T_4 in terms of the Lambda_i, solved from the convolution recursion:
# T_4 = L4/2 - L1 L3/4 + 3 L1^2 L2/16 - L2^2/8 - 5 L1^4/128.
_D4_LAMBDA_COEFFS = (
    Fraction(1, 2),
    Fraction(-1, 4),
    Fraction(3, 16),
    Fraction(-1, 8),
    Fraction(-5, 128),
)

# The same value from power traces s_k = tr(M^k) via Newton:
# T_4 = s1^4/384 - s1^2 s2/32 + s1 s3/12 + s2^2/32 - s4/8.
_D4_TRACE_COEFFS = (
    Fraction(1, 384),
    Fraction(-1, 32),
    Fraction(1, 12),
    Fraction(1, 32),
    Fraction(-1, 8),
)


def closed_form_check_d4(lv: LambdaVector, traces: Sequence) -> tuple:
    """The two degree-4 closed forms for T_4: from Lambda's and from traces.

    Both must equal pfaffian_coeffs_from_lambdas(lv).coeffs[4].
    """
    if lv.dim != 8:
        raise DimensionError("closed forms are specific to 2d = 8")
    if len(traces) < 4:
        raise DimensionError("need the first four power traces")
    l1, l2, l3, l4 = lv.coeffs[1], lv.coeffs[2], lv.coeffs[3], lv.coeffs[4]
    a = _D4_LAMBDA_COEFFS
    from_lambdas = a[0] * l4 + a[1] * (l1 * l3) + a[2] * (l1**2 * l2) + a[3] * l2**2 + a[4] * l1**4
    s1, s2, s3, s4 = traces[0], traces[1], traces[2], traces[3]
    b = _D4_TRACE_COEFFS
    from_traces = b[0] * s1**4 + b[1] * (s1**2 * s2) + b[2] * (s1 * s3) + b[3] * s2**2 + b[4] * s4
    return from_lambdas, from_traces


# -- polarized Cayley-Hamilton forms ----------------------------------


def chi_alpha(
    rep: InvolutiveRepresentation,
    elems: Sequence[GroupAlgebraElement],
    alpha: Sequence[int],
) -> RingMatrix:
    """Coefficient of t^alpha in chi^P(s, s) for s = t_1 rho(r_1) + ... + t_n rho(r_n).

    Each r_i must be symmetric and sum(alpha) must equal d.  For a faithful
    matrix model the result is the zero matrix (Pfaffian Cayley-Hamilton).
    """
    d = rep.ctx.d
    if len(alpha) != len(elems):
        raise SymplawError("alpha and element list have different lengths")
    if sum(alpha) != d or any(a < 0 for a in alpha):
        raise SymplawError(f"alpha must be nonnegative and sum to d = {d}")
    for r in elems:
        if star(rep, r) != r:
            raise StructureError("chi_alpha arguments must be symmetric elements")
    n = len(elems)
    taken: set = set()
    for r in elems:
        for c in r.terms.values():
            if isinstance(c, MultiPoly):
                taken.update(c.vars)
    tvars = [fresh_var(f"t{i + 1}", taken) for i in range(n)]
    s = RingMatrix.zeros(rep.ctx.n)
    for tv, r in zip(tvars, elems):
        s = s + rep.rho(r) * MultiPoly.variable(tv)
    coeffs = _pf_coeffs_via_recursion(rep.ctx, s)
    acc = RingMatrix.zeros(rep.ctx.n)
    power = RingMatrix.identity(rep.ctx.n)
    powers = [power]
    for _ in range(d):
        power = power * s
        powers.append(power)
    for i, c in enumerate(coeffs):
        term = powers[d - i] * c
        acc = acc + term if i % 2 == 0 else acc - term
    mono = {tv: a for tv, a in zip(tvars, alpha)}

    def pick(entry):
        if isinstance(entry, MultiPoly):
            known = {v: mono.get(v, 0) for v in entry.vars}
            return entry.coefficient(known)
        return entry if all(a == 0 for a in alpha) else Fraction(0)

    return acc.map_entries(pick)


def _pf_coeffs_via_recursion(ctx: SymplecticContext, s: RingMatrix) -> list:
    """[T_0..T_d] of a j-symmetric matrix over a polynomial ring.

    Uses the Pfaffian of (tI - s)J directly; falls back to the Lambda
    recursion if s is not j-symmetric over the extension.
    """
    from .symplectic import is_j_symmetric, pfaffian_coeffs_of_matrix

    if is_j_symmetric(ctx, s):
        return pfaffian_coeffs_of_matrix(ctx, s)
    lv = lambda_vector_of_matrix(s)
    return list(pfaffian_coeffs_from_lambdas(lv).coeffs)
