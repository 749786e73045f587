"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial stores an ordered tuple of variable names (kept sorted, so the
ordering is canonical) and a dict mapping exponent tuples to nonzero
``Fraction`` coefficients.  All arithmetic is exact; there is no floating
point anywhere.  Polynomials interoperate with ``Fraction`` and ``int``
scalars, which are lifted to constants on demand, so matrix code can stay
agnostic about whether an entry is a scalar or a polynomial.

Values are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import VariableError

Scalar = Union[int, Fraction]
Ring = Union[Fraction, "MultiPoly"]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not an exact scalar: {c!r}")


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, Scalar]):
        vs = tuple(variables)
        if list(vs) != sorted(vs):
            raise VariableError(f"variables must be sorted: {vs}")
        if len(set(vs)) != len(vs):
            raise VariableError(f"duplicate variable: {vs}")
        clean = {}
        for exp, coef in terms.items():
            exp = tuple(exp)
            if len(exp) != len(vs):
                raise VariableError(f"exponent {exp} does not match variables {vs}")
            c = _as_fraction(coef)
            if c != 0:
                clean[exp] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def constant(c: Scalar, variables: Iterable[str] = ()) -> "MultiPoly":
        vs = tuple(sorted(variables))
        return MultiPoly(vs, {(0,) * len(vs): _as_fraction(c)})

    @staticmethod
    def variable(name: str) -> "MultiPoly":
        return MultiPoly((name,), {(1,): Fraction(1)})

    @staticmethod
    def zero(variables: Iterable[str] = ()) -> "MultiPoly":
        return MultiPoly(tuple(sorted(variables)), {})

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial, as a Fraction."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise VariableError(f"not a constant polynomial: {self}")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(exp) for exp in self.terms)

    def in_vars(self, variables: Iterable[str]) -> "MultiPoly":
        """Rewrite over a larger (sorted) variable tuple."""
        target = tuple(variables)
        if target == self.vars:
            return self
        pos = {}
        for v in self.vars:
            if v not in target:
                raise VariableError(f"variable {v} missing from target {target}")
            pos[v] = target.index(v)
        terms = {}
        for exp, coef in self.terms.items():
            new = [0] * len(target)
            for v, e in zip(self.vars, exp):
                new[pos[v]] = e
            terms[tuple(new)] = coef
        return MultiPoly(target, terms)

    @staticmethod
    def _aligned(a: "MultiPoly", b: "MultiPoly"):
        if a.vars == b.vars:
            return a, b
        union = tuple(sorted(set(a.vars) | set(b.vars)))
        return a.in_vars(union), b.in_vars(union)

    def _lift(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.vars)
        return None

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = MultiPoly._aligned(self, o)
        terms = dict(a.terms)
        for exp, coef in b.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + coef
        return MultiPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = MultiPoly._aligned(self, o)
        terms: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                exp = tuple(x + y for x, y in zip(e1, e2))
                terms[exp] = terms.get(exp, Fraction(0)) + c1 * c2
        return MultiPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = MultiPoly._aligned(self, o)
        return a.terms == b.terms

    def __hash__(self):
        # Hash ignores unused variables so that equal values hash equally.
        core = frozenset(
            (tuple(v for v, e in zip(self.vars, exp) if e),
             tuple(e for e in exp if e),
             coef)
            for exp, coef in self.terms.items()
        )
        return hash(core)

    # -- extraction ---------------------------------------------------

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        """Coefficient of the given monomial (unlisted variables mean exponent 0)."""
        for v in monomial:
            if v not in self.vars:
                raise VariableError(f"unknown variable {v!r} (have {self.vars})")
        target = tuple(monomial.get(v, 0) for v in self.vars)
        return self.terms.get(target, Fraction(0))

    def coefficients_in(self, var: str) -> dict:
        """Split into {degree in var: polynomial in the remaining variables}."""
        if var not in self.vars:
            if self.is_zero():
                return {}
            return {0: self}
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        out: dict = {}
        for exp, coef in self.terms.items():
            deg = exp[i]
            rexp = exp[:i] + exp[i + 1:]
            bucket = out.setdefault(deg, {})
            bucket[rexp] = bucket.get(rexp, Fraction(0)) + coef
        return {deg: MultiPoly(rest, terms) for deg, terms in out.items()}

    def substitute(self, values: Mapping[str, Ring]) -> Ring:
        """Evaluate at the given values (every variable must be assigned)."""
        missing = [v for v in self.vars if v not in values]
        if missing:
            raise VariableError(f"no value for variables {missing}")
        total: Ring = Fraction(0)
        for exp, coef in self.terms.items():
            term: Ring = coef
            for v, e in zip(self.vars, exp):
                for _ in range(e):
                    term = term * values[v]
            total = total + term
        return total

    # -- rendering ----------------------------------------------------

    def sorted_terms(self):
        """Terms in descending lexicographic order of exponents."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, coef in self.sorted_terms():
            factors = []
            for v, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            if not factors:
                body = str(coef)
            elif coef == 1:
                body = "*".join(factors)
            elif coef == -1:
                body = "-" + "*".join(factors)
            else:
                body = str(coef) + "*" + "*".join(factors)
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"MultiPoly({self})"


def poly_coefficient(p: MultiPoly, monomial: Mapping[str, int]) -> Fraction:
    """Exact coefficient of a monomial of ``p``; zero if the monomial is absent."""
    return p.coefficient(monomial)


def fresh_var(base: str, taken: Iterable[str]) -> str:
    """A variable name starting with ``base`` that avoids every name in ``taken``."""
    taken = set(taken)
    if base not in taken:
        return base
    k = 0
    while f"{base}{k}" in taken:
        k += 1
    return f"{base}{k}"
