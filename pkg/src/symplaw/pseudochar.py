"""Pseudocharacters for Sp_2d and GSp_2d backed by explicit representations.

A pseudocharacter is the family of maps sending a conjugation-invariant
function f of m group elements and a tuple (gamma_1..gamma_m) to
f(rho(gamma_1), ..., rho(gamma_m)).  Evaluation is restricted to the
generating invariants (characteristic-polynomial coefficients of trace
words, plus inverse similitudes in the GSp case), which suffices by the
generation theorems tested in the invariants module.

Two axioms characterize these families: compatibility with variable
relabelling, and compatibility with merging the last two arguments by
group multiplication.  Both are checked on randomized trials; a cache of
evaluated values doubles as the corruption fixture for detecting
axiom failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .detlaws import (
    GroupAlgebraElement,
    InvolutiveRepresentation,
    star,
)
from .errors import ArityError, StructureError, UnsupportedKindError
from .invariants import InvariantFunction, TraceWord, eval_invariant, hat, relabel
from .matrices import RingMatrix
from .multipoly import Ring
from .symplectic import reduced_pfaffian, similitude
from .words import Word, format_word, random_word, word_inv, word_mul


@dataclass
class Pseudocharacter:
    """Representation-backed pseudocharacter with a memo cache.

    The cache maps (function key, word tuple) to the exact value; entries
    are always re-derivable from the representation, and tests may corrupt
    one deliberately to exercise axiom-failure detection.
    """

    rep: InvolutiveRepresentation
    cache: dict = field(default_factory=dict)

    @property
    def kind(self) -> str:
        return self.rep.kind

    def cache_key(self, f: InvariantFunction, gammas: tuple) -> tuple:
        return (f.key(), tuple(gammas))


def theta_eval(pc: Pseudocharacter, f: InvariantFunction, gammas) -> Fraction:
    """Evaluate one generating invariant on a word tuple; memoized."""
    gammas = tuple(tuple(w) for w in gammas)
    if len(gammas) != f.arity:
        raise ArityError(f"function of arity {f.arity} applied to {len(gammas)} words")
    if f.kind == "similitude" and pc.kind != "GSp":
        raise UnsupportedKindError("similitude generators require a GSp pseudocharacter")
    key = pc.cache_key(f, gammas)
    if key in pc.cache:
        return pc.cache[key]
    mats = [pc.rep.rho_word(w) for w in gammas]
    value = eval_invariant(f, mats)
    pc.cache[key] = value
    return value


def theta_eval_product(pc: Pseudocharacter, fs, gammas) -> Fraction:
    """Product of generator evaluations (the maps are ring homomorphisms)."""
    out = Fraction(1)
    for f in fs:
        out *= theta_eval(pc, f, gammas)
    return out


def _random_sigma_function(rng: random.Random, arity: int, two_d: int) -> InvariantFunction:
    length = rng.randint(1, 4)
    letters = tuple((rng.randint(1, arity), rng.choice((False, True))) for _ in range(length))
    return InvariantFunction.sigma(rng.randint(1, two_d), TraceWord(letters), arity)


def verify_axioms(pc: Pseudocharacter, trials: int, seed: int) -> dict:
    """Randomized check of the relabelling and last-argument-product axioms.

    Returns {"passed": bool, "trials": n, "failures": [witness, ...]} where a
    witness records the axiom, the function and the word tuple.
    """
    rng = random.Random(seed)
    two_d = pc.rep.ctx.n
    k = pc.rep.num_generators
    failures = []
    for _ in range(trials):
        m = rng.randint(1, 3)
        use_similitude = pc.kind == "GSp" and rng.random() < 0.25
        if use_similitude:
            f = InvariantFunction.similitude_power(rng.randint(1, m), -1, m)
        else:
            f = _random_sigma_function(rng, m, two_d)

        # axiom: relabelling variables commutes with evaluation
        n = rng.randint(1, 3)
        zeta = [rng.randint(1, n) for _ in range(m)]
        gammas_n = [random_word(rng, k, 4) for _ in range(n)]
        lhs = theta_eval(pc, relabel(f, zeta, n), gammas_n)
        rhs = theta_eval(pc, f, [gammas_n[z - 1] for z in zeta])
        if lhs != rhs:
            failures.append(
                {"axiom": 1, "f": str(f.key()), "words": [format_word(w) for w in gammas_n]}
            )

        # axiom: merging the last two arguments by multiplication
        gammas = [random_word(rng, k, 4) for _ in range(m + 1)]
        merged = list(gammas[: m - 1]) + [word_mul(gammas[m - 1], gammas[m])]
        if f.kind == "similitude" and f.var_index == m:
            # hat of the last-slot similitude generator is a product of two generators
            f1 = InvariantFunction.similitude_power(m, -1, m + 1)
            f2 = InvariantFunction.similitude_power(m + 1, -1, m + 1)
            lhs = theta_eval_product(pc, [f1, f2], gammas)
        else:
            lhs = theta_eval(pc, hat(f), gammas)
        rhs = theta_eval(pc, f, merged)
        if lhs != rhs:
            failures.append(
                {"axiom": 2, "f": str(f.key()), "words": [format_word(w) for w in gammas]}
            )
    return {"passed": not failures, "trials": trials, "failures": failures}


# -- comparison with the determinant-law side ---------------------------


def _symmetric_decomposition(pc: Pseudocharacter, x: GroupAlgebraElement) -> list:
    """Write symmetric x as sum c_i (w_i + lambda(w_i) w_i^(-1)); returns [(c_i, w_i)]."""
    rep = pc.rep
    if star(rep, x) != x:
        raise StructureError("comparison P is defined on symmetric elements")
    out = []
    seen = set()
    for w, c in x.terms.items():
        if w in seen:
            continue
        wi = word_inv(w)
        if wi == w:  # only the empty word in a free group
            out.append((c * Fraction(1, 2), w))
            seen.add(w)
        else:
            out.append((c, w))
            seen.add(w)
            seen.add(wi)
    return out


def comparison_to_det_law(pc: Pseudocharacter):
    """The determinant-law pair induced by the pseudocharacter.

    D sends sum c_i gamma_i to det(sum c_i rho(gamma_i)); P sends a
    symmetric sum c_i (gamma_i + lambda(gamma_i) gamma_i^(-1)) to the
    normalized Pfaffian of sum c_i (rho(gamma_i) + lambda_i rho(gamma_i)^(-1)).
    """
    rep = pc.rep
    ctx = rep.ctx

    def d_law(x: GroupAlgebraElement) -> Ring:
        from .matrices import mat_det

        acc = RingMatrix.zeros(ctx.n)
        for w, c in x.terms.items():
            acc = acc + rep.rho_word(w) * c
        return mat_det(acc)

    def p_law(x: GroupAlgebraElement) -> Ring:
        acc = RingMatrix.zeros(ctx.n)
        for c, w in _symmetric_decomposition(pc, x):
            m = rep.rho_word(w)
            lam = rep.lambda_of_word(w)
            acc = acc + (m + m.inverse() * lam) * c
        return reduced_pfaffian(ctx, acc)

    return d_law, p_law


def similitude_character(pc: Pseudocharacter, gamma: Word) -> Fraction:
    """lambda recovered from the pseudocharacter side; GSp only."""
    if pc.kind != "GSp":
        raise UnsupportedKindError("similitude character requires kind GSp")
    return similitude(pc.rep.ctx, pc.rep.rho_word(tuple(gamma)))
