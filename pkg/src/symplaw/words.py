"""Reduced words in a free group on generators g1, g2, ...

A word is a tuple of letters (index, exponent_sign) with index >= 1 and
sign in {+1, -1}, stored reduced: no adjacent letter cancels its
neighbour.  The empty tuple is the identity.  Text form: "g1 g2^-1".
"""

from __future__ import annotations

import random

from .errors import GeneratorError

Word = tuple  # tuple[tuple[int, int], ...]

IDENTITY: Word = ()


def reduce_letters(letters) -> Word:
    out: list = []
    for gen, sign in letters:
        if sign not in (1, -1):
            raise GeneratorError(f"letter exponent must be +-1, got {sign}")
        if out and out[-1][0] == gen and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((gen, sign))
    return tuple(out)


def word_mul(a: Word, b: Word) -> Word:
    return reduce_letters(list(a) + list(b))


def word_inv(a: Word) -> Word:
    return tuple((gen, -sign) for gen, sign in reversed(a))


def word_pow(a: Word, n: int) -> Word:
    if n < 0:
        return word_pow(word_inv(a), -n)
    out: Word = IDENTITY
    for _ in range(n):
        out = word_mul(out, a)
    return out


def generator(index: int) -> Word:
    if index < 1:
        raise GeneratorError(f"generator index must be >= 1, got {index}")
    return ((index, 1),)


def max_generator(w: Word) -> int:
    return max((gen for gen, _ in w), default=0)


def format_word(w: Word) -> str:
    if not w:
        return "1"
    parts = []
    for gen, sign in w:
        parts.append(f"g{gen}" if sign == 1 else f"g{gen}^-1")
    return " ".join(parts)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1"):
        return IDENTITY
    letters = []
    for token in text.split():
        body, _, exp = token.partition("^")
        if not body.startswith("g"):
            raise GeneratorError(f"bad word token {token!r}")
        try:
            gen = int(body[1:])
        except ValueError:
            raise GeneratorError(f"bad word token {token!r}") from None
        if gen < 1:
            raise GeneratorError(f"bad generator index in {token!r}")
        n = int(exp) if exp else 1
        sign = 1 if n > 0 else -1
        letters.extend([(gen, sign)] * abs(n))
    return reduce_letters(letters)


def random_word(rng: random.Random, num_generators: int, max_len: int = 4) -> Word:
    n = rng.randint(1, max_len)
    letters = [(rng.randint(1, num_generators), rng.choice((1, -1))) for _ in range(n)]
    return reduce_letters(letters)
