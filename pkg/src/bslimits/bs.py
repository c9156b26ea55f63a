"""Concrete Baumslag-Solitar groups BS(m, n) = <a, b | a b^m a^-1 = b^n>."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroModulus
from .quotients import AffineMap, affine_image
from .words import Word


@dataclass(frozen=True)
class BsParams:
    m: int
    n: int

    def __post_init__(self):
        if self.m == 0 or self.n == 0:
            raise ZeroModulus(f"BS({self.m}, {self.n}) needs nonzero parameters")

    def __str__(self) -> str:
        return f"BS({self.m}, {self.n})"


def britton_reduce(word: Word, params: BsParams) -> Word:
    """Britton-reduced form of a word in BS(m, n).

    Repeatedly replaces a b^e a^-1 (m | e) by b^(en/m) and a^-1 b^e a
    (n | e) by b^(em/n); free cancellation is the e = 0 case.
    """
    m, n = params.m, params.n
    lead = word.lead
    blocks = [[eps, e] for eps, e in word.tail]
    i = 0
    while i + 1 < len(blocks):
        eps, e = blocks[i]
        if eps == 1 and blocks[i + 1][0] == -1 and e % m == 0:
            new_e = (e // m) * n
        elif eps == -1 and blocks[i + 1][0] == 1 and e % n == 0:
            new_e = (e // n) * m
        else:
            i += 1
            continue
        new_e += blocks[i + 1][1]
        del blocks[i : i + 2]
        if i == 0:
            lead += new_e
        else:
            blocks[i - 1][1] += new_e
        i = max(i - 1, 0)
    return Word(lead, tuple((eps, e) for eps, e in blocks))


def is_trivial_bs(word: Word, params: BsParams) -> bool:
    """Word problem for BS(m, n), by Britton's lemma."""
    return britton_reduce(word, params).is_identity


def gamma_image(word: Word, params: BsParams) -> AffineMap:
    """Image in Gamma(m, n) < Aff(Q): a -> (x -> (n/m) x), b -> (x -> x + 1)."""
    return affine_image(word, Fraction(params.n, params.m))
