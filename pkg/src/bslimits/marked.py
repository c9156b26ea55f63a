"""Marked two-generator groups: comparison, witnesses, and convergence.

Every group here is presented as a marked group on (a, b) through its
word problem alone, so concrete Baumslag-Solitar groups, their limits,
and their metabelian quotients can be compared by one mechanism: hunt
for a word that is trivial in one and not in the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .bs import BsParams, gamma_image, is_trivial_bs
from .engine import EngineContext, build_context, symbolic_reduce
from .errors import (
    InsufficientPrecision,
    ModulusMismatch,
    PreconditionViolated,
    ZeroModulus,
)
from .madic import MAdicResidue, factorize
from .quotients import lamplighter_image
from .words import LETTER_ORDER, Word, enumerate_reduced


@dataclass(frozen=True, eq=False)
class GroupOracle:
    """A marked group on (a, b), given by a decider for its word problem."""

    name: str
    is_trivial: Callable[[Word], bool]

    def __str__(self) -> str:
        return self.name


def bs_oracle(m: int, n: int) -> GroupOracle:
    params = BsParams(m, n)
    return GroupOracle(str(params), lambda w: is_trivial_bs(w, params))


def limit_oracle(m: int, xi: MAdicResidue) -> GroupOracle:
    """The limit of BS(m, y) as y -> xi, lazily deepening its engine."""
    cache: list[EngineContext | None] = [None]

    def trivial(word: Word) -> bool:
        if word.sigma_a != 0:
            return False
        needed = -(-word.a_length // 2)
        ctx = cache[0]
        if ctx is None or ctx.level < needed:
            ctx = build_context(m, xi, needed)
            cache[0] = ctx
        return symbolic_reduce(word, ctx).is_identity

    return GroupOracle(f"limit BS({m}, {xi})", trivial)


def lamplighter_oracle() -> GroupOracle:
    return GroupOracle("Z wr Z", lambda w: lamplighter_image(w).is_identity)


def gamma_oracle(m: int, n: int) -> GroupOracle:
    params = BsParams(m, n)

    def trivial(word: Word) -> bool:
        fmap = gamma_image(word, params)
        return fmap.scale == 1 and fmap.shift == 0

    return GroupOracle(f"Gamma({m}, {n})", trivial)


def discriminating_word(first: GroupOracle, second: GroupOracle, max_length: int) -> Word | None:
    """Shortest reduced word whose triviality the two groups disagree on.

    Scans all reduced words up to max_length in length order (ties in the
    order a < a^-1 < b < b^-1); None means the groups agree that far.
    """
    for word in enumerate_reduced(max_length):
        if word.is_identity:
            continue
        if first.is_trivial(word) != second.is_trivial(word):
            return word
    return None


def discriminating_word_bounded(
    first: GroupOracle, second: GroupOracle, a_max: int, exp_max: int
) -> Word | None:
    """Discriminating search over block words instead of all words.

    Covers words with at most a_max stable letters whose b-exponents all
    lie in [-exp_max, exp_max], in length order.  The grid is not
    exhaustive in length, so None here proves nothing.
    """
    rank = {pair: i for i, pair in enumerate(LETTER_ORDER)}
    seen: set[Word] = set()
    candidates: list[Word] = []
    for h in range(a_max + 1):
        for signs in product((1, -1), repeat=h):
            for lead in range(-exp_max, exp_max + 1):
                for exps in product(range(-exp_max, exp_max + 1), repeat=h):
                    word = Word(lead, tuple(zip(signs, exps)))
                    if word.is_identity or word in seen:
                        continue
                    seen.add(word)
                    candidates.append(word)
    candidates.sort(key=lambda w: (w.length, tuple(rank[p] for p in w.letters())))
    for word in candidates:
        if first.is_trivial(word) != second.is_trivial(word):
            return word
    return None


@dataclass(frozen=True)
class MarkedDistance:
    """Distance estimate 2^-r in the space of marked groups.

    A lower bound comes with the witness word that separates the groups;
    an upper bound only says no witness exists up to the searched length.
    """

    value: Fraction
    is_lower_bound: bool
    witness: Word | None

    def __str__(self) -> str:
        sign = ">=" if self.is_lower_bound else "<="
        return f"distance {sign} {self.value}"


def marked_distance(first: GroupOracle, second: GroupOracle, max_length: int) -> MarkedDistance:
    witness = discriminating_word(first, second, max_length)
    if witness is not None:
        return MarkedDistance(Fraction(1, 2**witness.length), True, witness)
    return MarkedDistance(Fraction(1, 2**max_length), False, None)


class Classification(Enum):
    DISTINCT = "distinct"
    EQUAL_AT_PRECISION = "equal-at-precision"


def classify_equal(m: int, xi1: MAdicResidue, xi2: MAdicResidue) -> Classification:
    """Compare the limits named by two m-adic targets.

    DISTINCT is certified: the gcds with m differ, or the quotients by
    that gcd differ within the stored digits, and either difference is
    detected by an explicit word.  EQUAL_AT_PRECISION is not a proof of
    equality; it says no difference is visible at this precision.
    """
    if xi1.modulus.m != m or xi2.modulus.m != m:
        raise ModulusMismatch(f"both targets must be {m}-adic")
    d1 = xi1.gcd_with(m)
    d2 = xi2.gcd_with(m)
    if d1 != d2:
        return Classification.DISTINCT
    if d1 == abs(m):
        # quotients land in the zero ring and carry no further digits
        return Classification.EQUAL_AT_PRECISION
    eta1 = xi1.divide_exact(d1)
    eta2 = xi2.divide_exact(d2)
    shared = min(eta1.precision, eta2.precision)
    if eta1.truncate(shared).residue != eta2.truncate(shared).residue:
        return Classification.DISTINCT
    return Classification.EQUAL_AT_PRECISION


@dataclass(frozen=True)
class ConvergenceReport:
    """Outcome of the divergence screen on a sequence of exponents."""

    ok: bool
    gcd: int | None
    valuations: tuple[int, ...]
    witness: tuple[int, int] | None
    reason: str

    def __str__(self) -> str:
        verdict = "consistent" if self.ok else "diverges"
        return f"{verdict}: {self.reason}"


def check_convergence(m: int, values: Sequence[int], precision: int) -> ConvergenceReport:
    """Necessary-condition screen for BS(m, y_i) to converge to a limit.

    Checks that every y_i has the same gcd with m, and, writing
    eta_i = y_i / gcd, that the m1-adic valuations of consecutive
    differences eta_{i+1} - eta_i strictly increase as far as the stated
    precision can see.  Passing is consistent with convergence, not a
    proof; a failure pins the offending index pair as witness.
    """
    if m == 0:
        raise ZeroModulus("convergence screen needs a nonzero modulus")
    if len(values) < 2:
        return ConvergenceReport(True, None, (), None, "fewer than two terms")
    gcds = [MAdicResidue.from_int(m, precision, y).gcd_with(m) for y in values]
    for i in range(len(gcds) - 1):
        if gcds[i] != gcds[i + 1]:
            reason = f"gcd with {m} flips {gcds[i]} -> {gcds[i + 1]}"
            return ConvergenceReport(False, None, (), (i, i + 1), reason)
    d = gcds[0]
    m1 = m // d
    if abs(m1) == 1:
        return ConvergenceReport(True, d, (), None, "gcd saturates the modulus")
    etas = [y // d for y in values]
    vals: list[int] = []
    exact_flags: list[bool] = []
    for i in range(len(etas) - 1):
        left = MAdicResidue.from_int(m1, precision, etas[i])
        right = MAdicResidue.from_int(m1, precision, etas[i + 1])
        v, exact = left.agreement_valuation(right)
        vals.append(v)
        exact_flags.append(exact)
    for i in range(len(vals) - 1):
        if not exact_flags[i] and not exact_flags[i + 1]:
            continue  # both capped by precision: nothing visible
        if vals[i + 1] <= vals[i]:
            reason = f"valuation fails to increase: {vals[i]} then {vals[i + 1]}"
            return ConvergenceReport(False, d, tuple(vals), (i + 1, i + 2), reason)
    return ConvergenceReport(True, d, tuple(vals), None, "no divergence visible at this precision")


def witness_gcd_mismatch(m1: int, d1: int, k1: int, m2: int, d2: int, k2: int) -> Word:
    """A word separating the exponent families k d1 and k2 d2 over one modulus.

    The result is trivial in BS(m1 d1, k d1) for every integer k, and
    Britton-reduced (hence nontrivial) in BS(m2 d2, k2 d2).  The first
    family member BS(m1 d1, k1 d1) is named in the signature as the one
    demonstrations test against.

    Raises:
        PreconditionViolated: naming the failed condition, unless
            m1 d1 == m2 d2 != 0, |k2 d2| != 1, gcd(m2, k2) == 1, and
            d1 does not divide d2.
    """
    if d1 < 1 or d2 < 1:
        raise PreconditionViolated(f"gcds must be positive, got {d1} and {d2}")
    if m1 * d1 != m2 * d2 or m1 * d1 == 0:
        raise PreconditionViolated(f"moduli disagree: m1 d1 = {m1 * d1}, m2 d2 = {m2 * d2}")
    if abs(k2 * d2) == 1:
        raise PreconditionViolated(f"k2 d2 = {k2 * d2} is a unit exponent")
    if math.gcd(m2, k2) != 1:
        raise PreconditionViolated(f"m2 = {m2} and k2 = {k2} share a factor")
    if d2 % d1 == 0:
        raise PreconditionViolated(f"d1 = {d1} divides d2 = {d2}")
    half = Word.a_power(2) * Word.b_power(d1 * m1 * m1) * Word.a_power(-2) * Word.b_power(1)
    return half * half.bar()


def make_congruence_witness(m: int, c: int, t: int) -> Word:
    """A word trivial in BS(m, k) exactly for k = c modulo m1^t d.

    Here d = gcd(c, m) and m1 = m / d.  In a limit of BS(m, y), y -> xi,
    the same word is trivial exactly when xi = c modulo m1^t d, which
    makes these words separate limits that differ at a known digit.
    """
    if m == 0:
        raise ZeroModulus("congruence witnesses need a nonzero modulus")
    if t < 1:
        raise PreconditionViolated(f"depth t must be >= 1, got {t}")
    g = (
        Word.a_power(t + 1)
        * Word.b_power(m)
        * Word.a_power(-1)
        * Word.b_power(-c)
        * Word.a_power(-t)
    )
    return g * Word.b_power(1) * g.bar() * Word.b_power(-1)


def build_separating_sequence(m: int, xi: MAdicResidue, count: int) -> list[int]:
    """Exponents y_1..y_count marching to xi with pairwise separated limits.

    Each y_n matches xi on exactly n base-m digit blocks: along the
    smallest prime p of m1 the valuation of xi - y_n is n v_p(m) on the
    nose, so congruence witnesses of successive depths tell every stage
    of the sequence apart.  Magnitudes |y_n| strictly increase.

    Raises:
        PreconditionViolated: if gcd(xi, m) = |m|, where all class
            members present one group and nothing separates.
        InsufficientPrecision: unless xi carries count + 1 digits.
    """
    if xi.modulus.m != m:
        raise ModulusMismatch(f"xi has modulus {xi.modulus.m}, expected {m}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    d = xi.gcd_with(m)
    if d == abs(m):
        raise PreconditionViolated("gcd saturates the modulus; the class has a single limit")
    if xi.precision < count + 1:
        raise InsufficientPrecision(count + 1, "separating digits run one past count")
    m1 = m // d
    p = factorize(m1)[0][0]
    c_full = xi.residue
    out: list[int] = []
    prev_abs = 0
    for n in range(1, count + 1):
        c_n = c_full % abs(m) ** n
        nu0 = (c_full - c_n) // m**n  # next digit block of xi, exact division
        lam = 1
        while lam % p == nu0 % p or abs(c_n + m**n * lam) <= prev_abs:
            lam += 1
        y = c_n + m**n * lam
        prev_abs = abs(y)
        out.append(y)
    return out
