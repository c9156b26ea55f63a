"""Symbolic reduction engine for m-adic limits of Baumslag-Solitar groups.

The limit group attached to a modulus M and an M-adic integer xi is the
marked limit of the groups BS(M, y) as y runs to xi in Z_M with |y| -> oo.
Writing d = gcd(xi, M), m1 = M / d and eta = xi / d, every such y has the
form n d with n ranging over a congruence class modulo a power of m1.

The engine decides the word problem in the limit by reducing words whose
b-exponents are symbolic functions of the class parameter n, drawn from
the module

    alpha(n) = k0 + k1 (n d) + k2 s_1(n) (n d) + ... + k_t s_{t-1}(n) (n d)

where the s_i come from the Euclidean recurrence s_{i-1} n = s_i m1 + r_i
with 0 <= r_i < |m1|.  On the class n = rep (mod m1^t) the remainders r_i
are constant, which is what makes both pinch rules decidable once and for
all from integer data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InsufficientLevel,
    InternalInvariantViolation,
    ModulusMismatch,
    NotInClass,
    ZeroModulus,
)
from .madic import MAdicResidue, Modulus
from .words import Word


def _eucl_div(x: int, m: int) -> tuple[int, int]:
    """Quotient and remainder with 0 <= r < |m|, valid for negative m."""
    r = x % abs(m)
    return (x - r) // m, r


@dataclass(frozen=True)
class RSTable:
    """Remainders and partial quotients of the class representative.

    r[i-1] holds r_i and s[i] holds s_i for the recurrence
    s_{i-1} rep = s_i m1 + r_i, s_0 = 1.  polys[i] lists the coefficients
    (lowest degree first, as Fractions) of the polynomial P_i with
    P_i(n / m1) = s_i(n) for every n in the class; m1 P_i has the integer
    coefficients (m1, -r_1, ..., -r_i) from the top degree down.
    """

    m1: int
    level: int
    rep: int
    r: tuple[int, ...]
    s: tuple[int, ...]
    polys: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def compute(cls, m1: int, level: int, rep: int) -> "RSTable":
        r_list: list[int] = []
        s_list = [1]
        poly_list: list[tuple[Fraction, ...]] = [(Fraction(1),)]
        for _ in range(level):
            q, r = _eucl_div(s_list[-1] * rep, m1)
            s_list.append(q)
            r_list.append(r)
            # P_i = X P_{i-1} - r_i / m1, the shift being multiplication by X
            poly_list.append((-Fraction(r, m1),) + poly_list[-1])
        return cls(m1, level, rep, tuple(r_list), tuple(s_list), tuple(poly_list))


@dataclass(frozen=True)
class EngineContext:
    """Frozen arithmetic data for one limit group at one reduction level.

    Valid for words with at most 2 * level stable letters.
    """

    m: int
    xi: MAdicResidue
    d: int
    m1: int
    level: int
    c: int
    rep: int
    rs: RSTable

    @property
    def class_modulus(self) -> int:
        return abs(self.m1) ** self.level

    def class_member(self, index: int) -> int:
        """The index-th member c + index * m1^level of the class."""
        return self.c + index * self.m1**self.level


def build_context(m: int, xi: MAdicResidue, level: int) -> EngineContext:
    """Prepare reduction data for the limit of BS(m, y), y -> xi.

    Args:
        m: the nonzero modulus M.
        xi: the target M-adic integer, to at least max(level, 1) digits.
        level: symbolic depth t; words with up to 2t stable letters reduce.

    Raises:
        ZeroModulus, ModulusMismatch: on malformed arguments.
        InsufficientPrecision: if xi carries too few digits for level.
    """
    if m == 0:
        raise ZeroModulus("limit groups need a nonzero modulus")
    if level < 0:
        raise ValueError(f"level must be >= 0, got {level}")
    if xi.modulus.m != m:
        raise ModulusMismatch(f"xi has modulus {xi.modulus.m}, expected {m}")
    d = xi.gcd_with(m)
    m1 = m // d
    eta = xi.divide_exact(d)
    if level == 0 or abs(m1) == 1:
        # every integer is 0 modulo m1^level when the quotient ring collapses
        c = 0
    else:
        c = eta.truncate(level).residue
    # rep must be a nonzero class member: BS(m, 0) degenerates.
    rep = c if c != 0 else c + m1 ** max(level, 1)
    rs = RSTable.compute(m1, level, rep)
    return EngineContext(m, xi, d, m1, level, c, rep, rs)


@dataclass(frozen=True)
class PolyExponent:
    """Symbolic b-exponent: coeffs (k0, ..., kt) against the s-basis."""

    coeffs: tuple[int, ...]

    @classmethod
    def constant(cls, value: int, level: int) -> "PolyExponent":
        return cls((value,) + (0,) * level)

    @property
    def level(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "PolyExponent") -> "PolyExponent":
        if len(self.coeffs) != len(other.coeffs):
            raise InternalInvariantViolation("mixed exponent widths")
        return PolyExponent(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))


def evaluate(alpha: PolyExponent, ctx: EngineContext, n: int) -> int:
    """Value alpha(n) for a concrete class member n.

    Raises:
        NotInClass: if n is not congruent to c modulo m1^level.
    """
    if (n - ctx.c) % ctx.class_modulus != 0:
        raise NotInClass(f"{n} is not {ctx.c} mod {ctx.m1}^{ctx.level}")
    k = alpha.coeffs
    total = k[0]
    s = 1
    for i in range(1, len(k)):
        total += k[i] * s * n * ctx.d
        q, r = _eucl_div(s * n, ctx.m1)
        # remainders are constant on the class; a mismatch is a bug
        if i <= ctx.level and r != ctx.rs.r[i - 1]:
            raise InternalInvariantViolation(f"remainder drift at step {i}: {r} != {ctx.rs.r[i - 1]}")
        s = q
    return total


def _value_at_rep(alpha: PolyExponent, ctx: EngineContext) -> int:
    k = alpha.coeffs
    return k[0] + sum(k[i] * ctx.rs.s[i - 1] * ctx.rep * ctx.d for i in range(1, len(k)))


def pinch_type1(alpha: PolyExponent, ctx: EngineContext) -> PolyExponent | None:
    """Resolve a b^alpha a^-1 -> b^beta, or None when no n admits it.

    The condition M | alpha(n) is constant on the class, so testing the
    representative settles it for every member at once.
    """
    if _value_at_rep(alpha, ctx) % abs(ctx.m) != 0:
        return None
    k = alpha.coeffs
    t = ctx.level
    if k[t] != 0:
        # reductions of words within the level budget never land here
        raise InternalInvariantViolation("no headroom for an ascending pinch")
    if k[0] % ctx.d != 0:
        raise InternalInvariantViolation(f"d = {ctx.d} must divide k0 = {k[0]} when pinching")
    num = k[0] // ctx.d + sum(k[i] * ctx.rs.r[i - 1] for i in range(1, t + 1))
    if num % ctx.m1 != 0:
        raise InternalInvariantViolation(f"m1 = {ctx.m1} must divide {num} when pinching")
    return PolyExponent((0, num // ctx.m1) + k[1:t])


def pinch_type2(alpha: PolyExponent, ctx: EngineContext) -> tuple[PolyExponent | None, int]:
    """Resolve a^-1 b^alpha a -> b^beta for all large class members.

    Returns (beta, 0) when the pinch holds for every class member, and
    (None, |k0|) when it fails for every member n with |n| > |k0|.
    """
    k = alpha.coeffs
    if k[0] != 0:
        return None, abs(k[0])
    t = ctx.level
    if t == 0:
        return PolyExponent((0,)), 0
    l0 = k[1] * ctx.m1 - sum(k[i] * ctx.rs.r[i - 2] for i in range(2, t + 1))
    return PolyExponent((l0 * ctx.d,) + k[2 : t + 1] + (0,)), 0


@dataclass(frozen=True)
class SymbolicWord:
    """Reduced word with symbolic b-exponents, plus its validity bound.

    The spelling b^lead a^eps1 b^alpha1 ... is Britton-reduced in
    BS(M, n d) for every class member n with |n| > n0.
    """

    ctx: EngineContext
    lead: PolyExponent
    tail: tuple[tuple[int, PolyExponent], ...]
    n0: int

    @property
    def a_length(self) -> int:
        return len(self.tail)

    @property
    def is_identity(self) -> bool:
        return not self.tail and self.lead.is_zero

    def to_word(self, n: int) -> Word:
        """Substitute a concrete class member for the parameter."""
        return Word(
            evaluate(self.lead, self.ctx, n),
            tuple((eps, evaluate(alpha, self.ctx, n)) for eps, alpha in self.tail),
        )


def symbolic_reduce(word: Word, ctx: EngineContext) -> SymbolicWord:
    """Britton reduction with symbolic exponents, leftmost pinch first.

    Raises:
        InsufficientLevel: if the word has more than 2 * level stable
            letters; the level needed is ceil(a_length / 2).
    """
    t = ctx.level
    if word.a_length > 2 * t:
        raise InsufficientLevel(-(-word.a_length // 2), f"word has {word.a_length} stable letters")
    lead = PolyExponent.constant(word.lead, t)
    blocks: list[list] = [[eps, PolyExponent.constant(e, t)] for eps, e in word.tail]
    n0 = 0
    i = 0
    while i + 1 < len(blocks):
        eps, alpha = blocks[i]
        beta = None
        if eps == 1 and blocks[i + 1][0] == -1:
            beta = pinch_type1(alpha, ctx)
        elif eps == -1 and blocks[i + 1][0] == 1:
            beta = pinch_type2(alpha, ctx)
            n0 = max(n0, beta[1])
            beta = beta[0]
        if beta is None:
            i += 1
            continue
        beta = beta + blocks[i + 1][1]
        del blocks[i : i + 2]
        if i == 0:
            lead = lead + beta
        else:
            blocks[i - 1][1] = blocks[i - 1][1] + beta
        i = max(i - 1, 0)
    return SymbolicWord(ctx, lead, tuple((eps, alpha) for eps, alpha in blocks), n0)


def reduce_in_limit(
    word: Word, m: int, xi: MAdicResidue, context: EngineContext | None = None
) -> SymbolicWord:
    """Reduce a word in the limit group, building a context if needed."""
    needed = -(-word.a_length // 2)
    if context is None or context.level < needed or context.m != m:
        context = build_context(m, xi, needed)
    return symbolic_reduce(word, context)


def is_trivial_limit(
    word: Word, m: int, xi: MAdicResidue, context: EngineContext | None = None
) -> bool:
    """Word problem for the limit group.

    Words with nonzero stable exponent sum are rejected before any
    precision on xi is consumed.
    """
    if word.sigma_a != 0:
        return False
    return reduce_in_limit(word, m, xi, context).is_identity


def stabilizer_exponent(
    word: Word, m: int, xi: MAdicResidue, context: EngineContext | None = None
) -> PolyExponent | None:
    """Symbolic k with word = b^k in the limit, or None if there is none."""
    if word.sigma_a != 0:
        return None
    reduced = reduce_in_limit(word, m, xi, context)
    if reduced.a_length:
        return None
    return reduced.lead
