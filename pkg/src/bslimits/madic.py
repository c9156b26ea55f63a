"""Finite-precision arithmetic in the ring Z_m of m-adic integers.

Z_m is the projective limit of the rings Z/m^h Z.  An element is stored
as a residue c modulo |m|^K for a chosen precision K.  Every operation
states how many digits it needs and fails loudly when the stored
precision cannot support an exact answer, instead of guessing digits.

The modulus m may be negative; magnitudes always use |m|.  The ring
Z_{+-1} is the zero ring and is allowed, with the single element 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as _int_gcd

from .errors import (
    InsufficientPrecision,
    ModulusMismatch,
    NotADivisor,
    NotDivisible,
    ZeroModulus,
    ZeroRing,
)


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of |n| by trial division, sorted by prime.

    Returns:
        Tuple of (prime, exponent) pairs; empty for |n| = 1.

    Raises:
        ZeroModulus: if n is 0.
    """
    if n == 0:
        raise ZeroModulus("cannot factorize 0")
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@dataclass(frozen=True)
class Modulus:
    """A nonzero integer modulus with its cached prime factorization."""

    m: int
    factorization: tuple[tuple[int, int], ...] = field(init=False)

    def __post_init__(self) -> None:
        if self.m == 0:
            raise ZeroModulus("modulus must be nonzero")
        object.__setattr__(self, "factorization", factorize(self.m))

    @property
    def abs_m(self) -> int:
        return abs(self.m)

    @property
    def is_zero_ring(self) -> bool:
        return abs(self.m) == 1

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factorization)

    def tower(self, precision: int) -> int:
        """|m|^precision, the modulus of the residue at that precision."""
        return self.abs_m ** precision

    def __str__(self) -> str:
        return str(self.m)


def _as_modulus(m: int | Modulus) -> Modulus:
    return m if isinstance(m, Modulus) else Modulus(m)


@dataclass(frozen=True)
class MAdicResidue:
    """An element of Z_m known to finite precision: c modulo |m|^K.

    The stored residue is canonical: 0 <= c < |m|^K.  Constructing with
    any integer (negative included) normalizes it into that range.
    """

    modulus: Modulus
    precision: int
    residue: int

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise ValueError(f"precision must be >= 1, got {self.precision}")
        tower = self.modulus.tower(self.precision)
        object.__setattr__(self, "residue", self.residue % tower)

    @classmethod
    def from_int(cls, m: int | Modulus, precision: int, value: int) -> "MAdicResidue":
        """The image of the integer `value` in Z_m at the given precision."""
        return cls(_as_modulus(m), precision, value)

    @property
    def tower(self) -> int:
        return self.modulus.tower(self.precision)

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus.m}^{self.precision}"

    # -- digit bookkeeping -------------------------------------------------

    def truncate(self, precision: int) -> "MAdicResidue":
        """Forget digits: the same element at a lower precision.

        Raises:
            InsufficientPrecision: if more digits are requested than stored.
        """
        if precision > self.precision:
            raise InsufficientPrecision(precision, "cannot refine a residue")
        return MAdicResidue(self.modulus, precision, self.residue)

    def project(self, m_prime: int) -> "MAdicResidue":
        """The image under the natural map Z_m -> Z_{m'} for m' | m.

        On integers the map is the identity, so the result is just the
        residue of c modulo |m'|^K at the same precision level K.

        Raises:
            NotADivisor: if m' does not divide m.
            ZeroModulus: if m' is 0.
        """
        if m_prime == 0:
            raise ZeroModulus("cannot project to modulus 0")
        if self.modulus.m % m_prime != 0:
            raise NotADivisor(f"{m_prime} does not divide {self.modulus.m}")
        return MAdicResidue(Modulus(m_prime), self.precision, self.residue)

    # -- arithmetic with divisors of m -------------------------------------

    def gcd_with(self, m_prime: int) -> int:
        """The positive generator d of the ideal (x, m') of Z_m.

        d is the product over the primes p of m' of p^min(v_p(x), v_p(m')).
        It can be computed as an integer gcd at any representative once x
        is known modulo m^h for the minimal h with m' | m^h, because two
        elements that close together generate the same ideal with m'.

        Raises:
            NotADivisor: if some prime of m' does not divide m.
            InsufficientPrecision: if fewer than h digits are stored.
            ZeroModulus: if m' is 0.
        """
        if m_prime == 0:
            raise ZeroModulus("gcd with 0 is not defined here")
        if abs(m_prime) == 1:
            return 1
        own = dict(self.modulus.factorization)
        needed_h = 0
        for p, k in factorize(m_prime):
            if p not in own:
                raise NotADivisor(
                    f"prime {p} of {m_prime} does not divide {self.modulus.m}"
                )
            needed_h = max(needed_h, -(-k // own[p]))
        if self.precision < needed_h:
            raise InsufficientPrecision(
                needed_h, f"gcd with {m_prime} over modulus {self.modulus.m}"
            )
        return _int_gcd(self.residue, abs(m_prime))

    def divide_exact(self, d: int) -> "MAdicResidue":
        """x/d in Z_{m/d}, for a positive divisor d of both m and x.

        Valid at the same precision exponent K: since m^K/d equals
        (m/d)^K d^(K-1), the quotient is determined modulo (m/d)^K.  The
        extra d^(K-1) digits are discarded.

        Raises:
            NotADivisor: if d does not divide m or d < 1.
            NotDivisible: if d does not divide the residue.
        """
        if d < 1 or self.modulus.m % d != 0:
            raise NotADivisor(f"{d} is not a positive divisor of {self.modulus.m}")
        if self.residue % d != 0:
            raise NotDivisible(f"{d} does not divide {self}")
        return MAdicResidue(Modulus(self.modulus.m // d), self.precision, self.residue // d)

    def is_unit(self) -> bool:
        """True iff no prime factor of m divides x (decidable at precision 1)."""
        return all(self.residue % p != 0 for p in self.modulus.primes())

    # -- metric ------------------------------------------------------------

    def agreement_valuation(self, other: "MAdicResidue") -> tuple[int, bool]:
        """(v, exact): v = max k with m^k | (x - y), capped at the precision.

        The second component is False when the difference vanishes within
        the stored digits, so only "v >= K" is known.

        Raises:
            ModulusMismatch: if the moduli differ.
        """
        if self.modulus != other.modulus:
            raise ModulusMismatch(
                f"moduli {self.modulus.m} and {other.modulus.m} differ"
            )
        k = min(self.precision, other.precision)
        base = self.modulus.abs_m
        diff = (self.residue - other.residue) % (base ** k)
        if base == 1 or diff == 0:
            return k, False
        v = 0
        while diff % base == 0:
            diff //= base
            v += 1
        return v, True


@dataclass(frozen=True)
class DistanceBound:
    """An ultrametric distance value; exact=False means "at most value"."""

    value: Fraction
    exact: bool

    def __str__(self) -> str:
        return str(self.value) if self.exact else f"<= {self.value}"


def distance(x: MAdicResidue, y: MAdicResidue) -> DistanceBound:
    """The ultrametric distance |m|^(-v), v = max{k : m^k | (x - y)}.

    When the residues agree at the common stored precision K only the
    bound |m|^(-K) can be certified.  The comparison happens at the
    coarser of the two precisions.  Over the zero ring the distance is 0.

    Raises:
        ModulusMismatch: if the moduli differ.
    """
    if x.modulus.is_zero_ring and x.modulus == y.modulus:
        return DistanceBound(Fraction(0), True)
    v, exact = x.agreement_valuation(y)
    return DistanceBound(Fraction(1, x.modulus.abs_m ** v), exact)


def crt_split(x: MAdicResidue) -> tuple[MAdicResidue, ...]:
    """Split along Z_m = prod Z_{p_i}: residues of c mod p_i^(k_i K).

    Each part is returned over the prime-power modulus p_i^{k_i} at the
    same precision level K.

    Raises:
        ZeroRing: if |m| = 1 (nothing to split).
    """
    if x.modulus.is_zero_ring:
        raise ZeroRing("Z_{+-1} is the zero ring; no prime components")
    return tuple(
        MAdicResidue(Modulus(p ** k), x.precision, x.residue)
        for p, k in x.modulus.factorization
    )


def crt_combine(
    parts: tuple[MAdicResidue, ...] | list[MAdicResidue],
    m: int | Modulus,
    precision: int,
) -> MAdicResidue:
    """Inverse of crt_split: recover c mod |m|^K from prime-power residues.

    Raises:
        ZeroRing: if |m| = 1.
        ModulusMismatch: if the parts do not match the factorization of m.
    """
    modulus = _as_modulus(m)
    if modulus.is_zero_ring:
        raise ZeroRing("Z_{+-1} is the zero ring; nothing to combine")
    expected = [p ** k for p, k in modulus.factorization]
    got = [part.modulus.abs_m for part in parts]
    if got != expected:
        raise ModulusMismatch(
            f"parts over {got} do not match the prime powers {expected} of {modulus.m}"
        )
    total = 1
    value = 0
    for part in parts:
        if part.precision < precision:
            raise InsufficientPrecision(precision, "combining residues")
        piece_mod = part.modulus.abs_m ** precision
        piece_val = part.residue % piece_mod
        inv = pow(total, -1, piece_mod)
        value = value + total * ((inv * (piece_val - value)) % piece_mod)
        total *= piece_mod
    return MAdicResidue(modulus, precision, value)
