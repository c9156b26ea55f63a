"""Metabelian quotients: the lamplighter group and affine actions.

The wreath product Z wr Z = Z x| Z[t, 1/t] receives every word through
a -> (1, 0), b -> (0, t^0).  It is represented here through its faithful
affine action x -> t^sigma x + P, so one generic affine evaluator serves
the lamplighter image, the rational quotients Gamma(m,n), and any other
coefficient ring with a chosen unit for a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InternalInvariantViolation, NonUnit
from .words import Word


class LaurentPoly:
    """Integer Laurent polynomial, stored sparsely as {exponent: coeff}."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self._c = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @property
    def is_zero(self) -> bool:
        return not self._c

    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit; the units of Z[t, 1/t] are +-t^k."""
        if len(self._c) == 1:
            ((e, c),) = self._c.items()
            if c in (1, -1):
                return LaurentPoly({-e: c})
        raise NonUnit(f"{self} is not invertible in Z[t, 1/t]")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for e, c in sorted(self._c.items()):
            if e == 0:
                terms.append(str(c))
                continue
            t = "t" if e == 1 else f"t^{e}"
            if c == 1:
                terms.append(t)
            elif c == -1:
                terms.append(f"-{t}")
            else:
                terms.append(f"{c}*{t}")
        return " + ".join(terms).replace("+ -", "- ")

    __repr__ = __str__


Ring = Union[Fraction, LaurentPoly]


@dataclass(frozen=True)
class AffineMap:
    """x -> scale * x + shift over an exact coefficient ring."""

    scale: Ring
    shift: Ring

    def __call__(self, x: Ring) -> Ring:
        return self.scale * x + self.shift

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other: (f.compose(g))(x) = f(g(x))."""
        return AffineMap(self.scale * other.scale, self.scale * other.shift + self.shift)

    def __str__(self) -> str:
        return f"x -> ({self.scale})*x + ({self.shift})"


def _ring_constants(alpha: Ring) -> tuple[Ring, Ring, Ring]:
    """(one, zero, alpha inverse) for the ring alpha lives in."""
    if isinstance(alpha, LaurentPoly):
        return LaurentPoly.one(), LaurentPoly.zero(), alpha.inverse()
    alpha = Fraction(alpha)
    if alpha == 0:
        raise NonUnit("0 is not an invertible scale")
    return Fraction(1), Fraction(0), 1 / alpha


def affine_image(word: Word, alpha: Ring) -> AffineMap:
    """Image of a word under a -> (x -> alpha x), b -> (x -> x + 1).

    Group elements act on the left, so the map of uv is map(u) composed
    with map(v).

    Raises:
        NonUnit: if alpha is not invertible in its ring.
    """
    one, zero, alpha_inv = _ring_constants(alpha)
    scale, shift = one, zero

    def push(s: Ring, h: Ring) -> None:
        nonlocal scale, shift
        scale, shift = scale * s, scale * h + shift

    for gen, sign in word.letters():
        if gen == "a":
            push(alpha if sign > 0 else alpha_inv, zero)
        else:
            push(one, one if sign > 0 else zero - one)
    return AffineMap(scale, shift)


@dataclass(frozen=True)
class LamplighterElement:
    """Element (sigma, P) of Z wr Z = Z x| Z[t, 1/t]."""

    sigma: int
    poly: LaurentPoly

    @property
    def is_identity(self) -> bool:
        return self.sigma == 0 and self.poly.is_zero

    def __mul__(self, other: "LamplighterElement") -> "LamplighterElement":
        shifted = LaurentPoly.monomial(self.sigma) * other.poly
        return LamplighterElement(self.sigma + other.sigma, self.poly + shifted)

    def __str__(self) -> str:
        return f"(sigma={self.sigma}, P={self.poly})"


def lamplighter_image(word: Word) -> LamplighterElement:
    """Image in Z wr Z under a -> (1, 0), b -> (0, t^0)."""
    fmap = affine_image(word, LaurentPoly.monomial(1))
    coeffs = fmap.scale.coeffs()
    if len(coeffs) != 1 or set(coeffs.values()) != {1}:
        raise InternalInvariantViolation(f"scale {fmap.scale} is not a power of t")
    (sigma,) = coeffs.keys()
    return LamplighterElement(sigma, fmap.shift)


def in_kernel_N(word: Word) -> bool:
    """Membership in N = ker(q), q the lamplighter quotient map."""
    return lamplighter_image(word).is_identity
