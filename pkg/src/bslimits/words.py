"""Words in the free group F2 = F(a, b), stored as alternating blocks.

A word is b^{e0} a^{eps1} b^{e1} ... a^{eps_h} b^{e_h} with eps_i = +-1
and arbitrary-precision integer exponents.  Run-length storage of the
b-blocks matters: reduction in Baumslag-Solitar groups multiplies
exponents by n/m and they grow exponentially.

Word values are always kept freely reduced; the constructor normalizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import WordSyntaxError

LETTER_ORDER = (("a", 1), ("a", -1), ("b", 1), ("b", -1))  # a < A < b < B


@dataclass(frozen=True)
class Word:
    lead: int = 0
    tail: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        lead, tail = _normalize(self.lead, self.tail)
        object.__setattr__(self, "lead", lead)
        object.__setattr__(self, "tail", tail)

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls) -> "Word":
        return cls()

    @classmethod
    def a_power(cls, k: int) -> "Word":
        sign = 1 if k > 0 else -1
        return cls(0, tuple((sign, 0) for _ in range(abs(k))))

    @classmethod
    def b_power(cls, k: int) -> "Word":
        return cls(k, ())

    @classmethod
    def from_letters(cls, letters: Iterable[tuple[str, int]]) -> "Word":
        """Build from a sequence of ('a'|'b', +-1) single letters."""
        lead = 0
        tail: list[list[int]] = []
        for gen, sign in letters:
            if gen == "b":
                if tail:
                    tail[-1][1] += sign
                else:
                    lead += sign
            elif gen == "a":
                tail.append([sign, 0])
            else:
                raise ValueError(f"unknown generator {gen!r}")
        return cls(lead, tuple((eps, e) for eps, e in tail))

    # -- group structure ---------------------------------------------------

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if not self.tail:
            return Word(self.lead + other.lead, other.tail)
        tail = list(self.tail)
        eps, e = tail[-1]
        tail[-1] = (eps, e + other.lead)
        return Word(self.lead, tuple(tail) + other.tail)

    def __invert__(self) -> "Word":
        if not self.tail:
            return Word(-self.lead)
        lead = -self.tail[-1][1]
        tail = []
        for i in range(len(self.tail) - 1, -1, -1):
            eps = -self.tail[i][0]
            e = -(self.tail[i - 1][1] if i > 0 else self.lead)
            tail.append((eps, e))
        return Word(lead, tuple(tail))

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else ~self
        out = Word()
        for _ in range(abs(k)):
            out = out * base
        return out

    def bar(self) -> "Word":
        """The involution fixing a and inverting b (negate every b-exponent)."""
        return Word(-self.lead, tuple((eps, -e) for eps, e in self.tail))

    # -- measurements ------------------------------------------------------

    @property
    def a_length(self) -> int:
        return len(self.tail)

    @property
    def sigma_a(self) -> int:
        return sum(eps for eps, _ in self.tail)

    @property
    def length(self) -> int:
        return abs(self.lead) + sum(1 + abs(e) for _, e in self.tail)

    @property
    def is_identity(self) -> bool:
        return self.lead == 0 and not self.tail

    def letters(self) -> Iterator[tuple[str, int]]:
        """Expand into single letters ('a'|'b', +-1)."""
        sign = 1 if self.lead > 0 else -1
        for _ in range(abs(self.lead)):
            yield ("b", sign)
        for eps, e in self.tail:
            yield ("a", eps)
            sign = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield ("b", sign)

    # -- rewriting ---------------------------------------------------------

    def cyclic_reduce(self) -> "Word":
        """A cyclically reduced conjugate of minimal length.

        Boundary b-blocks are merged around the seam and inverse a-letters
        at the two ends are stripped, so the result is either a b-power or
        starts with an a-letter.
        """
        w = self
        while True:
            if not w.tail:
                return w
            if w.lead != 0:
                tail = list(w.tail)
                eps, e = tail[-1]
                tail[-1] = (eps, e + w.lead)
                w = Word(0, tuple(tail))
                continue
            first_eps = w.tail[0][0]
            last_eps, last_e = w.tail[-1]
            if len(w.tail) >= 2 and last_e == 0 and last_eps == -first_eps:
                w = Word(w.tail[0][1], w.tail[1:-1])
                continue
            return w

    def __str__(self) -> str:
        parts: list[str] = []

        def emit_b(e: int) -> None:
            if e == 0:
                return
            ch = "b" if e > 0 else "B"
            k = abs(e)
            parts.append(ch if k == 1 else f"{ch}^{k}")

        def emit_a(sign: int, count: int) -> None:
            if count == 0:
                return
            ch = "a" if sign > 0 else "A"
            parts.append(ch if count == 1 else f"{ch}^{count}")

        emit_b(self.lead)
        run_sign, run_len = 0, 0
        for eps, e in self.tail:
            if run_len and eps == run_sign:
                run_len += 1
            else:
                emit_a(run_sign, run_len)
                run_sign, run_len = eps, 1
            if e != 0:
                emit_a(run_sign, run_len)
                run_sign, run_len = 0, 0
                emit_b(e)
        emit_a(run_sign, run_len)
        return " ".join(parts)


def _normalize(lead: int, raw: Iterable[tuple[int, int]]) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Freely reduce a raw block sequence with a stack."""
    stack: list[list[int]] = []
    for eps, e in raw:
        if eps not in (1, -1):
            raise ValueError(f"a-exponent sign must be +-1, got {eps}")
        if stack and stack[-1][1] == 0 and stack[-1][0] == -eps:
            stack.pop()
        else:
            stack.append([eps, 0])
        if stack:
            stack[-1][1] += e
        else:
            lead += e
    return lead, tuple((eps, e) for eps, e in stack)


def parse(text: str) -> Word:
    """Parse word text: items letter [^ exponent], letters a A b B.

    "A" is a^-1 and "B" is b^-1; "x^-k" means (x)^-k; whitespace is
    ignored.  Raises WordSyntaxError with the offending position.
    """
    items: list[tuple[str, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch not in "aAbB":
            raise WordSyntaxError(f"unexpected character {ch!r}", i)
        gen = "a" if ch in "aA" else "b"
        sign = 1 if ch.islower() else -1
        i += 1
        exp = 1
        if i < n and text[i] == "^":
            i += 1
            neg = False
            if i < n and text[i] == "-":
                neg = True
                i += 1
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j == i:
                raise WordSyntaxError("expected digits after '^'", i)
            exp = int(text[i:j])
            if neg:
                exp = -exp
            i = j
        items.append((gen, sign * exp))

    lead = 0
    tail: list[tuple[int, int]] = []
    for gen, e in items:
        if gen == "b":
            if tail:
                eps, prev = tail[-1]
                tail[-1] = (eps, prev + e)
            else:
                lead += e
        else:
            sign = 1 if e > 0 else -1
            for _ in range(abs(e)):
                tail.append((sign, 0))
    return Word(lead, tuple(tail))


def enumerate_reduced(max_length: int) -> Iterator[Word]:
    """All freely reduced words of length <= max_length, shortest first.

    Within a length class the order is lexicographic on letters with
    a < A < b < B.  Yields 4 * 3^(l-1) words of each length l >= 1.
    """
    yield Word()
    seq: list[tuple[str, int]] = []

    def rec(remaining: int) -> Iterator[Word]:
        if remaining == 0:
            yield Word.from_letters(seq)
            return
        for gen, sign in LETTER_ORDER:
            if seq and seq[-1] == (gen, -sign):
                continue
            seq.append((gen, sign))
            yield from rec(remaining - 1)
            seq.pop()

    for ell in range(1, max_length + 1):
        yield from rec(ell)
