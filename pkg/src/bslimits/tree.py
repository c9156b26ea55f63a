"""The vertical tree of a limit group and its relator loops.

The limit group acts on a tree whose vertices are cosets of the closure
of <b> and whose edges are cosets of the closure of <b^M>.  Handles wrap
plain words; equality of the objects they name is decided by the
reduction engine, so handles compare by identity and the tree exposes
vertices_equal and edges_equal instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .engine import (
    EngineContext,
    SymbolicWord,
    build_context,
    evaluate,
    symbolic_reduce,
)
from .madic import MAdicResidue
from .words import Word


@dataclass(frozen=True, eq=False)
class VertexHandle:
    """A vertex u * V0, named by the word u."""

    tree: "LimitTree"
    word: Word

    def __str__(self) -> str:
        return f"vertex[{self.word}]"


@dataclass(frozen=True, eq=False)
class EdgeHandle:
    """An edge u * E0, named by the word u; runs from u to u a^-1."""

    tree: "LimitTree"
    word: Word

    def __str__(self) -> str:
        return f"edge[{self.word}]"


class LimitTree:
    """Tree of the limit of BS(m, y) as y -> xi."""

    def __init__(self, m: int, xi: MAdicResidue):
        self.m = m
        self.xi = xi
        self._context: EngineContext | None = None

    def _context_for(self, word: Word) -> EngineContext:
        needed = -(-word.a_length // 2)
        if self._context is None or self._context.level < needed:
            self._context = build_context(self.m, self.xi, needed)
        return self._context

    def _reduce(self, word: Word) -> SymbolicWord:
        return symbolic_reduce(word, self._context_for(word))

    # -- vertices and edges -------------------------------------------

    @property
    def origin(self) -> VertexHandle:
        return VertexHandle(self, Word.identity())

    def vertex(self, word: Word) -> VertexHandle:
        return VertexHandle(self, word)

    def edge(self, word: Word) -> EdgeHandle:
        return EdgeHandle(self, word)

    def origin_of(self, edge: EdgeHandle) -> VertexHandle:
        return VertexHandle(self, edge.word)

    def terminus_of(self, edge: EdgeHandle) -> VertexHandle:
        return VertexHandle(self, edge.word * Word.a_power(-1))

    def vertices_equal(self, u: VertexHandle, v: VertexHandle) -> bool:
        """Whether u and v name the same vertex: u^-1 v fixes the base."""
        w = ~u.word * v.word
        if w.sigma_a != 0:
            return False
        return self._reduce(w).a_length == 0

    def edges_equal(self, e: EdgeHandle, f: EdgeHandle) -> bool:
        """Whether e and f name the same edge: e^-1 f lies in b^M closure."""
        w = ~e.word * f.word
        if w.sigma_a != 0:
            return False
        reduced = self._reduce(w)
        if reduced.a_length != 0:
            return False
        value = evaluate(reduced.lead, reduced.ctx, reduced.ctx.rep)
        # divisibility by M of a stabilizer exponent is class-constant
        return value % abs(self.m) == 0

    def height(self, u: VertexHandle) -> int:
        """Level of the vertex under the height map a -> 1, b -> 0."""
        return u.word.sigma_a

    def neighbors_out(self, u: VertexHandle) -> list[EdgeHandle]:
        """The |M| edges leaving u, one per coset u b^j E0."""
        return [EdgeHandle(self, u.word * Word.b_power(j)) for j in range(abs(self.m))]

    def neighbors_in(self, u: VertexHandle, bound: int) -> list[EdgeHandle]:
        """Edges arriving at u with names u b^j a, |j| <= bound.

        The full in-star is infinite; distinct j give distinct edges, so
        this returns 2 * bound + 1 of them.
        """
        return [
            EdgeHandle(self, u.word * Word.b_power(j) * Word.a_power(1))
            for j in range(-bound, bound + 1)
        ]

    def path_of(self, word: Word) -> list[VertexHandle]:
        """Vertices visited by the edge path the word spells from the base."""
        path = [self.origin]
        prefix = Word.b_power(word.lead)
        for eps, e in word.tail:
            prefix = prefix * Word.a_power(eps) * Word.b_power(e)
            path.append(VertexHandle(self, prefix))
        return path

    # -- relator loops ------------------------------------------------

    def is_relator(self, word: Word) -> bool:
        """Whether word spells a mountain loop fixing the base vertex.

        The shape required is b-free lead, stable letters (+1)^k (-1)^k
        with k >= 1, and reduction to a b-power; for such w the product
        w * bar(w) is a relation of the limit group.
        """
        if word.lead != 0 or not word.tail:
            return False
        h = word.a_length
        if h % 2 != 0:
            return False
        k = h // 2
        signs = [eps for eps, _ in word.tail]
        if signs != [1] * k + [-1] * k:
            return False
        return self._reduce(word).a_length == 0

    def make_relator(self, word: Word) -> Word:
        """The relation w * bar(w); trivial in the limit when w fixes the base."""
        return word * word.bar()

    def enumerate_relators(self, k_max: int, exp_bound: int) -> Iterator[Word]:
        """Relators w * bar(w) over mountain loops with k <= k_max peaks
        and |b-exponents| <= exp_bound, deduplicated by free reduction."""
        seen: set[Word] = set()
        for k in range(1, k_max + 1):
            signs = [1] * k + [-1] * k
            for exps in product(range(-exp_bound, exp_bound + 1), repeat=2 * k):
                seed = Word(0, tuple(zip(signs, exps)))
                if not self.is_relator(seed):
                    continue
                relator = self.make_relator(seed)
                if relator.is_identity or relator in seen:
                    continue
                seen.add(relator)
                yield relator
