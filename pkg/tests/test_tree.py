"""The vertical tree of a limit group: vertices, edges, relator loops."""

import random

from bslimits import LimitTree, MAdicResidue, is_trivial_limit, parse
from bslimits.words import Word


def make_tree(m=2, residue=3, precision=6):
    return LimitTree(m, MAdicResidue.from_int(m, precision, residue))


def test_origin_and_b_powers_coincide():
    T = make_tree()
    u = T.origin
    for j in (-5, 1, 4):
        assert T.vertices_equal(u, T.vertex(Word.b_power(j)))
    assert not T.vertices_equal(u, T.vertex(parse("a")))
    assert not T.vertices_equal(u, T.vertex(parse("A")))


def test_conjugated_b_power_fixes_base():
    T = make_tree()
    # a b^2 A is a b-power in this limit, hence fixes the base vertex
    assert T.vertices_equal(T.origin, T.vertex(parse("a b^2 A")))
    assert not T.vertices_equal(T.origin, T.vertex(parse("a b A")))


def test_out_edges_count_and_distinctness():
    for m, residue in ((2, 3), (3, 2), (4, 6), (-6, 5), (12, 7)):
        T = make_tree(m, residue)
        outs = T.neighbors_out(T.origin)
        assert len(outs) == abs(m)
        for i in range(len(outs)):
            for j in range(i + 1, len(outs)):
                assert not T.edges_equal(outs[i], outs[j])


def test_out_edges_wrap_modulo_m():
    T = make_tree(3, 2)
    e = T.edge(Word.b_power(1))
    f = T.edge(Word.b_power(4))
    g = T.edge(Word.b_power(2))
    assert T.edges_equal(e, f)
    assert not T.edges_equal(e, g)


def test_edge_endpoints():
    T = make_tree()
    e = T.edge(parse("a b"))
    assert T.vertices_equal(T.origin_of(e), T.vertex(parse("a b")))
    assert T.vertices_equal(T.terminus_of(e), T.vertex(parse("a b A")))
    # the edge named by the empty word descends one level
    root = T.edge(Word.identity())
    assert T.height(T.terminus_of(root)) == -1


def test_in_star_sampling():
    T = make_tree()
    u = T.origin
    ins = T.neighbors_in(u, 2)
    assert len(ins) == 5
    for e in ins:
        assert T.vertices_equal(T.terminus_of(e), u)
    for i in range(len(ins)):
        for j in range(i + 1, len(ins)):
            assert not T.edges_equal(ins[i], ins[j])


def test_path_heights():
    T = make_tree()
    path = T.path_of(parse("a b a B"))
    assert [T.height(v) for v in path] == [0, 1, 2]
    assert T.vertices_equal(path[0], T.origin)


def test_is_relator_shapes():
    T = make_tree()
    assert T.is_relator(parse("a b^2 A"))
    assert T.is_relator(parse("a^2 b^4 A^2"))
    # failing shapes: lead b, odd letters, wrong sign order, no pinch
    assert not T.is_relator(parse("b a b^2 A"))
    assert not T.is_relator(parse("a b^2 A a"))
    assert not T.is_relator(parse("A b^3 a"))
    assert not T.is_relator(parse("a b A"))
    assert not T.is_relator(parse(""))


def test_make_relator_is_trivial_in_limit():
    T = make_tree()
    xi = T.xi
    for text in ("a b^2 A", "a^2 b^4 A^2", "a b^2 A b^5"):
        seed = parse(text)
        if not T.is_relator(seed):
            continue
        rel = T.make_relator(seed)
        assert is_trivial_limit(rel, 2, xi), text


def test_enumerate_relators_frozen_grid():
    T = make_tree()
    rels = [str(w) for w in T.enumerate_relators(1, 2)]
    assert rels == [
        "a B^2 A B^2 a b^2 A b^2",
        "a B^2 A B a b^2 A b",
        "a B^2 A b a b^2 A B",
        "a B^2 A b^2 a b^2 A B^2",
        "a b^2 A B^2 a B^2 A b^2",
        "a b^2 A B a B^2 A b",
        "a b^2 A b a B^2 A B",
        "a b^2 A b^2 a B^2 A B^2",
    ]


def test_enumerate_relators_all_trivial():
    T = make_tree(4, 6)
    count = 0
    for rel in T.enumerate_relators(2, 4):
        assert is_trivial_limit(rel, 4, T.xi)
        count += 1
        if count >= 40:
            break
    assert count > 0


def test_random_vertices_have_full_out_degree():
    rng = random.Random(60)
    for _ in range(30):
        m = rng.choice([2, -2, 3, 4, 6, -6])
        T = make_tree(m, rng.randrange(1, abs(m) ** 6))
        h = rng.randrange(0, 4)
        word = Word(
            rng.randint(-4, 4),
            tuple((rng.choice([1, -1]), rng.randint(-4, 4)) for _ in range(h)),
        )
        u = T.vertex(word)
        outs = T.neighbors_out(u)
        assert len(outs) == abs(m)
        for i in range(len(outs)):
            for j in range(i + 1, len(outs)):
                assert not T.edges_equal(outs[i], outs[j])
