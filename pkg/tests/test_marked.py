"""Marked-group comparison, explicit witnesses, and convergence screens."""

import math
import random
from fractions import Fraction

import pytest

from bslimits import (
    BsParams,
    Classification,
    InsufficientPrecision,
    MAdicResidue,
    ModulusMismatch,
    PreconditionViolated,
    ZeroModulus,
    bs_oracle,
    build_separating_sequence,
    check_convergence,
    classify_equal,
    discriminating_word,
    discriminating_word_bounded,
    gamma_oracle,
    is_trivial_bs,
    lamplighter_oracle,
    limit_oracle,
    make_congruence_witness,
    marked_distance,
    parse,
    witness_gcd_mismatch,
)


def xi_of(m, precision, value):
    return MAdicResidue.from_int(m, precision, value)


# -- oracles and search --------------------------------------------------


def test_oracles_answer_basic_words():
    assert bs_oracle(2, 3).is_trivial(parse("a b^2 A B^3"))
    assert not bs_oracle(2, 5).is_trivial(parse("a b^2 A B^3"))
    assert not limit_oracle(2, xi_of(2, 6, 3)).is_trivial(parse("a b^2 A B^3"))
    assert lamplighter_oracle().is_trivial(parse("b a b A B a B A"))
    assert gamma_oracle(2, 3).is_trivial(parse("b a b A B a B A"))


def test_discriminating_word_finds_defining_relator():
    w = discriminating_word(bs_oracle(2, 3), bs_oracle(2, 5), 7)
    assert w == parse("a b^2 A B^3")
    # symmetric up to which side kills the word
    assert discriminating_word(bs_oracle(2, 5), bs_oracle(2, 3), 7) == w


def test_discriminating_word_respects_budget():
    assert discriminating_word(bs_oracle(2, 3), bs_oracle(2, 5), 6) is None


def test_concrete_group_is_isolated_from_its_limit():
    m, n = 2, 3
    first = bs_oracle(m, n)
    second = limit_oracle(m, xi_of(m, 6, n))
    w = discriminating_word(first, second, abs(m) + abs(n) + 2)
    assert w == parse("a b^2 A B^3")


def test_bounded_search_finds_block_witnesses():
    w = discriminating_word_bounded(bs_oracle(2, 3), bs_oracle(2, 5), 2, 3)
    assert w is not None
    assert bs_oracle(2, 3).is_trivial(w) != bs_oracle(2, 5).is_trivial(w)


def test_marked_distance_bounds():
    lower = marked_distance(bs_oracle(2, 3), bs_oracle(2, 5), 8)
    assert lower.is_lower_bound and lower.value == Fraction(1, 128)
    assert lower.witness == parse("a b^2 A B^3")
    upper = marked_distance(bs_oracle(2, 3), bs_oracle(2, 3), 4)
    assert not upper.is_lower_bound and upper.value == Fraction(1, 16)
    assert upper.witness is None


# -- classification ------------------------------------------------------


def test_classify_same_class_at_shared_precision():
    got = classify_equal(4, xi_of(4, 3, 6), xi_of(4, 3, 38))
    assert got is Classification.EQUAL_AT_PRECISION


def test_classify_distinct_quotients():
    got = classify_equal(2, xi_of(2, 3, 1), xi_of(2, 3, 3))
    assert got is Classification.DISTINCT


def test_classify_distinct_gcds():
    got = classify_equal(4, xi_of(4, 2, 2), xi_of(4, 2, 3))
    assert got is Classification.DISTINCT


def test_classify_saturated_gcd_carries_no_digits():
    got = classify_equal(2, xi_of(2, 3, 0), xi_of(2, 3, 4))
    assert got is Classification.EQUAL_AT_PRECISION


def test_classify_rejects_foreign_moduli():
    with pytest.raises(ModulusMismatch):
        classify_equal(4, xi_of(2, 3, 1), xi_of(4, 3, 1))


# -- convergence screen --------------------------------------------------


def test_convergence_accepts_cauchy_tail():
    report = check_convergence(2, [3, 7, 23, 55], 6)
    assert report.ok and report.gcd == 1
    assert report.valuations == (2, 4, 5)
    assert report.witness is None


def test_convergence_flags_valuation_stall():
    report = check_convergence(2, [3, 7, 11], 6)
    assert not report.ok
    assert report.witness == (1, 2)
    assert "valuation" in report.reason


def test_convergence_flags_gcd_flip():
    report = check_convergence(2, [3, 4, 8], 6)
    assert not report.ok
    assert report.witness == (0, 1)
    assert "gcd" in report.reason


def test_convergence_saturated_gcd_short_circuits():
    report = check_convergence(3, [3, 6, 12], 6)
    assert report.ok and report.gcd == 3
    assert report.valuations == ()


def test_convergence_capped_pairs_are_inconclusive():
    # differences past the stored digits cannot witness divergence
    report = check_convergence(2, [5, 5 + 2**6, 5 + 2**7], 3)
    assert report.ok


def test_convergence_rejects_zero_modulus():
    with pytest.raises(ZeroModulus):
        check_convergence(0, [1, 2], 3)


def test_convergence_short_sequences_pass():
    assert check_convergence(2, [5], 3).ok


# -- explicit witnesses --------------------------------------------------


def test_gcd_mismatch_witness_instance():
    w = witness_gcd_mismatch(1, 4, 1, 2, 2, 3)
    assert w.length == 18
    assert is_trivial_bs(w, BsParams(4, 4))
    assert not is_trivial_bs(w, BsParams(4, 6))


def test_gcd_mismatch_witness_kills_whole_family():
    w = witness_gcd_mismatch(1, 4, 1, 2, 2, 3)
    for k in range(-5, 6):
        if k == 0:
            continue
        assert is_trivial_bs(w, BsParams(4, 4 * k))


def test_gcd_mismatch_preconditions():
    with pytest.raises(PreconditionViolated):
        witness_gcd_mismatch(1, 0, 1, 2, 2, 3)
    with pytest.raises(PreconditionViolated):
        witness_gcd_mismatch(1, 4, 1, 2, 3, 3)
    with pytest.raises(PreconditionViolated):
        witness_gcd_mismatch(4, 1, 1, 2, 2, 1)
    with pytest.raises(PreconditionViolated):
        witness_gcd_mismatch(1, 4, 1, 4, 1, 2)
    with pytest.raises(PreconditionViolated):
        witness_gcd_mismatch(2, 2, 1, 1, 4, 3)
    with pytest.raises(PreconditionViolated):
        witness_gcd_mismatch(1, 4, 1, 4, 1, 1)


def test_congruence_witness_depth_one():
    w = make_congruence_witness(2, 1, 1)
    for k in range(-12, 13):
        if k == 0:
            continue
        assert is_trivial_bs(w, BsParams(2, k)) == (k % 2 == 1)


def test_congruence_witness_depth_two():
    w = make_congruence_witness(2, 3, 2)
    for k in (3, 7, 11, -5, 19):
        assert is_trivial_bs(w, BsParams(2, k))
    for k in (5, 2, 4, -3, 9):
        assert not is_trivial_bs(w, BsParams(2, k))


def test_congruence_witness_collapses_at_unit_exponents():
    # BS(2, 1) is solvable and swallows the commutator even though
    # 1 is not 3 modulo 4; the congruence test is meaningful only for
    # exponents that keep the stable letter free
    w = make_congruence_witness(2, 3, 2)
    assert is_trivial_bs(w, BsParams(2, 1))


def test_congruence_witness_separates_limits():
    w = make_congruence_witness(2, 3, 2)
    assert limit_oracle(2, xi_of(2, 6, 3)).is_trivial(w)
    assert not limit_oracle(2, xi_of(2, 6, 1)).is_trivial(w)


def test_congruence_witness_with_shared_factor():
    # c = 2, M = 4: d = 2, m1 = 2, so the class is 2 mod m1^t d = 4
    w = make_congruence_witness(4, 2, 1)
    for k in range(-20, 21):
        if k == 0:
            continue
        if abs(k) == 1:
            continue  # unit exponents collapse the group
        assert is_trivial_bs(w, BsParams(4, k)) == ((k - 2) % 4 == 0), k


def test_congruence_witness_preconditions():
    with pytest.raises(ZeroModulus):
        make_congruence_witness(0, 1, 1)
    with pytest.raises(PreconditionViolated):
        make_congruence_witness(2, 1, 0)


# -- separating sequences ------------------------------------------------


def test_separating_sequence_frozen():
    assert build_separating_sequence(2, xi_of(2, 6, 1), 4) == [3, 5, 9, 17]


def test_separating_sequence_valuations_exact():
    xi = xi_of(2, 6, 1)
    seq = build_separating_sequence(2, xi, 4)
    for n, y in enumerate(seq, start=1):
        diff = y - 1
        v = 0
        while diff % 2 == 0:
            diff //= 2
            v += 1
        assert v == n
    assert [abs(y) for y in seq] == sorted(abs(y) for y in seq)


def test_separating_sequence_matches_witnesses():
    seq = build_separating_sequence(2, xi_of(2, 6, 1), 4)
    for n in range(1, 5):
        w = make_congruence_witness(2, 1, n)
        for r in range(n, 5):
            assert is_trivial_bs(w, BsParams(2, seq[r - 1]))
        deeper = make_congruence_witness(2, 1, n + 1)
        assert not is_trivial_bs(deeper, BsParams(2, seq[n - 1]))


def test_separating_sequence_composite_modulus():
    xi = xi_of(6, 5, 7)
    seq = build_separating_sequence(6, xi, 3)
    assert len(seq) == 3
    for n, y in enumerate(seq, start=1):
        diff = abs(y - 7)
        assert diff % 6**n == 0
        # along p = 2 the valuation is exactly n, one digit per stage
        v = 0
        while diff % 2 == 0:
            diff //= 2
            v += 1
        assert v == n


def test_separating_sequence_errors():
    with pytest.raises(PreconditionViolated):
        build_separating_sequence(2, xi_of(2, 6, 0), 2)
    with pytest.raises(InsufficientPrecision) as err:
        build_separating_sequence(2, xi_of(2, 3, 1), 3)
    assert err.value.needed == 4
    with pytest.raises(ValueError):
        build_separating_sequence(2, xi_of(2, 6, 1), 0)
    with pytest.raises(ModulusMismatch):
        build_separating_sequence(3, xi_of(2, 6, 1), 2)
