"""Tests for the pattern relations, checked against literal double-loop oracles.

The oracles below re-state the relations as quantified loops over index
pairs and share no code with the module under test.
"""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from eolab.patterns import (
    MAX_ELEMENT,
    DuplicateElementError,
    LengthMismatchError,
    ListingPrefix,
    OrderPattern,
    apply_pattern,
    ascents,
    eo_equiv,
    eo_leq,
    eo_lt,
    identity,
    incomparable,
    inversions,
    pattern_of,
    prefix_restrict,
    reversal,
    uniform,
)


def direct_leq(p, q):
    """Oracle: the relation as a literal double loop over index pairs."""
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n):
            if p[i] < p[j] and not (q[i] < q[j]):
                return False
    return True


def direct_uniform(p, q):
    """Oracle: positionwise biconditional as a literal double loop."""
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n):
            if (p[i] < p[j]) != (q[i] < q[j]):
                return False
    return True


def all_patterns(n):
    return [OrderPattern(t) for t in itertools.permutations(range(n))]


injective_sequences = st.lists(
    st.integers(min_value=0, max_value=10**9), min_size=1, max_size=8, unique=True
)


# --- pattern_of ---------------------------------------------------------


@pytest.mark.parametrize(
    "prefix,expected",
    [
        ([5, 2, 9], (1, 0, 2)),
        ([0, 1, 2, 3], (0, 1, 2, 3)),
        ([7], (0,)),
        ([3, 1, 4], (1, 0, 2)),
        ([30, 10, 40], (1, 0, 2)),
    ],
)
def test_pattern_of_examples(prefix, expected):
    assert pattern_of(prefix).ranks == expected


def test_pattern_of_duplicate_reports_value_and_positions():
    with pytest.raises(DuplicateElementError) as exc:
        pattern_of([3, 1, 4, 1])
    assert exc.value.value == 1
    assert exc.value.first_index == 1
    assert exc.value.second_index == 3


@given(injective_sequences)
def test_pattern_is_permutation(seq):
    p = pattern_of(seq)
    assert sorted(p.ranks) == list(range(len(seq)))


@given(injective_sequences, st.lists(st.integers(1, 1000), min_size=8, max_size=8))
def test_order_isomorphism_invariance(seq, gaps):
    # Map values through a strictly increasing function built from gaps.
    ordered = sorted(seq)
    target = {}
    acc = 0
    for v, g in zip(ordered, itertools.cycle(gaps)):
        acc += g
        target[v] = acc
    mapped = [target[v] for v in seq]
    assert pattern_of(mapped) == pattern_of(seq)


def test_empty_prefix_rejected():
    with pytest.raises(ValueError):
        ListingPrefix(())
    with pytest.raises(ValueError):
        OrderPattern(())


def test_element_range_checked():
    ListingPrefix((MAX_ELEMENT,))
    with pytest.raises(ValueError):
        ListingPrefix((MAX_ELEMENT + 1,))
    with pytest.raises(ValueError):
        ListingPrefix((-1,))


# --- ascents / inversions -----------------------------------------------


def test_ascents_examples():
    assert ascents(OrderPattern((1, 0, 2))).pairs == {(0, 2), (1, 2)}
    assert ascents(OrderPattern((0, 1, 2))).pairs == {(0, 1), (0, 2), (1, 2)}
    assert ascents(OrderPattern((2, 1, 0))).pairs == frozenset()


def test_inversions_examples():
    assert inversions(OrderPattern((1, 0, 2))).pairs == {(0, 1)}
    assert inversions(OrderPattern((0, 1, 2))).pairs == frozenset()
    assert inversions(OrderPattern((2, 1, 0))).pairs == {(0, 1), (0, 2), (1, 2)}


@pytest.mark.parametrize("n", range(1, 6))
def test_ascents_inversions_partition_all_pairs(n):
    full = {(i, j) for i in range(n) for j in range(i + 1, n)}
    for p in all_patterns(n):
        a, v = ascents(p).pairs, inversions(p).pairs
        assert a | v == full
        assert a & v == frozenset()


def test_pairset_json_sorted():
    ps = inversions(OrderPattern((2, 1, 0)))
    assert ps.to_json() == [[0, 1], [0, 2], [1, 2]]


# --- eo_leq / uniform / eo_equiv ----------------------------------------


def test_eo_leq_examples():
    assert eo_leq(OrderPattern((1, 0, 2)), OrderPattern((0, 1, 2)))
    assert not eo_leq(OrderPattern((0, 1)), OrderPattern((1, 0)))
    for q in all_patterns(3):
        assert eo_leq(OrderPattern((2, 1, 0)), q)


def test_eo_leq_length_mismatch():
    with pytest.raises(LengthMismatchError) as exc:
        eo_leq(OrderPattern((0, 1)), OrderPattern((0, 1, 2)))
    assert (exc.value.left_length, exc.value.right_length) == (2, 3)


def test_eo_leq_related_pair_count_n3():
    # Frozen from the double-loop oracle over all 36 ordered pairs.
    ps = all_patterns(3)
    count = sum(1 for p in ps for q in ps if eo_leq(p, q))
    assert count == 17
    assert count == sum(1 for p in ps for q in ps if direct_leq(p.ranks, q.ranks))


@pytest.mark.parametrize("n", range(1, 6))
def test_eo_leq_agrees_with_direct_oracle(n):
    for p, q in itertools.product(all_patterns(n), repeat=2):
        assert eo_leq(p, q) == direct_leq(p.ranks, q.ranks)


@pytest.mark.parametrize("n", range(1, 5))
def test_partial_order_laws(n):
    ps = all_patterns(n)
    for p in ps:
        assert eo_leq(p, p)
    for p, q in itertools.product(ps, repeat=2):
        if eo_leq(p, q) and eo_leq(q, p):
            assert p == q
    for p, q, r in itertools.product(ps, repeat=3):
        if eo_leq(p, q) and eo_leq(q, r):
            assert eo_leq(p, r)


@pytest.mark.parametrize("n", range(1, 7))
def test_bounds_identity_top_reversal_bottom(n):
    top, bottom = identity(n), reversal(n)
    for p in all_patterns(n):
        assert eo_leq(p, top)
        assert eo_leq(bottom, p)


def test_uniform_examples():
    assert uniform(pattern_of([3, 1, 4]), pattern_of([30, 10, 40]))
    assert not uniform(OrderPattern((0, 1)), OrderPattern((1, 0)))
    p = OrderPattern((2, 0, 1))
    assert uniform(p, p)


def test_uniform_length_mismatch():
    with pytest.raises(LengthMismatchError):
        uniform(OrderPattern((0, 1)), OrderPattern((0, 1, 2)))


@pytest.mark.parametrize("n", range(1, 6))
def test_uniform_is_direct_biconditional(n):
    for p, q in itertools.product(all_patterns(n), repeat=2):
        assert uniform(p, q) == direct_uniform(p.ranks, q.ranks)


@pytest.mark.parametrize("n", range(1, 7))
def test_two_sided_leq_equals_uniform_equals_equality(n):
    for p, q in itertools.product(all_patterns(n), repeat=2):
        both = eo_equiv(p, q)
        assert both == uniform(p, q) == (p == q)


def test_eo_equiv_examples():
    p = OrderPattern((1, 0, 2))
    assert eo_equiv(p, p)
    assert not eo_equiv(OrderPattern((0, 1, 2)), OrderPattern((2, 1, 0)))


def test_eo_lt_is_strict():
    p, q = OrderPattern((1, 0)), OrderPattern((0, 1))
    assert eo_lt(p, q)
    assert not eo_lt(p, p)


def test_incomparable_pair():
    assert incomparable(OrderPattern((0, 2, 1)), OrderPattern((1, 0, 2)))


# --- apply_pattern / prefix_restrict ------------------------------------


def test_apply_pattern_examples():
    assert apply_pattern(OrderPattern((1, 0, 2)), {4, 8, 15}).elements == (8, 4, 15)
    assert apply_pattern(identity(4), {9, 3, 7, 1}).elements == (1, 3, 7, 9)


def test_apply_pattern_size_mismatch():
    with pytest.raises(LengthMismatchError):
        apply_pattern(OrderPattern((0, 1)), {1, 2, 3})


def test_apply_pattern_duplicate_support():
    with pytest.raises(DuplicateElementError):
        apply_pattern(OrderPattern((0, 1)), [5, 5])


@pytest.mark.parametrize("n", range(1, 6))
def test_apply_pattern_roundtrip(n):
    support = {10, 20, 30, 40, 50}
    sub = set(sorted(support)[:n])
    for p in all_patterns(n):
        assert pattern_of(apply_pattern(p, sub)) == p


@pytest.mark.parametrize("n", range(1, 5))
def test_apply_pattern_bijection(n):
    support = tuple(sorted({3, 14, 15, 92}))[:n]
    images = {apply_pattern(p, support).elements for p in all_patterns(n)}
    assert len(images) == len(all_patterns(n))
    assert images == set(itertools.permutations(support))


def test_prefix_restrict_examples():
    assert prefix_restrict(OrderPattern((1, 0, 3, 2)), 2).ranks == (1, 0)
    assert prefix_restrict(OrderPattern((2, 0, 3, 1)), 3).ranks == (1, 0, 2)
    p = OrderPattern((2, 0, 3, 1))
    assert prefix_restrict(p, len(p)) == p


def test_prefix_restrict_out_of_range():
    p = OrderPattern((0, 1))
    with pytest.raises(ValueError):
        prefix_restrict(p, 0)
    with pytest.raises(ValueError):
        prefix_restrict(p, 3)


@pytest.mark.parametrize("n", range(2, 6))
def test_prefix_antitonicity(n):
    for p, q in itertools.product(all_patterns(n), repeat=2):
        if eo_leq(p, q):
            for k in range(1, n + 1):
                assert eo_leq(prefix_restrict(p, k), prefix_restrict(q, k))
