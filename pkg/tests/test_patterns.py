"""Pattern enumeration, interlacing, norms, weights and shifts."""

import random
from collections import Counter

import pytest

from gtkit.patterns import (enumerate_patterns, is_admissible,
                            pattern_from_lists, pattern_norm_sq,
                            pattern_to_lists, pattern_weight, shift,
                            sl_normalize, zero_weight_pattern,
                            zero_weight_patterns, zero_weight_tuples)
from gtkit.reps import dimension


def test_enumeration_counts():
    assert len(enumerate_patterns((1, 0))) == 2
    assert len(enumerate_patterns((1, 0, -1))) == 8
    assert len(enumerate_patterns((2, 0, -2))) == 27


def test_enumeration_rejects_non_dominant():
    with pytest.raises(ValueError):
        enumerate_patterns((0, 1))


def test_canonical_order_starts_at_highest_pattern():
    hw = (2, 1, 0)
    pats = enumerate_patterns(hw)
    assert pats[0] == ((2, 1, 0), (2, 1), (2,))  # row k = first k entries
    flat = [tuple(v for row in p for v in row) for p in pats]
    assert flat == sorted(flat, reverse=True)


def test_enumeration_matches_weyl_dimension():
    for hw in [(3, 1, 0), (2, 2, 0), (4, 0, -1), (1, 1, 0, 0), (2, 1, 1, 0)]:
        assert len(enumerate_patterns(hw)) == dimension(hw)


def test_norm_values():
    assert pattern_norm_sq(((1, 0), (1,))) == 1
    assert pattern_norm_sq(zero_weight_pattern((1, 0, 0))) == 6
    assert pattern_norm_sq(zero_weight_pattern((1, 1, 0))) == 2


def test_norms_positive_everywhere():
    for p in enumerate_patterns((2, 1, -1)):
        assert pattern_norm_sq(p) > 0


def test_norm_shift_invariance():
    # adding a constant to every entry leaves all l-differences unchanged
    base = ((2, 0, -2), (1, -1), (0,))
    moved = tuple(tuple(v + 3 for v in row) for row in base)
    assert pattern_norm_sq(base) == pattern_norm_sq(moved)


def test_weights():
    hw = (3, 1, 0)
    assert pattern_weight(((3, 1, 0), (3, 1), (3,))) == hw
    assert pattern_weight(((1, 0, -1), (1, 0), (1,))) == (1, 0, -1)
    for M, pat in zero_weight_patterns(3, 2):
        assert pattern_weight(pat) == (0, 0, 0)


def test_shift_trio():
    lam = zero_weight_pattern((1, 0, 0))   # rows (1,0,-1),(0,0),(0)
    up = shift(lam, 2, 1, +1)
    assert up is not None and up[1] == (1, 0)
    assert shift(lam, 1, 1, +1) is None    # row (1) cannot sit over (0, 0)
    down = shift(lam, 2, 2, -1)
    assert down is not None and down[1] == (0, -1)


def test_shift_round_trip():
    rng = random.Random(5)
    pats = enumerate_patterns((3, 1, -1))
    for _ in range(200):
        p = pats[rng.randrange(len(pats))]
        k = rng.randint(1, 2)
        i = rng.randint(1, k)
        sign = rng.choice((1, -1))
        q = shift(p, k, i, sign)
        if q is not None:
            assert shift(q, k, i, -sign) == p


def test_shift_validates_position():
    lam = zero_weight_pattern((1, 0, 0))
    with pytest.raises(ValueError):
        shift(lam, 3, 1, +1)               # top row is never shifted


def test_sl_normalize():
    assert sl_normalize((1, 0, -1)) == (2, 1, 0)
    assert sl_normalize((3, 2, 2)) == (1, 0, 0)
    assert sl_normalize((0, 0, 0)) == (0, 0, 0)


def test_zero_weight_tuples():
    assert zero_weight_tuples(3, 1) == [(1, 0, 0), (1, 1, 0)]
    for m in range(5):
        assert len(zero_weight_tuples(3, m)) == m + 1
    assert zero_weight_tuples(2, 4) == [(4, 0)]


def test_zero_weight_pattern_shape():
    pat = zero_weight_pattern((2, 1, 0))
    assert pat == ((2, 0, -2), (1, -1), (0,))
    assert is_admissible(pat)


def test_weight_multiset_self_duality():
    # negation-reversal fixes the weight multiset of (m, 0, ..., 0, -m)
    for hw in [(1, 0, -1), (2, 0, -2), (1, 0, 0, -1)]:
        weights = Counter(pattern_weight(p) for p in enumerate_patterns(hw))
        flipped = Counter(tuple(-v for v in reversed(w)) for w in weights.elements())
        assert weights == flipped
        total = [0] * len(hw)
        for w, c in weights.items():
            total = [t + c * v for t, v in zip(total, w)]
        assert not any(total)


def test_pattern_json_round_trip():
    pat = ((1, 0, -1), (0, 0), (0,))
    rows = pattern_to_lists(pat)
    assert rows == [[1, 0, -1], [0, 0], [0]]
    assert pattern_from_lists(rows) == pat
    with pytest.raises(ValueError):
        pattern_from_lists([[1, 0, -1], [2, 0], [0]])
