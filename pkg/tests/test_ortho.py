"""Fixed-vector coefficients, overlap formulas, identities, decay."""

from math import comb

import pytest

from gtkit.linalg import Rational, norm_bracket
from gtkit.ortho import (block_support, coeff_closed_form,
                         comb_identity_check, decay_csv, decay_experiment,
                         fixed_vector_coefficients, identity1_check,
                         normalizer_const, overlap_sq, projection_product,
                         solve_fixed_vector, zero_tuple_norm_sq)
from gtkit.patterns import (pattern_norm_sq, zero_weight_pattern,
                            zero_weight_patterns, zero_weight_tuples)
from gtkit.reps import irrep
from gtkit.subgroups import (canonical_label, isotypic_projection,
                             named_subgroups, restrict_types, trivial_label)


def test_recurrence_seed_and_sign():
    fc = fixed_vector_coefficients(3, 1)
    assert fc.coeffs[(1, 0, 0)] == 1
    assert fc.coeffs[(1, 1, 0)] == -3
    assert fc.normalizer == 6


def test_recurrence_matches_closed_form():
    for n, m in [(3, 4), (4, 3), (5, 2), (6, 2)]:
        fc = fixed_vector_coefficients(n, m)
        seed = (m,) + (0,) * (n - 1)
        scale = coeff_closed_form(n, m, seed)
        for M, a in fc.coeffs.items():
            assert a == coeff_closed_form(n, m, M) / scale
            inner = sum(M[1:-1])
            assert (a > 0) == (inner % 2 == 0)


def test_direct_solve_matches_recurrence():
    for n, m in [(3, 0), (3, 1), (3, 3), (4, 2)]:
        rep, vec = solve_fixed_vector(n, m)
        coeffs = fixed_vector_coefficients(n, m).coeffs
        seed_idx = rep.index[zero_weight_pattern((m,) + (0,) * (n - 1))]
        for M, pat in zero_weight_patterns(n, m):
            idx = rep.index[pat]
            assert vec[idx] * coeffs[(m,) + (0,) * (n - 1)] \
                == coeffs[M] * vec[seed_idx]
        support = {rep.index[pat] for _, pat in zero_weight_patterns(n, m)}
        assert all(not vec[i] or i in support for i in range(rep.dim))


def test_overlap_values():
    assert overlap_sq(3, 1, (1, 0, 0)) == Rational(1, 4)
    assert overlap_sq(3, 1, (1, 1, 0)) == Rational(3, 4)
    for n, m in [(3, 6), (4, 3), (5, 2)]:
        total = sum(overlap_sq(n, m, M) for M in zero_weight_tuples(n, m))
        assert total == 1


def test_norm_closed_form():
    assert zero_tuple_norm_sq(3, (1, 0, 0)) == 6
    assert zero_tuple_norm_sq(3, (1, 1, 0)) == 2
    for n in (3, 4, 5, 6):
        assert zero_tuple_norm_sq(n, (0,) * n) == 1
    for n in (2, 3, 4, 5):
        for m in range(5):
            for M, pat in zero_weight_patterns(n, m):
                assert zero_tuple_norm_sq(n, M) == pattern_norm_sq(pat)


def test_normalizer_const():
    assert normalizer_const(3, 1) == 6      # (1!)^2 * 3!... = 1 * 6
    assert normalizer_const(4, 0) == 2      # (0! 1!)^2 * 2!


def test_comb_identity():
    for m in range(8):
        lhs, rhs, equal = comb_identity_check(3, m)
        assert equal and lhs == (m + 1) ** 2
    lhs, rhs, equal = comb_identity_check(4, 1)
    assert equal and lhs == 18
    for n in (3, 4, 5, 6):
        lhs, rhs, equal = comb_identity_check(n, 0)
        assert equal and lhs == rhs
        from math import factorial
        assert lhs == factorial(n - 2)


def test_identity1():
    lhs, rhs, equal = identity1_check(2, 0)
    assert equal and lhs == 9
    lhs, rhs, equal = identity1_check(1, 1)
    assert equal and lhs == 18
    for p in range(5):
        lhs, rhs, equal = identity1_check(0, p)
        assert equal and lhs == p + 1


def test_projection_product_idempotent_case():
    rep = irrep((1, 0, -1))
    S = frozenset({1})
    sigma = canonical_label(((1, 0), (-1,)))
    row = projection_product(rep, S, sigma, S, sigma)
    mult = dict(restrict_types(rep, S))[sigma]
    assert row.upper >= row.lower and row.lower == 1 == row.norm_est
    assert row.trace == mult * 2            # mult * dim(sigma)


def test_projection_product_disjoint_weight_support():
    rep = irrep((1, 0, -1))
    # ((1,0),(-1)) lives on weights (1,0,-1),(0,1,-1); ((-1),(1,0)) on
    # (-1,1,0),(-1,0,1): disjoint, so the product vanishes identically
    row = projection_product(
        rep, frozenset({1}), canonical_label(((1, 0), (-1,))),
        frozenset({2}), canonical_label(((-1,), (1, 0))))
    assert row.trace == 0 and row.rank == 0 and row.norm_est == 0.0


def test_projection_product_rank_one_quarter():
    rep = irrep((1, 0, -1))
    S, T = named_subgroups(3)
    row = projection_product(rep, S, trivial_label(3, S),
                             T, trivial_label(3, T))
    q = Rational(1, 4)
    assert row.trace == row.lower == row.upper == q and row.rank == 1
    assert abs(row.norm_est - 0.25) < 1e-12


def test_projection_product_agrees_with_full_matrices():
    # same quantity through materialized matrices and norm_bracket
    rep = irrep((1, 0, -1))
    S, T = named_subgroups(3)
    p = isotypic_projection(rep, S, trivial_label(3, S)).matrix()
    q = isotypic_projection(rep, T, trivial_label(3, T)).matrix()
    est, lower, upper = norm_bracket(p @ q @ p, rep.gram)
    assert lower == upper == Rational(1, 4)
    assert abs(est - 0.25) < 1e-12


def test_decay_closed_form_small():
    S, T = named_subgroups(3)
    rows = decay_experiment(3, S, trivial_label(3, S), T,
                            trivial_label(3, T), 3)
    assert [r.upper for r in rows] == \
        [Rational(1, (m + 1) ** 2) for m in range(4)]
    # product operator norm is the square root: 1, 1/2, 1/3, 1/4
    assert [round(r.norm_est ** 0.5, 9) for r in rows] == \
        [round(1 / (m + 1), 9) for m in range(4)]

    S4, T4 = named_subgroups(4)
    row = decay_experiment(4, S4, trivial_label(4, S4), T4,
                           trivial_label(4, T4), 1)[1]
    assert row.upper == Rational(1, comb(3, 2) ** 2)


def test_decay_csv_format():
    S, T = named_subgroups(3)
    rows = decay_experiment(3, S, trivial_label(3, S), T,
                            trivial_label(3, T), 1)
    text = decay_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == "m,dim,trace_num_den,norm_est,lower,upper"
    assert lines[1] == "0,1,1,1.0,1,1"
    assert lines[2] == "1,8,1/4,0.25,1/4,1/4"


def test_block_support_projection_and_offdiagonal():
    rep = irrep((1, 0, -1))
    S = frozenset({1})
    sigma0 = canonical_label(((1, 0), (2,)))
    proj = isotypic_projection(rep, S, sigma0)
    sup = block_support(proj.matrix(), rep, S)
    assert sup.support == {(sigma0, sigma0)}
    assert sup.max_row == sup.max_col == 1

    # a K_T projection analyzed against S spreads over several blocks;
    # compare against the brute-force block check with full matrices
    T = frozenset({2})
    tau = trivial_label(3, T)
    a = isotypic_projection(rep, T, tau).matrix()
    sup = block_support(a, rep, S)
    brute = set()
    projs = {lab: isotypic_projection(rep, S, lab).matrix()
             for lab, _ in restrict_types(rep, S)}
    for lab1, p1 in projs.items():
        for lab2, p2 in projs.items():
            if not (p1 @ a @ p2).is_zero():
                brute.add((lab1, lab2))
    assert sup.support == brute


def test_block_support_diagonal_operator():
    rep = irrep((1, 0, -1))
    S = frozenset({1})
    # any single isotypic projection is block diagonal for its own S
    for lab, _ in restrict_types(rep, S):
        sup = block_support(isotypic_projection(rep, S, lab).matrix(),
                            rep, S)
        assert all(a == b for a, b in sup.support)


def test_input_validation():
    with pytest.raises(ValueError):
        overlap_sq(3, 1, (1, 2, 0))
    with pytest.raises(ValueError):
        fixed_vector_coefficients(2, 1)
    with pytest.raises(ValueError):
        identity1_check(-1, 0)
