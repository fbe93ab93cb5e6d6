"""Block subgroups: blocks, branching, projections, fixed vectors."""

import itertools
from collections import Counter

import pytest

from gtkit.linalg import SparseMatrix, is_gram_selfadjoint
from gtkit.reps import dimension, generator, irrep, matrix_Ekk
from gtkit.subgroups import (blocks_of, branching_by_top_row,
                             canonical_label, commutation_family_ok,
                             fixed_vectors, format_label,
                             isotypic_decomposition, isotypic_projection,
                             label_dim, named_subgroups, parse_label,
                             projections_commute, restrict_types,
                             split_weight, trivial_label)


def test_blocks_of():
    assert blocks_of(5, {1, 2, 4}) == ((1, 2, 3), (4, 5))
    assert blocks_of(3, set()) == ((1,), (2,), (3,))
    assert blocks_of(4, {1, 2, 3}) == ((1, 2, 3, 4),)
    with pytest.raises(ValueError):
        blocks_of(3, {3})


def test_named_subgroups():
    assert named_subgroups(3) == (frozenset({1}), frozenset({2}))
    assert named_subgroups(5) == (frozenset({1, 2, 3}),
                                  frozenset({2, 3, 4}))
    s_upper, _ = named_subgroups(4)
    assert blocks_of(4, s_upper) == ((1, 2, 3), (4,))
    with pytest.raises(ValueError):
        named_subgroups(2)


def test_labels():
    lab = canonical_label(((1, 0), (-1,)))
    assert lab == ((2, 1), (0,))
    assert label_dim(lab) == 2
    assert trivial_label(3, {1}) == ((0, 0), (0,))
    assert parse_label("1,0|0") == ((1, 0), (0,))
    assert format_label(((1, 0), (0,))) == "1,0|0"
    with pytest.raises(ValueError):
        canonical_label(((0, 1), (0,)))


def test_restrict_standard_rep():
    rep = irrep((1, 0, 0))
    assert restrict_types(rep, {1}) == [
        (((1, 0), (0,)), 1), (((0, 0), (1,)), 1)]


def test_restrict_to_whole_group():
    rep = irrep((2, 1, 0))
    assert restrict_types(rep, {1, 2}) == [(((2, 1, 0),), 1)]


def test_restrict_chain_matches_top_row_grouping():
    for hw in [(1, 0, -1), (2, 1, 0), (3, 0, -1), (1, 1, 0, 0), (2, 0, 0, -1)]:
        rep = irrep(hw)
        chain = frozenset(range(1, rep.n - 1))
        assert dict(restrict_types(rep, chain)) == \
            branching_by_top_row(rep)[0]


def test_restrict_dimension_totals():
    for hw in [(1, 0, -1), (2, 1, 0), (2, 1, 0, 0)]:
        rep = irrep(hw)
        for r in range(rep.n):
            for S in itertools.combinations(range(1, rep.n), r):
                total = sum(mult * label_dim(lab)
                            for lab, mult in restrict_types(rep, S))
                assert total == rep.dim


def test_isotypic_projection_standard_rep():
    rep = irrep((1, 0, 0))
    proj = isotypic_projection(rep, {1}, ((1, 0), (0,)))
    m = proj.matrix()
    # the two patterns with second row (1, 0) span the component
    expect = SparseMatrix(3, 3)
    for i, p in enumerate(rep.patterns):
        if p[1] == (1, 0):
            expect.cols[i][i] = 1
    assert m == expect and proj.rank == 2


def test_isotypic_projection_properties():
    rep = irrep((1, 0, -1))
    total = SparseMatrix.zeros(rep.dim, rep.dim)
    for proj in isotypic_decomposition(rep, {1}):
        m = proj.matrix()
        assert (m @ m) == m
        assert is_gram_selfadjoint(m, rep.gram)
        total = total + m
    assert total == SparseMatrix.identity(rep.dim)


def test_isotypic_projection_commutes_with_subalgebra():
    rep = irrep((1, 0, -1))
    S = {1}
    proj = isotypic_projection(rep, S, canonical_label(((1, 0), (-1,))))
    m = proj.matrix()
    gens = []
    for block in blocks_of(rep.n, S):
        for p in block:
            for q in block:
                if p != q:
                    gens.append(generator(rep, p, q))
    for k in range(1, rep.n):
        gens.append(matrix_Ekk(rep, k) - matrix_Ekk(rep, k + 1))
    for gen in gens:
        assert (gen @ m) == (m @ gen)


def test_isotypic_projection_absent_label_is_zero():
    rep = irrep((1, 0, 0))
    proj = isotypic_projection(rep, {1}, ((5, 0), (0,)))
    assert proj.is_zero() and proj.matrix().is_zero()


def test_fixed_vectors():
    s_upper, t_lower = named_subgroups(3)
    for m in range(4):
        rep = irrep((m, 0, -m))
        assert len(fixed_vectors(rep, t_lower)) == 1
    assert fixed_vectors(irrep((1, 0, 0)), t_lower) == []
    assert len(fixed_vectors(irrep((0, 0, 0)), t_lower)) == 1


def test_fixed_vectors_sit_in_trivial_component():
    rep = irrep((2, 0, -2))
    _, t_lower = named_subgroups(3)
    vecs = fixed_vectors(rep, t_lower)
    proj = isotypic_projection(rep, t_lower, trivial_label(3, t_lower))
    assert proj.rank == len(vecs) == 1
    sparse = {i: v for i, v in enumerate(vecs[0]) if v}
    assert proj.apply(sparse) == sparse


def test_projections_commute_nested_and_disjoint():
    rep = irrep((1, 0, -1))
    decs = {S: isotypic_decomposition(rep, S)
            for S in (frozenset(), frozenset({1}), frozenset({1, 2}))}
    for p in decs[frozenset({1})]:
        for q in decs[frozenset()]:
            assert projections_commute(p, q)
        for q in decs[frozenset({1, 2})]:
            assert projections_commute(p, q)
    assert commutation_family_ok(rep, {1}, set())

    rep4 = irrep((1, 0, 0, -1))
    assert commutation_family_ok(rep4, {1}, {3})
    ps = isotypic_decomposition(rep4, {1})
    qs = isotypic_decomposition(rep4, {3})
    for p in ps[:3]:
        for q in qs[:3]:
            assert projections_commute(p, q)


def test_partial_sum_projection_commutes():
    # P_F summed over a finite set of K_{S u T} labels commutes with the
    # K_S and K_T isotypic projections (nested-subgroup commutation)
    rep = irrep((1, 0, 0, -1))
    S, T = frozenset({1}), frozenset({2})
    union = S | T
    big = isotypic_decomposition(rep, union)
    pf = big[0].matrix() + big[1].matrix()
    for sub in (S, T):
        for proj in isotypic_decomposition(rep, sub):
            m = proj.matrix()
            assert (pf @ m) == (m @ pf)


def test_branching_chain_consistency():
    # restriction through K_S <= K_T <= K is consistent: branching each
    # occurring K_T label to K_S reproduces the direct K_S multiplicities
    rep = irrep((1, 0, -1))
    n = rep.n
    T = frozenset({1, 2})
    S = frozenset({1})
    direct = Counter(dict(restrict_types(rep, S)))
    via = Counter()
    for tlabel, tmult in restrict_types(rep, T):
        # each K_T block is a gl irrep; restrict it to its sub-blocks
        weight = _label_weight(rep, T, tlabel)
        blocks_t = blocks_of(n, T)
        combo = [((), 1)]
        for block, part in zip(blocks_t, split_weight(weight, blocks_t)):
            local_roots = [i - block[0] + 1 for i in S
                           if block[0] <= i < block[-1]]
            sub = irrep(part)
            expanded = []
            for slabel, smult in restrict_types(sub, local_roots):
                shift, rem = divmod(
                    sum(part) - sum(v for pt in slabel for v in pt),
                    len(part))
                assert rem == 0
                exact = tuple(tuple(v + shift for v in pt) for pt in slabel)
                expanded.append((exact, smult))
            combo = [(acc + exact, c * smult)
                     for acc, c in combo for exact, smult in expanded]
        for parts, mult in combo:
            via[canonical_label(parts)] += tmult * mult
    assert via == direct


def _label_weight(rep, S, label):
    from gtkit.subgroups import _label_weight_in
    return _label_weight_in(rep, S, label)
