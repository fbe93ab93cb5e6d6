"""The distinguished fixed vector and its exact overlap profile.

Only the irreducibles with highest weight (m, 0, ..., 0, -m) contain a
vector fixed by the lower-right U(n-1) block subgroup.  Its coefficients
over the zero-row-sum patterns obey a two-term recurrence; the squared
overlaps with the normalized basis vectors have a closed form whose
values sum to exactly 1.  Both routes are compared here, exactly.
"""

from gtkit import (fixed_vector_coefficients, overlap_sq, solve_fixed_vector,
                   zero_weight_patterns, zero_weight_tuples)

n = 3
for m in (1, 2, 4):
    print("n=%d, m=%d" % (n, m))
    coeffs = fixed_vector_coefficients(n, m).coeffs
    rep, vec = solve_fixed_vector(n, m)
    norm_sq = sum(vec[i] * vec[i] * rep.gram[i] for i in range(rep.dim))
    total = 0
    print("  M            a_M (recurrence)   |overlap|^2")
    for M, pat in zero_weight_patterns(n, m):
        idx = rep.index[pat]
        solved = vec[idx] * vec[idx] * rep.gram[idx] / norm_sq
        formula = overlap_sq(n, m, M)
        assert solved == formula
        total += formula
        print("  %-12s %-18s %s" % (M, coeffs[M], formula))
    assert total == 1
    print("  sum of squared overlaps: %s" % total)
    print()

# for fixed inner entries the overlap with each basis vector decays like
# 1/binomial(m+n-2, n-2) as m grows; the largest one:
print("largest squared overlap by m (n=3):")
for m in range(1, 9):
    top = max(overlap_sq(3, m, M) for M in zero_weight_tuples(3, m))
    print("  m=%d  %s" % (m, top))
