"""Decay of products of isotypic projections across an irreducible family.

For the two U(n-1) block subgroups (upper-left and lower-right), the
product p_sigma p_tau p_sigma of isotypic projections has largest
eigenvalue 1/binomial(m+n-2, n-2)^2 on the irreducible with highest
weight (m, 0, ..., 0, -m) when both labels are trivial: the two fixed
lines tilt away from each other as m grows.  Nontrivial labels show the
same decay, witnessed by exact traces.
"""

from gtkit import (block_support, canonical_label, decay_csv,
                   decay_experiment, irrep, isotypic_projection,
                   named_subgroups, trivial_label)

n = 3
S, T = named_subgroups(n)
print("subgroups: S=%s (upper-left), T=%s (lower-right)"
      % (sorted(S), sorted(T)))

print("\ntrivial/trivial eigenvalues (exact bracket, lower = upper):")
rows = decay_experiment(n, S, trivial_label(n, S), T, trivial_label(n, T), 8)
print(decay_csv(rows))

# the operator norm of p_sigma p_tau itself is the square root
print("product operator norms:",
      ["%.4f" % row.norm_est ** 0.5 for row in rows])

# nontrivial labels: exact traces still die off
sigma = canonical_label(((1, 0), (-1,)))
tau = canonical_label(((1,), (0, -1)))
print("\nnontrivial labels sigma=%s tau=%s:" % (sigma, tau))
rows = decay_experiment(n, frozenset({1}), sigma, frozenset({2}), tau, 12)
for row in rows:
    print("  m=%-3d trace=%-10s largest eigenvalue in [%s, %s]"
          % (row.m, row.trace, row.lower, row.upper))

# harmonic block support: a K_T projection seen through the K_S grid
rep = irrep((1, 0, -1))
a = isotypic_projection(rep, T, trivial_label(n, T)).matrix()
sup = block_support(a, rep, frozenset({1}))
print("\nblock support of the trivial K_T projection over K_S labels:")
print("  %d nonzero blocks, max per row %d, max per column %d"
      % (len(sup.support), sup.max_row, sup.max_col))
