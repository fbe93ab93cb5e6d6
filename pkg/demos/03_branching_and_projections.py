"""Block subgroups, branching multiplicities and isotypic projections.

A subset S of simple-root indices merges adjacent diagonal entries into
blocks; the resulting subgroup K_S of SU(n) decomposes every irreducible
into isotypic components.  Each component is cut out by an exact
projection built from highest-weight kernels and lowering saturation,
never from character integrals.
"""

from gtkit import (SparseMatrix, blocks_of, irrep, isotypic_decomposition,
                   label_dim, restrict_types)

# blocks: indices i and i+1 share a block exactly when i is in S
print("blocks of S={1,2,4} in SU(5):", blocks_of(5, {1, 2, 4}))
print("blocks of S={} in SU(3):   ", blocks_of(3, set()))
print()

rep = irrep((1, 0, -1))
for S in (set(), {1}, {1, 2}):
    types = restrict_types(rep, S)
    total = sum(mult * label_dim(label) for label, mult in types)
    print("S=%-6s -> %d isotypic types, dimension total %d"
          % (sorted(S), len(types), total))
    assert total == rep.dim
print()

# the projections are exact idempotents summing to the identity
projections = isotypic_decomposition(rep, {1})
acc = SparseMatrix.zeros(rep.dim, rep.dim)
for proj in projections:
    m = proj.matrix()
    assert (m @ m) == m
    acc = acc + m
    print("label %-18s rank %d" % (proj.label, proj.rank))
assert acc == SparseMatrix.identity(rep.dim)
print("sum of projections = identity (exact)")
