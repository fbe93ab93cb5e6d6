"""Exact generator matrices and the relations they satisfy.

The raising and lowering operators act on pattern basis vectors by
bumping single entries, with rational coefficients read off the pattern.
All gl(n) commutation relations then hold exactly, and raising and
lowering are adjoint to each other for the diagonal Gram form of squared
norms.
"""

from gtkit import (check_rep, gram_adjoint_ok, irrep, matrix_Ekk,
                   matrix_Epq, matrix_lower, matrix_raise)

rep = irrep((1, 0, -1))
print("representation:", rep)

e12 = matrix_raise(rep, 1)
e21 = matrix_lower(rep, 1)
print("\nE_{1,2} entries (row, col, value):")
for r, c, v in e12.entries():
    print("  xi_%d -> %s xi_%d" % (c, v, r))

# the sl(2) triple sitting in the first two rows
h = matrix_Ekk(rep, 1) - matrix_Ekk(rep, 2)
assert (e12 @ e21 - e21 @ e12) == h
print("\n[E12, E21] = E11 - E22 holds exactly")

# non-adjacent generators come from nested commutators
e13 = matrix_Epq(rep, 1, 3)
e23 = matrix_raise(rep, 2)
assert e13 == (e12 @ e23 - e23 @ e12)
print("E13 = [E12, E23] holds exactly")

# the full structure-constant sweep, all (p,q,r,s) at once
report = check_rep(rep)
print("structure constants:", report)

# raising and lowering are exact adjoints for the Gram form
assert gram_adjoint_ok(rep)
print("raise/lower Gram adjointness: exact")

# the same checks on a larger representation
big = irrep((3, 1, -2))
print("\n%r:" % big, check_rep(big), "adjoint:", gram_adjoint_ok(big))
