"""Walk through the pattern basis of a few SU(3) irreducibles.

Every irreducible representation of gl(n) with dominant highest weight
carries an orthogonal basis indexed by triangular integer patterns whose
consecutive rows interlace.  This script enumerates them, evaluates
their exact squared norms, and checks the count against the Weyl
dimension formula.
"""

from gtkit import (dimension, enumerate_patterns, pattern_norm_sq,
                   pattern_weight, sl_normalize, zero_weight_patterns)

# the adjoint representation of SU(3)
hw = (1, 0, -1)
patterns = enumerate_patterns(hw)
print("highest weight %s: %d patterns (Weyl formula gives %d)"
      % (hw, len(patterns), dimension(hw)))
print()

print("pattern (top row first)          weight        |xi|^2")
for p in patterns:
    print("%-32s %-13s %s" % (p, pattern_weight(p), pattern_norm_sq(p)))
print()

# weights come in a multiset symmetric under negation + reversal here,
# because (1,0,-1) is its own dual
weights = [pattern_weight(p) for p in patterns]
assert sorted(weights) == sorted(tuple(-v for v in reversed(w))
                                 for w in weights)

# two highest weights describe the same SU(n) representation exactly
# when they differ by a constant shift
print("sl-normal form of (1,0,-1):", sl_normalize((1, 0, -1)))
print("sl-normal form of (3,2,2): ", sl_normalize((3, 2, 2)))
print()

# the zero-weight subspace of (m,0,-m) is indexed by decreasing tuples
for m in (1, 2, 3):
    pairs = zero_weight_patterns(3, m)
    print("m=%d zero-row-sum patterns:" % m,
          [M for M, _ in pairs])
