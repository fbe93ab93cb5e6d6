"""Irreducible gl(n) representations in the Gelfand-Tsetlin basis.

Exact sparse matrices for the generators E_{p,q}, structure-constant
verification, Weyl dimension counts, weight multiplicities and tensor
product decomposition by the weight-multiset method.

Generator conventions (all coefficients exact rationals, l_{k,i} =
lambda_{k,i} - i + 1 read off the pattern being acted on):

  E_{k,k}   xi_L = (s_k - s_{k-1}) xi_L
  E_{k,k+1} xi_L = - sum_i [prod_j (l_{k,i}-l_{k+1,j})] /
                           [prod_{j != i} (l_{k,i}-l_{k,j})] xi_{L+d_{k,i}}
  E_{k+1,k} xi_L = + sum_i [prod_j (l_{k,i}-l_{k-1,j})] /
                           [prod_{j != i} (l_{k,i}-l_{k,j})] xi_{L-d_{k,i}}

where d_{k,i} bumps entry (k, i) and terms with inadmissible target
patterns are dropped (the basis vector of an inadmissible pattern is 0).
The omitted j = i factor in the denominator implements the usual
"skip the zero term" rule; interlacing keeps the rest nonzero.
"""

from collections import Counter
from functools import lru_cache

from .linalg import QZERO, Rational, SparseMatrix, GramForm
from .patterns import (enumerate_patterns, is_dominant, pattern_norm_sq,
                       pattern_weight, shift)

__all__ = [
    "Irrep", "irrep", "dimension", "matrix_Ekk", "matrix_raise",
    "matrix_lower", "matrix_Epq", "generator", "check_rep",
    "gram_adjoint_ok", "weight_multiplicities", "tensor_decompose",
]


class Irrep:
    """An irreducible representation realized on its pattern basis.

    Patterns are in canonical (descending) order; gram holds the exact
    squared norm of each basis vector.  Instances are immutable and
    cache their generator matrices.
    """

    __slots__ = ("hw", "n", "patterns", "index", "dim", "gram",
                 "weights", "weight_spaces", "_gen")

    def __init__(self, hw):
        hw = tuple(int(v) for v in hw)
        if not is_dominant(hw):
            raise ValueError("weight %r is not dominant" % (hw,))
        self.hw = hw
        self.n = len(hw)
        self.patterns = enumerate_patterns(hw)
        self.index = {p: i for i, p in enumerate(self.patterns)}
        self.dim = len(self.patterns)
        self.gram = GramForm([pattern_norm_sq(p) for p in self.patterns])
        self.weights = [pattern_weight(p) for p in self.patterns]
        spaces = {}
        for i, w in enumerate(self.weights):
            spaces.setdefault(w, []).append(i)
        self.weight_spaces = spaces
        self._gen = {}

    def __repr__(self):
        return "Irrep(hw=%r, dim=%d)" % (self.hw, self.dim)


@lru_cache(maxsize=None)
def irrep(hw):
    return Irrep(tuple(hw))


def dimension(hw):
    """Weyl dimension formula: prod_{i<j} (hw_i - hw_j + j - i)/(j - i)."""
    hw = tuple(hw)
    if not is_dominant(hw):
        raise ValueError("weight %r is not dominant" % (hw,))
    n = len(hw)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= hw[i] - hw[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# generator matrices


def matrix_Ekk(rep, k):
    if not 1 <= k <= rep.n:
        raise ValueError("k = %d out of range" % k)
    key = ("d", k)
    if key in rep._gen:
        return rep._gen[key]
    m = SparseMatrix(rep.dim, rep.dim)
    for j, p in enumerate(rep.patterns):
        n = rep.n
        sk = sum(p[n - k])
        sk1 = sum(p[n - k + 1]) if k > 1 else 0
        v = sk - sk1
        if v:
            m.cols[j][j] = Rational(v)
    rep._gen[key] = m
    return m


def _l_row(row):
    return [v - i for i, v in enumerate(row)]


def matrix_raise(rep, k):
    """Matrix of E_{k,k+1} on the pattern basis (1 <= k <= n-1)."""
    if not 1 <= k <= rep.n - 1:
        raise ValueError("k = %d out of range" % k)
    key = ("r", k)
    if key in rep._gen:
        return rep._gen[key]
    m = SparseMatrix(rep.dim, rep.dim)
    n = rep.n
    for j, p in enumerate(rep.patterns):
        lk = _l_row(p[n - k])
        lk1 = _l_row(p[n - k - 1])       # row k+1
        for i in range(k):
            target = shift(p, k, i + 1, +1)
            if target is None:
                continue
            li = lk[i]
            num = 1
            for v in lk1:
                num *= li - v
            den = 1
            for t, v in enumerate(lk):
                if t != i:
                    den *= li - v
            coeff = Rational(-num, den)
            assert coeff, "vanishing coefficient on an admissible shift"
            m.cols[j][rep.index[target]] = coeff
    rep._gen[key] = m
    return m


def matrix_lower(rep, k):
    """Matrix of E_{k+1,k} on the pattern basis (1 <= k <= n-1)."""
    if not 1 <= k <= rep.n - 1:
        raise ValueError("k = %d out of range" % k)
    key = ("l", k)
    if key in rep._gen:
        return rep._gen[key]
    m = SparseMatrix(rep.dim, rep.dim)
    n = rep.n
    for j, p in enumerate(rep.patterns):
        lk = _l_row(p[n - k])
        lkm = _l_row(p[n - k + 1]) if k > 1 else []   # row k-1
        for i in range(k):
            target = shift(p, k, i + 1, -1)
            if target is None:
                continue
            li = lk[i]
            num = 1
            for v in lkm:
                num *= li - v
            den = 1
            for t, v in enumerate(lk):
                if t != i:
                    den *= li - v
            coeff = Rational(num, den)
            assert coeff, "vanishing coefficient on an admissible shift"
            m.cols[j][rep.index[target]] = coeff
    rep._gen[key] = m
    return m


def matrix_Epq(rep, p, q):
    """Matrix of E_{p,q}, p != q, via nested commutators of simple steps.

    The recursion is fixed as E_{p,q} = [E_{p,r}, E_{r,q}] with r one step
    from p toward q, which makes the output deterministic; any admissible
    r gives the same matrix.
    """
    if p == q:
        raise ValueError("use matrix_Ekk for diagonal generators")
    if not (1 <= p <= rep.n and 1 <= q <= rep.n):
        raise ValueError("indices (%d, %d) out of range" % (p, q))
    key = ("e", p, q)
    if key in rep._gen:
        return rep._gen[key]
    if q == p + 1:
        m = matrix_raise(rep, p)
    elif q == p - 1:
        m = matrix_lower(rep, q)
    else:
        r = p + 1 if q > p else p - 1
        a = matrix_Epq(rep, p, r)
        b = matrix_Epq(rep, r, q)
        m = a @ b - b @ a
    rep._gen[key] = m
    return m


def generator(rep, p, q):
    return matrix_Ekk(rep, p) if p == q else matrix_Epq(rep, p, q)


# ---------------------------------------------------------------------------
# verification


class RepCheck:
    """Outcome of a structure-constant sweep; falsy when a relation fails."""

    __slots__ = ("ok", "violation", "checked")

    def __init__(self, ok, violation, checked):
        self.ok = ok
        self.violation = violation
        self.checked = checked

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "RepCheck(ok, %d relations)" % self.checked
        return "RepCheck(violated at (p,q,r,s)=%r)" % (self.violation,)


def check_rep(rep):
    """Verify [E_{p,q}, E_{r,s}] = d_{qr} E_{p,s} - d_{sp} E_{r,q} exactly.

    Sweeps every index 4-tuple (commutators are checked once per unordered
    generator pair; the swapped relation is its negative).  Returns a
    RepCheck naming the first violating tuple, if any.
    """
    n = rep.n
    gens = {}
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            gens[(p, q)] = generator(rep, p, q)
    labels = sorted(gens)
    checked = 0
    for a in range(len(labels)):
        p, q = labels[a]
        A = gens[(p, q)]
        for b in range(a, len(labels)):
            r, s = labels[b]
            B = gens[(r, s)]
            lhs = A @ B - B @ A
            expected = SparseMatrix(rep.dim, rep.dim)
            if q == r:
                expected = expected + gens[(p, s)]
            if s == p:
                expected = expected - gens[(r, q)]
            checked += 1
            if lhs != expected:
                return RepCheck(False, (p, q, r, s), checked)
    return RepCheck(True, None, checked)


def gram_adjoint_ok(rep, k=None):
    """Exact adjointness of raising and lowering for the Gram form:
    <E_{k,k+1} u, v>_G = <u, E_{k+1,k} v>_G for all u, v."""
    ks = range(1, rep.n) if k is None else [k]
    gram = rep.gram
    for kk in ks:
        up = matrix_raise(rep, kk)
        dn = matrix_lower(rep, kk)
        seen = 0
        for c, col in enumerate(up.cols):
            for r, v in col.items():
                if gram[r] * v != gram[c] * dn.cols[r].get(c, QZERO):
                    return False
                seen += 1
        if dn.nnz() != seen:
            return False
    return True


# ---------------------------------------------------------------------------
# weights and tensor products


@lru_cache(maxsize=None)
def weight_multiplicities(hw):
    """Multiset of torus weights of the irreducible with highest weight hw."""
    return Counter(pattern_weight(p) for p in enumerate_patterns(tuple(hw)))


def tensor_decompose(hw1, hw2):
    """Multiplicities of the irreducible constituents of a tensor product.

    Convolves the two weight multisets, then repeatedly strips the
    lexicographically largest remaining weight (necessarily dominant)
    together with that irreducible's full weight multiset.  Returns
    [(hw, mult), ...] in the order extracted (descending highest weight).
    """
    hw1, hw2 = tuple(hw1), tuple(hw2)
    if len(hw1) != len(hw2):
        raise ValueError("weights live in different gl(n)")
    c1 = weight_multiplicities(hw1)
    c2 = weight_multiplicities(hw2)
    prod = Counter()
    for w1, m1 in c1.items():
        for w2, m2 in c2.items():
            prod[tuple(a + b for a, b in zip(w1, w2))] += m1 * m2
    out = []
    while prod:
        top = max(prod)
        mult = prod[top]
        assert mult > 0 and is_dominant(top)
        for w, c in weight_multiplicities(top).items():
            left = prod[w] - mult * c
            assert left >= 0
            if left:
                prod[w] = left
            else:
                del prod[w]
        out.append((top, mult))
    return out
