"""Block subgroups of SU(n), branching, isotypic projections, fixed vectors.

A subset S of the simple-root indices {1, ..., n-1} determines the
block-diagonal subgroup K_S: positions i and i+1 lie in the same block
exactly when i is in S.  K_S always contains the full torus, so every
isotypic projection is weight-graded.

Irreducible K_S-representations are labelled by per-block dominant
integer tuples up to a single global constant shift across all blocks
(the determinant condition ties the blocks' centers together); labels
are stored in the canonical shift with global minimum entry 0.

Projections are computed by exact linear algebra instead of character
integrals: locate the highest-weight vectors of the label inside the
matching weight space (joint kernel of the within-block raising
generators), saturate under the within-block lowering generators, and
project G-orthogonally onto the resulting subspace.
"""

from .linalg import (QONE, QZERO, RankDeficiencyError, SparseMatrix,
                     dense_solve, gram_projection, kernel_basis_from_rows,
                     sparse_to_dense, vec_add_scaled, vec_dot_gram)
from .reps import dimension, matrix_Epq, matrix_lower, matrix_raise

__all__ = [
    "blocks_of", "named_subgroups", "split_weight", "canonical_label",
    "label_dim", "trivial_label", "parse_label", "format_label",
    "restrict_types", "highest_vectors", "IsotypicProjection",
    "isotypic_projection", "isotypic_decomposition", "fixed_vectors",
    "branching_by_top_row", "commutation_family_ok", "projections_commute",
]


def _check_subset(n, S):
    S = frozenset(int(i) for i in S)
    if not S <= set(range(1, n)):
        raise ValueError("root subset %r not inside {1..%d}" % (sorted(S), n - 1))
    return S


def blocks_of(n, S):
    """Ordered partition of {1..n} into the consecutive blocks of K_S."""
    S = _check_subset(n, S)
    blocks = []
    current = [1]
    for i in range(1, n):
        if i in S:
            current.append(i + 1)
        else:
            blocks.append(tuple(current))
            current = [i + 1]
    blocks.append(tuple(current))
    return tuple(blocks)


def named_subgroups(n):
    """The two displayed U(n-1) block subgroups: upper-left and lower-right.

    Returns (S_upper, T_lower) with S_upper = {1..n-2} (block {1..n-1})
    and T_lower = {2..n-1} (block {2..n}).  Needs n >= 3.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    return frozenset(range(1, n - 1)), frozenset(range(2, n))


# ---------------------------------------------------------------------------
# labels


def split_weight(weight, blocks):
    return tuple(tuple(weight[i - 1] for i in block) for block in blocks)


def canonical_label(label):
    """Shift all entries by a common constant so the global minimum is 0."""
    label = tuple(tuple(int(v) for v in part) for part in label)
    for part in label:
        if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
            raise ValueError("label part %r is not dominant" % (part,))
    low = min(v for part in label for v in part)
    return tuple(tuple(v - low for v in part) for part in label)


def label_dim(label):
    d = 1
    for part in label:
        d *= dimension(part)
    return d


def trivial_label(n, S):
    return tuple(tuple(0 for _ in block) for block in blocks_of(n, S))


def format_label(label):
    return "|".join(",".join(str(v) for v in part) for part in label)


def parse_label(text):
    parts = []
    for chunk in text.split("|"):
        parts.append(tuple(int(v) for v in chunk.split(",")))
    return canonical_label(tuple(parts))


def _label_weight_in(rep, S, label):
    """The torus weight realizing the label inside rep, or None.

    Undoes the canonical shift: within a fixed irreducible all weights
    share the same entry total, which pins the shift; a fractional shift
    means the label cannot occur.
    """
    blocks = blocks_of(rep.n, S)
    if tuple(len(b) for b in blocks) != tuple(len(p) for p in label):
        raise ValueError("label %r does not match the block sizes of S"
                         % (label,))
    total = sum(rep.hw)
    lsum = sum(v for part in label for v in part)
    shift, remainder = divmod(total - lsum, rep.n)
    if remainder:
        return None
    flat = [v + shift for part in label for v in part]
    return tuple(flat)


# ---------------------------------------------------------------------------
# branching


def _block_dominant(weight, blocks):
    for block in blocks:
        for a, b in zip(block, block[1:]):
            if weight[a - 1] < weight[b - 1]:
                return False
    return True


def highest_vectors(rep, S, weight):
    """Basis of the K_S-highest-weight vectors of the given torus weight:
    the joint kernel of the within-block simple raising generators
    restricted to that weight space.  Sparse dict vectors over the
    pattern basis."""
    S = _check_subset(rep.n, S)
    idxs = rep.weight_spaces.get(tuple(weight))
    if not idxs:
        return []
    raisers = [matrix_raise(rep, p) for p in sorted(S)]
    rows = {}
    for local, j in enumerate(idxs):
        for gid, gen in enumerate(raisers):
            for r, v in gen.cols[j].items():
                rows.setdefault((gid, r), {})[local] = v
    kernel = kernel_basis_from_rows(list(rows.values()), len(idxs))
    out = []
    for vec in kernel:
        out.append({idxs[i]: v for i, v in enumerate(vec) if v})
    return out


def restrict_types(rep, S):
    """Isotypic decomposition of rep restricted to K_S.

    Returns [(label, multiplicity), ...] over the occurring labels, in
    descending order of the concatenated canonical label.  Multiplicity
    is the number of K_S-highest-weight vectors at the label's weight;
    the totals satisfy sum(mult * label_dim) = rep.dim.
    """
    S = _check_subset(rep.n, S)
    blocks = blocks_of(rep.n, S)
    found = []
    for weight in rep.weight_spaces:
        if not _block_dominant(weight, blocks):
            continue
        mult = len(highest_vectors(rep, S, weight))
        if mult:
            found.append((canonical_label(split_weight(weight, blocks)), mult))
    found.sort(key=lambda t: tuple(v for part in t[0] for v in part),
               reverse=True)
    return found


def branching_by_top_row(rep):
    """Multiplicity-one branching to the upper-left chain subgroup
    (S = {1..n-2}) read directly off the next-to-top pattern rows.

    Independent of the kernel computation in restrict_types: interlacing
    makes row n-1 of the patterns enumerate the occurring labels, each
    appearing dim-of-label many times.
    """
    n = rep.n
    if n < 2:
        raise ValueError("need n >= 2")
    blocks = blocks_of(n, range(1, n - 1))
    counts = {}
    total = sum(rep.hw)
    for p in rep.patterns:
        row = p[1]
        label = canonical_label((row, (total - sum(row),)))
        counts[label] = counts.get(label, 0) + 1
    for label, count in counts.items():
        assert count == label_dim(label)
    return {label: 1 for label in counts}, blocks


# ---------------------------------------------------------------------------
# isotypic projections


class IsotypicProjection:
    """G-orthogonal projection onto the full isotypic component of a label.

    Stores a weight-graded exact basis of the component; the projection
    matrix is materialized on demand.  The basis Gram matrix is block
    diagonal over weights, so coordinate solves work one weight at a
    time.  A label that does not occur yields the zero projection.
    """

    __slots__ = ("rep", "subgroup", "label", "basis", "basis_weights",
                 "by_weight", "_matrix", "_block_inv")

    def __init__(self, rep, subgroup, label, basis):
        self.rep = rep
        self.subgroup = frozenset(subgroup)
        self.label = label
        self.basis = basis
        weights = []
        by_weight = {}
        for pos, vec in enumerate(basis):
            ws = {rep.weights[i] for i in vec}
            assert len(ws) == 1, "component basis vector mixes weights"
            w = ws.pop()
            weights.append(w)
            by_weight.setdefault(w, []).append(pos)
        self.basis_weights = weights
        self.by_weight = by_weight
        self._matrix = None
        self._block_inv = {}

    @property
    def rank(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def gram_matrix(self):
        """Full basis Gram matrix B^T G B (block diagonal over weights)."""
        g = self.rep.gram
        b = self.basis
        r = len(b)
        out = [[QZERO] * r for _ in range(r)]
        for positions in self.by_weight.values():
            for i in positions:
                for j in positions:
                    if j >= i:
                        val = vec_dot_gram(b[i], b[j], g)
                        out[i][j] = val
                        out[j][i] = val
        return out

    def _weight_block_inverse(self, weight):
        inv = self._block_inv.get(weight)
        if inv is None:
            from .linalg import dense_inverse
            g = self.rep.gram
            pos = self.by_weight[weight]
            block = [[vec_dot_gram(self.basis[i], self.basis[j], g)
                      for j in pos] for i in pos]
            inv = dense_inverse(block)
            self._block_inv[weight] = inv
        return inv

    def coords(self, vec):
        """Coefficients c with p(vec) = sum_i c_i basis_i, as a dict
        position -> value; solved per weight block."""
        if not self.basis or not vec:
            return {}
        g = self.rep.gram
        touched = {self.rep.weights[i] for i in vec}
        out = {}
        for weight in touched:
            pos = self.by_weight.get(weight)
            if not pos:
                continue
            bt = [vec_dot_gram(self.basis[i], vec, g) for i in pos]
            if not any(bt):
                continue
            inv = self._weight_block_inverse(weight)
            for row, i in enumerate(pos):
                ci = sum((inv[row][t] * bt[t] for t in range(len(pos))
                          if bt[t]), QZERO)
                if ci:
                    out[i] = ci
        return out

    def apply(self, vec):
        """Image of a sparse dict vector under the projection."""
        out = {}
        for i, ci in self.coords(vec).items():
            vec_add_scaled(out, self.basis[i], ci)
        return out

    def matrix(self):
        if self._matrix is None:
            if not self.basis:
                self._matrix = SparseMatrix.zeros(self.rep.dim, self.rep.dim)
            else:
                self._matrix = gram_projection(self.basis, self.rep.gram)
        return self._matrix

    def __repr__(self):
        return "IsotypicProjection(hw=%r, S=%r, label=%r, rank=%d)" % (
            self.rep.hw, sorted(self.subgroup), self.label, self.rank)


def _echelon_insert(groups, weight, vec):
    # reduce vec against the stored echelon of its weight group; returns the
    # reduced vector if independent, else None
    rows = groups.setdefault(weight, [])
    for pivot, basis_vec in rows:
        f = vec.get(pivot)
        if f:
            vec_add_scaled(vec, basis_vec, -f)
    if not vec:
        return None
    pivot = min(vec)
    inv = QONE / vec[pivot]
    vec = {i: v * inv for i, v in vec.items()}
    rows.append((pivot, vec))
    rows.sort(key=lambda t: t[0])
    return vec


def isotypic_projection(rep, S, label):
    """Exact projection onto the label's isotypic component in rep|K_S.

    Anchors the label to its torus weight, takes the highest-weight
    kernel there and saturates it under the within-block lowering
    generators until the dimension stabilizes; the final dimension must
    equal multiplicity * label_dim, which is asserted.
    """
    S = _check_subset(rep.n, S)
    label = canonical_label(label)
    weight = _label_weight_in(rep, S, label)
    if weight is None:
        return IsotypicProjection(rep, S, label, [])
    tops = highest_vectors(rep, S, weight)
    if not tops:
        return IsotypicProjection(rep, S, label, [])
    lowerers = [matrix_lower(rep, p) for p in sorted(S)]
    groups = {}
    basis = []
    queue = []
    for vec in tops:
        reduced = _echelon_insert(groups, weight, dict(vec))
        if reduced is not None:
            basis.append(reduced)
            queue.append(reduced)
    bound = len(tops) * label_dim(label)
    while queue:
        vec = queue.pop(0)
        for gen in lowerers:
            img = gen.apply(vec)
            if not img:
                continue
            w = {rep.weights[i] for i in img}
            assert len(w) == 1
            reduced = _echelon_insert(groups, w.pop(), img)
            if reduced is not None:
                basis.append(reduced)
                queue.append(reduced)
        assert len(basis) <= bound, "saturation exceeded mult * dim bound"
    assert len(basis) == bound, "saturation stopped short of mult * dim"
    return IsotypicProjection(rep, S, label, basis)


def isotypic_decomposition(rep, S):
    """All occurring projections for K_S, in restrict_types order."""
    return [isotypic_projection(rep, S, label)
            for label, _ in restrict_types(rep, S)]


# ---------------------------------------------------------------------------
# fixed vectors


def fixed_vectors(rep, S):
    """Basis of the K_S-fixed vectors: the constant-entry weight space
    intersected with the joint kernel of every within-block off-diagonal
    generator.  Dense tuples over the pattern basis (primitive integer
    vectors)."""
    S = _check_subset(rep.n, S)
    n = rep.n
    total = sum(rep.hw)
    shift, remainder = divmod(total, n)
    if remainder:
        return []
    weight = (shift,) * n
    idxs = rep.weight_spaces.get(weight)
    if not idxs:
        return []
    gens = []
    for block in blocks_of(n, S):
        for p in block:
            for q in block:
                if p != q:
                    gens.append(matrix_Epq(rep, p, q))
    rows = {}
    for local, j in enumerate(idxs):
        for gid, gen in enumerate(gens):
            for r, v in gen.cols[j].items():
                rows.setdefault((gid, r), {})[local] = v
    kernel = kernel_basis_from_rows(list(rows.values()), len(idxs))
    out = []
    for vec in kernel:
        full = {idxs[i]: v for i, v in enumerate(vec) if v}
        out.append(sparse_to_dense(full, rep.dim))
    return out


# ---------------------------------------------------------------------------
# commutation checks


def projections_commute(p, q):
    """Exact matrix check [p, q] = 0; intended for small representations."""
    a = p.matrix()
    b = q.matrix()
    return (a @ b) == (b @ a)


def commutation_family_ok(rep, S, T):
    """Exact commutation of every pair (p_sigma, p_tau), sigma over K_S
    labels and tau over K_T labels, verified weight space by weight space.

    Both families are weight-graded (K_S and K_T contain the torus), so
    each commutator splits over weight spaces.  Per weight, the S-side
    component bases assemble into an invertible square matrix Q (this
    certifies completeness); p_tau commutes with every p_sigma iff the
    matrix of p_tau in Q-coordinates is block diagonal with respect to
    the sigma-grouping of Q's columns, since a G-selfadjoint operator
    that preserves each component also preserves its complement.
    """
    ps = isotypic_decomposition(rep, S)
    qs = isotypic_decomposition(rep, T)
    if sum(p.rank for p in ps) != rep.dim or sum(q.rank for q in qs) != rep.dim:
        return False
    by_weight_s = {}
    for si, proj in enumerate(ps):
        for vec, w in zip(proj.basis, proj.basis_weights):
            by_weight_s.setdefault(w, []).append((si, vec))
    by_weight_t = {}
    for ti, proj in enumerate(qs):
        for vec, w in zip(proj.basis, proj.basis_weights):
            by_weight_t.setdefault(w, []).append((ti, vec))
    gram = rep.gram
    for weight, idxs in rep.weight_spaces.items():
        scols = by_weight_s.get(weight, [])
        if len(scols) != len(idxs):
            return False               # completeness failed on this weight
        groups = [si for si, _ in scols]
        if len(set(groups)) <= 1:
            continue                   # a single component: nothing to check
        tcols = by_weight_t.get(weight, [])
        if not tcols:
            continue                   # p_tau vanishes here for every tau
        local = {j: i for i, j in enumerate(idxs)}
        w = len(idxs)
        Q = [[QZERO] * w for _ in range(w)]
        for cidx, (_, vec) in enumerate(scols):
            for j, v in vec.items():
                Q[local[j]][cidx] = v
        # images of Q's columns under each tau projection, stacked
        tau_ids = sorted({ti for ti, _ in tcols})
        rhs_cols = []
        for ti in tau_ids:
            proj = qs[ti]
            for _, vec in scols:
                img = proj.apply(vec)
                col = [QZERO] * w
                for j, v in img.items():
                    col[local[j]] = v
                rhs_cols.append(col)
        rhs = [[rhs_cols[c][r] for c in range(len(rhs_cols))]
               for r in range(w)]
        try:
            Z = dense_solve(Q, rhs)
        except RankDeficiencyError:
            return False
        for c in range(len(rhs_cols)):
            src = groups[c % w]
            for r in range(w):
                if Z[r][c] and groups[r] != src:
                    return False
    return True
