"""Exact rational sparse linear algebra with Gram-weighted inner products.

Scalars are arbitrary-precision rationals (gmpy2.mpq when available,
fractions.Fraction otherwise).  Matrices are sparse, stored column-major
with no explicit zeros, and are treated as immutable once built.  All
inner products are taken with respect to a diagonal Gram form G with
strictly positive entries: <x, y>_G = sum_i x_i y_i G_i.

Floating point enters in exactly one place, the power-iteration estimate
of norm_bracket; everything else is exact.
"""

import random
from math import gcd

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rational

QZERO = Rational(0)
QONE = Rational(1)


class RankDeficiencyError(ValueError):
    """Raised when an operation requires linearly independent input."""


def rat(num, den=1):
    return Rational(num, den)


def rat_str(q):
    """Serialize a rational as 'num/den', or 'num' when the denominator is 1."""
    return str(q)


def parse_rat(s):
    return Rational(s)


# ---------------------------------------------------------------------------
# sparse vectors: dict index -> nonzero Rational


def vec_add_scaled(acc, vec, scale):
    # acc += scale * vec, dropping entries that cancel
    if not scale:
        return
    for i, v in vec.items():
        w = acc.get(i, QZERO) + scale * v
        if w:
            acc[i] = w
        else:
            acc.pop(i, None)


def vec_dot_gram(u, v, gram):
    """<u, v>_G for sparse dict vectors and a list-like diagonal Gram."""
    if len(v) < len(u):
        u, v = v, u
    total = QZERO
    for i, a in u.items():
        b = v.get(i)
        if b is not None:
            total += a * b * gram[i]
    return total


def dense_to_sparse(vec):
    return {i: Rational(v) for i, v in enumerate(vec) if v}


def sparse_to_dense(vec, length):
    out = [QZERO] * length
    for i, v in vec.items():
        out[i] = v
    return tuple(out)


# ---------------------------------------------------------------------------
# sparse matrices


class SparseMatrix:
    """Sparse exact-rational matrix; column-major, no stored zeros."""

    __slots__ = ("n_rows", "n_cols", "cols")

    def __init__(self, n_rows, n_cols, cols=None):
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.cols = cols if cols is not None else [dict() for _ in range(n_cols)]

    @classmethod
    def from_entries(cls, n_rows, n_cols, entries):
        m = cls(n_rows, n_cols)
        for r, c, v in entries:
            if not (0 <= r < n_rows and 0 <= c < n_cols):
                raise IndexError("entry (%d, %d) out of range" % (r, c))
            m.add_at(r, c, Rational(v))
        return m

    @classmethod
    def from_rows(cls, rows):
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        m = cls(n_rows, n_cols)
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    m.cols[c][r] = Rational(v)
        return m

    @classmethod
    def from_columns(cls, n_rows, columns):
        cols = [{i: Rational(v) for i, v in col.items() if v} for col in columns]
        return cls(n_rows, len(cols), cols)

    @classmethod
    def identity(cls, n):
        m = cls(n, n)
        for i in range(n):
            m.cols[i][i] = QONE
        return m

    @classmethod
    def zeros(cls, n_rows, n_cols):
        return cls(n_rows, n_cols)

    def add_at(self, r, c, v):
        # construction-time helper; accumulates and drops cancellations
        col = self.cols[c]
        w = col.get(r, QZERO) + v
        if w:
            col[r] = w
        else:
            col.pop(r, None)

    def get(self, r, c):
        return self.cols[c].get(r, QZERO)

    def nnz(self):
        return sum(len(col) for col in self.cols)

    def is_zero(self):
        return all(not col for col in self.cols)

    def entries(self):
        """All nonzero entries as (row, col, value), sorted by (row, col)."""
        out = []
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                out.append((r, c, v))
        out.sort(key=lambda e: (e[0], e[1]))
        return out

    def transpose(self):
        m = SparseMatrix(self.n_cols, self.n_rows)
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                m.cols[r][c] = v
        return m

    def scale(self, q):
        q = Rational(q)
        if not q:
            return SparseMatrix(self.n_rows, self.n_cols)
        return SparseMatrix(
            self.n_rows, self.n_cols,
            [{r: q * v for r, v in col.items()} for col in self.cols])

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other):
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ValueError("shape mismatch")
        m = SparseMatrix(self.n_rows, self.n_cols,
                         [dict(col) for col in self.cols])
        for c, col in enumerate(other.cols):
            mc = m.cols[c]
            for r, v in col.items():
                w = mc.get(r, QZERO) + v
                if w:
                    mc[r] = w
                else:
                    del mc[r]
        return m

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        if self.n_cols != other.n_rows:
            raise ValueError("shape mismatch")
        out = SparseMatrix(self.n_rows, other.n_cols)
        own = self.cols
        for c, col in enumerate(other.cols):
            acc = out.cols[c]
            for k, v in col.items():
                for r, w in own[k].items():
                    s = acc.get(r, QZERO) + v * w
                    if s:
                        acc[r] = s
                    else:
                        del acc[r]
        return out

    def apply(self, vec):
        """Matrix times sparse dict vector."""
        acc = {}
        cols = self.cols
        for k, v in vec.items():
            vec_add_scaled(acc, cols[k], v)
        return acc

    def apply_dense(self, vec):
        acc = [QZERO] * self.n_rows
        for c, col in enumerate(self.cols):
            v = vec[c]
            if v:
                for r, w in col.items():
                    acc[r] += v * w
        return tuple(acc)

    def trace(self):
        if self.n_rows != self.n_cols:
            raise ValueError("trace of a non-square matrix")
        return sum((col.get(i, QZERO) for i, col in enumerate(self.cols)),
                   QZERO)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.n_rows == other.n_rows and self.n_cols == other.n_cols
                and self.cols == other.cols)

    __hash__ = None  # mutable dicts inside

    def to_json_dict(self):
        return {"rows": self.n_rows, "cols": self.n_cols,
                "entries": [[r, c, rat_str(v)] for r, c, v in self.entries()]}

    @classmethod
    def from_json_dict(cls, d):
        return cls.from_entries(
            d["rows"], d["cols"],
            ((r, c, parse_rat(v)) for r, c, v in d["entries"]))

    def __repr__(self):
        return "SparseMatrix(%d x %d, nnz=%d)" % (
            self.n_rows, self.n_cols, self.nnz())


# ---------------------------------------------------------------------------
# Gram forms


class GramForm:
    """Diagonal of squared basis norms; every entry strictly positive."""

    __slots__ = ("diag",)

    def __init__(self, diag):
        self.diag = tuple(Rational(v) for v in diag)
        if any(v <= 0 for v in self.diag):
            raise ValueError("Gram form entries must be positive")

    def __len__(self):
        return len(self.diag)

    def __getitem__(self, i):
        return self.diag[i]

    def __iter__(self):
        return iter(self.diag)

    @classmethod
    def standard(cls, n):
        return cls([QONE] * n)


def is_gram_selfadjoint(A, gram):
    """Exact check that G*A is symmetric, i.e. A is self-adjoint for <,>_G."""
    if A.n_rows != A.n_cols:
        return False
    for c, col in enumerate(A.cols):
        for r, v in col.items():
            if gram[r] * v != gram[c] * A.get(c, r):
                return False
    return True


# ---------------------------------------------------------------------------
# small dense exact matrices: list of row-lists of Rational


def dense_from_sparse(A):
    out = [[QZERO] * A.n_cols for _ in range(A.n_rows)]
    for c, col in enumerate(A.cols):
        for r, v in col.items():
            out[r][c] = v
    return out


def dense_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = [[QZERO] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        Oi = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    if Bt[j]:
                        Oi[j] += a * Bt[j]
    return out

def dense_transpose(A):
    return [list(row) for row in zip(*A)]


def dense_trace(A):
    return sum((A[i][i] for i in range(len(A))), QZERO)


def dense_solve(A, B):
    """Solve A X = B exactly for square A; RankDeficiencyError if singular."""
    n = len(A)
    m = len(B[0]) if B else 0
    aug = [list(A[i]) + list(B[i]) for i in range(n)]
    for col in range(n):
        piv = None
        best = None
        for r in range(col, n):
            v = aug[r][col]
            if v:
                size = v.numerator.bit_length() + v.denominator.bit_length()
                if best is None or size < best:
                    best, piv = size, r
        if piv is None:
            raise RankDeficiencyError("singular system")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        inv = QONE / aug[col][col]
        row = aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                other = aug[r]
                for j in range(col, n + m):
                    other[j] -= f * row[j]
    return [row[n:] for row in aug]


def dense_inverse(A):
    n = len(A)
    eye = [[QONE if i == j else QZERO for j in range(n)] for i in range(n)]
    return dense_solve(A, eye)


def dense_rank(A):
    rows = [list(r) for r in A if any(r)]
    ncols = len(A[0]) if A else 0
    rank = 0
    pivots = []  # (col, row values) in echelon order
    for row in rows:
        for pc, prow in pivots:
            f = row[pc]
            if f:
                for j in range(ncols):
                    row[j] -= f * prow[j]
        lead = next((j for j, v in enumerate(row) if v), None)
        if lead is None:
            continue
        inv = QONE / row[lead]
        row = [v * inv for v in row]
        pivots.append((lead, row))
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# kernels


def _integer_clear(row):
    # scale a rational row to a primitive integer row
    den = 1
    for v in row:
        if v:
            den = den * v.denominator // gcd(den, int(v.denominator))
    ints = [int(v * den) for v in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def kernel_basis(M):
    """Exact basis of the right kernel {v : M v = 0}.

    Fraction-free elimination over the integers (cross-multiplication
    with per-row gcd normalization to control growth), pivoting on the
    smallest-bit-length candidate in each column.  Returned vectors are
    primitive integer vectors with positive leading entry, one per free
    column, ordered by free column index.  An empty or zero matrix
    yields the standard basis.
    """
    ncols = M.n_cols
    rows = {}
    for c, col in enumerate(M.cols):
        for r, v in col.items():
            rows.setdefault(r, [QZERO] * ncols)[c] = v
    work = [_integer_clear(row) for row in rows.values()]
    work = [row for row in work if any(row)]

    pivots = []     # list of (pivot_col, integer row) in echelon order
    for col in range(ncols):
        cand = [i for i, row in enumerate(work) if row[col]]
        if not cand:
            continue
        cand.sort(key=lambda i: (abs(work[i][col]).bit_length(), i))
        piv_row = work.pop(cand[0])
        p = piv_row[col]
        nxt = []
        for row in work:
            f = row[col]
            if f:
                row = [p * row[j] - f * piv_row[j] for j in range(ncols)]
                g = 0
                for v in row:
                    g = gcd(g, v)
                if g > 1:
                    row = [v // g for v in row]
            if any(row):
                nxt.append(row)
        work = nxt
        pivots.append((col, piv_row))

    pivot_cols = [pc for pc, _ in pivots]
    free_cols = [c for c in range(ncols) if c not in set(pivot_cols)]
    basis = []
    for fc in free_cols:
        v = [QZERO] * ncols
        v[fc] = QONE
        # back-substitute through the echelon rows
        for pc, row in reversed(pivots):
            s = sum((Rational(row[j]) * v[j] for j in range(pc + 1, ncols)
                     if row[j] and v[j]), QZERO)
            v[pc] = -s / row[pc]
        ints = _integer_clear(v)
        lead = next(x for x in ints if x)
        if lead < 0:
            ints = [-x for x in ints]
        basis.append(tuple(Rational(x) for x in ints))
    return basis


def kernel_basis_from_rows(rows, ncols):
    """kernel_basis for a constraint matrix given as sparse dict rows."""
    m = SparseMatrix(len(rows), ncols)
    for r, row in enumerate(rows):
        for c, v in row.items():
            if v:
                m.cols[c][r] = v
    return kernel_basis(m)


# ---------------------------------------------------------------------------
# Gram-orthogonal projections


def gram_projection(vectors, gram):
    """Exact G-orthogonal projection onto the span of the given vectors.

    P = B (B^T G B)^-1 B^T G where B has the vectors as columns.  Satisfies
    P^2 = P, G P symmetric, P b = b on the input.  Linearly dependent
    input raises RankDeficiencyError.
    """
    vectors = list(vectors)
    if not vectors:
        n = len(gram)
        return SparseMatrix.zeros(n, n)
    n = len(gram)
    cols = []
    for v in vectors:
        if isinstance(v, dict):
            cols.append({i: Rational(x) for i, x in v.items() if x})
        else:
            if len(v) != n:
                raise ValueError("vector length does not match Gram form")
            cols.append(dense_to_sparse(v))
    r = len(cols)
    H = [[vec_dot_gram(cols[i], cols[j], gram) for j in range(r)]
         for i in range(r)]
    try:
        Hinv = dense_inverse(H)
    except RankDeficiencyError:
        raise RankDeficiencyError("input vectors are linearly dependent")
    P = SparseMatrix(n, n)
    # column j of P: sum_i B_i * (Hinv B^T G)_{i j}
    for j in range(n):
        gj = gram[j]
        bt = [cols[i].get(j, QZERO) * gj for i in range(r)]
        if not any(bt):
            continue
        acc = P.cols[j]
        for i in range(r):
            ci = sum((Hinv[i][t] * bt[t] for t in range(r) if bt[t]), QZERO)
            if ci:
                vec_add_scaled(acc, cols[i], ci)
    return P


# ---------------------------------------------------------------------------
# operator-norm brackets for positive operators


def _rank_sparse(A):
    # incremental exact row echelon on the nonzero rows
    rows = {}
    for c, col in enumerate(A.cols):
        for r, v in col.items():
            rows.setdefault(r, {})[c] = v
    rank = 0
    echelon = []  # (pivot col, dict row normalized to pivot 1)
    for row in rows.values():
        row = dict(row)
        for pc, prow in echelon:
            f = row.get(pc)
            if f:
                vec_add_scaled(row, prow, -f)
        if not row:
            continue
        pc = min(row)
        inv = QONE / row[pc]
        row = {c: v * inv for c, v in row.items()}
        echelon.append((pc, row))
        rank += 1
    return rank


def power_iteration_estimate(A, gram, rel_tol=1e-12, max_iter=20000):
    """Float estimate of the top eigenvalue of a G-selfadjoint PSD operator."""
    n = A.n_rows
    if n == 0 or A.is_zero():
        return 0.0
    cols = [{r: float(v) for r, v in col.items()} for col in A.cols]
    g = [float(x) for x in gram]
    rng = random.Random(20250810)
    v = [rng.random() + 0.5 for _ in range(n)]
    est = 0.0
    for _ in range(max_iter):
        w = [0.0] * n
        for c in range(n):
            vc = v[c]
            if vc:
                for r, a in cols[c].items():
                    w[r] += a * vc
        num = sum(w[i] * v[i] * g[i] for i in range(n))
        den = sum(v[i] * v[i] * g[i] for i in range(n))
        if den == 0.0:
            return 0.0
        new = num / den
        norm = max(abs(x) for x in w)
        if norm == 0.0:
            return 0.0
        v = [x / norm for x in w]
        if est and abs(new - est) <= rel_tol * abs(new):
            return new
        est = new
    return est


def norm_bracket(A, gram):
    """(estimate, lower, upper) for the top eigenvalue of a PSD operator.

    A must be square, G-selfadjoint and positive semidefinite (a product
    like p q p of G-orthogonal projections qualifies).  Exact bounds:
    trace/rank <= lambda_max <= trace.  The float estimate comes from
    power iteration and is clamped into [lower, upper].
    """
    if A.n_rows != A.n_cols:
        raise ValueError("norm_bracket requires a square matrix")
    tr = A.trace()
    r = _rank_sparse(A)
    if r == 0:
        return 0.0, QZERO, QZERO
    lower = tr / r
    upper = tr
    est = power_iteration_estimate(A, gram)
    est = min(max(est, float(lower)), float(upper))
    return est, lower, upper
