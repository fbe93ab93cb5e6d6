"""The quantitative core: fixed-vector coefficients, closed-form overlaps,
combinatorial identities, and decay of products of isotypic projections.

Everything here lives on the family of irreducibles with highest weight
(m, 0, ..., 0, -m), the only ones whose restriction to the lower-right
U(n-1) block subgroup contains a fixed vector.  That vector, eta_m, is
supported on the zero-row-sum patterns Lambda(M), M = (m, m_{n-1}, ...,
m_2, 0), and its coefficients obey a two-term recurrence whose closed
form produces exact overlap values

    |<eta_m, xi_{Lambda(M)} / ||xi_{Lambda(M)}||>|^2
        = prod_{k=2}^{n-1} (2 m_k + k - 1) / ((n-2)! C(m, n-2)^2),

with C(m, n-2) = binomial(m+n-2, n-2).  Overlaps are handled as squares
throughout so that every verified quantity stays rational.
"""

from dataclasses import dataclass, field
from math import comb, factorial

from .linalg import (QZERO, QONE, Rational, dense_rank, dense_trace,
                     rat_str, vec_dot_gram)
from .patterns import zero_weight_pattern, zero_weight_tuples
from .reps import irrep
from .subgroups import (fixed_vectors, isotypic_projection, named_subgroups,
                        restrict_types)

__all__ = [
    "FixedVectorCoeffs", "fixed_vector_coefficients", "coeff_closed_form",
    "solve_fixed_vector", "overlap_sq", "zero_tuple_norm_sq",
    "comb_identity_check", "identity1_check", "DecayRow",
    "projection_product", "decay_experiment", "decay_csv",
    "BlockSupport", "block_support",
]


def _check_tuple(n, m, M):
    M = tuple(int(v) for v in M)
    if len(M) != n:
        raise ValueError("tuple %r does not have %d entries" % (M, n))
    if M[0] != m or M[-1] != 0:
        raise ValueError("tuple %r must run from m = %d down to 0" % (M, m))
    if any(M[i] < M[i + 1] for i in range(n - 1)):
        raise ValueError("tuple %r is not weakly decreasing" % (M,))
    return M


def normalizer_const(n, m):
    """C(m) = (prod_{j=3}^{n} (m+j-3)!)^2 * (2m+n-2)!."""
    prod = 1
    for j in range(3, n + 1):
        prod *= factorial(m + j - 3)
    return Rational(prod * prod * factorial(2 * m + n - 2))


@dataclass
class FixedVectorCoeffs:
    """Unnormalized coefficients a_M of the fixed vector over the patterns
    Lambda(M), seeded a_{(m,0,...,0)} = 1; sign flips with each unit step,
    so sign(a_M) = (-1)^(sum of the inner entries)."""
    n: int
    m: int
    coeffs: dict = field(repr=False)
    normalizer: Rational = QONE


def fixed_vector_coefficients(n, m):
    """Coefficients via the two-term recurrence

        a_{M+e_k} = -((m_k+k-1)/(m_k+1)) ((2m_k+k+1)/(2m_k+k-1)) a_M

    for k = 2..n-1, filled in increasing order of sum(M)."""
    if n < 3 or m < 0:
        raise ValueError("need n >= 3 and m >= 0")
    tuples = sorted(zero_weight_tuples(n, m), key=lambda M: (sum(M), M))
    seed = tuples[0]
    coeffs = {seed: QONE}
    for M in tuples[1:]:
        # lower the smallest loaded slot; the predecessor is already known
        k = next(k for k in range(2, n) if M[n - k] > M[n - k + 1])
        prev = M[:n - k] + (M[n - k] - 1,) + M[n - k + 1:]
        mk = prev[n - k]
        factor = -Rational((mk + k - 1) * (2 * mk + k + 1),
                           (mk + 1) * (2 * mk + k - 1))
        coeffs[M] = factor * coeffs[prev]
    return FixedVectorCoeffs(n=n, m=m, coeffs=coeffs,
                             normalizer=normalizer_const(n, m))


def coeff_closed_form(n, m, M):
    """Telescoped closed form of the recurrence, normalized at the seed:

        a_M = (-1)^(sum m_k) prod_{k=2}^{n-1}
              (m_k+k-2)! / ((k-2)! m_k!) * (2m_k+k-1)/(k-1).
    """
    M = _check_tuple(n, m, M)
    value = QONE
    parity = 0
    for k in range(2, n):
        mk = M[n - k]
        parity += mk
        value *= Rational(factorial(mk + k - 2) * (2 * mk + k - 1),
                          factorial(k - 2) * factorial(mk) * (k - 1))
    return -value if parity % 2 else value


def solve_fixed_vector(n, m):
    """The fixed vector of the lower-right block subgroup in the
    irreducible with highest weight (m, 0, ..., 0, -m), found as a joint
    kernel and scaled so the coefficient at Lambda((m,0,...,0)) is
    positive.  Returns (rep, dense coefficient vector)."""
    if n < 3 or m < 0:
        raise ValueError("need n >= 3 and m >= 0")
    hw = (m,) + (0,) * (n - 2) + (-m,)
    rep = irrep(hw)
    _, t_lower = named_subgroups(n)
    vecs = fixed_vectors(rep, t_lower)
    if len(vecs) != 1:
        raise RuntimeError(
            "fixed space of the lower-right block has dimension %d, not 1"
            % len(vecs))
    vec = vecs[0]
    seed_idx = rep.index[zero_weight_pattern((m,) + (0,) * (n - 1))]
    if not vec[seed_idx]:
        raise RuntimeError("fixed vector vanishes at the seed pattern")
    if vec[seed_idx] < 0:
        vec = tuple(-v for v in vec)
    return rep, vec


def overlap_sq(n, m, M):
    """Exact squared normalized overlap of the fixed vector with the basis
    vector of Lambda(M):

        prod_{k=2}^{n-1} (2 m_k + k - 1) / ((n-2)! binomial(m+n-2, n-2)^2).

    Summing over all M gives exactly 1."""
    M = _check_tuple(n, m, M)
    num = 1
    for k in range(2, n):
        num *= 2 * M[n - k] + k - 1
    return Rational(num, factorial(n - 2) * comb(m + n - 2, n - 2) ** 2)


def zero_tuple_norm_sq(n, M):
    """Closed form of the squared norm of the basis vector of Lambda(M):

        C(m) prod_{k=2}^{n-1} m_k!^2 / (m_k+k-2)!^2 / (2m_k+k-1),

    which must agree exactly with pattern_norm_sq(Lambda(M))."""
    M = _check_tuple(n, M[0], M)
    value = normalizer_const(n, M[0])
    for k in range(2, n):
        mk = M[n - k]
        f = Rational(factorial(mk) ** 2,
                     factorial(mk + k - 2) ** 2 * (2 * mk + k - 1))
        value *= f
    return value


# ---------------------------------------------------------------------------
# combinatorial identities


def comb_identity_check(n, m):
    """lhs = sum over chains m >= m_{n-1} >= ... >= m_2 >= 0 of
    prod_k (2 m_k + k - 1); rhs = (n-2)! binomial(m+n-2, n-2)^2."""
    if n < 3 or m < 0:
        raise ValueError("need n >= 3 and m >= 0")
    # term(v) at stage k sums prod_j (2 m_j + j - 1) over chains with m_k = v
    level = [2 * v + 1 for v in range(m + 1)]
    for k in range(3, n):
        prefix = 0
        nxt = []
        for v in range(m + 1):
            prefix += level[v]
            nxt.append((2 * v + k - 1) * prefix)
        level = nxt
    lhs = sum(level)
    rhs = factorial(n - 2) * comb(m + n - 2, n - 2) ** 2
    return Rational(lhs), Rational(rhs), lhs == rhs


def identity1_check(m, p):
    """lhs = sum_{i=0}^m (2i+p+1) binomial(i+p, p)^2;
    rhs = (p+1) binomial(m+p+1, p+1)^2."""
    if m < 0 or p < 0:
        raise ValueError("need m, p >= 0")
    lhs = sum((2 * i + p + 1) * comb(i + p, p) ** 2 for i in range(m + 1))
    rhs = (p + 1) * comb(m + p + 1, p + 1) ** 2
    return Rational(lhs), Rational(rhs), lhs == rhs


# ---------------------------------------------------------------------------
# projection products and decay


@dataclass
class DecayRow:
    """Exact data for one product p_sigma p_tau p_sigma: the trace equals
    the upper norm bound, and lower <= norm_est <= upper always."""
    m: int
    hw: tuple
    dim: int
    rank: int
    trace: Rational
    norm_est: float
    lower: Rational
    upper: Rational


def _restricted_product(p, q):
    """Matrix of p q p on the image of p, in p's basis coordinates.

    Entry (i, j) is the i-th coordinate of p(q(basis_j)); the operator
    vanishes on the complement of the image, so trace and nonzero
    spectrum agree with the full product."""
    r = p.rank
    cols = []
    for j in range(r):
        img = q.apply(p.basis[j])
        cols.append(p.coords(img))
    return [[cols[j].get(i, QZERO) for j in range(r)] for i in range(r)]


def _dense_power_estimate(M, H, rel_tol=1e-12, max_iter=20000):
    # float power iteration with the H-weighted Rayleigh quotient
    r = len(M)
    if r == 0:
        return 0.0
    Mf = [[float(v) for v in row] for row in M]
    Hf = [[float(v) for v in row] for row in H]
    import random as _random
    rng = _random.Random(20250810)
    v = [rng.random() + 0.5 for _ in range(r)]
    est = 0.0
    for _ in range(max_iter):
        w = [sum(Mf[i][j] * v[j] for j in range(r)) for i in range(r)]
        hv = [sum(Hf[i][j] * v[j] for j in range(r)) for i in range(r)]
        den = sum(v[i] * hv[i] for i in range(r))
        num = sum(w[i] * hv[i] for i in range(r))
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


def projection_product(rep, S, sigma, T, tau):
    """Exact trace and certified norm bracket of p_sigma p_tau p_sigma.

    The product is computed in the coordinates of p_sigma's component
    basis, which carries its full nonzero spectrum; lower = trace/rank
    and upper = trace are exact, the float estimate is a power-iteration
    value clamped into the bracket."""
    p = isotypic_projection(rep, S, sigma)
    q = isotypic_projection(rep, T, tau)
    hw = rep.hw
    m = (hw[0] - hw[-1]) // 2 if (hw[0] - hw[-1]) % 2 == 0 else -1
    if p.is_zero() or q.is_zero():
        return DecayRow(m=m, hw=hw, dim=rep.dim, rank=0, trace=QZERO,
                        norm_est=0.0, lower=QZERO, upper=QZERO)
    core = _restricted_product(p, q)
    trace = dense_trace(core)
    rank = dense_rank(core)
    if rank == 0:
        return DecayRow(m=m, hw=hw, dim=rep.dim, rank=0, trace=QZERO,
                        norm_est=0.0, lower=QZERO, upper=QZERO)
    lower = trace / rank
    upper = trace
    est = _dense_power_estimate(core, p.gram_matrix())
    est = min(max(est, float(lower)), float(upper))
    return DecayRow(m=m, hw=hw, dim=rep.dim, rank=rank, trace=trace,
                    norm_est=est, lower=lower, upper=upper)


def decay_experiment(n, S, sigma, T, tau, m_max):
    """One DecayRow per m = 0..m_max on the irreducible with highest
    weight (m, 0, ..., 0, -m)."""
    if n < 3:
        raise ValueError("need n >= 3")
    rows = []
    for m in range(m_max + 1):
        hw = (m,) + (0,) * (n - 2) + (-m,)
        rows.append(projection_product(irrep(hw), S, sigma, T, tau))
    return rows


def decay_csv(rows):
    lines = ["m,dim,trace_num_den,norm_est,lower,upper"]
    for row in rows:
        lines.append("%d,%d,%s,%r,%s,%s" % (
            row.m, row.dim, rat_str(row.trace), row.norm_est,
            rat_str(row.lower), rat_str(row.upper)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# harmonic block support


@dataclass
class BlockSupport:
    """Nonzero blocks p_sigma A p_tau of an operator over the K_S-isotypic
    decomposition, with the largest per-row and per-column block counts
    (the finite-truncation shadow of harmonic finiteness/properness)."""
    subgroup: tuple
    labels: list
    support: set
    max_row: int
    max_col: int


def block_support(A, rep, S):
    """Support of the harmonic block matrix A_{sigma tau} = p_sigma A p_tau.

    A block vanishes iff B_sigma^T G A B_tau = 0 over the component
    bases, so no projection matrices are materialized."""
    if A.n_rows != rep.dim or A.n_cols != rep.dim:
        raise ValueError("operator shape does not match the representation")
    labels = [label for label, _ in restrict_types(rep, S)]
    projs = {label: isotypic_projection(rep, S, label) for label in labels}
    gram = rep.gram
    images = {}
    for label in labels:
        images[label] = [A.apply(vec) for vec in projs[label].basis]
    support = set()
    for out_label in labels:
        basis_out = projs[out_label].basis
        for in_label in labels:
            hit = False
            for img in images[in_label]:
                if any(vec_dot_gram(b, img, gram) for b in basis_out):
                    hit = True
                    break
            if hit:
                support.add((out_label, in_label))
    max_row = max((sum(1 for s in support if s[0] == lab) for lab in labels),
                  default=0)
    max_col = max((sum(1 for s in support if s[1] == lab) for lab in labels),
                  default=0)
    return BlockSupport(subgroup=tuple(sorted(S)), labels=labels,
                        support=support, max_row=max_row, max_col=max_col)
