"""One-shot verification suite.

Ten independent checks, each pinned to an exact tolerance (equality of
rationals unless stated otherwise).  The "fast" scale is a smoke run of
the same checks at reduced caps; "full" runs the complete ranges.  Every
check is deterministic, including the randomized ones (fixed seeds).
"""

import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass
from math import comb

from .linalg import Rational
from .ortho import (comb_identity_check, coeff_closed_form, decay_experiment,
                    fixed_vector_coefficients, identity1_check, overlap_sq,
                    solve_fixed_vector, zero_tuple_norm_sq)
from .patterns import (enumerate_patterns, pattern_norm_sq,
                       zero_weight_patterns)
from .reps import check_rep, dimension, gram_adjoint_ok, irrep, \
    tensor_decompose, weight_multiplicities
from .subgroups import (branching_by_top_row, canonical_label,
                        commutation_family_ok, label_dim, named_subgroups,
                        restrict_types, trivial_label)

__all__ = ["CheckResult", "run_suite", "SUITE_KEYS"]


@dataclass
class CheckResult:
    key: str
    description: str
    passed: bool
    detail: str
    seconds: float


def normalized_highest_weights(n, dim_cap):
    """Every sl(n)-normalized dominant weight with Weyl dimension <= cap.

    Entries are scanned to twice the symmetric-power bound, a safe margin
    since the symmetric powers minimize dimension at fixed top entry.
    """
    a = 0
    while dimension((a,) + (0,) * (n - 1)) <= dim_cap:
        a += 1
    amax = 2 * a + 1
    out = []
    for tup in itertools.product(range(amax + 1), repeat=n - 1):
        if tup != tuple(sorted(tup, reverse=True)):
            continue
        hw = tup + (0,)
        if dimension(hw) <= dim_cap:
            out.append(hw)
    return sorted(set(out))


def _subsets(n):
    roots = range(1, n)
    return [frozenset(s) for r in range(n)
            for s in itertools.combinations(roots, r)]


# ---------------------------------------------------------------------------
# the individual checks


def check_overlap_formula(scales):
    """Directly solved fixed vector reproduces the closed-form squared
    overlaps, coefficient recurrence and closed form agree, and the
    overlaps sum to exactly 1."""
    t0 = time.time()
    checks = 0
    for n, m_cap in scales.items():
        for m in range(m_cap + 1):
            rep, vec = solve_fixed_vector(n, m)
            norm_sq = sum(vec[i] * vec[i] * rep.gram[i]
                          for i in range(rep.dim))
            coeffs = fixed_vector_coefficients(n, m).coeffs
            support = set()
            total = Rational(0)
            for M, pat in zero_weight_patterns(n, m):
                idx = rep.index[pat]
                support.add(idx)
                solved = vec[idx] * vec[idx] * rep.gram[idx] / norm_sq
                formula = overlap_sq(n, m, M)
                if solved != formula:
                    return CheckResult(
                        "overlaps", check_overlap_formula.__doc__, False,
                        "mismatch at n=%d m=%d M=%s: solved %s, formula %s"
                        % (n, m, M, solved, formula), time.time() - t0)
                seed = (m,) + (0,) * (n - 1)
                ratio = coeffs[M] / coeffs[seed]
                closed = coeff_closed_form(n, m, M) / coeff_closed_form(n, m, seed)
                if ratio != closed:
                    return CheckResult(
                        "overlaps", check_overlap_formula.__doc__, False,
                        "recurrence/closed-form mismatch at n=%d m=%d M=%s"
                        % (n, m, M), time.time() - t0)
                total += formula
                checks += 1
            if total != 1:
                return CheckResult(
                    "overlaps", check_overlap_formula.__doc__, False,
                    "overlaps at n=%d m=%d sum to %s" % (n, m, total),
                    time.time() - t0)
            if any(vec[i] and i not in support for i in range(rep.dim)):
                return CheckResult(
                    "overlaps", check_overlap_formula.__doc__, False,
                    "fixed vector leaves the zero-row-sum span (n=%d m=%d)"
                    % (n, m), time.time() - t0)
    return CheckResult("overlaps", check_overlap_formula.__doc__, True,
                       "%d exact overlap values" % checks, time.time() - t0)


def check_closed_form_decay(scales):
    """Largest eigenvalue of p_1S p_1T p_1S on highest weight
    (m,0,...,0,-m) equals 1/binomial(m+n-2, n-2)^2 exactly, with the
    rank-one bracket collapsing (lower = upper)."""
    t0 = time.time()
    rows_done = 0
    for n, m_cap in scales.items():
        s_upper, t_lower = named_subgroups(n)
        rows = decay_experiment(n, s_upper, trivial_label(n, s_upper),
                                t_lower, trivial_label(n, t_lower), m_cap)
        for row in rows:
            expected = Rational(1, comb(row.m + n - 2, n - 2) ** 2)
            if not (row.rank == 1 and row.trace == expected
                    and row.lower == expected and row.upper == expected):
                return CheckResult(
                    "closed-form-decay", check_closed_form_decay.__doc__,
                    False, "n=%d m=%d: got trace %s, expected %s"
                    % (n, row.m, row.trace, expected), time.time() - t0)
            rows_done += 1
    return CheckResult("closed-form-decay", check_closed_form_decay.__doc__,
                       True, "%d exact eigenvalues" % rows_done,
                       time.time() - t0)


def check_identities(n_max, m_max, p_max, m1_max):
    """Both combinatorial identities hold exactly over the stated grid."""
    t0 = time.time()
    count = 0
    for n in range(3, n_max + 1):
        for m in range(m_max + 1):
            lhs, rhs, equal = comb_identity_check(n, m)
            if not equal:
                return CheckResult(
                    "identities", check_identities.__doc__, False,
                    "chain identity fails at n=%d m=%d: %s != %s"
                    % (n, m, lhs, rhs), time.time() - t0)
            count += 1
    for p in range(p_max + 1):
        for m in range(m1_max + 1):
            lhs, rhs, equal = identity1_check(m, p)
            if not equal:
                return CheckResult(
                    "identities", check_identities.__doc__, False,
                    "weighted binomial identity fails at m=%d p=%d" % (m, p),
                    time.time() - t0)
            count += 1
    return CheckResult("identities", check_identities.__doc__, True,
                       "%d identities" % count, time.time() - t0)


def check_norm_specialization(n_max, m_max):
    """The closed-form squared norm of Lambda(M) agrees with the general
    pattern norm for every zero-row-sum pattern in range."""
    t0 = time.time()
    count = 0
    for n in range(2, n_max + 1):
        for m in range(m_max + 1):
            for M, pat in zero_weight_patterns(n, m):
                if zero_tuple_norm_sq(n, M) != pattern_norm_sq(pat):
                    return CheckResult(
                        "norm-specialization",
                        check_norm_specialization.__doc__, False,
                        "mismatch at n=%d M=%s" % (n, M), time.time() - t0)
                count += 1
    return CheckResult("norm-specialization",
                       check_norm_specialization.__doc__, True,
                       "%d patterns" % count, time.time() - t0)


def check_structure_constants(dim_cap):
    """Every generator matrix family satisfies the gl(n) commutation
    relations exactly, and raising/lowering are exact Gram adjoints, for
    every normalized dominant weight with dimension <= cap, n in {3,4}."""
    t0 = time.time()
    reps_done = 0
    for n in (3, 4):
        for hw in normalized_highest_weights(n, dim_cap):
            rep = irrep(hw)
            report = check_rep(rep)
            if not report.ok:
                return CheckResult(
                    "structure-constants", check_structure_constants.__doc__,
                    False, "relation violated at hw=%s, (p,q,r,s)=%s"
                    % (hw, report.violation), time.time() - t0)
            if not gram_adjoint_ok(rep):
                return CheckResult(
                    "structure-constants", check_structure_constants.__doc__,
                    False, "adjointness fails at hw=%s" % (hw,),
                    time.time() - t0)
            reps_done += 1
    return CheckResult("structure-constants",
                       check_structure_constants.__doc__, True,
                       "%d representations" % reps_done, time.time() - t0)


def check_dimension_oracle(samples, dim_cap, ns):
    """Pattern enumeration count equals the Weyl dimension formula on
    randomly sampled dominant weights (fixed seed)."""
    t0 = time.time()
    rng = random.Random(271828)
    gap_cap = {2: 1500, 3: 20, 4: 9, 5: 5}
    count = 0
    for n in ns:
        done = 0
        while done < samples:
            lam = [0] * n
            for i in range(n - 2, -1, -1):
                lam[i] = lam[i + 1] + rng.randint(0, gap_cap[n])
            shift_all = rng.randint(-3, 3)
            hw = tuple(v + shift_all for v in lam)
            d = dimension(hw)
            if d > dim_cap:
                continue
            if len(enumerate_patterns(hw)) != d:
                return CheckResult(
                    "dimension-oracle", check_dimension_oracle.__doc__,
                    False, "count mismatch at hw=%s" % (hw,),
                    time.time() - t0)
            done += 1
            count += 1
    return CheckResult("dimension-oracle", check_dimension_oracle.__doc__,
                       True, "%d sampled weights" % count, time.time() - t0)


def check_branching(dim_cap):
    """The kernel-based restriction multiset equals the interlacing
    branching read off the next-to-top pattern row for the chain
    subgroup, and dimension bookkeeping holds for every root subset."""
    t0 = time.time()
    reps_done = 0
    for n in (3, 4):
        subsets = _subsets(n)
        for hw in normalized_highest_weights(n, dim_cap):
            rep = irrep(hw)
            chain = frozenset(range(1, n - 1))
            computed = dict(restrict_types(rep, chain))
            oracle, _ = branching_by_top_row(rep)
            if computed != oracle:
                return CheckResult(
                    "branching", check_branching.__doc__, False,
                    "chain branching mismatch at hw=%s" % (hw,),
                    time.time() - t0)
            for S in subsets:
                total = sum(mult * label_dim(label)
                            for label, mult in restrict_types(rep, S))
                if total != rep.dim:
                    return CheckResult(
                        "branching", check_branching.__doc__, False,
                        "dim bookkeeping fails at hw=%s S=%s"
                        % (hw, sorted(S)), time.time() - t0)
            reps_done += 1
    return CheckResult("branching", check_branching.__doc__, True,
                       "%d representations, all root subsets" % reps_done,
                       time.time() - t0)


def check_commuting_projections(dim_cap):
    """All isotypic projection pairs for nested subgroups (T inside S) and
    for the disjoint-block pair commute exactly on every representation
    with dimension <= cap, n in {3,4}."""
    t0 = time.time()
    families = 0
    for n in (3, 4):
        subsets = _subsets(n)
        pairs = [(T, S) for T in subsets for S in subsets if T < S]
        if n == 4:
            pairs.append((frozenset({1}), frozenset({3})))
        for hw in normalized_highest_weights(n, dim_cap):
            rep = irrep(hw)
            for T, S in pairs:
                if not commutation_family_ok(rep, S, T):
                    return CheckResult(
                        "commuting-projections",
                        check_commuting_projections.__doc__, False,
                        "pair fails at hw=%s S=%s T=%s"
                        % (hw, sorted(S), sorted(T)), time.time() - t0)
                families += 1
    return CheckResult("commuting-projections",
                       check_commuting_projections.__doc__, True,
                       "%d (rep, S, T) families" % families,
                       time.time() - t0)


def check_trace_decay(m_max, decreasing_from, threshold):
    """Exact traces of p_sigma p_tau p_sigma for fixed nontrivial labels
    decrease in m and drop below the threshold by the last row."""
    t0 = time.time()
    sigma = canonical_label(((1, 0), (-1,)))
    tau = canonical_label(((1,), (0, -1)))
    rows = decay_experiment(3, frozenset({1}), sigma, frozenset({2}), tau,
                            m_max)
    traces = [row.trace for row in rows]
    for m in range(decreasing_from, m_max):
        if not traces[m] > traces[m + 1]:
            return CheckResult(
                "trace-decay", check_trace_decay.__doc__, False,
                "trace not decreasing at m=%d" % m, time.time() - t0)
    if not traces[m_max] < threshold:
        return CheckResult(
            "trace-decay", check_trace_decay.__doc__, False,
            "trace %s at m=%d is not below %s"
            % (traces[m_max], m_max, threshold), time.time() - t0)
    return CheckResult("trace-decay", check_trace_decay.__doc__, True,
                       "final trace %s < %s" % (traces[m_max], threshold),
                       time.time() - t0)


def _label_weight_multiset(label):
    """Weight multiset of a block-subgroup irreducible: product of the
    per-block weight multisets over concatenated tuples."""
    combos = Counter({(): 1})
    for part in label:
        nxt = Counter()
        for prefix, c1 in combos.items():
            for w, c2 in weight_multiplicities(part).items():
                nxt[prefix + w] += c1 * c2
        combos = nxt
    return combos


def _block_dominant_parts(weight, sizes):
    parts = []
    at = 0
    for s in sizes:
        part = weight[at:at + s]
        if any(part[i] < part[i + 1] for i in range(s - 1)):
            return None
        parts.append(part)
        at += s
    return tuple(parts)


def _label_tensor_blockwise(label1, label2):
    # per-block tensor decomposition, combined across blocks
    combos = [((), 1)]
    for part1, part2 in zip(label1, label2):
        parts = tensor_decompose(part1, part2)
        combos = [(acc + (hw,), c * mult)
                  for acc, c in combos for hw, mult in parts]
    out = Counter()
    for label, mult in combos:
        out[canonical_label(label)] += mult
    return out


def _label_tensor_bruteforce(label1, label2):
    # convolve full weight multisets and peel block-dominant tops
    sizes = tuple(len(p) for p in label1)
    w1 = _label_weight_multiset(label1)
    w2 = _label_weight_multiset(label2)
    prod = Counter()
    for a, c1 in w1.items():
        for b, c2 in w2.items():
            prod[tuple(x + y for x, y in zip(a, b))] += c1 * c2
    out = Counter()
    while prod:
        top = max(prod)
        parts = _block_dominant_parts(top, sizes)
        assert parts is not None
        mult = prod[top]
        for w, c in _label_weight_multiset(parts).items():
            left = prod[w] - mult * c
            assert left >= 0
            if left:
                prod[w] = left
            else:
                del prod[w]
        out[canonical_label(parts)] += mult
    return out


def check_tensor_bookkeeping(pairs_per_n, dim_cap):
    """Tensor product dimension totals are exact, and tensor products of
    block-subgroup labels decompose into finitely many labels agreeing
    with a brute-force weight-multiset count."""
    t0 = time.time()
    rng = random.Random(314159)
    count = 0
    for n in (2, 3):
        done = 0
        while done < pairs_per_n:
            hw1 = tuple(sorted((rng.randint(0, 6) for _ in range(n)),
                               reverse=True))
            hw2 = tuple(sorted((rng.randint(-3, 4) for _ in range(n)),
                               reverse=True))
            if dimension(hw1) > dim_cap or dimension(hw2) > dim_cap:
                continue
            parts = tensor_decompose(hw1, hw2)
            total = sum(mult * dimension(hw) for hw, mult in parts)
            if total != dimension(hw1) * dimension(hw2):
                return CheckResult(
                    "tensor-bookkeeping", check_tensor_bookkeeping.__doc__,
                    False, "dimension total fails for %s x %s" % (hw1, hw2),
                    time.time() - t0)
            done += 1
            count += 1
    # block-label tensor products inside SU(3), S = {1}
    for _ in range(pairs_per_n):
        lab1 = canonical_label(
            ((rng.randint(0, 3), 0), (rng.randint(-2, 2),)))
        lab2 = canonical_label(
            ((rng.randint(0, 3), 0), (rng.randint(-2, 2),)))
        blockwise = _label_tensor_blockwise(lab1, lab2)
        brute = _label_tensor_bruteforce(lab1, lab2)
        if blockwise != brute:
            return CheckResult(
                "tensor-bookkeeping", check_tensor_bookkeeping.__doc__,
                False, "label tensor mismatch for %s x %s" % (lab1, lab2),
                time.time() - t0)
        count += 1
    return CheckResult("tensor-bookkeeping",
                       check_tensor_bookkeeping.__doc__, True,
                       "%d products" % count, time.time() - t0)


# ---------------------------------------------------------------------------
# suite driver


SUITE_KEYS = [
    "overlaps", "closed-form-decay", "identities", "norm-specialization",
    "structure-constants", "dimension-oracle", "branching",
    "commuting-projections", "trace-decay", "tensor-bookkeeping",
]

_FULL = {
    "overlaps": (check_overlap_formula, ({3: 8, 4: 4},)),
    "closed-form-decay": (check_closed_form_decay, ({3: 12, 4: 5},)),
    "identities": (check_identities, (8, 25, 6, 30)),
    "norm-specialization": (check_norm_specialization, (5, 6)),
    "structure-constants": (check_structure_constants, (300,)),
    "dimension-oracle": (check_dimension_oracle, (50, 2000, (2, 3, 4, 5))),
    "branching": (check_branching, (300,)),
    "commuting-projections": (check_commuting_projections, (200,)),
    "trace-decay": (check_trace_decay, (20, 3, Rational(1, 100))),
    "tensor-bookkeeping": (check_tensor_bookkeeping, (20, 100)),
}

_FAST = {
    "overlaps": (check_overlap_formula, ({3: 5},)),
    "closed-form-decay": (check_closed_form_decay, ({3: 8},)),
    "identities": (check_identities, (6, 12, 4, 15)),
    "norm-specialization": (check_norm_specialization, (4, 4)),
    "structure-constants": (check_structure_constants, (80,)),
    "dimension-oracle": (check_dimension_oracle, (10, 500, (2, 3, 4))),
    "branching": (check_branching, (80,)),
    "commuting-projections": (check_commuting_projections, (64,)),
    "trace-decay": (check_trace_decay, (10, 3, Rational(1, 20))),
    "tensor-bookkeeping": (check_tensor_bookkeeping, (5, 60)),
}


def run_suite(scale="fast", keys=None):
    """Run the verification checks at the given scale ('fast' or 'full').

    Returns a list of CheckResult; the suite passes iff all do.
    """
    table = {"fast": _FAST, "full": _FULL}.get(scale)
    if table is None:
        raise ValueError("unknown suite scale %r" % (scale,))
    selected = SUITE_KEYS if keys is None else list(keys)
    results = []
    for key in selected:
        if key not in table:
            raise ValueError("unknown check %r" % (key,))
        fn, args = table[key]
        results.append(fn(*args))
    return results
