"""Gelfand-Tsetlin patterns for gl(n): enumeration, norms, weights, shifts.

A pattern is a nested tuple of integer rows, top row first:
((2, 0, -2), (1, -1), (0)) style, where the top row is a dominant weight
of gl(n) and consecutive rows interlace,

    row[k+1][i] >= row[k][i] >= row[k+1][i+1].

Row k (1-based, k entries) is the highest weight of the upper-left gl(k)
subrepresentation containing the basis vector; the bottom row has one
entry.  Entries may be negative.  Patterns index an orthogonal basis
whose squared norms are the rationals computed by pattern_norm_sq.
"""

from math import factorial

from .linalg import QONE, Rational

__all__ = [
    "is_dominant", "sl_normalize", "check_pattern", "is_admissible",
    "enumerate_patterns", "pattern_row", "row_sums", "pattern_weight",
    "pattern_norm_sq", "shift", "zero_weight_tuples", "zero_weight_pattern",
    "zero_weight_patterns", "pattern_to_lists", "pattern_from_lists",
]


def is_dominant(hw):
    return all(hw[i] >= hw[i + 1] for i in range(len(hw) - 1))


def sl_normalize(hw):
    """Canonical representative of the sl(n) class: shift so min(hw) = 0."""
    if not is_dominant(hw):
        raise ValueError("weight %r is not dominant" % (hw,))
    base = min(hw)
    return tuple(v - base for v in hw)


def pattern_row(pattern, k):
    """Row k in the 1-based bottom-up convention (row k has k entries)."""
    return pattern[len(pattern) - k]


def _rows_interlace(upper, lower):
    # upper has one more entry than lower
    return all(upper[i] >= lower[i] >= upper[i + 1] for i in range(len(lower)))


def is_admissible(pattern):
    n = len(pattern)
    for k in range(n):
        if len(pattern[k]) != n - k:
            return False
    for k in range(n - 1):
        if not _rows_interlace(pattern[k], pattern[k + 1]):
            return False
    return True


def check_pattern(pattern):
    if not is_admissible(pattern):
        raise ValueError("inadmissible pattern %r" % (pattern,))
    return pattern


def enumerate_patterns(hw):
    """All patterns with top row hw, in descending lexicographic order.

    Order compares the concatenation (top row, next row, ..., bottom row)
    entrywise with larger first, so the highest-weight pattern comes
    first.  The length of the list is the dimension of the irreducible
    representation with highest weight hw.
    """
    hw = tuple(int(v) for v in hw)
    if not is_dominant(hw):
        raise ValueError("weight %r is not dominant" % (hw,))
    out = []

    def descend(rows):
        upper = rows[-1]
        if len(upper) == 1:
            out.append(tuple(rows))
            return
        k = len(upper) - 1
        for row in _interlacing_rows(upper, k):
            rows.append(row)
            descend(rows)
            rows.pop()

    descend([hw])
    return out


def _interlacing_rows(upper, k):
    # rows of length k interlacing below `upper`, descending lex order
    def rec(i, prefix):
        if i == k:
            yield tuple(prefix)
            return
        hi, lo = upper[i], upper[i + 1]
        for v in range(hi, lo - 1, -1):
            prefix.append(v)
            yield from rec(i + 1, prefix)
            prefix.pop()

    yield from rec(0, [])


def row_sums(pattern):
    """(s_1, ..., s_n) with s_k the sum of row k."""
    n = len(pattern)
    return tuple(sum(pattern[n - k]) for k in range(1, n + 1))


def pattern_weight(pattern):
    """Torus weight (s_1 - s_0, s_2 - s_1, ..., s_n - s_{n-1})."""
    s = row_sums(pattern)
    prev = 0
    out = []
    for v in s:
        out.append(v - prev)
        prev = v
    return tuple(out)


def _l_row(row):
    # l_{k,i} = lambda_{k,i} - i + 1 with i 1-based
    return [v - i for i, v in enumerate(row)]


def _fact(arg):
    assert arg >= 0, "negative factorial argument; pattern not admissible"
    return factorial(arg)


def pattern_norm_sq(pattern):
    """Exact squared norm of the basis vector indexed by the pattern.

    With l_{k,i} = lambda_{k,i} - i + 1,

      prod_{k=2..n} [ prod_{1<=i<=j<k} (l_{k,i}-l_{k-1,j})!/(l_{k-1,i}-l_{k-1,j})! ]
                  * [ prod_{1<=i<j<=k} (l_{k,i}-l_{k,j}-1)!/(l_{k-1,i}-l_{k,j}-1)! ]

    Interlacing guarantees every factorial argument is nonnegative; a
    violation is asserted, not clamped.
    """
    check_pattern(pattern)
    n = len(pattern)
    ls = [None] + [_l_row(pattern_row(pattern, k)) for k in range(1, n + 1)]
    num = 1
    den = 1
    for k in range(2, n + 1):
        lk, lk1 = ls[k], ls[k - 1]
        for i in range(k - 1):          # 0-based; i+1 <= j+1 < k
            for j in range(i, k - 1):
                num *= _fact(lk[i] - lk1[j])
                den *= _fact(lk1[i] - lk1[j])
        for i in range(k - 1):          # i+1 < j+1 <= k, so i+1 <= k-1
            for j in range(i + 1, k):
                num *= _fact(lk[i] - lk[j] - 1)
                den *= _fact(lk1[i] - lk[j] - 1)
    value = Rational(num, den)
    assert value > 0
    return value


def shift(pattern, k, i, sign):
    """Pattern with entry (row k, position i) moved by sign; None if the
    result breaks interlacing (the convention for a vanishing basis vector).

    k and i are 1-based; the top row (k = n) is never shifted.
    """
    n = len(pattern)
    if not (1 <= i <= k <= n - 1):
        raise ValueError("shift position (%d, %d) out of range" % (k, i))
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    ridx = n - k
    row = list(pattern[ridx])
    row[i - 1] += sign
    new = pattern[:ridx] + (tuple(row),) + pattern[ridx + 1:]
    if ridx + 1 < n and not _rows_interlace(new[ridx], new[ridx + 1]):
        return None
    if not _rows_interlace(new[ridx - 1], new[ridx]):
        return None
    return new


# ---------------------------------------------------------------------------
# zero-row-sum patterns inside highest weight (m, 0, ..., 0, -m)


def zero_weight_tuples(n, m):
    """Tuples M = (m_n, ..., m_1) with m = m_n >= ... >= m_2 >= m_1 = 0.

    These index the zero-row-sum patterns of the irreducible with highest
    weight (m, 0, ..., 0, -m); ascending lexicographic order.
    """
    if n < 2 or m < 0:
        raise ValueError("need n >= 2 and m >= 0")
    if n == 2:
        return [(m, 0)]
    inner = []

    def rec(pos, cap, acc):
        # positions m_{n-1} down to m_2, each bounded by the previous
        if pos == 0:
            inner.append(tuple(acc))
            return
        for v in range(0, cap + 1):
            acc.append(v)
            rec(pos - 1, v, acc)
            acc.pop()

    rec(n - 2, m, [])
    tuples = [(m,) + t + (0,) for t in inner]
    tuples.sort()
    return tuples


def zero_weight_pattern(M):
    """The pattern Lambda(M): row k = (m_k, 0, ..., 0, -m_k), row 1 = (0)."""
    n = len(M)
    rows = []
    for k in range(n, 1, -1):
        mk = M[n - k]
        rows.append((mk,) + (0,) * (k - 2) + (-mk,))
    rows.append((0,))
    return check_pattern(tuple(rows))


def zero_weight_patterns(n, m):
    """Ordered list of (M, Lambda(M)) pairs for highest weight (m,0,...,0,-m)."""
    return [(M, zero_weight_pattern(M)) for M in zero_weight_tuples(n, m)]


# ---------------------------------------------------------------------------
# serialization: nested arrays, top row first


def pattern_to_lists(pattern):
    return [list(row) for row in pattern]


def pattern_from_lists(rows):
    return check_pattern(tuple(tuple(int(v) for v in row) for row in rows))
