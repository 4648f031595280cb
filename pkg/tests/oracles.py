"""Independent brute-force oracles. Nothing here imports the code it checks."""
import itertools
import math
from fractions import Fraction


def brute_monomials(weights, w):
    """Every exponent vector in a box, filtered by weighted degree."""
    boxes = [range(w // a + 1) for a in weights]
    return sorted(
        (e for e in itertools.product(*boxes) if sum(x * a for x, a in zip(e, weights)) == w),
        reverse=True,
    )


def gauss_rank(matrix):
    """Rank by textbook Gaussian elimination over Fractions, pivoting on the
    largest-magnitude entry (a different pivot rule from the library)."""
    m = [[Fraction(x) for x in row] for row in matrix]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        best = max(range(r, rows), key=lambda i: abs(m[i][c]), default=None)
        if best is None or m[best][c] == 0:
            continue
        m[r], m[best] = m[best], m[r]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def transpose(matrix):
    return [list(col) for col in zip(*matrix)]


def expand_geometric_product(factors, order):
    """Multiply explicit truncated sums sum_k m^k s^{e k}.

    ``factors``: list of (s_exp, exps tuple).  Returns a list over s-powers
    of dicts exps -> count.
    """
    arity = len(factors[0][1]) if factors else 1
    series = [dict() for _ in range(order + 1)]
    series[0][(0,) * arity] = 1
    for e, m in factors:
        if e > order:
            continue
        terms = [(k * e, tuple(k * x for x in m)) for k in range(order // e + 1)]
        new = [dict() for _ in range(order + 1)]
        for s, d in enumerate(series):
            for ex, c in d.items():
                for se, me in terms:
                    if s + se > order:
                        break
                    key = tuple(a + b for a, b in zip(ex, me))
                    new[s + se][key] = new[s + se].get(key, 0) + c
        series = new
    return series


def all_partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, maxpart), 0, -1):
        for rest in all_partitions(n - p, p):
            yield (p,) + rest


def literal_multipartitions(n, i):
    """List every i-tuple of partitions with total size n."""
    if i == 0:
        return [()] if n == 0 else []
    out = []
    for k in range(n + 1):
        for first in all_partitions(k):
            for rest in literal_multipartitions(n - k, i - 1):
                out.append((first,) + rest)
    return out


def hook_length(parts):
    conj = [sum(1 for p in parts if p > c) for c in range(parts[0])] if parts else []
    prod = 1
    for r, p in enumerate(parts):
        for c in range(p):
            prod *= (p - c - 1) + (conj[c] - r - 1) + 1
    return math.factorial(sum(parts)) // prod


def brute_syt_count(parts):
    """Count fillings among all permutations (feasible for n <= 7)."""
    n = sum(parts)
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        rows, k = [], 0
        for p in parts:
            rows.append(perm[k:k + p])
            k += p
        if all(all(r[j] < r[j + 1] for j in range(len(r) - 1)) for r in rows) and all(
            rows[i][c] > rows[i - 1][c] for i in range(1, len(rows)) for c in range(len(rows[i]))
        ):
            count += 1
    return count


def jacobi_series_by_division(weights, m, top):
    """Power-series coefficients of prod (1 - t^{m-a})/(1 - t^a) up to t^top,
    by multiplying out geometric series term by term."""
    c = [0] * (top + 1)
    c[0] = 1
    for a in weights:
        for k in range(a, top + 1):
            c[k] += c[k - a]
        b = m - a
        for k in range(top, b - 1, -1):
            c[k] -= c[k - b]
    return {k: v for k, v in enumerate(c) if v}
