"""Multipartition counts and symmetric-power generating functions.

a_n(i) is the coefficient of t^n in prod_{m>=1} (1 - t^m)^{-i}, i.e. the
number of i-tuples of partitions of total size n.
"""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from .exact_core import BigradedHilbert, SeriesFactor, TruncatedSeries, series_product
from .singularity import GRADINGS, DuValRecord


class MultipartitionCounter:
    """Cache of a_n(i) rows, filled by truncated product expansion.

    Fills are idempotent and guarded by a lock, so concurrent callers see
    the same values a serial caller would.
    """

    def __init__(self):
        self._rows: Dict[int, List[int]] = {}
        self._lock = threading.Lock()

    @property
    def max_n(self) -> int:
        return min((len(r) - 1 for r in self._rows.values()), default=-1)

    @property
    def max_i(self) -> int:
        return max(self._rows, default=-1)

    def row(self, i: int, n: int) -> List[int]:
        if i < 0 or n < 0:
            raise ValueError("n and i must be nonnegative")
        with self._lock:
            r = self._rows.get(i)
            if r is None or len(r) <= n:
                size = max(n + 1, 2 * len(r) if r else 0)
                r = self._expand(i, size)
                self._rows[i] = r
            return r[: n + 1]

    @staticmethod
    def _expand(i: int, size: int) -> List[int]:
        c = [0] * size
        c[0] = 1
        for _ in range(i):
            for m in range(1, size):
                # multiply by 1/(1 - t^m)
                for k in range(m, size):
                    c[k] += c[k - m]
        return c

    def __call__(self, n: int, i: int) -> int:
        return self.row(i, n)[n]


_COUNTER = MultipartitionCounter()


def a(n: int, i: int) -> int:
    """Number of i-multipartitions of n."""
    return _COUNTER(n, i)


def hp0_sympow_dim(h_top: int, n: int) -> int:
    """dim HP_0 of the n-th symmetric power of a symplectic variety whose top
    cohomology has dimension ``h_top``."""
    if h_top < 0 or n < 0:
        raise ValueError("arguments must be nonnegative")
    return a(n, h_top)


# --------------------------------------------------------------------------
# enumeration oracle


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[Tuple[int, ...], ...]:
    """All partitions of n in lexicographic order (parts weakly decreasing)."""
    if n == 0:
        return ((),)
    out = []

    def rec(rem, cap, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for p in range(1, min(rem, cap) + 1):
            rec(rem - p, p, prefix + [p])

    rec(n, n, [])
    return tuple(out)


def weak_compositions(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    if k == 0:
        if n == 0:
            yield ()
        return
    for cuts in itertools.combinations(range(n + k - 1), k - 1):
        prev = -1
        parts = []
        for c in cuts:
            parts.append(c - prev - 1)
            prev = c
        parts.append(n + k - 2 - prev)
        yield tuple(parts)


def multipartitions(n: int, i: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    for sizes in weak_compositions(n, i):
        yield from itertools.product(*(partitions(s) for s in sizes))


def count_multipartitions(n: int, i: int) -> int:
    """a_n(i) by enumerating size compositions and partition lists."""
    total = 0
    for sizes in weak_compositions(n, i):
        prod = 1
        for s in sizes:
            prod *= len(partitions(s))
        total += prod
    return total


# --------------------------------------------------------------------------
# generating functions


def hp0_sympow_series(jacobi_weights: Sequence[int], step: int, order: int,
                      grading: str = "unspecified") -> TruncatedSeries:
    """prod_i prod_{j>=0} 1/(1 - t^{n_i + j*step} s^{j+1}) to s-order ``order``.

    ``step`` is |f| in the same grading as the Jacobi weights n_i.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    if order < 0:
        raise ValueError("order must be >= 0")
    factors = [SeriesFactor(j + 1, (n + j * step,))
               for n in jacobi_weights for j in range(order)]
    return series_product(factors, order, arity=1, grading=grading)


def duval_hp0_series(record: DuValRecord, order: int, grading: str = "c2") -> TruncatedSeries:
    return hp0_sympow_series(record.jacobi_weights(grading), record.f_degree(grading),
                             order, grading)


def hpdr_sympow_duval_series(record: DuValRecord, order: int,
                             grading: str = "c2") -> TruncatedSeries:
    """Trigraded Poisson-de Rham series of the symmetric powers of C^2/Gamma.

    Coefficient of s^n is a table over (t, u) = (weight, homological degree).
    The extra family contributes 1/(1 - s^k t^{-2} u^{2k}) for k >= 1: the
    class s^{k-1}u has symmetric power k and homological degree 2k.
    """
    if grading not in GRADINGS:
        raise ValueError(f"unknown grading {grading!r}")
    if order < 0:
        raise ValueError("order must be >= 0")
    step = record.f_degree(grading)
    factors = [SeriesFactor(k, (-2, 2 * k)) for k in range(1, order + 1)]
    factors += [SeriesFactor(j + 1, (n + j * step, 0))
                for n in record.jacobi_weights(grading) for j in range(order)]
    return series_product(factors, order, arity=2, grading=grading)


# --------------------------------------------------------------------------
# twistor orders for du Val singularities


@dataclass(frozen=True)
class TwistorOrders:
    phi: Dict[Tuple[int, int], int]
    d: int
    coxeter_number: int
    dim: int = 2

    def reconstruction(self) -> BigradedHilbert:
        """y^{-d dim/2} sum_{i,j} x^i y^{d phi(dim - i, j)} as a table over (x, y)."""
        out: Dict[Tuple[int, int], int] = {}
        for (k, _), v in self.phi.items():
            key = (self.dim - k, self.d * v - self.d * self.dim // 2)
            out[key] = out.get(key, 0) + 1
        return BigradedHilbert(out)

    def orders(self, i: int) -> Tuple[int, ...]:
        return tuple(v for (k, _), v in sorted(self.phi.items()) if k == i)

    def to_json(self):
        return {
            "d": self.d,
            "coxeter_number": self.coxeter_number,
            "phi": [[i, j, v] for (i, j), v in sorted(self.phi.items())],
            "reconstruction": self.reconstruction().to_json(),
        }


def twistor_orders_duval(record: DuValRecord) -> TwistorOrders:
    """Jordan-block orders phi(2, j) = n_j/2 + 1 (C^2 grading), phi(0, 1) = 0."""
    phi = {(0, 1): 0}
    for j, n in enumerate(sorted(record.jacobi_weights("c2")), start=1):
        if n % 2:
            raise ValueError(f"{record.label}: odd C^2 Jacobi weight {n}")
        phi[(2, j)] = n // 2 + 1
    return TwistorOrders(phi, 2, record.coxeter_number)


def relabel_ut_to_xy(table) -> BigradedHilbert:
    """(t, u) table -> (x, y) table with x <- u, y <- t."""
    return BigradedHilbert({(e[1], e[0]): c for e, c in table.coeffs})
