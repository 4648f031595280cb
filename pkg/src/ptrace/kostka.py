"""Type A tableau combinatorics: Kostka polynomials, the bigraded nilcone
series and Hilbert series of HP_0 for Slodowy slices.

The graded multiplicity of the S_n irreducible chi_lambda in H^{2k} of the
flag variety is realized as #{T in SYT(lambda) : maj(T) = k}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from .exact_core import BigradedHilbert, GradedHilbert


@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def cells(self) -> Iterator[Tuple[int, int]]:
        for r, p in enumerate(self.parts):
            for c in range(p):
                yield r, c

    def hook_length_count(self) -> int:
        """Number of standard tableaux by the hook-length formula."""
        conj = self.conjugate().parts
        prod = 1
        for r, c in self.cells():
            prod *= (self.parts[r] - c - 1) + (conj[c] - r - 1) + 1
        return math.factorial(self.size) // prod

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partition(*parts) -> Partition:
    if len(parts) == 1 and not isinstance(parts[0], int):
        parts = tuple(parts[0])
    return Partition(tuple(sorted(parts, reverse=True)))


def partitions_of(n: int) -> List[Partition]:
    """Partitions of n, in reverse lexicographic order ((n) first)."""
    out = []

    def rec(rem, cap, prefix):
        if rem == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(rem, cap), 0, -1):
            rec(rem - p, p, prefix + [p])

    rec(n, n, [])
    return out


@dataclass(frozen=True)
class StandardTableau:
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = Partition(tuple(len(r) for r in rows))
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, shape.size + 1)):
            raise ValueError("entries must be 1..n exactly once")
        for r in rows:
            if any(r[i] >= r[i + 1] for i in range(len(r) - 1)):
                raise ValueError("rows must increase")
        for i in range(1, len(rows)):
            if any(rows[i][c] <= rows[i - 1][c] for c in range(len(rows[i]))):
                raise ValueError("columns must increase")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def row_of(self) -> Dict[int, int]:
        return {x: i for i, r in enumerate(self.rows) for x in r}


@lru_cache(maxsize=None)
def _syt_rows(parts: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    n = sum(parts)
    if n == 0:
        return ((),)
    out = []
    # n sits in a removable corner
    for i, p in enumerate(parts):
        if i + 1 < len(parts) and parts[i + 1] == p:
            continue
        smaller = list(parts)
        smaller[i] -= 1
        if smaller[i] == 0:
            smaller.pop(i)
        for rows in _syt_rows(tuple(smaller)):
            rows = list(rows) + [()] * (len(parts) - len(rows))
            rows[i] = rows[i] + (n,)
            out.append(tuple(rows))
    return tuple(sorted(out))


def syt(shape: Partition) -> List[StandardTableau]:
    """All standard Young tableaux of a shape, sorted by their rows."""
    return [StandardTableau(r) for r in _syt_rows(shape.parts)]


def maj(T: StandardTableau) -> int:
    """Sum of descents i, where i+1 lies in a strictly lower row than i."""
    row = T.row_of()
    return sum(i for i in range(1, len(row)) if row[i + 1] > row[i])


def flag_dim(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def _kostka(parts: Tuple[int, ...]) -> GradedHilbert:
    shape = Partition(parts)
    top = flag_dim(shape.size)
    return GradedHilbert.from_exponents(top - maj(T) for T in syt(shape))


def kostka(shape: Partition) -> GradedHilbert:
    """K_lambda(t) = sum_T t^{dim B - maj(T)}."""
    return _kostka(shape.parts)


def lusztig_nilcone(n: int) -> BigradedHilbert:
    """sum_lambda K_lambda(x^2) K_lambda(y^-2) as a table over (x, y)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out: Dict[Tuple[int, int], int] = {}
    for lam in partitions_of(n):
        K = kostka(lam).coeffs
        for (a,), ca in K:
            for (b,), cb in K:
                key = (2 * a, -2 * b)
                out[key] = out.get(key, 0) + ca * cb
    return BigradedHilbert(out)


def orbit_dim(jordan_type: Partition) -> int:
    """Dimension of the nilpotent orbit of a given Jordan type in gl_n."""
    n = jordan_type.size
    return n * n - sum(p * p for p in jordan_type.conjugate().parts)


def walgebra_hp0(jordan_type: Partition) -> GradedHilbert:
    """y^{dim G.e} K_lambda(y^-2) with lambda the Jordan type of e."""
    dim = orbit_dim(jordan_type)
    out = {}
    for (a,), c in kostka(jordan_type).coeffs:
        out[dim - 2 * a] = c
    return GradedHilbert(out)
