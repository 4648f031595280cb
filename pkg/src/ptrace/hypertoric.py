"""Vector matroids, Tutte polynomials and the hypertoric Poisson-de Rham series.

Conventions for a flat F of the arrangement matroid M:
    restriction  A^F := M / F  (contraction)
    localization A_F := M | F  (restriction to F)
The A_1 anchor (one hyperplane counted twice) fixes this assignment.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .exact_core import BigradedHilbert, bareiss_rank, nullspace, primitive, rank

Poly2 = Dict[Tuple[int, int], int]


class SpanningError(ValueError):
    pass


class VectorMatroid:
    """Matroid on the columns of a rational matrix."""

    def __init__(self, matrix: Sequence[Sequence], ncols: Optional[int] = None):
        rows = [tuple(Fraction(x) for x in r) for r in matrix]
        if ncols is None:
            if not rows:
                raise ValueError("empty matrix needs an explicit column count")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        self.rows = tuple(rows)
        self.n = ncols
        self.ground = frozenset(range(ncols))
        self._rank_cache: Dict[FrozenSet[int], int] = {}

    def __repr__(self):
        return f"VectorMatroid({[list(map(str, r)) for r in self.rows]})"

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def rank(self, subset=None) -> int:
        s = self.ground if subset is None else frozenset(subset)
        r = self._rank_cache.get(s)
        if r is None:
            cols = sorted(s)
            r = rank([[row[j] for j in cols] for row in self.rows]) if cols and self.rows else 0
            self._rank_cache[s] = r
        return r

    def closure(self, subset) -> FrozenSet[int]:
        s = frozenset(subset)
        r = self.rank(s)
        return frozenset(e for e in self.ground if e in s or self.rank(s | {e}) == r)

    def is_loop(self, e: int) -> bool:
        return self.rank({e}) == 0

    def is_coloop(self, e: int) -> bool:
        return self.rank(self.ground - {e}) < self.rank()

    def dual(self) -> "VectorMatroid":
        """Matroid of the orthogonal complement of the row space."""
        basis = nullspace(self.rows, self.n) if self.rows else [
            [Fraction(int(i == j)) for j in range(self.n)] for i in range(self.n)]
        return VectorMatroid([primitive(v) for v in basis], self.n)

    def bases_count(self) -> int:
        r = self.rank()
        return sum(1 for s in itertools.combinations(range(self.n), r) if self.rank(s) == r)


def flats(M: VectorMatroid) -> List[Tuple[FrozenSet[int], int]]:
    """All flats with their ranks, sorted by (rank, sorted elements)."""
    start = M.closure(())
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for F in frontier:
            for e in sorted(M.ground - F):
                G = M.closure(F | {e})
                if G not in seen:
                    seen.add(G)
                    nxt.append(G)
        frontier = nxt
    return sorted(((F, M.rank(F)) for F in seen), key=lambda p: (p[1], sorted(p[0])))


# --------------------------------------------------------------------------
# Tutte polynomials


def _padd(p: Poly2, q: Poly2) -> Poly2:
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _shift(p: Poly2, dx: int, dy: int) -> Poly2:
    return {(a + dx, b + dy): v for (a, b), v in p.items()}


def _contract_matrix(rows: Tuple[Tuple[Fraction, ...], ...], j: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Project away column j (nonzero): pivot on its first nonzero entry,
    clear the column, drop the pivot row; column j becomes zero."""
    p = next(i for i, r in enumerate(rows) if r[j])
    pr = rows[p]
    out = []
    for i, r in enumerate(rows):
        if i == p:
            continue
        if r[j]:
            f = r[j] / pr[j]
            r = tuple(a - f * b for a, b in zip(r, pr))
        out.append(r)
    return tuple(out)


def _mat_rank(rows, cols) -> int:
    if not rows or not cols:
        return 0
    return rank([[r[j] for j in cols] for r in rows])


def tutte(M: VectorMatroid) -> Poly2:
    """Tutte polynomial by deletion-contraction on the matrix itself.

    Contraction is carried out by row elimination, so this never calls the
    matroid's subset-rank oracle.  Memo key: (remaining columns, contracted
    columns).
    """
    memo: Dict[Tuple[FrozenSet[int], FrozenSet[int]], Poly2] = {}

    def rec(rows, remaining: FrozenSet[int], contracted: FrozenSet[int]) -> Poly2:
        key = (remaining, contracted)
        if key in memo:
            return memo[key]
        if not remaining:
            return {(0, 0): 1}
        e = min(remaining)
        rest = remaining - {e}
        if all(r[e] == 0 for r in rows):
            out = _shift(rec(rows, rest, contracted), 0, 1)
        else:
            cols = sorted(remaining)
            if _mat_rank(rows, sorted(rest)) < _mat_rank(rows, cols):
                out = _shift(rec(_contract_matrix(rows, e), rest, contracted | {e}), 1, 0)
            else:
                out = _padd(rec(rows, rest, contracted),
                            rec(_contract_matrix(rows, e), rest, contracted | {e}))
        memo[key] = out
        return out

    return rec(M.rows, M.ground, frozenset())


def tutte_corank_nullity(M: VectorMatroid) -> Poly2:
    """sum_S (x-1)^{r(E)-r(S)} (y-1)^{|S|-r(S)}, expanded by binomials."""
    rE = M.rank()
    acc: Dict[Tuple[int, int], int] = {}
    for k in range(M.n + 1):
        for S in itertools.combinations(range(M.n), k):
            rS = M.rank(S)
            a, b = rE - rS, k - rS
            acc[(a, b)] = acc.get((a, b), 0) + 1
    out: Dict[Tuple[int, int], int] = {}
    for (a, b), mult in acc.items():
        for i in range(a + 1):
            ci = _binom(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                cj = _binom(b, j) * (-1) ** (b - j)
                out[(i, j)] = out.get((i, j), 0) + mult * ci * cj
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _binom(n, k):
    from math import comb
    return comb(n, k)


def tutte_eval(T: Poly2, x, y):
    return sum(c * x ** a * y ** b for (a, b), c in T.items())


def tutte_str(T: Poly2) -> str:
    parts = []
    for (a, b), c in sorted(T.items()):
        mono = "*".join(s for s in ((f"x^{a}" if a > 1 else "x" if a else ""),
                                    (f"y^{b}" if b > 1 else "y" if b else "")) if s)
        parts.append((str(c) if c != 1 or not mono else "") + ("*" if c != 1 and mono else "") + mono)
    return " + ".join(parts) or "0"


def restriction(M: VectorMatroid, F) -> VectorMatroid:
    """M | F: keep only the columns in F."""
    cols = sorted(F)
    return VectorMatroid([[r[j] for j in cols] for r in M.rows], len(cols))


def contraction(M: VectorMatroid, F) -> VectorMatroid:
    """M / F on the complement of F, by projecting along span(F)."""
    rows = M.rows
    for e in sorted(F):
        if any(r[e] for r in rows):
            rows = _contract_matrix(rows, e)
    cols = sorted(M.ground - frozenset(F))
    return VectorMatroid([[r[j] for j in cols] for r in rows], len(cols))


# --------------------------------------------------------------------------
# hypertoric Poisson-de Rham series


def gale_dual(weight_matrix: Sequence[Sequence[int]]) -> List[List[int]]:
    """Normal vectors of the arrangement from a k x n torus weight matrix:
    an integer basis of the kernel, as an (n - rank) x n matrix."""
    n = len(weight_matrix[0])
    return [primitive(v) for v in nullspace(weight_matrix, n)]


def is_unimodular(normals: Sequence[Sequence[int]]) -> bool:
    """All nonzero maximal minors share one absolute value."""
    k, n = len(normals), len(normals[0]) if normals else 0
    seen = set()
    for cols in itertools.combinations(range(n), k):
        d = abs(_det([[Fraction(normals[i][j]) for j in cols] for i in range(k)]))
        if d:
            seen.add(d)
    return len(seen) <= 1


def _det(m: List[List[Fraction]]) -> Fraction:
    m = [list(r) for r in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


@dataclass(frozen=True)
class HypertoricResult:
    series: BigradedHilbert
    dim: int
    flats_used: int
    unimodular: bool

    def to_json(self):
        return {"series": self.series.to_json(), "dimX": self.dim,
                "flats": self.flats_used, "unimodular": self.unimodular}


def hpdr_hypertoric(matrix: Sequence[Sequence[int]], dimX: Optional[int] = None,
                    kind: str = "normals") -> HypertoricResult:
    """y^{-dim X} sum_F T_{M/F}(x^2, 0) T_{M|F}(0, y^{-2}) y^{2|F|} over (x, y).

    ``kind="normals"``: rows are coordinates of the hyperplane normals in
    C^{dim X / 2}.  ``kind="weights"``: a k x n torus weight matrix, dualized.
    """
    if kind == "weights":
        n = len(matrix[0])
        k = bareiss_rank([[int(x) for x in r] for r in matrix])
        normals = gale_dual(matrix)
        expected = 2 * (n - k)
    elif kind == "normals":
        normals = [list(r) for r in matrix]
        expected = 2 * len(normals)
    else:
        raise ValueError("kind must be 'normals' or 'weights'")
    if dimX is None:
        dimX = expected
    if dimX != expected:
        raise ValueError(f"dim X = {dimX} disagrees with the matrix (expected {expected})")
    half = dimX // 2
    ncols = len(matrix[0]) if matrix and matrix[0] else 0
    M = VectorMatroid(normals, ncols) if normals else VectorMatroid([], ncols)
    if M.rank() != half:
        raise SpanningError(
            f"hyperplane normals span a {M.rank()}-dimensional space, not C^{half}; "
            "the formula needs normals spanning C^{dim X/2}"
        )
    uni = is_unimodular(normals) if normals else True
    if not uni:
        warnings.warn("normal matrix is not unimodular; a symplectic resolution may not exist",
                      stacklevel=2)
    out: Dict[Tuple[int, int], int] = {}
    fl = flats(M)
    for F, _ in fl:
        top = tutte(contraction(M, F))
        loc = tutte(restriction(M, F))
        top_x = {(2 * a, 0): c for (a, b), c in top.items() if b == 0}
        loc_y = {(0, -2 * b): c for (a, b), c in loc.items() if a == 0}
        if any(restriction(M, F).is_coloop(e) for e in range(len(F))):
            # leaves are indexed by coloop-free flats; the others must vanish
            assert not loc_y, f"flat {sorted(F)} has a coloop but contributes"
        for (ea, _), ca in top_x.items():
            for (_, eb), cb in loc_y.items():
                key = (ea, eb + 2 * len(F) - dimX)
                out[key] = out.get(key, 0) + ca * cb
    return HypertoricResult(BigradedHilbert(out), dimX, len(fl), uni)


def uniform_rank_one(m: int) -> List[List[int]]:
    """Normals of U_{1,m}: one line counted m times."""
    return [[1] * m]
