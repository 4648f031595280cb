"""Exact arithmetic substrate: weighted polynomials over Q, graded tables,
truncated power series and fraction-free linear algebra.

Coefficients are :class:`fractions.Fraction`; exponent vectors are plain
tuples of non-negative ints.  Everything here is immutable once built.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

Rational = Fraction
Exponent = Tuple[int, ...]

# Laurent exponents stay far below this at desk scale; anything larger is a bug.
EXPONENT_LIMIT = 1 << 31


def _check_exponent(e: int) -> int:
    if not -EXPONENT_LIMIT < e < EXPONENT_LIMIT:
        raise OverflowError(f"exponent {e} out of range")
    return e


def format_rational(q: Fraction) -> str:
    """Exact "p/q" serialization (integers are written without a denominator)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


# --------------------------------------------------------------------------
# weighted polynomial rings


@dataclass(frozen=True)
class WeightedRing:
    weights: Tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(a) for a in self.weights)
        if not w:
            raise ValueError("a ring needs at least one variable")
        if any(a < 1 for a in w):
            raise ValueError(f"weights must be positive integers, got {w}")
        object.__setattr__(self, "weights", w)

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def degree(self, exp: Exponent) -> int:
        return sum(e * a for e, a in zip(exp, self.weights))

    def var(self, i: int) -> "WeightedPolynomial":
        """The variable x_{i+1} (0-based index)."""
        e = [0] * self.nvars
        e[i] = 1
        return WeightedPolynomial(self, {tuple(e): Fraction(1)})

    def const(self, c) -> "WeightedPolynomial":
        return WeightedPolynomial(self, {(0,) * self.nvars: Fraction(c)})

    def zero(self) -> "WeightedPolynomial":
        return WeightedPolynomial(self, {})


def graded_monomials(ring: WeightedRing, w: int) -> List[Exponent]:
    """Exponent vectors of weighted degree exactly ``w``.

    Canonical order is graded-lex: since all returned vectors share the same
    weighted degree, this is plain lexicographic order on the exponent
    tuples, largest first (so x1^k precedes anything with fewer x1's).
    """
    if w < 0:
        return []
    a = ring.weights
    n = len(a)
    out: List[Exponent] = []

    def rec(i: int, rem: int, prefix: List[int]):
        if i == n - 1:
            if rem % a[i] == 0:
                out.append(tuple(prefix + [rem // a[i]]))
            return
        for e in range(rem // a[i], -1, -1):
            rec(i + 1, rem - e * a[i], prefix + [e])

    rec(0, w, [])
    return out


class WeightedPolynomial:
    """Sparse polynomial over Q in a :class:`WeightedRing`.

    ``terms`` maps exponent tuples to nonzero Fractions.  Instances are
    treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: WeightedRing, terms: Optional[Mapping[Exponent, object]] = None):
        self.ring = ring
        clean: Dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != ring.nvars or any(k < 0 for k in e):
                raise ValueError(f"bad exponent {e} for {ring.nvars} variables")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self._terms = clean
        self._hash = None

    # -- basic protocol
    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, WeightedPolynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"WeightedPolynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, key=lambda e: (-self.ring.degree(e), tuple(-k for k in e))):
            c = self._terms[e]
            mono = "*".join(
                f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{format_rational(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def _coerce(self, other) -> "WeightedPolynomial":
        if isinstance(other, WeightedPolynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        raise TypeError(f"cannot combine polynomial with {type(other).__name__}")

    # -- arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self._terms)
        for e, c in other._terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return WeightedPolynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return WeightedPolynomial(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return WeightedPolynomial(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = self.ring.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- calculus and grading
    def diff(self, i: int) -> "WeightedPolynomial":
        t = {}
        for e, c in self._terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                t[tuple(e2)] = c * e[i]
        return WeightedPolynomial(self.ring, t)

    def degrees(self) -> set:
        return {self.ring.degree(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> Optional[int]:
        """Weighted degree of a homogeneous polynomial (None for 0)."""
        d = self.degrees()
        if not d:
            return None
        if len(d) > 1:
            raise ValueError(f"{self} is not quasi-homogeneous")
        return d.pop()

    def coefficient(self, exp: Exponent) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                v *= Fraction(x) ** k
            total += v
        return total

    def to_json(self):
        return [[list(e), format_rational(c)] for e, c in sorted(self._terms.items(), reverse=True)]


def jacobian_det(polys: Sequence[WeightedPolynomial]) -> WeightedPolynomial:
    """det(d p_i / d x_j) expanded exactly."""
    if not polys:
        raise ValueError("empty list")
    ring = polys[0].ring
    if any(p.ring != ring for p in polys):
        raise ValueError("polynomials live in different rings")
    n = ring.nvars
    if len(polys) != n:
        raise ValueError(f"need {n} polynomials for a {n}-variable Jacobian, got {len(polys)}")
    matrix = [[p.diff(j) for j in range(n)] for p in polys]
    return poly_det(matrix, ring)


def poly_det(matrix: List[List[WeightedPolynomial]], ring: WeightedRing) -> WeightedPolynomial:
    """Cofactor expansion along the first row, skipping zero entries."""
    k = len(matrix)
    if k == 0:
        return ring.const(1)
    if k == 1:
        return matrix[0][0]
    out = ring.zero()
    for j, entry in enumerate(matrix[0]):
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * poly_det(minor, ring)
        out = out - term if j % 2 else out + term
    return out


# --------------------------------------------------------------------------
# exact linear algebra


def _integer_rows(vectors: Iterable[Sequence]) -> List[List[int]]:
    rows = []
    for v in vectors:
        v = [Fraction(x) for x in v]
        den = 1
        for x in v:
            den = den * x.denominator // math.gcd(den, x.denominator)
        rows.append([int(x * den) for x in v])
    return rows


def bareiss_rank(rows: List[List[int]]) -> int:
    """Rank of an integer matrix by Bareiss fraction-free elimination.

    Works in place on ``rows``.  Pivot: for each column in order, the first
    row (at or below the current pivot row) with a nonzero entry.
    """
    if not rows:
        return 0
    m, n = len(rows), len(rows[0])
    r = 0
    prev = 1
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        pr = rows[r]
        for i in range(r + 1, m):
            ri = rows[i]
            a = ri[c]
            for j in range(c + 1, n):
                # exact division is the Bareiss guarantee
                ri[j] = (piv * ri[j] - a * pr[j]) // prev
            ri[c] = 0
        prev = piv
        r += 1
    return r


def span_dim(vectors: Sequence[Sequence]) -> int:
    """Dimension of the span of rational coefficient vectors."""
    vectors = list(vectors)
    if not vectors:
        return 0
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ValueError("vectors must all have the same length")
    return bareiss_rank(_integer_rows(vectors))


def rank(matrix: Sequence[Sequence]) -> int:
    return span_dim(matrix)


def nullspace(matrix: Sequence[Sequence], ncols: Optional[int] = None) -> List[List[Fraction]]:
    """Basis of {v : M v = 0} over Q, from the reduced row echelon form."""
    rows = [[Fraction(x) for x in r] for r in matrix]
    n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def primitive(v: Sequence[Fraction]) -> List[int]:
    """Scale a rational vector to a primitive integer vector (first nonzero > 0)."""
    ints = _integer_rows([v])[0]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return [-x for x in ints] if lead < 0 else ints


class EchelonBasis:
    """Incrementally maintained row-echelon basis over Z (sparse rows).

    Rows are dicts column -> int kept primitive.  The pivot of a row is its
    smallest column index.  ``add`` reduces a vector fraction-free against
    the existing rows and keeps it if something survives.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: Dict[int, Dict[int, int]] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def full(self) -> bool:
        return len(self.rows) == self.ncols

    def reduce(self, vec: Mapping[int, object]) -> Dict[int, int]:
        v = _integer_sparse(vec)
        rows = self.rows
        while v:
            p = min(v)
            r = rows.get(p)
            if r is None:
                break
            a, b = r[p], v[p]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            out = {}
            for k, x in v.items():
                out[k] = a * x
            for k, x in r.items():
                y = out.get(k, 0) - b * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
            v = _make_primitive(out)
        return v

    def add(self, vec: Mapping[int, object]) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        self.rows[min(v)] = v
        return True

    def contains(self, vec: Mapping[int, object]) -> bool:
        return not self.reduce(vec)


def _integer_sparse(vec: Mapping[int, object]) -> Dict[int, int]:
    den = 1
    vals = {}
    for k, x in vec.items():
        x = Fraction(x)
        if x:
            vals[k] = x
            den = den * x.denominator // math.gcd(den, x.denominator)
    return _make_primitive({k: int(x * den) for k, x in vals.items()})


def _make_primitive(v: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for x in v.values():
        g = math.gcd(g, x)
        if g == 1:
            return v
    if g > 1:
        return {k: x // g for k, x in v.items()}
    return v


# --------------------------------------------------------------------------
# graded tables (Hilbert series with integer Laurent exponents)


@dataclass(frozen=True)
class Graded:
    """Finitely supported map Z^arity -> Z_{>=0}, i.e. a Laurent polynomial
    with nonnegative integer coefficients in ``arity`` variables."""

    coeffs: Tuple[Tuple[Exponent, int], ...] = ()
    arity: int = 1

    def __post_init__(self):
        items = dict(self.coeffs) if not isinstance(self.coeffs, dict) else self.coeffs
        norm: Dict[Exponent, int] = {}
        for e, c in items.items():
            e = (e,) if isinstance(e, int) else tuple(e)
            if len(e) != self.arity:
                raise ValueError(f"exponent {e} has wrong arity (want {self.arity})")
            e = tuple(_check_exponent(int(k)) for k in e)
            c = int(c)
            if c < 0:
                raise ValueError(f"graded dimension {c} at {e} is negative")
            if c:
                norm[e] = norm.get(e, 0) + c
        object.__setattr__(self, "coeffs", tuple(sorted(norm.items())))

    @classmethod
    def from_dict(cls, d: Mapping, arity: Optional[int] = None):
        if arity is None:
            return cls(dict(d))
        return cls(dict(d), arity)

    def as_dict(self) -> Dict:
        if self.arity == 1:
            return {e[0]: c for e, c in self.coeffs}
        return dict(self.coeffs)

    def _raw(self) -> Dict[Exponent, int]:
        return dict(self.coeffs)

    def __getitem__(self, e) -> int:
        e = (e,) if isinstance(e, int) else tuple(e)
        return self._raw().get(e, 0)

    def __bool__(self):
        return bool(self.coeffs)

    def _new(self, d: Dict[Exponent, int]) -> "Graded":
        return _graded_class(self.arity)(d, self.arity) if type(self) is Graded else type(self)(d)

    def total(self) -> int:
        return sum(c for _, c in self.coeffs)

    def support(self) -> List:
        return [e[0] if self.arity == 1 else e for e, _ in self.coeffs]

    def __add__(self, other: "Graded") -> "Graded":
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        d = self._raw()
        for e, c in other.coeffs:
            d[e] = d.get(e, 0) + c
        return self._new(d)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new({e: c * other for e, c in self.coeffs})
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        d: Dict[Exponent, int] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return self._new(d)

    __rmul__ = __mul__

    def shift(self, *offset: int) -> "Graded":
        return self._new({tuple(a + b for a, b in zip(e, offset)): c for e, c in self.coeffs})

    def scale(self, *factors: int) -> "Graded":
        """Substitute t_k -> t_k^{factor_k}."""
        return self._new({tuple(a * b for a, b in zip(e, factors)): c for e, c in self.coeffs})

    def specialize(self, keep: Sequence[int]) -> "Graded":
        """Set every variable not listed in ``keep`` to 1."""
        d: Dict[Exponent, int] = {}
        for e, c in self.coeffs:
            k = tuple(e[i] for i in keep)
            d[k] = d.get(k, 0) + c
        return _graded_class(len(keep))(d, len(keep)) if keep else d.get((), 0)

    def to_json(self):
        if self.arity == 1:
            return [[e[0], c] for e, c in self.coeffs]
        return [list(e) + [c] for e, c in self.coeffs]

    def pretty(self, names: Sequence[str] = ("t", "u", "v")) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.coeffs:
            mono = "*".join(
                names[i] + ("" if k == 1 else f"^{k}" if k > 0 else f"^({k})")
                for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


class GradedHilbert(Graded):
    def __init__(self, coeffs=(), arity: int = 1):
        if arity != 1:
            raise ValueError("GradedHilbert is singly graded")
        super().__init__(coeffs, 1)

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "GradedHilbert":
        d: Dict[int, int] = {}
        for e in exps:
            d[e] = d.get(e, 0) + 1
        return cls(d)

    def exponents(self) -> List[int]:
        """Multiset of exponents, sorted."""
        return [e[0] for e, c in self.coeffs for _ in range(c)]


class BigradedHilbert(Graded):
    def __init__(self, coeffs=(), arity: int = 2):
        if arity != 2:
            raise ValueError("BigradedHilbert has two gradings")
        super().__init__(coeffs, 2)


class TrigradedHilbert(Graded):
    def __init__(self, coeffs=(), arity: int = 3):
        if arity != 3:
            raise ValueError("TrigradedHilbert has three gradings")
        super().__init__(coeffs, 3)


def _graded_class(arity: int):
    return {1: GradedHilbert, 2: BigradedHilbert, 3: TrigradedHilbert}.get(arity, Graded)


def graded(d: Mapping, arity: int) -> Graded:
    cls = _graded_class(arity)
    if cls is Graded:
        return Graded(dict(d), arity)
    return cls(dict(d))


# --------------------------------------------------------------------------
# truncated series in a distinguished variable s


@dataclass(frozen=True)
class TruncatedSeries:
    """sum_{k=0}^{order} coeffs[k] * s^k with graded coefficients."""

    order: int
    coeffs: Tuple[Graded, ...]
    grading: str = "unspecified"

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"need {self.order + 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def arity(self) -> int:
        return self.coeffs[0].arity

    def __getitem__(self, k: int) -> Graded:
        return self.coeffs[k]

    def specialize_all(self) -> List[int]:
        """Set every non-s variable to 1."""
        return [c.total() for c in self.coeffs]

    def trigraded(self) -> Graded:
        """Flatten into a single table with the s-power as first exponent."""
        d = {}
        for k, c in enumerate(self.coeffs):
            for e, v in c.coeffs:
                d[(k,) + e] = v
        return graded(d, self.arity + 1)

    def to_json(self):
        return {
            "grading": self.grading,
            "order": self.order,
            "series": [[k, c.to_json()] for k, c in enumerate(self.coeffs)],
        }


@dataclass(frozen=True)
class SeriesFactor:
    """One factor of a product: 1/(1 - m) if geometric else (1 + m), where
    m = s^{s_exp} * t^{exps}."""

    s_exp: int
    exps: Tuple[int, ...] = ()
    geometric: bool = True


def series_product(factors: Iterable, order: int, arity: Optional[int] = None,
                   grading: str = "unspecified") -> TruncatedSeries:
    """Expand a product of geometric (or binomial) factors to s-order ``order``.

    ``factors`` are :class:`SeriesFactor` or tuples ``(s_exp, exps[, geometric])``.
    Factors with ``s_exp > order`` cannot contribute and are skipped.
    """
    fs = []
    for f in factors:
        if not isinstance(f, SeriesFactor):
            f = SeriesFactor(f[0], tuple(f[1]), *(f[2:] or (True,)))
        if f.s_exp <= 0:
            raise ValueError(f"factor with s-exponent {f.s_exp} does not truncate")
        fs.append(f)
    if arity is None:
        arity = len(fs[0].exps) if fs else 1
    zero = (0,) * arity
    series: List[Dict[Exponent, int]] = [dict() for _ in range(order + 1)]
    series[0][zero] = 1
    for f in fs:
        if len(f.exps) != arity:
            raise ValueError("factor exponent arity mismatch")
        e, m = f.s_exp, tuple(_check_exponent(x) for x in f.exps)
        if e > order:
            continue
        if f.geometric:
            # multiply by 1/(1 - m s^e): new[k] = old[k] + m*new[k-e], ascending
            for k in range(e, order + 1):
                src = series[k - e]
                dst = series[k]
                for ex, c in src.items():
                    key = tuple(a + b for a, b in zip(ex, m))
                    dst[key] = dst.get(key, 0) + c
        else:
            for k in range(order, e - 1, -1):
                src = series[k - e]
                dst = series[k]
                for ex, c in src.items():
                    key = tuple(a + b for a, b in zip(ex, m))
                    dst[key] = dst.get(key, 0) + c
    return TruncatedSeries(order, tuple(graded(d, arity) for d in series), grading)


def int_poly_divide(num: List[int], den: List[int]) -> Optional[List[int]]:
    """Exact division of integer polynomials (coefficient lists, constant
    term first).  Returns None when the division leaves a remainder."""
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return [0]
    dl = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dl:
        return None
    q = [0] * (len(num) - dl)
    for i in range(len(num) - 1, dl - 1, -1):
        c = num[i]
        if c == 0:
            continue
        if c % lead:
            return None
        k = c // lead
        q[i - dl] = k
        for j, d in enumerate(den):
            num[i - dl + j] -= k * d
    if any(num):
        return None
    return q


def int_poly_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out
