"""Jacobian Poisson brackets on surfaces and brute-force zeroth Poisson homology.

A surface X in C^n is cut out by n-2 quasi-homogeneous equations
f_1..f_{n-2}; its bracket is

    {g, h} = det d(f_1, ..., f_{n-2}, g, h) / d(x_1, ..., x_n).

HP_0(O(X)) = O(X)/{O(X), O(X)} is computed one weight at a time inside the
ambient slice C[x]_w: the ideal slice and all monomial brackets landing in
weight w are stacked and a single exact rank gives the quotient dimension.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .exact_core import (
    EchelonBasis,
    GradedHilbert,
    WeightedPolynomial,
    WeightedRing,
    graded_monomials,
    poly_det,
)

DEFAULT_BUDGET = 512 * 1024 * 1024
BYTES_PER_ENTRY = 8


class ResourceBudgetError(RuntimeError):
    """A weight slice would exceed the configured matrix-size budget."""

    def __init__(self, weight: int, needed: int, budget: int):
        self.weight = weight
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"weight {weight} slice needs ~{needed} bytes, over the budget of {budget} bytes"
        )


class NotIsolatedError(ValueError):
    pass


def default_budget() -> int:
    env = os.environ.get("PTRACE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class SurfaceVariety:
    ring: WeightedRing
    defining: Tuple[WeightedPolynomial, ...]

    def __post_init__(self):
        defining = tuple(self.defining)
        object.__setattr__(self, "defining", defining)
        n = self.ring.nvars
        if n < 2:
            raise ValueError("need at least two variables")
        if len(defining) != n - 2:
            raise ValueError(f"a surface in C^{n} needs {n - 2} equations, got {len(defining)}")
        for f in defining:
            if f.ring != self.ring:
                raise ValueError("defining equation lives in a different ring")
            if not f:
                raise ValueError("defining equation is zero")
            f.degree()  # raises unless quasi-homogeneous

    @classmethod
    def hypersurface(cls, f: WeightedPolynomial) -> "SurfaceVariety":
        return cls(f.ring, (f,))

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(f.degree() for f in self.defining)

    @property
    def bracket_degree(self) -> int:
        return sum(self.degrees) - sum(self.ring.weights)

    @property
    def weights(self) -> Tuple[int, ...]:
        return self.ring.weights

    def jacobi_socle_degree(self) -> Optional[int]:
        """sum(m - 2 a_i) for hypersurfaces, the top weight of the Milnor algebra."""
        if len(self.defining) != 1:
            return None
        m = self.degrees[0]
        return sum(m - 2 * a for a in self.weights)


@dataclass(frozen=True)
class Hp0Profile:
    dims: GradedHilbert
    total: int
    certified_through: int
    stabilization_window: int
    outside_hypotheses: bool = False

    def to_json(self):
        return {
            "weights": self.dims.to_json(),
            "total": self.total,
            "certified_through": self.certified_through,
            "window": self.stabilization_window,
            "outside_hypotheses": self.outside_hypotheses,
        }


def _minors(X: SurfaceVariety) -> Dict[Tuple[int, int], WeightedPolynomial]:
    """sign * minor of the f-rows with columns b < c removed, i.e. the
    cofactor multiplying (g_b h_c - g_c h_b) in the bracket."""
    n = X.ring.nvars
    rows = [[f.diff(j) for j in range(n)] for f in X.defining]
    out = {}
    for b, c in itertools.combinations(range(n), 2):
        keep = [j for j in range(n) if j not in (b, c)]
        m = poly_det([[r[j] for j in keep] for r in rows], X.ring)
        # Laplace expansion along the last two rows, 1-based indices
        sign = -1 if (2 * n - 1 + (b + 1) + (c + 1)) % 2 else 1
        if m:
            out[(b, c)] = m if sign > 0 else -m
    return out


class _BracketEngine:
    """Precomputed cofactors for fast brackets of monomials."""

    def __init__(self, X: SurfaceVariety):
        self.X = X
        self.minors = {k: dict(v.items()) for k, v in _minors(X).items()}

    def poly_bracket(self, g: WeightedPolynomial, h: WeightedPolynomial) -> WeightedPolynomial:
        ring = self.X.ring
        out: Dict[tuple, Fraction] = {}
        for (b, c), m in self.minors.items():
            mixed = g.diff(b) * h.diff(c) - g.diff(c) * h.diff(b)
            for e1, c1 in mixed.items():
                for e2, c2 in m.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    out[e] = out.get(e, 0) + c1 * c2
        return WeightedPolynomial(ring, out)

    def monomial_bracket(self, g: tuple, h: tuple) -> Dict[tuple, Fraction]:
        out: Dict[tuple, Fraction] = {}
        for (b, c), m in self.minors.items():
            # d_b g * d_c h - d_c g * d_b h, all on monomials
            coef = g[b] * h[c] - g[c] * h[b]
            if not coef:
                continue
            base = [x + y for x, y in zip(g, h)]
            base[b] -= 1
            base[c] -= 1
            for e2, c2 in m.items():
                e = tuple(x + y for x, y in zip(base, e2))
                v = out.get(e, 0) + coef * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return out


def bracket(X: SurfaceVariety, g: WeightedPolynomial, h: WeightedPolynomial) -> WeightedPolynomial:
    """The Jacobian bracket {g, h}, not reduced modulo the ideal of X."""
    if g.ring != X.ring or h.ring != X.ring:
        raise ValueError("bracket arguments must live in the ambient ring of X")
    return _BracketEngine(X).poly_bracket(g, h)


def _slice_rank(X, engine, w, budget, cache):
    """(dim C[x]_w, rank of ideal+bracket span in C[x]_w)."""
    ring = X.ring
    monos = graded_monomials(ring, w)
    if not monos:
        return 0, 0
    index = {e: i for i, e in enumerate(monos)}

    def mons(k):
        if k not in cache:
            cache[k] = graded_monomials(ring, k)
        return cache[k]

    ideal_rows = sum(len(mons(w - m)) for m in X.degrees)
    target = w - X.bracket_degree
    pairs = []
    for wg in range(1, target // 2 + 1):
        wh = target - wg
        if wh <= 0:
            continue
        for g in mons(wg):
            for h in mons(wh):
                # (g,h) and (h,g) span the same line
                if wg == wh and g >= h:
                    continue
                pairs.append((g, h))
    needed = (ideal_rows + len(pairs)) * len(monos) * BYTES_PER_ENTRY
    if needed > budget:
        raise ResourceBudgetError(w, needed, budget)

    basis = EchelonBasis(len(monos))
    for f, m in zip(X.defining, X.degrees):
        for e in mons(w - m):
            vec = {}
            for ef, c in f.items():
                vec[index[tuple(a + b for a, b in zip(e, ef))]] = c
            basis.add(vec)
            if basis.full:
                return len(monos), len(basis)
    for g, h in pairs:
        br = engine.monomial_bracket(g, h)
        if br:
            basis.add({index[e]: c for e, c in br.items()})
            if basis.full:
                break
    return len(monos), len(basis)


def hp0_weight_dim(X: SurfaceVariety, w: int, budget: Optional[int] = None) -> int:
    engine = _BracketEngine(X)
    n, r = _slice_rank(X, engine, w, budget or default_budget(), {})
    return n - r


def default_window(X: SurfaceVariety) -> int:
    return max(X.weights) + sum(X.degrees)


def hp0_dims(X: SurfaceVariety, w_max: Optional[int] = None, *,
             window: Optional[int] = None, budget: Optional[int] = None,
             check_isolated: bool = True) -> Hp0Profile:
    """Graded dimensions of HP_0(O(X)) by exact linear algebra.

    With ``w_max`` given, every weight 0..w_max is computed.  Otherwise the
    computation runs until it has passed both the Milnor-algebra socle degree
    (hypersurfaces) and ``window`` consecutive zero weights after the last
    nonzero one.
    """
    budget = budget or default_budget()
    outside = False
    if check_isolated and X.ring.nvars == 3:
        ok, _ = is_isolated(X)
        outside = not ok
        if outside and w_max is None:
            raise NotIsolatedError(
                "singular locus is not isolated (outside the isolated quasi-homogeneous setting); "
                "HP_0 need not be finite-dimensional; pass an explicit w_max to inspect slices"
            )
    if w_max is not None and w_max < 0:
        raise ValueError("w_max must be >= 0")
    win = window if window is not None else default_window(X)
    floor = max(X.jacobi_socle_degree() or 0, 0)
    engine = _BracketEngine(X)
    cache: Dict[int, list] = {}
    dims: Dict[int, int] = {}
    last = -1
    w = 0
    while True:
        if w_max is not None and w > w_max:
            break
        if w_max is None and w > floor and w - last > win:
            break
        n, r = _slice_rank(X, engine, w, budget, cache)
        if n - r:
            dims[w] = n - r
            last = w
        w += 1
    through = w - 1
    gh = GradedHilbert(dims)
    return Hp0Profile(gh, gh.total(), through, through - max(last, 0) if last >= 0 else through + 1,
                      outside)


# ----------------------------------------------------------------------------
# isolatedness via Jacobi-ring slices


def jacobi_dims_linear(f: WeightedPolynomial, w_max: int) -> Dict[int, int]:
    """dim (C[x]/(df))_w for w <= w_max by linear algebra in each slice."""
    ring = f.ring
    m = f.degree()
    partials = [(f.diff(i), m - a) for i, a in enumerate(ring.weights)]
    out = {}
    for w in range(w_max + 1):
        monos = graded_monomials(ring, w)
        if not monos:
            continue
        index = {e: i for i, e in enumerate(monos)}
        basis = EchelonBasis(len(monos))
        for p, dp in partials:
            if not p:
                continue
            for e in graded_monomials(ring, w - dp):
                basis.add({index[tuple(a + b for a, b in zip(e, ep))]: c for ep, c in p.items()})
                if basis.full:
                    break
            if basis.full:
                break
        if len(monos) - len(basis):
            out[w] = len(monos) - len(basis)
    return out


@dataclass(frozen=True)
class IsolatedCertificate:
    window: Tuple[int, int]
    dims_in_window: Dict[int, int] = field(default_factory=dict)

    def to_json(self):
        return {"window": list(self.window),
                "nonzero_in_window": sorted(self.dims_in_window.items())}


def is_isolated(X: SurfaceVariety) -> Tuple[bool, IsolatedCertificate]:
    """Whether a quasi-homogeneous hypersurface in C^3 has isolated singular locus.

    Holds iff the Jacobi ring vanishes on the weight window (W, W + max a_i],
    W = sum(m - 2 a_i): every higher monomial is then a multiple of a monomial
    in that window.
    """
    if X.ring.nvars != 3:
        raise ValueError("is_isolated handles hypersurfaces in C^3")
    f = X.defining[0]
    W = X.jacobi_socle_degree()
    top = W + max(X.weights)
    lo = max(W + 1, 0)
    dims = jacobi_dims_linear(f, top)
    bad = {w: d for w, d in dims.items() if lo <= w <= top}
    return not bad, IsolatedCertificate((W, top), bad)
