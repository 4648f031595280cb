"""Closed-form invariants of isolated quasi-homogeneous surface singularities."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .exact_core import (
    GradedHilbert,
    WeightedPolynomial,
    WeightedRing,
    int_poly_divide,
    int_poly_mul,
)
from .parsing import parse_polynomial
from .poisson_bracket import SurfaceVariety

GRADINGS = ("listed", "c2", "paper")


class NotIsolatedWeights(ValueError):
    pass


def jacobi_hilbert(weights: Sequence[int], m: int) -> GradedHilbert:
    """Hilbert series prod (1 - t^{m-a_i}) / (1 - t^{a_i}) of the Milnor
    algebra of a generic quasi-homogeneous f of degree m."""
    weights = [int(a) for a in weights]
    if any(a < 1 for a in weights):
        raise ValueError("weights must be positive")
    if any(m - a <= 0 for a in weights):
        raise NotIsolatedWeights(
            "not an isolated quasi-homogeneous singularity for these weight data "
            f"(need m > a_i, got m={m}, a={weights})"
        )
    num = [1]
    den = [1]
    for a in weights:
        num = int_poly_mul(num, [1] + [0] * (m - a - 1) + [-1])
        den = int_poly_mul(den, [1] + [0] * (a - 1) + [-1])
    q = int_poly_divide(num, den)
    if q is None or any(c < 0 for c in q):
        raise NotIsolatedWeights(
            "not an isolated quasi-homogeneous singularity for these weight data "
            f"(quotient is not a polynomial for m={m}, a={weights})"
        )
    return GradedHilbert({i: c for i, c in enumerate(q) if c})


def milnor_number(weights: Sequence[int], m: int) -> Fraction:
    """prod (m - a_i) / a_i; an integer whenever the singularity is isolated."""
    num, den = 1, 1
    for a in weights:
        num *= m - a
        den *= a
    return Fraction(num, den)


# --------------------------------------------------------------------------
# composition-series bookkeeping for M(X)


@dataclass(frozen=True)
class CompositionLedger:
    """Multiplicities of delta-function D-modules in M(X) at one singular point.

    ``delta_below`` sits under IC(X) in the indecomposable summand,
    ``delta_top_ind`` on top of it, ``delta_summand`` splits off.
    """

    delta_below: int
    delta_top_ind: int
    delta_summand: int
    milnor: int
    b1_link: int
    ic_count: int = 1
    status: str = "theorem (quasi-homogeneous)"

    def __post_init__(self):
        if self.delta_below + self.delta_top_ind + self.delta_summand != self.milnor + self.b1_link:
            raise ValueError("ledger does not account for mu + b1(link) delta factors")
        if self.delta_top_ind + self.delta_summand != self.milnor:
            raise ValueError("top delta factors must total the Milnor number")

    @property
    def semisimple(self) -> bool:
        return self.delta_below == 0 and self.delta_top_ind == 0

    def to_json(self):
        return {
            "ic_count": self.ic_count,
            "delta_below": self.delta_below,
            "delta_top_ind": self.delta_top_ind,
            "delta_summand": self.delta_summand,
            "milnor": self.milnor,
            "b1_link": self.b1_link,
            "semisimple": self.semisimple,
            "status": self.status,
        }


def composition_ledger(milnor: int, genus: int, b1_link: int,
                       quasi_homogeneous: bool = True) -> CompositionLedger:
    return CompositionLedger(
        delta_below=b1_link,
        delta_top_ind=genus,
        delta_summand=milnor - genus,
        milnor=milnor,
        b1_link=b1_link,
        status="theorem (quasi-homogeneous)" if quasi_homogeneous else "conjectural",
    )


@dataclass(frozen=True)
class ConeCurve:
    degree: int
    genus: int
    milnor: int
    ledger: CompositionLedger

    def to_json(self):
        return {"degree": self.degree, "genus": self.genus, "milnor": self.milnor,
                "ledger": self.ledger.to_json()}


def cone_curve(d: int) -> ConeCurve:
    """Cone over a smooth plane curve of degree d."""
    if d <= 1:
        raise ValueError("cone over a curve of degree <= 1 is smooth or empty")
    g = (d - 1) * (d - 2) // 2
    mu = (d - 1) ** 3
    return ConeCurve(d, g, mu, composition_ledger(mu, g, 2 * g))


# --------------------------------------------------------------------------
# Poisson-de Rham homology of surfaces


@dataclass(frozen=True)
class HpdrProfile:
    dims: Tuple[int, int, int]  # homological degrees 0, 1, 2
    milnor_sum: int

    def __getitem__(self, k):
        return self.dims[k]

    def euler(self) -> int:
        return self.dims[0] - self.dims[1] + self.dims[2]

    def to_json(self):
        return {"dims": {str(k): v for k, v in enumerate(self.dims)}, "milnor_sum": self.milnor_sum}


def hpdr_surface(betti: Sequence[int], milnors: Sequence[int]) -> HpdrProfile:
    b0, b1, b2 = betti
    if min(b0, b1, b2) < 0 or any(m < 0 for m in milnors):
        raise ValueError("Betti and Milnor numbers are nonnegative")
    s = sum(milnors)
    return HpdrProfile((b2 + s, b1, b0), s)


def smoothing_rank(betti2: int, milnors: Sequence[int]) -> int:
    """Rank of the HP_0 bundle on a smoothing near t = 0."""
    if betti2 < 0 or any(m < 0 for m in milnors):
        raise ValueError("inputs must be nonnegative")
    return betti2 + sum(milnors)


def irrep_bound(hp0_total: int) -> int:
    """Upper bound on the number of irreducible finite-dimensional
    representations of any filtered quantization."""
    if hp0_total < 0:
        raise ValueError("dimension must be nonnegative")
    return hp0_total


# --------------------------------------------------------------------------
# du Val and simple elliptic records


@dataclass(frozen=True)
class DuValRecord:
    label: str
    weights: Tuple[int, int, int]
    equation: str
    fdegree: int
    weyl_degrees: Tuple[int, ...]
    coxeter_number: int
    jacobi_listed: Tuple[int, ...]

    @property
    def milnor(self) -> int:
        return len(self.weyl_degrees)

    @property
    def bracket_degree(self) -> int:
        return self.fdegree - sum(self.weights)

    @property
    def c2_scale(self) -> int:
        # listed weights are C^2-induced in type A (bracket degree -2), halved in D/E
        return 2 // -self.bracket_degree

    def polynomial(self) -> WeightedPolynomial:
        return parse_polynomial(self.equation, WeightedRing(self.weights))

    def surface(self) -> SurfaceVariety:
        return SurfaceVariety.hypersurface(self.polynomial())

    def grading_factor(self, grading: str) -> Fraction:
        if grading == "listed":
            return Fraction(1)
        if grading == "c2":
            return Fraction(self.c2_scale)
        if grading == "paper":
            return Fraction(self.c2_scale, 2)
        raise ValueError(f"unknown grading {grading!r}; use one of {GRADINGS}")

    def jacobi_weights(self, grading: str = "c2") -> Tuple[int, ...]:
        k = self.grading_factor(grading)
        out = tuple(n * k for n in self.jacobi_listed)
        if any(x.denominator != 1 for x in out):
            raise ValueError(f"grading {grading} is not integral for {self.label}")
        return tuple(int(x) for x in out)

    def f_degree(self, grading: str = "c2") -> int:
        return int(self.fdegree * self.grading_factor(grading))

    def grading_weights(self, grading: str = "c2") -> Tuple:
        k = self.grading_factor(grading)
        return tuple(a * k for a in self.weights)

    def jacobi_series(self, grading: str = "c2") -> GradedHilbert:
        return GradedHilbert.from_exponents(self.jacobi_weights(grading))

    def to_json(self, grading: str = "c2"):
        return {
            "label": self.label,
            "grading": grading,
            "listed_weights": list(self.weights),
            "grading_weights": [str(x) if Fraction(x).denominator != 1 else int(x)
                                for x in self.grading_weights(grading)],
            "equation": self.equation,
            "fdegree": self.f_degree(grading),
            "bracket_degree_listed": self.bracket_degree,
            "weyl_degrees": list(self.weyl_degrees),
            "coxeter_number": self.coxeter_number,
            "milnor": self.milnor,
            "jacobi_weights": list(self.jacobi_weights(grading)),
        }


_LABEL = re.compile(r"^\s*([ADEade])_?\{?(\d+)\}?\s*$")


def _weyl_degrees(kind: str, r: int) -> Tuple[int, ...]:
    if kind == "A":
        return tuple(range(2, r + 2))
    if kind == "D":
        return tuple(sorted(list(range(2, 2 * r - 1, 2)) + [r]))
    return {6: (2, 5, 6, 8, 9, 12), 7: (2, 6, 8, 10, 12, 14, 18),
            8: (2, 8, 12, 14, 18, 20, 24, 30)}[r]


def parse_label(label: str) -> Tuple[str, int]:
    m = _LABEL.match(label)
    if not m:
        raise ValueError(f"unknown du Val label {label!r}")
    kind, r = m.group(1).upper(), int(m.group(2))
    if (kind == "A" and r < 1) or (kind == "D" and r < 4) or (kind == "E" and r not in (6, 7, 8)):
        raise ValueError(f"unknown du Val label {label!r}")
    return kind, r


def duval_record(label: str) -> DuValRecord:
    """Record for A_r (r >= 1), D_r (r >= 4), E6, E7, E8 in the classical
    hypersurface presentation."""
    kind, r = parse_label(label)
    if kind == "A":
        m = r + 1
        weights, eq, deg = (2, m, m), f"x1^{m} + x2^2 + x3^2", 2 * m
        h = m
    elif kind == "D":
        m = r - 2
        weights, eq, deg = (2, m, m + 1), f"x1^{m + 1} + x1*x2^2 + x3^2", 2 * m + 2
        h = 2 * r - 2
    elif r == 6:
        weights, eq, deg, h = (3, 4, 6), "x1^4 + x2^3 + x3^2", 12, 12
    elif r == 7:
        weights, eq, deg, h = (4, 6, 9), "x1^3*x2 + x2^3 + x3^2", 18, 18
    else:
        weights, eq, deg, h = (6, 10, 15), "x1^5 + x2^3 + x3^2", 30, 30
    jac = jacobi_hilbert(weights, deg)
    rec = DuValRecord(f"{kind}{r}", weights, eq, deg, _weyl_degrees(kind, r), h,
                      tuple(jac.exponents()))
    _self_check(rec)
    return rec


def _self_check(rec: DuValRecord):
    f = rec.polynomial()
    if f.degree() != rec.fdegree:
        raise AssertionError(f"{rec.label}: equation is not of degree {rec.fdegree}")
    if rec.bracket_degree not in (-1, -2):
        raise AssertionError(f"{rec.label}: unexpected bracket degree {rec.bracket_degree}")
    scale = -rec.bracket_degree
    expect = sorted(scale * (d - 2) for d in rec.weyl_degrees)
    if list(rec.jacobi_listed) != expect:
        raise AssertionError(f"{rec.label}: Jacobi weights {rec.jacobi_listed} != {expect}")
    if sorted(rec.jacobi_weights("paper")) != sorted(d - 2 for d in rec.weyl_degrees):
        raise AssertionError(f"{rec.label}: half-C^2 weights disagree with d_i - 2")
    if rec.coxeter_number * 2 != rec.f_degree("c2"):
        raise AssertionError(f"{rec.label}: h|t| != |f| in the C^2 grading")


def duval_labels(max_a: int = 5, max_d: int = 5) -> List[str]:
    return ([f"A{r}" for r in range(1, max_a + 1)] + [f"D{r}" for r in range(4, max_d + 1)]
            + ["E6", "E7", "E8"])


ELLIPTIC = {
    "E6~": ((1, 1, 1), "x1^3 + x2^3 + x3^3", 3),
    "E7~": ((1, 1, 2), "x1^4 + x2^4 + x3^2", 4),
    "E8~": ((1, 2, 3), "x1^6 + x2^3 + x3^2", 6),
}


def elliptic_surface(label: str, lam) -> SurfaceVariety:
    """Simple elliptic family member f + lam*x1*x2*x3."""
    key = label if label.endswith("~") else label + "~"
    if key not in ELLIPTIC:
        raise ValueError(f"unknown elliptic family {label!r}; use E6~, E7~ or E8~")
    weights, eq, _ = ELLIPTIC[key]
    ring = WeightedRing(weights)
    f = parse_polynomial(eq, ring)
    x1, x2, x3 = (ring.var(i) for i in range(3))
    f = f + Fraction(lam) * x1 * x2 * x3
    return SurfaceVariety.hypersurface(f)


def elliptic_jacobi(label: str) -> GradedHilbert:
    key = label if label.endswith("~") else label + "~"
    weights, _, m = ELLIPTIC[key]
    return jacobi_hilbert(weights, m)
