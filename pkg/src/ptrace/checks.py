"""Registered cross-checks: each pairs a closed form with an independent route.

Functions are looked up through their modules at call time so that a
patched implementation (mutation testing) is actually exercised.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from . import hypertoric, kostka, poisson_bracket, singularity, sympow


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    weak: bool = False
    seconds: float = 0.0

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "weak": self.weak,
                "detail": self.detail}


REGISTRY: Dict[str, Callable[..., CheckResult]] = {}


def register(name: str):
    def deco(fn):
        REGISTRY[name] = fn
        return fn
    return deco


@register("bracket-vs-closed-form")
def check_duval_hp0(labels=None, **_) -> CheckResult:
    """Brute-force HP_0 of every du Val surface equals its Jacobi series."""
    labels = labels or singularity.duval_labels()
    bad = []
    for lab in labels:
        rec = singularity.duval_record(lab)
        prof = poisson_bracket.hp0_dims(rec.surface())
        closed = singularity.jacobi_hilbert(rec.weights, rec.fdegree)
        if prof.dims != closed or prof.total != rec.milnor:
            bad.append(f"{lab}: {prof.dims.as_dict()} vs {closed.as_dict()}")
    return CheckResult("bracket-vs-closed-form", not bad, "; ".join(bad) or f"{len(labels)} surfaces")


@register("product-vs-enumeration")
def check_multipartitions(max_n: int = 20, max_i: int = 5, order: int = 10, **_) -> CheckResult:
    bad = []
    for i in range(max_i + 1):
        for n in range(max_n + 1):
            if sympow.a(n, i) != sympow.count_multipartitions(n, i):
                bad.append(f"a({n},{i})")
    for lab in singularity.duval_labels():
        rec = singularity.duval_record(lab)
        s0 = sympow.duval_hp0_series(rec, order).specialize_all()
        s1 = sympow.hpdr_sympow_duval_series(rec, order).specialize_all()
        if s0 != [sympow.a(n, rec.milnor) for n in range(order + 1)]:
            bad.append(f"{lab} HP0 specialization")
        if s1 != [sympow.a(n, rec.milnor + 1) for n in range(order + 1)]:
            bad.append(f"{lab} HPDR specialization")
    return CheckResult("product-vs-enumeration", not bad, ", ".join(bad) or "ok", weak=order == 0)


@register("deletion-contraction-vs-corank-nullity")
def check_tutte(count: int = 100, seed: int = 0, **_) -> CheckResult:
    rng = random.Random(seed)
    bad = []
    for k in range(count):
        M = random_matroid(rng)
        T = hypertoric.tutte(M)
        if T != hypertoric.tutte_corank_nullity(M):
            bad.append(f"#{k} oracle")
        Td = hypertoric.tutte(M.dual())
        if Td != {(b, a): c for (a, b), c in T.items()}:
            bad.append(f"#{k} duality")
    return CheckResult("deletion-contraction-vs-corank-nullity", not bad,
                       ", ".join(bad) or f"{count} matroids")


def random_matroid(rng: random.Random, max_cols: int = 8) -> "hypertoric.VectorMatroid":
    n = rng.randint(1, max_cols)
    r = rng.randint(1, min(4, n))
    rows = [[rng.choice([-2, -1, 0, 0, 1, 1, 2]) for _ in range(n)] for _ in range(r)]
    return hypertoric.VectorMatroid(rows, n)


@register("kostka-vs-duval")
def check_kostka_duval(max_n: int = 5, **_) -> CheckResult:
    """Slodowy slice to the subregular orbit of sl_n vs brute-force A_{n-1}."""
    bad = []
    for n in range(2, max_n + 1):
        rec = singularity.duval_record(f"A{n - 1}")
        brute = poisson_bracket.hp0_dims(rec.surface()).dims
        lam = kostka.Partition((n - 1, 1))
        if kostka.walgebra_hp0(lam) != brute:
            bad.append(f"n={n}: {kostka.walgebra_hp0(lam).as_dict()} vs {brute.as_dict()}")
    if kostka.lusztig_nilcone(2) != _a1_bigraded():
        bad.append("nilcone(2)")
    return CheckResult("kostka-vs-duval", not bad, "; ".join(bad) or "ok")


def _a1_bigraded():
    rec = singularity.duval_record("A1")
    return sympow.relabel_ut_to_xy(sympow.hpdr_sympow_duval_series(rec, 1)[1])


@register("hypertoric-vs-duval")
def check_hypertoric_duval(max_m: int = 5, **_) -> CheckResult:
    bad = []
    for m in range(2, max_m + 1):
        got = hypertoric.hpdr_hypertoric(hypertoric.uniform_rank_one(m)).series
        rec = singularity.duval_record(f"A{m - 1}")
        want = sympow.relabel_ut_to_xy(sympow.hpdr_sympow_duval_series(rec, 1)[1])
        if got != want:
            bad.append(f"m={m}: {got.to_json()} vs {want.to_json()}")
    if hypertoric.hpdr_hypertoric(hypertoric.uniform_rank_one(2)).series != kostka.lusztig_nilcone(2):
        bad.append("m=2 vs nilcone")
    return CheckResult("hypertoric-vs-duval", not bad, "; ".join(bad) or "ok")


@register("twistor-vs-trigraded")
def check_twistor(**_) -> CheckResult:
    bad = []
    for lab in singularity.duval_labels():
        rec = singularity.duval_record(lab)
        tw = sympow.twistor_orders_duval(rec)
        coeff = sympow.relabel_ut_to_xy(sympow.hpdr_sympow_duval_series(rec, 1)[1])
        if tw.reconstruction() != coeff or tw.phi[(0, 1)] != 0:
            bad.append(lab)
    return CheckResult("twistor-vs-trigraded", not bad, ", ".join(bad) or "ok")


@register("cone-ledger")
def check_ledgers(**_) -> CheckResult:
    bad = []
    for d in range(2, 7):
        c = singularity.cone_curve(d)
        L = c.ledger
        if (c.genus != (d - 1) * (d - 2) // 2 or c.milnor != (d - 1) ** 3
                or L.delta_summand + L.delta_below + L.delta_top_ind != c.milnor + 2 * c.genus):
            bad.append(str(d))
    return CheckResult("cone-ledger", not bad, ", ".join(bad) or "ok")


def verify_all(order: int = 10, names: Optional[List[str]] = None) -> List[CheckResult]:
    out = []
    for name in names or list(REGISTRY):
        t0 = time.perf_counter()
        kwargs = {"order": order} if name == "product-vs-enumeration" else {}
        try:
            res = REGISTRY[name](**kwargs)
        except Exception as exc:  # a crashing check is a failing check
            res = CheckResult(name, False, f"{type(exc).__name__}: {exc}")
        res.seconds = time.perf_counter() - t0
        out.append(res)
    return out
