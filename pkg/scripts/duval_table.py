"""Brute-force HP_0 of du Val and simple elliptic surfaces next to the
Jacobi closed form, with timings and stabilization certificates.

    python3 scripts/duval_table.py --max-a 8 --max-d 7 --grading c2
"""
import argparse
import time
from dataclasses import dataclass, fields

from ptrace.exact_core import GradedHilbert
from ptrace.poisson_bracket import hp0_dims
from ptrace.singularity import GRADINGS, duval_labels, duval_record, elliptic_jacobi, elliptic_surface


@dataclass
class Config:
    max_a: int = 5
    max_d: int = 5
    grading: str = "c2"
    elliptic: bool = True
    lam: int = 1


def parse_config() -> Config:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(Config):
        if f.type in (bool, "bool"):
            p.add_argument(f"--no-{f.name.replace('_', '-')}", dest=f.name, action="store_false")
        else:
            kw = {"choices": GRADINGS} if f.name == "grading" else {}
            p.add_argument(f"--{f.name.replace('_', '-')}", type=type(f.default), default=f.default, **kw)
    return Config(**vars(p.parse_args()))


def main():
    cfg = parse_config()
    print(f"{'label':<6} {'mu':>3} {'ok':>3} {'cert':>5} {'secs':>7}  hp0 ({cfg.grading})")
    for label in duval_labels(cfg.max_a, cfg.max_d):
        rec = duval_record(label)
        t0 = time.perf_counter()
        prof = hp0_dims(rec.surface())
        dt = time.perf_counter() - t0
        ok = prof.dims == rec.jacobi_series("listed")
        scaled = GradedHilbert({int(w * rec.grading_factor(cfg.grading)): d for w, d in prof.dims.as_dict().items()})
        print(f"{label:<6} {prof.total:>3} {'yes' if ok else 'NO':>3} {prof.certified_through:>5} "
              f"{dt:>7.3f}  {scaled.pretty('t')}")
    if cfg.elliptic:
        for label in ("E6", "E7", "E8"):
            t0 = time.perf_counter()
            prof = hp0_dims(elliptic_surface(label, cfg.lam))
            dt = time.perf_counter() - t0
            ok = prof.dims == elliptic_jacobi(label)
            print(f"{label + '~':<6} {prof.total:>3} {'yes' if ok else 'NO':>3} "
                  f"{prof.certified_through:>5} {dt:>7.3f}  {prof.dims.pretty('t')}")


if __name__ == "__main__":
    main()
