"""Dimensions of HP_0 and HP^DR of symmetric powers of du Val surfaces
against multipartition counts, for increasing truncation order.

    python3 scripts/sympow_growth.py --label E8 --order 12
"""
import argparse
import time
from dataclasses import dataclass

from ptrace.singularity import duval_record
from ptrace.sympow import a, duval_hp0_series, hpdr_sympow_duval_series


@dataclass
class Config:
    label: str = "E8"
    order: int = 10
    grading: str = "c2"
    show_weights: bool = False


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--label", default=Config.label)
    p.add_argument("--order", type=int, default=Config.order)
    p.add_argument("--grading", default=Config.grading, choices=("listed", "c2", "paper"))
    p.add_argument("--show-weights", action="store_true")
    cfg = Config(**vars(p.parse_args()))

    rec = duval_record(cfg.label)
    t0 = time.perf_counter()
    hp0 = duval_hp0_series(rec, cfg.order, cfg.grading)
    dr = hpdr_sympow_duval_series(rec, cfg.order, cfg.grading)
    dt = time.perf_counter() - t0
    mu = rec.milnor
    print(f"{cfg.label}: mu = {mu}, |f| = {rec.f_degree(cfg.grading)} ({cfg.grading}), {dt:.3f} s")
    print(f"{'n':>3} {'HP0':>10} {'a_n(mu)':>10} {'HPDR':>10} {'a_n(mu+1)':>10}")
    for n in range(cfg.order + 1):
        d0, d1 = hp0[n].total(), dr[n].total()
        print(f"{n:>3} {d0:>10} {a(n, mu):>10} {d1:>10} {a(n, mu + 1):>10}")
        if cfg.show_weights:
            print("    ", hp0[n].pretty("t"))


if __name__ == "__main__":
    main()
