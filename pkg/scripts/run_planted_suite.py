"""Planted-recovery run: decompose every instance and compare with its planted barcode.

    python3 scripts/run_planted_suite.py --count 1000 --localize
"""

from __future__ import annotations

import argparse
import time
from dataclasses import asdict

from zzpers.decompose import pers
from zzpers.harness import SuiteConfig
from zzpers.localize import localize_at


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--max-len", type=int, default=8)
    parser.add_argument("--max-intervals", type=int, default=6)
    parser.add_argument("--fields", type=int, nargs="+", default=[2, 5])
    parser.add_argument("--start", type=int, default=0)
    parser.add_argument("--localize", action="store_true", help="also cross-check localization at every index")
    args = parser.parse_args()
    cfg = SuiteConfig(args.count, args.max_len, args.max_intervals, tuple(args.fields), args.start)
    print(f"config: {asdict(cfg)}")

    t0 = time.perf_counter()
    suite = list(cfg.instances())
    t_gen = time.perf_counter() - t0
    misses, loc_misses = [], []
    t0 = time.perf_counter()
    for inst in suite:
        bc = pers(inst.module)
        if bc != inst.truth:
            misses.append(inst.seed)
        if args.localize:
            for k in range(1, inst.module.n + 1):
                if localize_at(inst.module, k) != bc.containing(k):
                    loc_misses.append((inst.seed, k))
    t_run = time.perf_counter() - t0

    total_bars = sum(inst.truth.total() for inst in suite)
    print(f"instances: {len(suite)}  planted bars: {total_bars}")
    print(f"generation {t_gen:.2f}s, checking {t_run:.2f}s")
    print(f"recovered: {len(suite) - len(misses)}/{len(suite)}")
    if args.localize:
        print(f"localization mismatches: {len(loc_misses)}")
    if misses:
        print(f"first failing seeds: {misses[:10]}")


if __name__ == "__main__":
    main()
