"""Write planted module/barcode pairs for cross-implementation regression."""

from __future__ import annotations

import argparse

from zzpers.harness import SuiteConfig, write_fixture


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir")
    parser.add_argument("--count", type=int, default=20)
    parser.add_argument("--start", type=int, default=0)
    args = parser.parse_args()
    for inst in SuiteConfig(count=args.count, start=args.start).instances():
        mod_path, _ = write_fixture(inst, args.outdir)
        print(f"{mod_path.name}: type {inst.module.tau!r} over GF({inst.module.p}), {inst.truth}")


if __name__ == "__main__":
    main()
