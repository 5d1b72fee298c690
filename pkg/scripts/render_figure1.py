"""Render the five-bar example barcode {[1,2],[1,3],[3,3],[3,4],[3,4]} in both styles."""

from __future__ import annotations

import argparse
from pathlib import Path

from zzpers.plot import emit_figure
from zzpers.zigzag import Barcode


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default=".")
    args = parser.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    bc = Barcode.from_intervals([(1, 2), (1, 3), (3, 3), (3, 4), (3, 4)])
    for style in ("barcode", "diagram"):
        path = out / f"figure1_{style}.svg"
        emit_figure(bc, style, path)
        print(path)


if __name__ == "__main__":
    main()
