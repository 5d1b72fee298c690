"""Command-line interface.

Exit codes: 0 success, 1 bad input, 2 internal invariant violation or a
failed verification.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .decompose import decompose
from .diamond import DiamondInstance, pushout_diamond, verify_diamond_matching
from .filtration import InvariantViolation
from .harness import SplitMix64, plant, random_module, random_type, write_fixture
from .homology import SimplicialZigzag, build_zigzag, grid_labels, verify_strong_diamond
from .io import (
    FormatError,
    barcode_from_json,
    barcode_to_json,
    complexes_from_json,
    diamond_from_json,
    module_from_json,
    parse_dims,
)
from .localize import localize_at
from .plot import emit_figure
from .zigzag import Barcode

log = logging.getLogger("zzpers")

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2


class CheckFailed(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _emit_barcode(bc: Barcode, args, n: int | None = None, extra: dict | None = None) -> None:
    if getattr(args, "format", "json") == "svg":
        _write(emit_figure(bc, getattr(args, "style", "barcode")), args.output)
    else:
        _write(barcode_to_json(bc, n=n, extra=extra), args.output)


def cmd_decompose(args) -> int:
    m = module_from_json(_read(args.file))
    bc, trace = decompose(m)
    _emit_barcode(bc, args, n=m.n, extra={"trace": trace.as_dict()} if args.trace else None)
    return EXIT_OK


def cmd_homology_zigzag(args) -> int:
    seq = complexes_from_json(_read(args.file))
    p = args.field or seq.p
    mode = args.mode or seq.mode
    dims = parse_dims(args.dims) if args.dims else seq.dims
    n = len(seq.complexes)
    labels = grid_labels(n)
    combined = Barcode(grid=labels)
    zz = SimplicialZigzag(seq.complexes, mode)
    for ell in dims:
        combined = combined + Barcode(
            {(b, d, ell): c for b, d, c, _ in decompose(build_zigzag(zz, ell, p))[0].entries()}
        )
    combined.grid = labels
    _emit_barcode(combined, args, n=len(labels), extra={"mode": mode})
    if args.verify_strong_diamond:
        if n < 2:
            raise FormatError("--verify-strong-diamond needs at least two complexes")
        report = verify_strong_diamond(seq.complexes, dims.stop - 1, p)
        for line in report.violations:
            print(f"strong diamond violation: {line}", file=sys.stderr)
        if not report.ok:
            raise CheckFailed("strong diamond checks failed")
        print("strong diamond checks passed", file=sys.stderr)
    return EXIT_OK


def cmd_localize(args) -> int:
    m = module_from_json(_read(args.file))
    if not 1 <= args.k <= m.n:
        raise FormatError(f"k={args.k} outside 1..{m.n}")
    local = localize_at(m, args.k)
    for b, d, c, _ in local.entries():
        print(f"[{b},{d}] x{c}")
    if args.check:
        expected = decompose(m)[0].containing(args.k)
        if expected != local:
            print(f"mismatch: decompose gives {expected}", file=sys.stderr)
            raise CheckFailed("localization disagrees with decomposition")
        print("check passed: localization agrees with decomposition", file=sys.stderr)
    return EXIT_OK


def _random_diamond(seed: int, p: int) -> DiamondInstance:
    rng = SplitMix64(seed)
    n = 3 + rng.below(5)
    k = 2 + rng.below(n - 2)
    tau = list(random_type(rng, n))
    tau[k - 2: k] = ["g", "f"]
    lower = random_module(rng, "".join(tau), 3, p)
    return pushout_diamond(lower, k, extra=rng.below(2))


def cmd_diamond_verify(args) -> int:
    if args.file:
        d = diamond_from_json(_read(args.file))
    else:
        d = _random_diamond(args.seed, args.field or 2)
    report = verify_diamond_matching(d)
    print(report.summary())
    if not report.ok:
        for line in report.violations:
            print(f"violation: {line}", file=sys.stderr)
        raise CheckFailed("diamond matching failed")
    return EXIT_OK


def cmd_plant(args) -> int:
    p = args.field or 2
    tau = args.type if args.type is not None else random_type(SplitMix64(args.seed ^ 0x5EED), args.length)
    inst = plant(args.seed, tau, args.max_intervals, p)
    mod_path, bc_path = write_fixture(inst, args.output or ".", args.stem)
    print(f"{mod_path}\n{bc_path}")
    return EXIT_OK


def cmd_plot(args) -> int:
    bc = barcode_from_json(_read(args.file))
    svg = emit_figure(bc, args.style)
    _write(svg, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zzpers", description="Zigzag persistence over prime fields.")
    parser.add_argument("-v", "--verbose", action="store_true")
    subs = parser.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        sp.add_argument("--output", "-o", help="output path (default: stdout)")
        if fmt:
            sp.add_argument("--format", choices=["json", "svg"], default="json")
            sp.add_argument("--style", choices=["barcode", "diagram"], default="barcode")

    sp = subs.add_parser("decompose", help="barcode of a module file")
    sp.add_argument("file")
    sp.add_argument("--trace", action="store_true", help="include the r/bt/c tables")
    common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = subs.add_parser("homology-zigzag", help="barcodes of a union/intersection zigzag of complexes")
    sp.add_argument("file")
    sp.add_argument("--mode", choices=["union", "intersection"])
    sp.add_argument("--dims", help="homological dimensions, e.g. 0..2")
    sp.add_argument("--field", type=int)
    sp.add_argument("--verify-strong-diamond", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_homology_zigzag)

    sp = subs.add_parser("localize", help="intervals through index k")
    sp.add_argument("file")
    sp.add_argument("k", type=int)
    sp.add_argument("--check", action="store_true", help="compare against the full decomposition")
    sp.set_defaults(func=cmd_localize)

    sp = subs.add_parser("diamond-verify", help="check the diamond matching on a file or a random pushout diamond")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--field", type=int)
    sp.set_defaults(func=cmd_diamond_verify)

    sp = subs.add_parser("plant", help="write a planted module and its barcode")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--type", help="arrow string such as fgf (random if omitted)")
    sp.add_argument("--length", type=int, default=5, help="module length when --type is omitted")
    sp.add_argument("--max-intervals", type=int, default=6)
    sp.add_argument("--field", type=int)
    sp.add_argument("--stem")
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_plant)

    sp = subs.add_parser("plot", help="render a barcode file as SVG")
    sp.add_argument("file")
    sp.add_argument("--style", choices=["barcode", "diagram"], default="barcode")
    sp.add_argument("--format", choices=["svg"], default="svg")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except ValueError as exc:  # includes FormatError and ShapeError
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InvariantViolation, CheckFailed) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
