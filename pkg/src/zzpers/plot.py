"""Self-contained SVG rendering of barcodes and persistence diagrams."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .zigzag import Barcode

WIDTH, HEIGHT, MARGIN = 480, 320, 40
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]


def _labels(bc: Barcode) -> list[str]:
    if bc.grid is not None:
        return list(bc.grid)
    top = max((d for _, d, _, _ in bc.entries()), default=1)
    return [str(i) for i in range(1, top + 1)]


def _color(dm) -> str:
    return "#000000" if dm is None else PALETTE[dm % len(PALETTE)]


def _frame(title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<title>{escape(title)}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
    ]


def barcode_svg(bc: Barcode, title: str = "barcode") -> str:
    """One horizontal ``<line class="bar">`` per interval copy, stacked in canonical order."""
    labels = _labels(bc)
    n = len(labels)
    bars = [(b, d, dm) for b, d, c, dm in bc.entries() for _ in range(c)]
    span = max(n - 1, 1)
    x = lambda i: MARGIN + (i - 1) * (WIDTH - 2 * MARGIN) / span  # noqa: E731
    step = (HEIGHT - 2 * MARGIN) / max(len(bars), 1)
    out = _frame(title)
    axis_y = HEIGHT - MARGIN + 10
    out.append(f'<line class="axis" x1="{MARGIN}" y1="{axis_y}" x2="{WIDTH - MARGIN}" y2="{axis_y}" stroke="black"/>')
    for i, lab in enumerate(labels, start=1):
        out.append(
            f'<text class="tick" x="{x(i):.1f}" y="{axis_y + 15}" font-size="10" '
            f'text-anchor="middle">{escape(lab)}</text>'
        )
    for row, (b, d, dm) in enumerate(bars):
        y = MARGIN + (row + 0.5) * step
        # closed integer intervals: pad so that [k, k] is visible
        x1, x2 = x(b) - 4, x(d) + 4
        out.append(
            f'<line class="bar" x1="{x1:.1f}" y1="{y:.1f}" x2="{x2:.1f}" y2="{y:.1f}" '
            f'stroke="{_color(dm)}" stroke-width="3"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def diagram_svg(bc: Barcode, title: str = "persistence diagram") -> str:
    """One ``<circle class="point">`` per distinct ``(b, d, dim)``; multiplicities above 1 are annotated."""
    labels = _labels(bc)
    n = len(labels)
    span = max(n - 1, 1)
    size = min(WIDTH, HEIGHT) - 2 * MARGIN
    px = lambda i: MARGIN + (i - 1) * size / span  # noqa: E731
    py = lambda i: HEIGHT - MARGIN - (i - 1) * size / span  # noqa: E731
    out = _frame(title)
    out.append(f'<line class="axis" x1="{px(1):.1f}" y1="{py(1):.1f}" x2="{px(n):.1f}" y2="{py(1):.1f}" stroke="black"/>')
    out.append(f'<line class="axis" x1="{px(1):.1f}" y1="{py(1):.1f}" x2="{px(1):.1f}" y2="{py(n):.1f}" stroke="black"/>')
    out.append(
        f'<line class="diagonal" x1="{px(1):.1f}" y1="{py(1):.1f}" x2="{px(n):.1f}" y2="{py(n):.1f}" '
        'stroke="gray" stroke-dasharray="4 3"/>'
    )
    for i, lab in enumerate(labels, start=1):
        out.append(f'<text class="tick" x="{px(i):.1f}" y="{py(1) + 15:.1f}" font-size="10" text-anchor="middle">{escape(lab)}</text>')
        out.append(f'<text class="tick" x="{px(1) - 8:.1f}" y="{py(i) + 3:.1f}" font-size="10" text-anchor="end">{escape(lab)}</text>')
    for b, d, c, dm in bc.entries():
        out.append(f'<circle class="point" cx="{px(b):.1f}" cy="{py(d):.1f}" r="4" fill="{_color(dm)}"/>')
        if c > 1:
            out.append(
                f'<text class="multiplicity" x="{px(b) + 6:.1f}" y="{py(d) - 6:.1f}" font-size="10">{c}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_figure(bc: Barcode, style: str = "barcode", path=None) -> str:
    if style == "barcode":
        svg = barcode_svg(bc)
    elif style == "diagram":
        svg = diagram_svg(bc)
    else:
        raise ValueError(f"style must be 'barcode' or 'diagram', got {style!r}")
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return svg
