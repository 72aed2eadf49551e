"""Schematic drawings of a component census, as text or SVG.

The output shows the census counts, not actual curve embeddings: one block
per puncture region with its above/below/loop counts, and one handle block
with the genus arcs, core-curve copies and twisting data.  Both renderers are
pure functions of the census, so equal inputs give byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .core import Decomposition

# beyond this many parallel strands, draw one strand and rely on the x-N label
STRAND_CAP = 12

_SIGN_MARK = {-1: "−", 0: "0", 1: "+"}


@dataclass(frozen=True)
class SchematicElement:
    """One labeled strand group: a nonzero census field and its multiplicity."""

    label: str
    count: int
    region: int | None = None  # 1-based puncture region, None for the handle
    note: str = ""


@dataclass(frozen=True)
class Schematic:
    width: int
    height: int
    elements: tuple[SchematicElement, ...] = field(default_factory=tuple)


def _split_text(d: Decomposition) -> str:
    t, m = d.twist_split.t, d.twist_split.m
    count = d.twisting_count
    if m == 0:
        return f"{count}×{t}"
    return f"{m}×{t + 1} + {count - m}×{t}"


def _twist_note(d: Decomposition) -> str:
    return f"sign {_SIGN_MARK[d.twist_sign]}, {_split_text(d)}"


def schematic_elements(d: Decomposition) -> tuple[SchematicElement, ...]:
    """Map the nonzero census fields, each exactly once, to labeled elements."""
    out: list[SchematicElement] = []
    for i in range(d.n):
        region = i + 1
        if d.above[i]:
            out.append(SchematicElement(f"above-{region}", d.above[i], region))
        if d.below[i]:
            out.append(SchematicElement(f"below-{region}", d.below[i], region))
        if d.loops[i]:
            side = "left" if d.loops[i] < 0 else "right"
            out.append(
                SchematicElement(f"loops-{region}", abs(d.loops[i]), region, side)
            )
    if d.front_genus:
        out.append(SchematicElement("front-genus", d.front_genus))
    if d.back_genus:
        out.append(SchematicElement("back-genus", d.back_genus))
    if d.c_copies:
        out.append(SchematicElement("c-copies", d.c_copies))
    if d.twisting_count:
        out.append(SchematicElement("twisting", d.twisting_count, None, _twist_note(d)))
    return tuple(out)


def _ascii_lines(d: Decomposition) -> list[str]:
    lines = [f"lamination census (n = {d.n})"]
    for i in range(d.n):
        parts = []
        if d.above[i]:
            parts.append(f"a:{d.above[i]}")
        if d.below[i]:
            parts.append(f"b:{d.below[i]}")
        if d.loops[i]:
            side = "L" if d.loops[i] < 0 else "R"
            parts.append(f"{side}:{abs(d.loops[i])}")
        lines.append(f"U{i + 1}: " + (" ".join(parts) if parts else "-"))
    lines.append("G:")
    handle = []
    if d.front_genus:
        handle.append(f"  front-genus: {d.front_genus}")
    if d.back_genus:
        handle.append(f"  back-genus: {d.back_genus}")
    if d.c_copies:
        handle.append(f"  c-copies: {d.c_copies}")
    if d.twisting_count:
        count = d.twisting_count
        plural = "s" if count != 1 else ""
        handle.append(f"  twist: {count} component{plural}, {_twist_note(d)}")
    lines.extend(handle if handle else ["  -"])
    return lines


def render_ascii(d: Decomposition) -> str:
    """Multi-line text census: one ``U_i`` block per region, one ``G`` block."""
    return "\n".join(_ascii_lines(d)) + "\n"


# SVG geometry (pixels)
_MARGIN = 16
_REGION_W = 96
_REGION_H = 150
_GAP = 12
_HANDLE_W = 180
_CAPTION_H = 52


def _strand_total(count: int) -> int:
    return count if count <= STRAND_CAP else 1


def _svg_size(n: int) -> tuple[int, int]:
    width = 2 * _MARGIN + n * (_REGION_W + _GAP) + _HANDLE_W
    height = 2 * _MARGIN + _REGION_H + _CAPTION_H
    return width, height


def _caption(x: int, y: int, text: str) -> str:
    return f'<text x="{x}" y="{y}" font-size="9" font-family="monospace">{escape(text)}</text>'


def _group(attrs: dict[str, str], body: list[str]) -> str:
    head = " ".join(f'{k}="{escape(str(v), {chr(34): "&quot;"})}"' for k, v in attrs.items())
    return f"<g {head}>" + "".join(body) + "</g>"


def _region_svg(d: Decomposition, i: int, x0: int, y0: int) -> list[str]:
    out = [
        f'<rect x="{x0}" y="{y0}" width="{_REGION_W}" height="{_REGION_H}" '
        'fill="none" stroke="#888"/>',
        _caption(x0 + 4, y0 + 12, f"U{i + 1}"),
    ]
    cx = x0 + _REGION_W // 2
    cy = y0 + _REGION_H // 2
    out.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="#000" class="puncture"/>')
    cap_y = y0 + _REGION_H + 14

    if d.above[i]:
        body = []
        for k in range(_strand_total(d.above[i])):
            y = cy - 16 - 5 * k
            body.append(
                f'<path class="strand above" d="M {x0 + 6} {y} L {x0 + _REGION_W - 6} {y}" '
                'fill="none" stroke="#1f77b4"/>'
            )
        body.append(_caption(x0 + 4, cap_y, f"a ×{d.above[i]}"))
        out.append(_group({"class": "field", "data-field": f"above-{i + 1}",
                           "data-count": d.above[i]}, body))
        cap_y += 12
    if d.below[i]:
        body = []
        for k in range(_strand_total(d.below[i])):
            y = cy + 16 + 5 * k
            body.append(
                f'<path class="strand below" d="M {x0 + 6} {y} L {x0 + _REGION_W - 6} {y}" '
                'fill="none" stroke="#2ca02c"/>'
            )
        body.append(_caption(x0 + 4, cap_y, f"b ×{d.below[i]}"))
        out.append(_group({"class": "field", "data-field": f"below-{i + 1}",
                           "data-count": d.below[i]}, body))
        cap_y += 12
    if d.loops[i]:
        left = d.loops[i] < 0
        side = "left" if left else "right"
        mark = "L" if left else "R"
        count = abs(d.loops[i])
        body = []
        for k in range(_strand_total(count)):
            spread = 10 + 4 * k
            if left:
                xw = x0 + _REGION_W - 6
                xc = x0 + 14 + 4 * k
            else:
                xw = x0 + 6
                xc = x0 + _REGION_W - 14 - 4 * k
            body.append(
                f'<path class="strand loop-{side}" d="M {xw} {cy - spread} '
                f'Q {xc} {cy} {xw} {cy + spread}" fill="none" stroke="#d62728"/>'
            )
        body.append(_caption(x0 + 4, cap_y, f"{mark} ×{count}"))
        out.append(_group({"class": "field", "data-field": f"loops-{i + 1}",
                           "data-count": count, "data-side": side}, body))
    return out


def _handle_svg(d: Decomposition, x0: int, y0: int) -> list[str]:
    out = [
        f'<rect x="{x0}" y="{y0}" width="{_HANDLE_W}" height="{_REGION_H}" '
        'fill="none" stroke="#888"/>',
        _caption(x0 + 4, y0 + 12, "G"),
    ]
    cx = x0 + _HANDLE_W // 2
    top = y0 + 6
    bottom = y0 + _REGION_H - 6
    cy = y0 + _REGION_H // 2
    # the core curve of the handle, as a dashed guide line
    out.append(
        f'<line x1="{cx}" y1="{top}" x2="{cx}" y2="{bottom}" '
        'stroke="#aaa" stroke-dasharray="4 3" class="core-guide"/>'
    )
    cap_y = y0 + _REGION_H + 14

    if d.front_genus:
        body = []
        for k in range(_strand_total(d.front_genus)):
            spread = 14 + 5 * k
            body.append(
                f'<path class="strand front-genus" d="M {x0 + 6} {cy - spread} '
                f'Q {x0 + 40 + 5 * k} {cy} {x0 + 6} {cy + spread}" '
                'fill="none" stroke="#9467bd"/>'
            )
        body.append(_caption(x0 + 4, cap_y, f"front ×{d.front_genus}"))
        out.append(_group({"class": "field", "data-field": "front-genus",
                           "data-count": d.front_genus}, body))
        cap_y += 12
    if d.back_genus:
        body = []
        for k in range(_strand_total(d.back_genus)):
            spread = 14 + 5 * k
            xw = x0 + _HANDLE_W - 6
            body.append(
                f'<path class="strand back-genus" d="M {xw} {cy - spread} '
                f'Q {x0 + _HANDLE_W - 40 - 5 * k} {cy} {xw} {cy + spread}" '
                'fill="none" stroke="#8c564b"/>'
            )
        body.append(_caption(x0 + 4, cap_y, f"back ×{d.back_genus}"))
        out.append(_group({"class": "field", "data-field": "back-genus",
                           "data-count": d.back_genus}, body))
        cap_y += 12
    if d.c_copies:
        body = []
        for k in range(_strand_total(d.c_copies)):
            x = cx - 8 - 5 * k
            body.append(
                f'<line class="strand c-copy" x1="{x}" y1="{top + 8}" '
                f'x2="{x}" y2="{bottom - 8}" stroke="#e377c2"/>'
            )
        body.append(_caption(x0 + 4, cap_y, f"c-copies ×{d.c_copies}"))
        out.append(_group({"class": "field", "data-field": "c-copies",
                           "data-count": d.c_copies}, body))
        cap_y += 12
    if d.twisting_count:
        body = []
        for k in range(_strand_total(d.twisting_count)):
            y = y0 + 24 + 7 * k
            body.append(
                f'<path class="strand twisting" d="M {x0 + 6} {y} '
                f'L {cx} {y + 14} L {x0 + _HANDLE_W - 6} {y}" '
                'fill="none" stroke="#ff7f0e"/>'
            )
        body.append(
            _caption(x0 + 4, cap_y,
                     f"twist ×{d.twisting_count} ({_twist_note(d)})")
        )
        out.append(_group({
            "class": "field",
            "data-field": "twisting",
            "data-count": d.twisting_count,
            "data-sign": d.twist_sign,
            "data-t": d.twist_split.t,
            "data-m": d.twist_split.m,
        }, body))
    return out


def render_svg(d: Decomposition) -> str:
    """Well-formed SVG 1.1 document for the census."""
    width, height = _svg_size(d.n)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f"<title>lamination census (n = {d.n})</title>",
    ]
    for i in range(d.n):
        x0 = _MARGIN + i * (_REGION_W + _GAP)
        parts.extend(_region_svg(d, i, x0, _MARGIN))
    parts.extend(_handle_svg(d, _MARGIN + d.n * (_REGION_W + _GAP), _MARGIN))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def build_schematic(d: Decomposition, fmt: str = "svg") -> Schematic:
    """Schematic descriptor: element list plus the output dimensions
    (pixels for ``svg``, rows/columns for ``ascii``)."""
    elements = schematic_elements(d)
    if fmt == "svg":
        width, height = _svg_size(d.n)
        return Schematic(width, height, elements)
    if fmt == "ascii":
        lines = _ascii_lines(d)
        return Schematic(max(len(line) for line in lines), len(lines), elements)
    raise ValueError(f"unknown schematic format {fmt!r}")
