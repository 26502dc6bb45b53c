"""Diagram output: canonical JSON document and a static SVG plot.

The JSON emitter here is the single source of truth for the wire schema;
the HTTP service returns its bytes verbatim so that CLI and API output are
byte-identical. Both emitters are deterministic: no timestamps, no
randomness, fixed key order, fixed number formatting.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .core import PennantConfig, PennantDiagram, PennantPoint, ease_range
from .errors import DegenerateAxisError

__all__ = [
    "LABEL_POLICIES",
    "PlotSpec",
    "diagram_from_json",
    "emit_json",
    "emit_svg",
]

LABEL_POLICIES = ("top_n_labels", "all", "none")


@dataclass(frozen=True)
class PlotSpec:
    """Static plot geometry and labeling choices."""

    width: int = 960
    height: int = 640
    margin: int = 60
    label_policy: str = "top_n_labels"
    label_count: int = 25
    # Fill colors for sectors A (top), B, C (bottom).
    sector_fills: tuple[str, str, str] = ("#d4d4d4", "#e4e4e4", "#f4f4f4")
    font_size: int = 12

    def __post_init__(self) -> None:
        if self.width <= 2 * self.margin or self.height <= 2 * self.margin:
            raise ValueError("width and height must exceed twice the margin")
        if self.label_policy not in LABEL_POLICIES:
            raise ValueError(f"unknown label_policy: {self.label_policy!r}")
        if self.label_count < 0:
            raise ValueError("label_count must be >= 0")


def _config_obj(config: PennantConfig) -> dict:
    return {
        "mode": config.mode,
        "k": config.k,
        "min_tf": config.min_tf,
        "log_base": config.log_base,
        "idf_style": config.idf_style,
        "sector_policy": config.sector_policy,
        "sector_bounds": list(config.sector_bounds) if config.sector_bounds else None,
    }


def _point_obj(point: PennantPoint) -> dict:
    obj = {
        "id": point.candidate,
        "tf": point.tf,
        "df": point.df,
        "ce": point.ce,
        "ease": point.ease,
        "sector": point.sector,
    }
    if point.title is not None:
        obj["title"] = point.title
    return obj


def emit_json(diagram: PennantDiagram) -> str:
    """Serialize a diagram to its canonical JSON document (newline-terminated).

    Floats use Python's shortest round-trip repr, so parsing the document
    reproduces every coordinate bit-exactly.
    """
    obj = {
        "seed": diagram.seed,
        "mode": diagram.mode,
        "n_docs": diagram.n_docs,
        "config": _config_obj(diagram.config),
        "sector_bounds": list(diagram.sector_bounds),
        "points": [_point_obj(p) for p in diagram.points],
    }
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")) + "\n"


def diagram_from_json(text: str) -> PennantDiagram:
    """Rebuild a PennantDiagram from emit_json output."""
    obj = json.loads(text)
    cfg = obj["config"]
    config = PennantConfig(
        mode=cfg["mode"],
        k=cfg["k"],
        min_tf=cfg["min_tf"],
        log_base=cfg["log_base"],
        idf_style=cfg["idf_style"],
        sector_policy=cfg["sector_policy"],
        sector_bounds=tuple(cfg["sector_bounds"]) if cfg["sector_bounds"] else None,
    )
    points = [
        PennantPoint(
            candidate=p["id"],
            tf=p["tf"],
            df=p["df"],
            ce=p["ce"],
            ease=p["ease"],
            sector=p["sector"],
            title=p.get("title"),
        )
        for p in obj["points"]
    ]
    axis = math.log(obj["n_docs"], config.log_base)
    b1, b2 = obj["sector_bounds"]
    return PennantDiagram(
        seed=obj["seed"],
        mode=obj["mode"],
        config=config,
        n_docs=obj["n_docs"],
        sector_bounds=(b1, b2),
        axis_max=(axis, axis),
        points=points,
    )


def _px(value: float) -> str:
    return f"{value:.2f}"


def emit_svg(diagram: PennantDiagram, spec: PlotSpec | None = None) -> str:
    """Render the diagram as a static SVG 1.1 document.

    x axis: ce in [0, log_base N]; y axis: ease over its achievable range
    (grows upward). Three horizontal sector bands tile the plot area; one
    marker per point; labels follow the plot spec's policy in rank order.
    """
    if spec is None:
        spec = PlotSpec()
    axis_len = diagram.axis_max[0]
    if axis_len <= 0:
        raise DegenerateAxisError("degenerate axis")

    ease_min, ease_max = ease_range(diagram.n_docs, diagram.config)
    plot_w = spec.width - 2 * spec.margin
    plot_h = spec.height - 2 * spec.margin
    left = spec.margin
    top = spec.margin
    right = left + plot_w
    bottom = top + plot_h

    def x_px(ce: float) -> float:
        return left + ce / axis_len * plot_w

    def y_px(ease: float) -> float:
        return bottom - (ease - ease_min) / (ease_max - ease_min) * plot_h

    def clamp_ease(value: float) -> float:
        return min(max(value, ease_min), ease_max)

    b1, b2 = diagram.sector_bounds
    y_b1 = y_px(clamp_ease(b1))
    y_b2 = y_px(clamp_ease(b2))

    parts: list[str] = []
    parts.append('<?xml version="1.0" encoding="UTF-8"?>')
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}" '
        f'font-family="sans-serif" font-size="{spec.font_size}">'
    )
    parts.append(f'<rect x="0" y="0" width="{spec.width}" height="{spec.height}" fill="#ffffff"/>')

    # Sector bands tile the plot area exactly (shared edges, clamped bounds).
    fill_a, fill_b, fill_c = spec.sector_fills
    bands = (
        ("A", fill_a, top, y_b2),
        ("B", fill_b, y_b2, y_b1),
        ("C", fill_c, y_b1, bottom),
    )
    parts.append('<g class="bands">')
    for name, fill, band_top, band_bottom in bands:
        height = band_bottom - band_top
        parts.append(
            f'<rect class="band band-{name}" x="{_px(left)}" y="{_px(band_top)}" '
            f'width="{_px(plot_w)}" height="{_px(height)}" fill="{fill}"/>'
        )
        if height >= spec.font_size * 1.5:
            label_y = band_top + height / 2 + spec.font_size / 3
            parts.append(
                f'<text class="band-label" x="{_px(right - 10)}" y="{_px(label_y)}" '
                f'text-anchor="end" fill="#555555">{name}</text>'
            )
    parts.append("</g>")

    # Axes with integer ticks plus the exact range endpoint.
    def tick_values(lo: float, hi: float) -> list[float]:
        ticks = [float(v) for v in range(math.ceil(lo), math.floor(hi) + 1)]
        if not ticks or ticks[-1] != hi:
            ticks.append(hi)
        if ticks[0] != lo:
            ticks.insert(0, lo)
        return ticks

    def tick_label(value: float) -> str:
        return str(int(value)) if value == int(value) else f"{value:.2f}"

    parts.append('<g class="axes" stroke="#000000">')
    parts.append(f'<line x1="{_px(left)}" y1="{_px(bottom)}" x2="{_px(right)}" y2="{_px(bottom)}"/>')
    parts.append(f'<line x1="{_px(left)}" y1="{_px(bottom)}" x2="{_px(left)}" y2="{_px(top)}"/>')
    for value in tick_values(0.0, axis_len):
        x = x_px(value)
        parts.append(f'<line x1="{_px(x)}" y1="{_px(bottom)}" x2="{_px(x)}" y2="{_px(bottom + 5)}"/>')
        parts.append(
            f'<text stroke="none" x="{_px(x)}" y="{_px(bottom + 20)}" '
            f'text-anchor="middle">{tick_label(value)}</text>'
        )
    for value in tick_values(ease_min, ease_max):
        y = y_px(value)
        parts.append(f'<line x1="{_px(left - 5)}" y1="{_px(y)}" x2="{_px(left)}" y2="{_px(y)}"/>')
        parts.append(
            f'<text stroke="none" x="{_px(left - 8)}" y="{_px(y + spec.font_size / 3)}" '
            f'text-anchor="end">{tick_label(value)}</text>'
        )
    parts.append("</g>")

    x_title = "cognitive effect (log tf)"
    y_title = (
        "ease of processing (log N/df)"
        if diagram.config.idf_style == "n_over_df"
        else "ease of processing (log 1/df)"
    )
    mid_x = left + plot_w / 2
    mid_y = top + plot_h / 2
    parts.append(
        f'<text class="axis-title" x="{_px(mid_x)}" y="{_px(bottom + 42)}" '
        f'text-anchor="middle">{escape(x_title)}</text>'
    )
    parts.append(
        f'<text class="axis-title" x="{_px(left - 40)}" y="{_px(mid_y)}" text-anchor="middle" '
        f'transform="rotate(-90 {_px(left - 40)} {_px(mid_y)})">{escape(y_title)}</text>'
    )

    parts.append('<g class="points">')
    for point in diagram.points:
        cx = x_px(point.ce)
        cy = y_px(point.ease)
        tooltip = escape(f"{point.candidate} tf={point.tf} df={point.df} sector={point.sector}")
        parts.append(
            f'<circle class="pt" cx="{_px(cx)}" cy="{_px(cy)}" r="3.5" fill="#1a1a1a">'
            f"<title>{tooltip}</title></circle>"
        )
    parts.append("</g>")

    if spec.label_policy == "all":
        labeled = diagram.points
    elif spec.label_policy == "top_n_labels":
        labeled = diagram.points[: spec.label_count]
    else:
        labeled = []
    parts.append('<g class="labels">')
    for point in labeled:
        # Offset to the marker's upper right; dense regions are the
        # interactive explorer's problem, not this static export's.
        lx = x_px(point.ce) + 5
        ly = y_px(point.ease) - 5
        parts.append(
            f'<text class="pt-label" x="{_px(lx)}" y="{_px(ly)}">{escape(point.candidate)}</text>'
        )
    parts.append("</g>")

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
