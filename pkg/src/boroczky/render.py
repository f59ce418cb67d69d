"""SVG drawings of planar configurations.  Floats are for display only."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field as dc_field

from .configuration import Configuration, incidence_report
from .exactfield import embed_numeric
from .projplane import ProjLine

ORBIT_STYLE = {
    1: {"fill": "#d62728", "r": "0.055"},
    3: {"fill": "#1f77b4", "r": "0.045"},
    6: {"fill": "#2ca02c", "r": "0.045"},
}
MIN_RADIUS = 2.2

DEFAULT_STYLE = {
    "radius": None,  # None: at least MIN_RADIUS, widened to show every affine triple point
    "stroke": "#333333",
    "stroke_width": 0.012,
    "circle_stroke": "#999999",
    "point_fill": "#000000",
    "point_r": 0.045,
}


def _real(a) -> float:
    return embed_numeric(a).real


def clip_line(a: float, b: float, c: float, R: float, eps: float = 1e-12):
    """Segment of a*x + b*y + c = 0 inside [-R, R]^2, or None."""
    pts = []
    if abs(b) > eps:
        for x in (-R, R):
            y = -(a * x + c) / b
            if -R - eps <= y <= R + eps:
                pts.append((x, y))
    if abs(a) > eps:
        for y in (-R, R):
            x = -(b * y + c) / a
            if -R - eps <= x <= R + eps:
                pts.append((x, y))
    uniq = []
    for p in pts:
        if all(abs(p[0] - q[0]) > 1e-9 or abs(p[1] - q[1]) > 1e-9 for q in uniq):
            uniq.append(p)
    if len(uniq) < 2:
        return None
    uniq.sort()
    return uniq[0], uniq[-1]


@dataclass
class SvgScene:
    radius: float
    segments: list = dc_field(default_factory=list)  # (index, (x1, y1), (x2, y2), dotted)
    points: list = dc_field(default_factory=list)  # (x, y, orbit size or None)
    skipped_points: int = 0
    title: str = ""

    def to_svg(self, style: dict) -> str:
        R = self.radius
        svg = ET.Element("svg", {
            "xmlns": "http://www.w3.org/2000/svg",
            "viewBox": f"{-R:.4f} {-R:.4f} {2 * R:.4f} {2 * R:.4f}",
            "width": "600", "height": "600",
        })
        ET.SubElement(svg, "title").text = self.title
        g = ET.SubElement(svg, "g", {"transform": "scale(1,-1)"})
        ET.SubElement(g, "circle", {
            "class": "unit-circle", "cx": "0", "cy": "0", "r": "1", "fill": "none",
            "stroke": style["circle_stroke"], "stroke-width": f"{style['stroke_width']}",
        })
        for idx, (x1, y1), (x2, y2), dotted in self.segments:
            attrs = {
                "class": "config-line", "data-index": str(idx),
                "x1": f"{x1:.6f}", "y1": f"{y1:.6f}", "x2": f"{x2:.6f}", "y2": f"{y2:.6f}",
                "stroke": style["stroke"], "stroke-width": f"{style['stroke_width']}",
            }
            if dotted:
                attrs["stroke-dasharray"] = "0.03,0.03"
            ET.SubElement(g, "line", attrs)
        for x, y, size in self.points:
            st = ORBIT_STYLE.get(size, {"fill": style["point_fill"], "r": str(style["point_r"])})
            attrs = {"class": "triple-point", "cx": f"{x:.6f}", "cy": f"{y:.6f}", "r": st["r"], "fill": st["fill"]}
            if size is not None:
                attrs["data-orbit"] = str(size)
            ET.SubElement(g, "circle", attrs)
        legend = ET.SubElement(svg, "g", {"class": "legend", "font-size": "0.09"})
        rows = [f"{len(self.segments)} lines, {len(self.points)} triple points"]
        if self.skipped_points:
            rows.append(f"{self.skipped_points} triple point(s) outside the view")
        if any(s is not None for _, _, s in self.points):
            rows.append("orbit size 1 / 3 / 6: red / blue / green")
        for k, text in enumerate(rows):
            ET.SubElement(legend, "text", {"x": f"{-R + 0.05:.4f}", "y": f"{-R + 0.12 * (k + 1):.4f}"}).text = text
        ET.indent(svg)
        return ET.tostring(svg, encoding="unicode") + "\n"


def _reflection_line_set(config: Configuration) -> set[ProjLine]:
    if config.conductor % 12:
        return set()
    from .symmetry import reflection_lines
    return set(reflection_lines(config.field))


def _affine_triples(triples):
    out = []
    for p in triples:
        x, y, z = p.coords
        if z:
            out.append((p, _real(x / z), _real(y / z)))
    return out


def build_scene(config: Configuration, radius: float | None = None) -> SvgScene:
    report = incidence_report(config)
    triples = report.triple_points
    affine = _affine_triples(triples)
    if radius is None:
        far = max((max(abs(x), abs(y)) for _, x, y in affine), default=0.0)
        radius = max(MIN_RADIUS, round(1.1 * far, 2))
    scene = SvgScene(radius, title=f"Boroczky configuration n={config.n}")
    scene.skipped_points = len(triples) - len(affine)
    dotted = _reflection_line_set(config) if config.n % 3 == 0 else set()
    for i, l in enumerate(config.lines):
        a, b, c = (_real(x) for x in l.coords)
        seg = clip_line(a, b, c, radius)
        if seg is not None:
            scene.segments.append((i, seg[0], seg[1], l in dotted))
    sizes = {}
    if config.n % 3 == 0:
        from .symmetry import orbit_decompose
        for orb in orbit_decompose(triples):
            for p in orb.points:
                sizes[p] = orb.size
    for p, px, py in affine:
        if abs(px) > radius or abs(py) > radius:
            scene.skipped_points += 1
            continue
        scene.points.append((px, py, sizes.get(p)))
    return scene


def render_svg(config: Configuration, style: dict | None = None) -> str:
    st = dict(DEFAULT_STYLE)
    st.update(style or {})
    return build_scene(config, st["radius"]).to_svg(st)
