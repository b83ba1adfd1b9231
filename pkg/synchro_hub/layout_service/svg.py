from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Optional

from .config import LayoutConfig
from .layout import LayoutModel

SVG_NS = "http://www.w3.org/2000/svg"


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_svg(m: LayoutModel, config: Optional[LayoutConfig] = None) -> str:
    """
    SVG 1.1: только прямые ребра (line), цвет вместо подписи буквы,
    петли - маленькие окружности рядом с вершиной.
    """
    config = config or LayoutConfig()
    root = ET.Element("svg", {
        "xmlns": SVG_NS,
        "version": "1.1",
        "width": _fmt(m.width),
        "height": _fmt(m.height),
        "viewBox": f"0 0 {_fmt(m.width)} {_fmt(m.height)}",
    })

    defs = ET.SubElement(root, "defs")
    for letter in range(m.letters):
        marker = ET.SubElement(defs, "marker", {
            "id": f"arrow-{letter}",
            "viewBox": "0 0 10 10",
            "refX": "10",
            "refY": "5",
            "markerWidth": "6",
            "markerHeight": "6",
            "orient": "auto",
        })
        ET.SubElement(marker, "path", {
            "d": "M 0 0 L 10 5 L 0 10 z",
            "fill": config.letter_color(letter),
        })

    g_scc = ET.SubElement(root, "g", {"class": "scc"})
    for c in m.circles:
        ET.SubElement(g_scc, "circle", {
            "class": "scc-circle",
            "cx": _fmt(c.cx), "cy": _fmt(c.cy), "r": _fmt(c.r),
            "fill": "none", "stroke": config.SCC_STROKE,
        })

    g_edges = ET.SubElement(root, "g", {"class": "edges"})
    for e in m.edges:
        attrs = {
            "class": f"edge letter-{e.letter}",
            "x1": _fmt(e.x1), "y1": _fmt(e.y1),
            "x2": _fmt(e.x2), "y2": _fmt(e.y2),
            "stroke": config.letter_color(e.letter),
            "marker-end": f"url(#arrow-{e.letter})",
        }
        dash = config.letter_dash(e.letter)
        if dash:
            attrs["stroke-dasharray"] = dash
        ET.SubElement(g_edges, "line", attrs)

    for lp in m.loops:
        attrs = {
            "class": f"edge loop letter-{lp.letter}",
            "cx": _fmt(lp.cx), "cy": _fmt(lp.cy), "r": _fmt(lp.r),
            "fill": "none",
            "stroke": config.letter_color(lp.letter),
        }
        dash = config.letter_dash(lp.letter)
        if dash:
            attrs["stroke-dasharray"] = dash
        ET.SubElement(g_edges, "circle", attrs)

    g_vertices = ET.SubElement(root, "g", {"class": "vertices"})
    for v, (x, y) in enumerate(m.positions):
        ET.SubElement(g_vertices, "circle", {
            "class": "vertex",
            "cx": _fmt(x), "cy": _fmt(y), "r": _fmt(m.vertex_radius),
            "fill": config.VERTEX_FILL, "stroke": "#333333",
        })
        label = ET.SubElement(g_vertices, "text", {
            "class": "vertex-label",
            "x": _fmt(x), "y": _fmt(y),
            "font-size": _fmt(m.vertex_radius),
            "text-anchor": "middle",
            "dominant-baseline": "central",
        })
        label.text = str(v)

    body = ET.tostring(root, encoding="unicode")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + body
