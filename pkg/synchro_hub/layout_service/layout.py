from __future__ import annotations

from dataclasses import dataclass
from math import atan2, cos, pi, sin
from typing import Dict, List, Optional, Tuple

from synchro_hub.core.graphs import SccPartition, scc
from synchro_hub.core.models import Automaton, Digraph, transition_digraph

from .config import LayoutConfig

Point = Tuple[float, float]


@dataclass(frozen=True)
class SccCircle:
    cx: float
    cy: float
    r: float
    members: Tuple[int, ...]


@dataclass(frozen=True)
class EdgeSegment:
    source: int
    target: int
    letter: int
    x1: float
    y1: float
    x2: float
    y2: float


@dataclass(frozen=True)
class LoopMarker:
    vertex: int
    letter: int
    cx: float
    cy: float
    r: float


@dataclass(frozen=True)
class LayoutModel:
    """
    Двухуровневая циклическая раскладка: компоненты на большой
    окружности, вершины компоненты на ее собственной окружности.
    """

    width: float
    height: float
    vertex_radius: float
    circles: Tuple[SccCircle, ...]
    positions: Tuple[Point, ...]
    component_of: Tuple[int, ...]
    edges: Tuple[EdgeSegment, ...]
    loops: Tuple[LoopMarker, ...]
    letters: int


def _dfs_order(g: Digraph, comp: Tuple[int, ...], component_of: Tuple[int, ...],
               cid: int) -> List[int]:
    """
    Порядок обхода в глубину внутри компоненты: ребра дерева обхода
    становятся короткими ребрами между соседями на окружности.
    """
    order: List[int] = []
    visited = {comp[0]}
    stack = [(comp[0], 0)]
    order.append(comp[0])
    while stack:
        v, i = stack[-1]
        out = g.out[v]
        if i >= len(out):
            stack.pop()
            continue
        stack[-1] = (v, i + 1)
        w = out[i]
        if component_of[w] == cid and w not in visited:
            visited.add(w)
            order.append(w)
            stack.append((w, 0))
    return order


def _place_components(part: SccPartition, radii: List[float],
                      gap: float) -> List[Point]:
    """
    Центры компонент на большой окружности; компоненте отводится дуга,
    пропорциональная ее диаметру с зазором.
    """
    if part.count == 1:
        return [(0.0, 0.0)]
    spans = [2 * r + gap for r in radii]
    total = sum(spans)
    big_r = total / pi
    centers: List[Point] = []
    acc = 0.0
    for span in spans:
        angle = -pi / 2 + 2 * pi * (acc + span / 2) / total
        centers.append((big_r * cos(angle), big_r * sin(angle)))
        acc += span
    return centers


def compute_layout(a: Automaton, config: Optional[LayoutConfig] = None) -> LayoutModel:
    config = config or LayoutConfig()
    g = transition_digraph(a)
    part = scc(g)

    vr = config.VERTEX_RADIUS
    radii = [
        max(config.MIN_SCC_RADIUS, config.VERTEX_SPACING * len(c) / (2 * pi))
        for c in part.components
    ]
    gap = 2 * max(radii) + 4 * vr
    centers = _place_components(part, radii, gap)

    raw_pos: List[Point] = [(0.0, 0.0)] * a.n
    for cid, comp in enumerate(part.components):
        cx, cy = centers[cid]
        r = radii[cid]
        order = _dfs_order(g, comp, part.component_of, cid)
        base = atan2(cy, cx) if (cx or cy) else -pi / 2
        for i, v in enumerate(order):
            phi = base + 2 * pi * i / len(order)
            raw_pos[v] = (cx + r * cos(phi), cy + r * sin(phi))

    #масштаб под ширину холста
    reach = vr * (1 + 2 * config.LOOP_RATIO) + vr
    xs_min = min(c[0] - r for c, r in zip(centers, radii)) - reach
    xs_max = max(c[0] + r for c, r in zip(centers, radii)) + reach
    ys_min = min(c[1] - r for c, r in zip(centers, radii)) - reach
    ys_max = max(c[1] + r for c, r in zip(centers, radii)) + reach
    scale = (config.WIDTH - 2 * config.MARGIN) / max(xs_max - xs_min, 1e-9)
    height = (ys_max - ys_min) * scale + 2 * config.MARGIN

    def tr(p: Point) -> Point:
        return (
            (p[0] - xs_min) * scale + config.MARGIN,
            (p[1] - ys_min) * scale + config.MARGIN,
        )

    positions = [tr(p) for p in raw_pos]
    circles = tuple(
        SccCircle(*tr(centers[cid]), r=radii[cid] * scale, members=comp)
        for cid, comp in enumerate(part.components)
    )
    vr_px = vr * scale
    lr_px = vr_px * config.LOOP_RATIO

    edges: List[EdgeSegment] = []
    loops: List[LoopMarker] = []
    for v, row in enumerate(a.table):
        vx, vy = positions[v]
        by_target: Dict[int, List[int]] = {}
        for letter, t in enumerate(row):
            if t is not None:
                by_target.setdefault(t, []).append(letter)

        loop_letters = by_target.pop(v, [])
        if loop_letters:
            circle = circles[part.component_of[v]]
            out_angle = atan2(vy - circle.cy, vx - circle.cx)
            for i, letter in enumerate(loop_letters):
                phi = out_angle + 2 * pi * i / len(loop_letters)
                dist = vr_px + lr_px
                loops.append(LoopMarker(
                    v, letter, vx + dist * cos(phi), vy + dist * sin(phi), lr_px
                ))

        for t, letters in by_target.items():
            tx, ty = positions[t]
            alpha = atan2(ty - vy, tx - vx)
            m = len(letters)
            for i, letter in enumerate(letters):
                off = (i - (m - 1) / 2) * config.PARALLEL_SPREAD
                edges.append(EdgeSegment(
                    v, t, letter,
                    vx + vr_px * cos(alpha + off), vy + vr_px * sin(alpha + off),
                    tx - vr_px * cos(alpha - off), ty - vr_px * sin(alpha - off),
                ))

    return LayoutModel(
        width=float(config.WIDTH),
        height=height,
        vertex_radius=vr_px,
        circles=circles,
        positions=tuple(positions),
        component_of=part.component_of,
        edges=tuple(edges),
        loops=tuple(loops),
        letters=a.d,
    )
