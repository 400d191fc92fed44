"""Regular {p,q} tessellations of the Poincaré disc, rendered to SVG.

Points are complex numbers strictly inside the unit circle.  A tiling is
grown from the central polygon by reflecting tiles across their sides; the
hyperbolic reflection across an edge is the inversion in the unique circle
through the edge endpoints orthogonal to the unit circle (a plain mirror
reflection when the edge lies on a diameter).  Tiles carry their
edge-adjacency distance from the central tile.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Optional

_DEDUP_TOL = 1e-9
_LINE_EPS = 1e-12


class NonHyperbolicError(ValueError):
    pass


@dataclass(frozen=True)
class Tile:
    center: complex
    vertices: tuple[complex, ...]
    distance: int


def base_polygon(p: int, q: int) -> Tile:
    """Central tile of {p,q}: a regular p-gon, first vertex on the +x axis.

    Hyperbolic circumradius c satisfies cosh c = cot(pi/p) cot(pi/q); the
    Euclidean vertex radius in the disc model is tanh(c/2).
    """
    if p < 3 or q < 3 or (p - 2) * (q - 2) <= 4:
        raise NonHyperbolicError(f"{{{p},{q}}} does not tessellate the hyperbolic plane")
    cosh_c = 1.0 / (math.tan(math.pi / p) * math.tan(math.pi / q))
    radius = math.tanh(math.acosh(cosh_c) / 2.0)
    vertices = tuple(radius * cmath.exp(2j * math.pi * k / p) for k in range(p))
    return Tile(0j, vertices, 0)


def _orthocircle(a: complex, b: complex) -> Optional[tuple[complex, float]]:
    """Circle through a and b orthogonal to the unit circle; None if they
    lie on a diameter."""
    cross = a.real * b.imag - a.imag * b.real
    if abs(cross) < _LINE_EPS:
        return None
    ca = (abs(a) ** 2 + 1.0) / 2.0
    cb = (abs(b) ** 2 + 1.0) / 2.0
    ox = (ca * b.imag - cb * a.imag) / cross
    oy = (a.real * cb - b.real * ca) / cross
    center = complex(ox, oy)
    return center, math.sqrt(abs(center) ** 2 - 1.0)


def reflect(edge: tuple[complex, complex], pt: complex) -> complex:
    """Hyperbolic reflection of ``pt`` across the geodesic through ``edge``."""
    a, b = edge
    if a == b:
        raise ValueError("edge endpoints must be distinct")
    circle = _orthocircle(a, b)
    if circle is None:
        u = (b - a) / abs(b - a)
        return u * u * pt.conjugate()
    center, radius = circle
    return center + radius * radius / (pt - center).conjugate()


def generate_tiles(p: int, q: int, radius: int) -> list[Tile]:
    """All tiles within the given edge-adjacency distance, in BFS order.

    Candidates are produced by reflecting each frontier tile across each of
    its sides; duplicates are dropped when centers agree within 1e-9.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    base = base_polygon(p, q)
    tiles = [base]
    seen: dict[tuple[int, int], list[complex]] = {}
    _remember(seen, base.center)
    frontier = [base]
    for dist in range(1, radius + 1):
        new_frontier = []
        for tile in frontier:
            verts = tile.vertices
            for i in range(p):
                edge = (verts[i], verts[(i + 1) % p])
                center = reflect(edge, tile.center)
                if _known(seen, center):
                    continue
                _remember(seen, center)
                neighbor = Tile(
                    center,
                    tuple(reflect(edge, v) for v in verts),
                    dist,
                )
                tiles.append(neighbor)
                new_frontier.append(neighbor)
        frontier = new_frontier
    return tiles


def _cell(z: complex) -> tuple[int, int]:
    return round(z.real * 1e6), round(z.imag * 1e6)


def _remember(seen: dict, z: complex) -> None:
    seen.setdefault(_cell(z), []).append(z)

def _known(seen: dict, z: complex) -> bool:
    cx, cy = _cell(z)
    for dx in (-1, 0, 1):
        for dy in (-1, 0, 1):
            for other in seen.get((cx + dx, cy + dy), ()):
                if abs(other - z) < _DEDUP_TOL:
                    return True
    return False


# --- SVG output -------------------------------------------------------------


@dataclass
class RenderOptions:
    size: int = 600
    stroke: str = "#1a1a2e"
    stroke_width: float = 0.004
    fill: str = "none"
    highlight: Optional[int] = None  # fill tiles at this distance
    highlight_fill: str = "#f4b942"
    segments: int = 32  # polyline segments per geodesic edge


def _geodesic_points(a: complex, b: complex, n: int) -> list[complex]:
    circle = _orthocircle(a, b)
    if circle is None:
        return [a + (b - a) * k / n for k in range(n + 1)]
    center, radius = circle
    ta = cmath.phase(a - center)
    tb = cmath.phase(b - center)
    dt = math.remainder(tb - ta, math.tau)
    return [center + radius * cmath.exp(1j * (ta + dt * k / n)) for k in range(n + 1)]


def _tile_path(tile: Tile, segments: int) -> str:
    points: list[complex] = []
    verts = tile.vertices
    for i in range(len(verts)):
        arc = _geodesic_points(verts[i], verts[(i + 1) % len(verts)], segments)
        points.extend(arc[:-1])
    d = [f"M {points[0].real:.6f} {points[0].imag:.6f}"]
    d.extend(f"L {z.real:.6f} {z.imag:.6f}" for z in points[1:])
    d.append("Z")
    return " ".join(d)


def to_svg(tiles: Iterable[Tile], options: Optional[RenderOptions] = None) -> str:
    """SVG 1.1 document: the unit circle plus one closed path per tile.

    Output is deterministic for a fixed tile ordering and options.
    """
    opt = options or RenderOptions()
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{opt.size}" height="{opt.size}" viewBox="-1.05 -1.05 2.1 2.1">',
        f'<circle cx="0" cy="0" r="1" fill="none" stroke="{opt.stroke}" '
        f'stroke-width="{opt.stroke_width:.6f}"/>',
    ]
    for tile in tiles:
        fill = opt.fill
        if opt.highlight is not None and tile.distance == opt.highlight:
            fill = opt.highlight_fill
        lines.append(
            f'<path d="{_tile_path(tile, opt.segments)}" fill="{fill}" '
            f'stroke="{opt.stroke}" stroke-width="{opt.stroke_width:.6f}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
