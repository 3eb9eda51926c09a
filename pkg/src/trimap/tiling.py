"""Reflection tiling of the unit disc by copies of the triangle, and SVG output.

Everything here is in scaled (unit disc) coordinates.
"""

from __future__ import annotations

import cmath
import math
from collections import deque
from dataclasses import dataclass

from trimap.errors import DomainError
from trimap.triangle import TriangleSignature, vertex_geometry

MAX_DEPTH = 8
DEDUP_DIGITS = 9
COLLINEAR_EPS = 1e-12


@dataclass(frozen=True)
class Geodesic:
    """A diameter (``direction`` is a unit vector) or an arc orthogonal to the unit circle."""

    kind: str
    direction: complex = 0j
    center: complex = 0j
    radius: float = 0.0

    @classmethod
    def through(cls, p: complex, q: complex) -> "Geodesic":
        """The geodesic through two distinct points of the open disc."""
        p, q = complex(p), complex(q)
        cross = p.real * q.imag - p.imag * q.real
        if abs(cross) <= COLLINEAR_EPS * max(1.0, abs(p), abs(q)):
            v = p if abs(p) >= abs(q) else q
            return cls("diameter", direction=v / abs(v))
        # the circle through p, q and the inversion of p in the unit circle
        center = _circumcenter(p, q, p / abs(p) ** 2)
        return cls("arc", center=center, radius=math.sqrt(abs(center) ** 2 - 1.0))

    def tangent_at(self, z: complex, toward: complex) -> complex:
        """Unit tangent at ``z`` pointing along the geodesic toward ``toward``."""
        if self.kind == "diameter":
            v = self.direction
        else:
            v = 1j * (z - self.center)
            v = v / abs(v)
        chord = toward - z
        if v.real * chord.real + v.imag * chord.imag < 0:
            v = -v
        return v


def _circumcenter(a: complex, b: complex, c: complex) -> complex:
    ax, ay, bx, by, cx, cy = a.real, a.imag, b.real, b.imag, c.real, c.imag
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    a2, b2, c2 = abs(a) ** 2, abs(b) ** 2, abs(c) ** 2
    ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    return complex(ux, uy)


def reflect_geodesic(g: Geodesic, z: complex) -> complex:
    """Hyperbolic reflection of ``z`` in ``g``."""
    z = complex(z)
    if g.kind == "diameter":
        u = g.direction
        return u * u * z.conjugate()
    if z == g.center:
        raise DomainError("cannot reflect the centre of the geodesic circle")
    return g.center + g.radius**2 / (z - g.center).conjugate()


@dataclass(frozen=True)
class TriangleTile:
    """Image of the base triangle; vertices keep the labels A, B, C in order."""

    vertices: tuple[complex, complex, complex]
    depth: int

    @property
    def sides(self) -> tuple[Geodesic, Geodesic, Geodesic]:
        """Sides opposite A, B, C, i.e. BC, CA, AB."""
        a, b, c = self.vertices
        return (Geodesic.through(b, c), Geodesic.through(c, a), Geodesic.through(a, b))

    def reflect(self, side: int) -> "TriangleTile":
        g = self.sides[side]
        return TriangleTile(tuple(reflect_geodesic(g, v) for v in self.vertices), self.depth + 1)

    def angles(self) -> tuple[float, float, float]:
        """Interior angles at A, B, C from the geodesic tangents."""
        out = []
        for i in range(3):
            v, u, w = self.vertices[i], self.vertices[(i + 1) % 3], self.vertices[(i + 2) % 3]
            t1 = Geodesic.through(v, u).tangent_at(v, u)
            t2 = Geodesic.through(v, w).tangent_at(v, w)
            out.append(abs(cmath.phase(t2 / t1)))
        return tuple(out)

    def key(self) -> tuple:
        return tile_key(self.vertices)


def tile_key(vertices) -> tuple:
    return tuple(sorted((round(v.real, DEDUP_DIGITS) + 0.0, round(v.imag, DEDUP_DIGITS) + 0.0) for v in vertices))


def base_tile(sig: TriangleSignature) -> TriangleTile:
    geo = vertex_geometry(sig)
    return TriangleTile((geo.scaled("A"), geo.scaled("B"), geo.scaled("C")), 0)


def tiling(sig: TriangleSignature, depth: int) -> list[TriangleTile]:
    """All distinct images of the triangle under words of length <= depth
    in the three side reflections, in breadth-first order."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth > MAX_DEPTH:
        raise DomainError(f"tiling too deep: depth {depth} > {MAX_DEPTH}")
    start = base_tile(sig)
    seen = {start.key()}
    tiles = [start]
    frontier = deque([start])
    while frontier:
        tile = frontier.popleft()
        if tile.depth == depth:
            continue
        for side in range(3):
            new = tile.reflect(side)
            k = new.key()
            if k not in seen:
                seen.add(k)
                tiles.append(new)
                frontier.append(new)
    return tiles


# -- SVG ----------------------------------------------------------------

SVG_SIZE = 800
DISC_RADIUS_PX = 390.0


def _fmt(x: float) -> str:
    return format(x + 0.0, ".17g")


def _to_px(z: complex) -> tuple[float, float]:
    half = SVG_SIZE / 2
    return half + DISC_RADIUS_PX * z.real, half - DISC_RADIUS_PX * z.imag


def _edge(p: complex, q: complex) -> str:
    g = Geodesic.through(p, q)
    qx, qy = _to_px(q)
    if g.kind == "diameter":
        return f"L {_fmt(qx)} {_fmt(qy)}"
    px, py = _to_px(p)
    cx, cy = _to_px(g.center)
    cross = (px - cx) * (qy - cy) - (py - cy) * (qx - cx)
    sweep = 1 if cross > 0 else 0
    r = _fmt(g.radius * DISC_RADIUS_PX)
    return f"A {r} {r} 0 0 {sweep} {_fmt(qx)} {_fmt(qy)}"


def tile_path(tile: TriangleTile) -> str:
    a, b, c = tile.vertices
    ax, ay = _to_px(a)
    parts = [f"M {_fmt(ax)} {_fmt(ay)}", _edge(a, b), _edge(b, c), _edge(c, a), "Z"]
    return " ".join(parts)


def render_svg(sig: TriangleSignature, tiles: list[TriangleTile]) -> str:
    """SVG document: the unit circle plus one closed path per tile."""
    half = SVG_SIZE / 2
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f"<title>triangle group {sig}</title>",
        f'<circle cx="{_fmt(half)}" cy="{_fmt(half)}" r="{_fmt(DISC_RADIUS_PX)}" fill="none" stroke="black" stroke-width="1"/>',
    ]
    for tile in tiles:
        fill = "#c9d9f2" if tile.depth % 2 == 0 else "#ffffff"
        lines.append(
            f'<path class="tile" data-depth="{tile.depth}" d="{tile_path(tile)}" '
            f'fill="{fill}" stroke="#203050" stroke-width="0.5"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
