"""Validated convex lattice polygons and their lattice-point geometry.

A polygon is given by its boundary vertices in traversal order (either
orientation); validation normalizes to counterclockwise, collapses
collinear intermediate points into their edge, and rejects degenerate or
non-convex input.  All computations are exact integer arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .errors import DomainError, InvariantViolation
from .lattices import AffineLattice2, affine_span

__all__ = [
    "COORD_BOUND",
    "Facet",
    "InteriorClassification",
    "LatticePolygon",
    "AffineNormalization",
]

COORD_BOUND = 10**4  # documented CLI bound on |coordinate|

Point = tuple[int, int]


class InteriorClassification(enum.Enum):
    """Shape of a polygon's set of interior lattice points (w.r.t. a lattice)."""

    NON_EMPTY_INTERIOR = "NON_EMPTY_INTERIOR"
    WIDTH_ONE = "WIDTH_ONE"
    TWICE_PRIMITIVE_TRIANGLE = "TWICE_PRIMITIVE_TRIANGLE"


@dataclass(frozen=True)
class Facet:
    """One side of the polygon with its integral length and inner normal."""

    index: int
    start: Point
    end: Point
    vector: Point
    length: int  # integral length: gcd of |vector| coordinates
    normal: Point  # primitive inner normal

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "start": list(self.start),
            "end": list(self.end),
            "vector": list(self.vector),
            "length": self.length,
            "normal": list(self.normal),
        }


@dataclass(frozen=True)
class AffineNormalization:
    """Exact chart onto a lattice frame: v maps to adj @ (v - offset) / divisor."""

    adj: tuple[tuple[int, int], tuple[int, int]]
    divisor: int
    offset: Point

    def apply(self, point: Sequence[int]) -> Point:
        x, y = point[0] - self.offset[0], point[1] - self.offset[1]
        nx = self.adj[0][0] * x + self.adj[0][1] * y
        ny = self.adj[1][0] * x + self.adj[1][1] * y
        if nx % self.divisor or ny % self.divisor:
            raise DomainError(f"point {tuple(point)} is not in the lattice")
        return (nx // self.divisor, ny // self.divisor)

    def to_json_dict(self) -> dict:
        return {
            "adj": [list(self.adj[0]), list(self.adj[1])],
            "divisor": self.divisor,
            "offset": list(self.offset),
        }


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _half(v: Point) -> int:
    """0 for the upper half-plane (incl. positive x-axis), 1 otherwise."""
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _angle_less(u: Point, v: Point) -> bool:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu < hv
    return u[0] * v[1] - u[1] * v[0] > 0


class LatticePolygon:
    """Strictly convex lattice polygon, vertices counterclockwise."""

    __slots__ = ("_vertices", "_collapsed", "_cache")

    def __init__(self, points: Sequence[Sequence[int]]):
        verts, collapsed = _validate(points)
        self._vertices = verts
        self._collapsed = collapsed
        self._cache: dict = {}

    @property
    def vertices(self) -> tuple[Point, ...]:
        return self._vertices

    @property
    def collapsed_points(self) -> tuple[Point, ...]:
        """Input points that sat on the interior of an edge and were merged."""
        return self._collapsed

    def __eq__(self, other) -> bool:
        return isinstance(other, LatticePolygon) and self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __repr__(self) -> str:
        return f"LatticePolygon({list(self._vertices)!r})"

    # -- basic quantities ------------------------------------------------

    def twice_area(self) -> int:
        """Twice the Euclidean area (shoelace sum), always a positive integer."""
        if "area2" not in self._cache:
            vs = self._vertices
            n = len(vs)
            s = 0
            for i in range(n):
                x0, y0 = vs[i]
                x1, y1 = vs[(i + 1) % n]
                s += x0 * y1 - x1 * y0
            self._cache["area2"] = s
        return self._cache["area2"]

    def facets(self) -> tuple[Facet, ...]:
        """Facets in boundary order with integral lengths and inner normals."""
        if "facets" not in self._cache:
            vs = self._vertices
            n = len(vs)
            out = []
            for j in range(n):
                a, b = vs[j], vs[(j + 1) % n]
                vx, vy = b[0] - a[0], b[1] - a[1]
                length = gcd(abs(vx), abs(vy))
                # CCW orientation puts the interior to the left of each edge
                normal = (-vy // length, vx // length)
                out.append(
                    Facet(
                        index=j,
                        start=a,
                        end=b,
                        vector=(vx, vy),
                        length=length,
                        normal=normal,
                    )
                )
            self._cache["facets"] = tuple(out)
        return self._cache["facets"]

    def boundary_points(self) -> tuple[Point, ...]:
        """All lattice points on the boundary, counterclockwise from the
        first vertex, grouped by facet."""
        if "boundary" not in self._cache:
            pts: list[Point] = []
            for f in self.facets():
                sx, sy = f.start
                px, py = f.vector[0] // f.length, f.vector[1] // f.length
                for t in range(f.length):
                    pts.append((sx + t * px, sy + t * py))
            self._cache["boundary"] = tuple(pts)
        return self._cache["boundary"]

    def contains_interior(self, point: Sequence[int]) -> bool:
        """Strict interior test: left of every edge."""
        x, y = point
        for f in self.facets():
            if f.normal[0] * (x - f.start[0]) + f.normal[1] * (y - f.start[1]) <= 0:
                return False
        return True

    def interior_points(self) -> tuple[Point, ...]:
        """All lattice points strictly inside, by exact bounding-box scan."""
        if "interior" not in self._cache:
            vs = self._vertices
            xmin = min(v[0] for v in vs)
            xmax = max(v[0] for v in vs)
            ymin = min(v[1] for v in vs)
            ymax = max(v[1] for v in vs)
            facets = self.facets()
            out = []
            for y in range(ymin + 1, ymax):
                for x in range(xmin + 1, xmax):
                    for f in facets:
                        if (
                            f.normal[0] * (x - f.start[0])
                            + f.normal[1] * (y - f.start[1])
                            <= 0
                        ):
                            break
                    else:
                        out.append((x, y))
            self._cache["interior"] = tuple(out)
        return self._cache["interior"]

    def interior_points_in(self, lattice: AffineLattice2) -> tuple[Point, ...]:
        """Interior lattice points that lie in the given affine lattice."""
        return tuple(p for p in self.interior_points() if lattice.contains(p))

    # -- lattice-relative operations --------------------------------------

    def _require_vertices_in(self, lattice: AffineLattice2) -> None:
        for v in self._vertices:
            if not lattice.contains(v):
                raise DomainError(f"vertex {v} is not in the lattice {lattice}")

    def normalize_to_lattice(
        self, lattice: AffineLattice2
    ) -> tuple["LatticePolygon", AffineNormalization]:
        """Express the polygon in the basis frame of ``lattice``.

        The image polygon sees ``lattice`` as Z^2; the returned transform
        record allows auditing (and inverting) the change of coordinates.
        Orientation is preserved because the basis has positive determinant.
        """
        self._require_vertices_in(lattice)
        (d1, e), (_, d2) = lattice.basis
        chart = AffineNormalization(
            adj=((d2, -e), (0, d1)), divisor=d1 * d2, offset=lattice.basepoint
        )
        return LatticePolygon([chart.apply(v) for v in self._vertices]), chart

    def verify_pick(self, lattice: AffineLattice2) -> bool:
        """Check Pick's identity in lattice-normalized coordinates.

        2*Area = 2*(interior points) + (boundary points) - 2, where area is
        measured in the volume form of ``lattice`` and points are counted in
        ``lattice``.  Holds for every valid polygon; exposed as a self-check.
        """
        self._require_vertices_in(lattice)
        idx = lattice.index_in_z2
        t2, rem = divmod(self.twice_area(), idx)
        if rem:
            return False
        inside = len(self.interior_points_in(lattice))
        border = sum(1 for p in self.boundary_points() if lattice.contains(p))
        return t2 == 2 * inside + border - 2

    def lattice_width(self, lattice: AffineLattice2) -> tuple[int, Point]:
        """Lattice width w.r.t. a linear lattice, with a minimizing direction.

        Returns ``(width, direction)``; the direction is a primitive dual
        vector in the normalized frame of ``lattice``, sign-normalized to
        have its first nonzero coordinate positive, ties broken by picking
        the lexicographically smallest minimizer.
        """
        if not lattice.is_linear:
            raise DomainError("lattice_width expects a linear lattice")
        v0 = self._vertices[0]
        (d1, e), (_, d2) = lattice.basis
        chart = AffineNormalization(adj=((d2, -e), (0, d1)), divisor=d1 * d2, offset=v0)
        verts = [chart.apply(v) for v in self._vertices]
        return _width_of_vertices(verts)

    def classify_interior_empty(
        self, lattice: AffineLattice2
    ) -> InteriorClassification:
        """Classify the interior w.r.t. ``lattice``.

        NON_EMPTY_INTERIOR when an interior lattice point exists; otherwise
        WIDTH_ONE or TWICE_PRIMITIVE_TRIANGLE.  In the last case the
        defining criterion (triangle, all sides of lattice length two,
        boundary points affinely generating the lattice) is asserted and an
        InvariantViolation is raised if it fails, since an empty interior
        admits no third possibility.
        """
        self._require_vertices_in(lattice)
        if self.interior_points_in(lattice):
            return InteriorClassification.NON_EMPTY_INTERIOR
        width, _ = self.lattice_width(lattice.linear_part())
        if width == 1:
            return InteriorClassification.WIDTH_ONE
        facets = self.facets()
        norm, _ = self.normalize_to_lattice(lattice)
        side_lengths = [f.length for f in norm.facets()]
        boundary_in = [p for p in self.boundary_points() if lattice.contains(p)]
        ok = (
            len(facets) == 3
            and side_lengths == [2, 2, 2]
            and affine_span(boundary_in) == lattice
        )
        if not ok:
            raise InvariantViolation(
                "empty interior but neither width one nor twice a primitive "
                f"triangle: vertices {self._vertices}"
            )
        return InteriorClassification.TWICE_PRIMITIVE_TRIANGLE


def _validate(points: Sequence[Sequence[int]]) -> tuple[tuple[Point, ...], tuple[Point, ...]]:
    if len(points) < 3:
        raise DomainError("a polygon needs at least 3 points")
    pts: list[Point] = []
    for p in points:
        if len(p) != 2 or type(p[0]) is not int or type(p[1]) is not int:
            raise DomainError(f"vertex {p!r} is not an integer pair")
        if abs(p[0]) > COORD_BOUND or abs(p[1]) > COORD_BOUND:
            raise DomainError(f"coordinate bound |c| <= {COORD_BOUND} exceeded at {p!r}")
        pts.append((p[0], p[1]))
    if len(set(pts)) != len(pts):
        raise DomainError("repeated boundary point")

    n = len(pts)
    area2 = sum(
        pts[i][0] * pts[(i + 1) % n][1] - pts[(i + 1) % n][0] * pts[i][1]
        for i in range(n)
    )
    if area2 == 0:
        raise DomainError("zero area (points are collinear or traversal cancels)")
    if area2 < 0:
        # normalize to counterclockwise, keeping the first point first
        pts = [pts[0]] + pts[:0:-1]

    # collapse points lying on the straight continuation of their edge
    collapsed: list[Point] = []
    changed = True
    while changed:
        changed = False
        m = len(pts)
        if m < 3:
            raise DomainError("fewer than 3 effective vertices after collapse")
        for i in range(m):
            prev, cur, nxt = pts[i - 1], pts[i], pts[(i + 1) % m]
            if _cross(prev, cur, nxt) == 0:
                ax, ay = cur[0] - prev[0], cur[1] - prev[1]
                bx, by = nxt[0] - cur[0], nxt[1] - cur[1]
                if ax * bx + ay * by <= 0:
                    raise DomainError("self-intersecting traversal (edge backtracks)")
                collapsed.append(cur)
                del pts[i]
                changed = True
                break
    if len(pts) < 3:
        raise DomainError("fewer than 3 effective vertices after collapse")

    m = len(pts)
    for i in range(m):
        if _cross(pts[i - 1], pts[i], pts[(i + 1) % m]) < 0:
            raise DomainError("polygon is not convex")
    # a convex traversal winds exactly once: edge directions, sorted by
    # angle, must wrap past the reference ray a single time
    edges = [
        (pts[(i + 1) % m][0] - pts[i][0], pts[(i + 1) % m][1] - pts[i][1])
        for i in range(m)
    ]
    descents = sum(1 for i in range(m) if not _angle_less(edges[i], edges[(i + 1) % m]))
    if descents != 1:
        raise DomainError("self-intersecting traversal (winds more than once)")
    return tuple(pts), tuple(collapsed)


def _width_of_vertices(verts: Sequence[Point]) -> tuple[int, Point]:
    """Exact lattice width of a CCW convex vertex list over Z^2.

    Strategy: an upper bound U is taken over facet normals and coordinate
    axes; any optimal primitive direction n satisfies |n.u| <= U and
    |n.w| <= U for the two edge vectors u, w at the first vertex (the
    polygon contains the triangle they span), and n is determined by
    (n.u, n.w), so scanning that square finds the true minimum.
    """
    n = len(verts)

    def spread(direction: Point) -> int:
        vals = [direction[0] * x + direction[1] * y for (x, y) in verts]
        return max(vals) - min(vals)

    def canon(direction: Point) -> Point:
        dx, dy = direction
        g = gcd(abs(dx), abs(dy))
        dx, dy = dx // g, dy // g
        if dx < 0 or (dx == 0 and dy < 0):
            dx, dy = -dx, -dy
        return (dx, dy)

    best: Optional[tuple[int, Point]] = None

    def consider(direction: Point) -> None:
        nonlocal best
        d = canon(direction)
        w = spread(d)
        if best is None or w < best[0] or (w == best[0] and d < best[1]):
            best = (w, d)

    consider((1, 0))
    consider((0, 1))
    for i in range(n):
        vx = verts[(i + 1) % n][0] - verts[i][0]
        vy = verts[(i + 1) % n][1] - verts[i][1]
        consider((-vy, vx))
    assert best is not None
    ubound = best[0]

    u = (verts[1][0] - verts[0][0], verts[1][1] - verts[0][1])
    w = (verts[-1][0] - verts[0][0], verts[-1][1] - verts[0][1])
    det = u[0] * w[1] - u[1] * w[0]
    for s in range(-ubound, ubound + 1):
        for t in range(-ubound, ubound + 1):
            if s == 0 and t == 0:
                continue
            # solve (n.u, n.w) == (s, t)
            nx, rx = divmod(s * w[1] - t * u[1], det)
            if rx:
                continue
            ny, ry = divmod(t * u[0] - s * w[0], det)
            if ry:
                continue
            if nx == 0 and ny == 0:
                continue
            if gcd(abs(nx), abs(ny)) != 1:
                continue
            consider((nx, ny))
    return best


def brute_force_width(
    polygon: LatticePolygon, sup_norm: int = 25
) -> tuple[int, Point]:
    """Width by exhaustive scan over primitive directions with sup-norm bound.

    Test oracle; independent of the candidate construction above.
    """
    verts = polygon.vertices
    best: Optional[tuple[int, Point]] = None
    for dx in range(0, sup_norm + 1):
        for dy in range(-sup_norm, sup_norm + 1):
            if dx == 0 and dy <= 0:
                continue
            if gcd(dx, abs(dy)) != 1:
                continue
            vals = [dx * x + dy * y for (x, y) in verts]
            w = max(vals) - min(vals)
            d = (dx, dy)
            if best is None or w < best[0] or (w == best[0] and d < best[1]):
                best = (w, d)
    assert best is not None
    return best
