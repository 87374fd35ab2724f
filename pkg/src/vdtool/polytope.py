"""Exact H-polytope and 2D polygon machinery.

Polytopes are lists of Halfspace constraints; vertices are enumerated from
plane triples, volumes come from an outward-oriented facet fan.  All of it is
rational arithmetic; none of it is asymptotically clever, which is fine at the
constant facet counts this package works with.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .exact import ONE, QQ, Plane, Point3, Scalar, ZERO, sign


class Halfspace(NamedTuple):
    """Feasible side of a plane: side=-1 keeps eval <= 0, side=+1 keeps eval >= 0."""

    plane: Plane
    side: int

    @staticmethod
    def of(a, b, c, d, side: int) -> "Halfspace":
        qa = QQ(a)
        lead = qa if qa != 0 else (QQ(b) if QQ(b) != 0 else QQ(c))
        pl = Plane.of(a, b, c, d)
        lead_canon = pl.a if pl.a != 0 else (pl.b if pl.b != 0 else pl.c)
        # Plane.of may have flipped the orientation; keep the same feasible side.
        if sign(lead) != sign(lead_canon):
            side = -side
        return Halfspace(pl, side)

    def holds(self, p: Point3, strict: bool = False) -> bool:
        v = self.plane.eval_at(p) * self.side
        return v > 0 if strict else v >= 0


def box_halfspaces(lo: Point3, hi: Point3) -> list[Halfspace]:
    return [
        Halfspace.of(1, 0, 0, -lo.x, +1),
        Halfspace.of(1, 0, 0, -hi.x, -1),
        Halfspace.of(0, 1, 0, -lo.y, +1),
        Halfspace.of(0, 1, 0, -hi.y, -1),
        Halfspace.of(0, 0, 1, -lo.z, +1),
        Halfspace.of(0, 0, 1, -hi.z, -1),
    ]


def solve_planes3(p1: Plane, p2: Plane, p3: Plane) -> Point3 | None:
    """Unique common point of three planes, or None if the system is singular."""
    a1, b1, c1, d1 = p1
    a2, b2, c2, d2 = p2
    a3, b3, c3, d3 = p3
    det = (
        a1 * (b2 * c3 - c2 * b3)
        - b1 * (a2 * c3 - c2 * a3)
        + c1 * (a2 * b3 - b2 * a3)
    )
    if det == 0:
        return None
    dx = (
        -d1 * (b2 * c3 - c2 * b3)
        - b1 * (-d2 * c3 + c2 * d3)
        + c1 * (-d2 * b3 + b2 * d3)
    )
    dy = (
        a1 * (-d2 * c3 + c2 * d3)
        + d1 * (a2 * c3 - c2 * a3)
        + c1 * (-a2 * d3 + d2 * a3)
    )
    dz = (
        a1 * (-b2 * d3 + d2 * b3)
        - b1 * (-a2 * d3 + d2 * a3)
        - d1 * (a2 * b3 - b2 * a3)
    )
    return Point3(QQ(dx, det), QQ(dy, det), QQ(dz, det))


def contains(hs: Sequence[Halfspace], p: Point3, strict: bool = False) -> bool:
    return all(h.holds(p, strict) for h in hs)


def dedupe_halfspaces(hs: Iterable[Halfspace]) -> list[Halfspace]:
    seen: set[Halfspace] = set()
    out = []
    for h in hs:
        if h not in seen:
            seen.add(h)
            out.append(h)
    return out


def polytope_vertices(hs: Sequence[Halfspace]) -> list[Point3]:
    """All vertices of the (assumed bounded) intersection of the halfspaces."""
    planes = []
    seen = set()
    for h in hs:
        if h.plane not in seen:
            seen.add(h.plane)
            planes.append(h.plane)
    pts: list[Point3] = []
    seen_pts: set[Point3] = set()
    m = len(planes)
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                p = solve_planes3(planes[i], planes[j], planes[k])
                if p is None or p in seen_pts:
                    continue
                if contains(hs, p):
                    seen_pts.add(p)
                    pts.append(p)
    return pts


def centroid(pts: Sequence[Point3]) -> Point3:
    n = len(pts)
    sx = sum((p.x for p in pts), ZERO)
    sy = sum((p.y for p in pts), ZERO)
    sz = sum((p.z for p in pts), ZERO)
    return Point3(QQ(sx, n), QQ(sy, n), QQ(sz, n))


def is_fulldim(hs: Sequence[Halfspace], verts: Sequence[Point3] | None = None) -> bool:
    """True iff the bounded polytope has nonempty interior."""
    if verts is None:
        verts = polytope_vertices(hs)
    if len(verts) < 4:
        return False
    return contains(hs, centroid(verts), strict=True)


def _plane_frame(pl: Plane):
    """Two independent rational vectors spanning the plane."""
    a, b, c = pl.a, pl.b, pl.c
    if a == 0 and b == 0:
        u = (1, 0, 0)
    else:
        u = (-b, a, 0)
    n = (a, b, c)
    v = (
        n[1] * u[2] - n[2] * u[1],
        n[2] * u[0] - n[0] * u[2],
        n[0] * u[1] - n[1] * u[0],
    )
    return u, v


def _orient2d(o, p, q) -> int:
    return sign((p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]))


def hull2d(points: Sequence[tuple]) -> list[tuple]:
    """Convex hull in CCW order (Andrew's monotone chain, exact)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return list(pts)
    lower: list[tuple] = []
    for p in pts:
        while len(lower) >= 2 and _orient2d(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _orient2d(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def facet_polygons(hs: Sequence[Halfspace], verts: Sequence[Point3] | None = None):
    """Ordered vertex cycles of the facets with positive area.

    Returns a list of (halfspace, [Point3 ...]) with each cycle oriented CCW
    when viewed from outside the polytope.
    """
    if verts is None:
        verts = polytope_vertices(hs)
    out = []
    seen_planes = set()
    for h in hs:
        if h.plane in seen_planes:
            continue
        seen_planes.add(h.plane)
        tight = [p for p in verts if h.plane.eval_at(p) == 0]
        if len(tight) < 3:
            continue
        u, v = _plane_frame(h.plane)
        o0 = tight[0]
        coords = {}
        for p in tight:
            dx, dy, dz = p.x - o0.x, p.y - o0.y, p.z - o0.z
            coords[(dx * u[0] + dy * u[1] + dz * u[2], dx * v[0] + dy * v[1] + dz * v[2])] = p
        ring2d = hull2d(list(coords.keys()))
        if len(ring2d) < 3:
            continue
        ring = [coords[c] for c in ring2d]
        # Orient the cycle CCW as seen from the outward side of the facet.
        p0, p1, p2 = ring[0], ring[1], ring[2]
        nx = (p1.y - p0.y) * (p2.z - p0.z) - (p1.z - p0.z) * (p2.y - p0.y)
        ny = (p1.z - p0.z) * (p2.x - p0.x) - (p1.x - p0.x) * (p2.z - p0.z)
        nz = (p1.x - p0.x) * (p2.y - p0.y) - (p1.y - p0.y) * (p2.x - p0.x)
        # outward direction is +normal for side=-1 (feasible eval <= 0), else -normal
        dot = nx * h.plane.a + ny * h.plane.b + nz * h.plane.c
        if dot * (-h.side) < 0:
            ring.reverse()
        out.append((h, ring))
    return out


def polytope_volume(hs: Sequence[Halfspace], verts: Sequence[Point3] | None = None) -> Scalar:
    """Exact volume of the bounded intersection of the halfspaces."""
    if verts is None:
        verts = polytope_vertices(hs)
    if len(verts) < 4:
        return ZERO
    o = centroid(verts)
    total = ZERO
    for _, ring in facet_polygons(hs, verts):
        a = ring[0]
        ax, ay, az = a.x - o.x, a.y - o.y, a.z - o.z
        for i in range(1, len(ring) - 1):
            b, c = ring[i], ring[i + 1]
            bx, by, bz = b.x - o.x, b.y - o.y, b.z - o.z
            cx, cy, cz = c.x - o.x, c.y - o.y, c.z - o.z
            total += ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx)
    assert total >= 0, "facet orientation produced a negative volume"
    return QQ(total, 6)


def aabb(verts: Sequence[Point3]):
    xs = [p.x for p in verts]
    ys = [p.y for p in verts]
    zs = [p.z for p in verts]
    return (min(xs), min(ys), min(zs), max(xs), max(ys), max(zs))


def aabb_overlap(a, b) -> bool:
    return (
        a[0] <= b[3] and b[0] <= a[3]
        and a[1] <= b[4] and b[1] <= a[4]
        and a[2] <= b[5] and b[2] <= a[5]
    )


def clip_segment(p: Point3, q: Point3, hs: Sequence[Halfspace]):
    """Parameter range [t0, t1] of p + t*(q-p) inside the polytope, or None."""
    t0, t1 = ZERO, ONE
    dx, dy, dz = q.x - p.x, q.y - p.y, q.z - p.z
    for h in hs:
        pl = h.plane
        num = pl.eval_at(p) * h.side
        den = (pl.a * dx + pl.b * dy + pl.c * dz) * h.side
        if den == 0:
            if num < 0:
                return None
            continue
        t = QQ(-num, den)
        if den > 0:
            if t > t0:
                t0 = t
        else:
            if t < t1:
                t1 = t
        if t0 > t1:
            return None
    return (t0, t1)


def segment_point(p: Point3, q: Point3, t: Scalar) -> Point3:
    return Point3(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y), p.z + t * (q.z - p.z))


# ---------------------------------------------------------------------------
# 2D polygons: vertex lists in CCW order, exact coordinates.


def poly_area2(poly: Sequence[tuple]) -> Scalar:
    """Twice the signed area (positive for CCW)."""
    s = ZERO
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return s


def poly_clip(poly: Sequence[tuple], a, b, c) -> list[tuple]:
    """Clip a convex CCW polygon to the halfplane a*x + b*y + c >= 0."""
    if not poly:
        return []
    out: list[tuple] = []
    n = len(poly)
    vals = [a * p[0] + b * p[1] + c for p in poly]
    for i in range(n):
        p, vp = poly[i], vals[i]
        q, vq = poly[(i + 1) % n], vals[(i + 1) % n]
        if vp >= 0:
            out.append(p)
            if vq < 0:
                t = QQ(vp, vp - vq)
                out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
        elif vq >= 0:
            t = QQ(vp, vp - vq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    # drop consecutive duplicates introduced by clipping through vertices
    dedup: list[tuple] = []
    for p in out:
        if not dedup or p != dedup[-1]:
            dedup.append(p)
    if len(dedup) >= 2 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def poly_clip_many(poly: Sequence[tuple], halfplanes: Iterable[tuple]) -> list[tuple]:
    cur = list(poly)
    for a, b, c in halfplanes:
        if not cur:
            return []
        cur = poly_clip(cur, a, b, c)
    return cur
