"""Input model: bounding box, convex polytope regions and thin triangles.

A scene is a bounding box B plus a list of constant-complexity regions with
rational coordinates.  Convex polytopes are halfspace intersections; they may
be unbounded in x/y (z-slabs), in which case the geometry is implicitly
clipped to B.  Thin triangles are two-sided zero-thickness obstacles: the
underside and the top side behave as distinct boundary facets whose heights
coincide.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvariantError, ParseError, VerticalFacet
from .exact import Plane, Point3, QQ, Scalar, point_from_json, rat_from_json, sign
from .polytope import (
    Halfspace,
    aabb,
    box_halfspaces,
    contains,
    dedupe_halfspaces,
    is_fulldim,
    polytope_vertices,
)

DEFAULT_FMAX = 12

BBOX_ID = -1  # pseudo region id for bounding-box facets in provenance records


@dataclass
class ConvexPolytope:
    halfspaces: list[Halfspace]

    def kind(self) -> str:
        return "polytope"


@dataclass
class ThinTriangle:
    vertices: tuple[Point3, Point3, Point3]

    def kind(self) -> str:
        return "triangle"

    def plane(self) -> Plane:
        a, b, c = self.vertices
        ux, uy, uz = b.x - a.x, b.y - a.y, b.z - a.z
        vx, vy, vz = c.x - a.x, c.y - a.y, c.z - a.z
        nx = uy * vz - uz * vy
        ny = uz * vx - ux * vz
        nz = ux * vy - uy * vx
        if nx == 0 and ny == 0 and nz == 0:
            raise InvariantError("degenerate triangle")
        d = -(nx * a.x + ny * a.y + nz * a.z)
        return Plane.of(nx, ny, nz, d)


@dataclass
class Region:
    id: int
    shape: ConvexPolytope | ThinTriangle

    # caches filled in by Scene._finalize
    _verts: list[Point3] | None = field(default=None, repr=False)
    _aabb: tuple | None = field(default=None, repr=False)
    _bounded: bool = field(default=True, repr=False)

    @property
    def is_triangle(self) -> bool:
        return isinstance(self.shape, ThinTriangle)

    def facet_halfspaces(self) -> list[Halfspace]:
        """The region's own facet constraints (empty for triangles)."""
        if self.is_triangle:
            return []
        return self.shape.halfspaces

    def facet_count(self) -> int:
        if self.is_triangle:
            return 2
        return len(self.shape.halfspaces)

    def interior_contains(self, p: Point3) -> bool:
        """Thin triangles have empty interior and never contain points."""
        if self.is_triangle:
            return False
        return contains(self.shape.halfspaces, p, strict=True)

    def closure_contains(self, p: Point3) -> bool:
        if self.is_triangle:
            t = self.shape
            if t.plane().eval_at(p) != 0:
                return False
            return _point_in_triangle_xy(t, p.x, p.y, strict=False)
        return contains(self.shape.halfspaces, p)

    def vertical_span(self, x: Scalar, y: Scalar):
        """Intersection of the vertical line at (x, y) with the region.

        For a polytope returns (zlo, zhi, facet_lo, facet_hi) with the facet
        indices of the entry (bottom) and exit (top) constraints, or None if
        the line misses the region.  For a triangle returns the degenerate
        crossing (z, z, 0, 1) with sides as facets, or None.
        """
        if self.is_triangle:
            t = self.shape
            if not _point_in_triangle_xy(t, x, y, strict=True):
                return None
            z = t.plane().z_at(x, y)
            return (z, z, 0, 1)
        zlo = zhi = None
        flo = fhi = None
        for idx, h in enumerate(self.shape.halfspaces):
            pl = h.plane
            v = (pl.a * x + pl.b * y + pl.d) * h.side
            cz = pl.c * h.side
            if cz == 0:
                if v < 0:
                    return None
                continue
            zb = QQ(-(pl.a * x + pl.b * y + pl.d), pl.c)
            if cz > 0:
                if zlo is None or zb > zlo:
                    zlo, flo = zb, idx
            else:
                if zhi is None or zb < zhi:
                    zhi, fhi = zb, idx
        if zlo is None or zhi is None or zlo >= zhi:
            return None
        return (zlo, zhi, flo, fhi)

    def polytope_edges(self):
        """Edges as (p, q, facet_i, facet_j) tuples; triangle edges use (0, 1)."""
        if self.is_triangle:
            a, b, c = self.shape.vertices
            return [(a, b, 0, 1), (b, c, 0, 1), (c, a, 0, 1)]
        hs = self.shape.halfspaces
        verts = self._verts or polytope_vertices(hs)
        out = []
        for i in range(len(hs)):
            for j in range(i + 1, len(hs)):
                shared = [p for p in verts if hs[i].plane.eval_at(p) == 0 and hs[j].plane.eval_at(p) == 0]
                if len(shared) == 2:
                    out.append((shared[0], shared[1], i, j))
                elif len(shared) > 2:
                    raise InvariantError(f"region {self.id}: facets {i},{j} share {len(shared)} vertices")
        return out


def _point_in_triangle_xy(t: ThinTriangle, x: Scalar, y: Scalar, strict: bool) -> bool:
    a, b, c = t.vertices
    pts = [(a.x, a.y), (b.x, b.y), (c.x, c.y)]
    signs = []
    for i in range(3):
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % 3]
        signs.append(sign((x2 - x1) * (y - y1) - (y2 - y1) * (x - x1)))
    if strict:
        return all(s > 0 for s in signs) or all(s < 0 for s in signs)
    return all(s >= 0 for s in signs) or all(s <= 0 for s in signs)


@dataclass
class FacetLabel:
    facet: int
    label: str  # "top" | "bottom"
    silhouette_edges: list[tuple[int, int]]


def classify_facets(p: ConvexPolytope) -> list[FacetLabel]:
    """Label each facet top/bottom by outward normal and report the silhouette.

    Top facets are those whose outward normal has positive z-component; the
    silhouette edges are the facet pairs where the label changes, and they
    form one closed cycle on a convex polytope.
    """
    hs = p.halfspaces
    labels = []
    for h in hs:
        nz = h.plane.c * (-h.side)  # outward normal z-component
        if nz == 0:
            raise VerticalFacet("facet plane is parallel to the z-axis")
        labels.append("top" if nz > 0 else "bottom")
    verts = polytope_vertices(hs)
    sil: list[tuple[int, int]] = []
    adjacency: dict[int, list[tuple[int, int]]] = {i: [] for i in range(len(hs))}
    for i in range(len(hs)):
        for j in range(i + 1, len(hs)):
            shared = [q for q in verts if hs[i].plane.eval_at(q) == 0 and hs[j].plane.eval_at(q) == 0]
            if len(shared) == 2:
                adjacency[i].append((i, j))
                adjacency[j].append((i, j))
                if labels[i] != labels[j]:
                    sil.append((i, j))
    out = []
    for i, lab in enumerate(labels):
        edges = [e for e in sil if i in e]
        out.append(FacetLabel(i, lab, edges))
    return out


class ThinRegionView:
    """Two-sided view of a triangle with +delta -> 0 crossing semantics."""

    def __init__(self, t: ThinTriangle):
        self.triangle = t
        self.plane = t.plane()

    def vertical_crossings(self, x, y):
        """Boundary crossings of the upward vertical ray at (x, y).

        A ray through the patch interior sees the bottom side and then the top
        side at the same height; a ray missing the patch sees nothing.
        """
        if not _point_in_triangle_xy(self.triangle, QQ(x), QQ(y), strict=True):
            return []
        z = self.plane.z_at(QQ(x), QQ(y))
        return [(z, "bottom"), (z, "top")]


def thin_region_view(t: ThinTriangle) -> ThinRegionView:
    return ThinRegionView(t)


@dataclass
class Scene:
    bbox_lo: Point3
    bbox_hi: Point3
    regions: list[Region]
    fmax: int = DEFAULT_FMAX

    def __post_init__(self):
        self._finalize()

    # -- derived geometry ---------------------------------------------------

    def bbox_halfspaces(self) -> list[Halfspace]:
        return box_halfspaces(self.bbox_lo, self.bbox_hi)

    def bbox_volume(self) -> Scalar:
        d = (
            (self.bbox_hi.x - self.bbox_lo.x)
            * (self.bbox_hi.y - self.bbox_lo.y)
            * (self.bbox_hi.z - self.bbox_lo.z)
        )
        return d

    def n(self) -> int:
        return len(self.regions)

    def region_solid_halfspaces(self, r: Region) -> list[Halfspace]:
        """Halfspaces of the region clipped to B (identical for bounded regions)."""
        own = r.facet_halfspaces()
        if r._bounded:
            return own
        return own + self.bbox_halfspaces()

    def subscene(self, region_ids: Sequence[int]) -> "Scene":
        """New scene over a subset of regions, re-indexed densely.

        Position k of `region_ids` becomes region k of the subscene; callers
        keep the mapping back to parent ids.
        """
        regs = [Region(i, self.regions[rid].shape) for i, rid in enumerate(region_ids)]
        return Scene(self.bbox_lo, self.bbox_hi, regs, self.fmax)

    # -- validation ---------------------------------------------------------

    def _finalize(self):
        lo, hi = self.bbox_lo, self.bbox_hi
        if not (lo.x < hi.x and lo.y < hi.y and lo.z < hi.z):
            raise InvariantError("bbox corners must be strictly ordered")
        for idx, r in enumerate(self.regions):
            if r.id != idx:
                raise InvariantError(f"region ids must be dense 0..n-1, got {r.id} at {idx}")
            if r.is_triangle:
                t = r.shape
                pl = t.plane()
                if pl.is_vertical():
                    raise InvariantError(f"region {r.id}: triangle parallel to the z-axis")
                for v in t.vertices:
                    self._check_vertex_inside(r, v)
                r._verts = list(t.vertices)
                r._aabb = aabb(r._verts)
                r._bounded = True
                continue
            hs = dedupe_halfspaces(r.shape.halfspaces)
            r.shape.halfspaces = hs
            if len(hs) > self.fmax:
                raise InvariantError(f"region {r.id}: {len(hs)} facets exceeds F_max={self.fmax}")
            own_verts = polytope_vertices(hs)
            big = box_halfspaces(
                Point3(2 * lo.x - hi.x, 2 * lo.y - hi.y, 2 * lo.z - hi.z),
                Point3(2 * hi.x - lo.x, 2 * hi.y - lo.y, 2 * hi.z - lo.z),
            )
            big_verts = polytope_vertices(hs + big)
            if not is_fulldim(hs + self.bbox_halfspaces()):
                raise InvariantError(f"region {r.id}: empty interior inside the bounding box")
            bounded = bool(own_verts) and not any(
                any(h.plane.eval_at(v) == 0 for h in big) for v in big_verts
            )
            r._bounded = bounded
            for v in big_verts:
                if any(h.plane.eval_at(v) == 0 for h in big):
                    continue  # artifact of the enlarged clip box (unbounded shape)
                self._check_vertex_inside(r, v)
            clipped_verts = polytope_vertices(hs + self.bbox_halfspaces())
            for v in clipped_verts:
                if not (lo.z < v.z < hi.z):
                    raise InvariantError(f"region {r.id}: z-extent not strictly inside the bbox")
            r._verts = own_verts if bounded else clipped_verts
            r._aabb = aabb(r._verts)

    def _check_vertex_inside(self, r: Region, v: Point3):
        lo, hi = self.bbox_lo, self.bbox_hi
        if not (lo.x < v.x < hi.x and lo.y < v.y < hi.y and lo.z < v.z < hi.z):
            raise InvariantError(f"region {r.id}: vertex {tuple(v)} outside the bbox interior")

    # -- serialization ------------------------------------------------------

    def to_json_obj(self):
        regions = []
        for r in self.regions:
            if r.is_triangle:
                regions.append(
                    {
                        "id": r.id,
                        "type": "triangle",
                        "vertices": [v.to_json() for v in r.shape.vertices],
                    }
                )
            else:
                regions.append(
                    {
                        "id": r.id,
                        "type": "polytope",
                        "halfspaces": [
                            [pl.a, pl.b, pl.c, pl.d, "le" if side == -1 else "ge"]
                            for pl, side in r.shape.halfspaces
                        ],
                    }
                )
        return {
            "bbox": [self.bbox_lo.to_json(), self.bbox_hi.to_json()],
            "regions": regions,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":")) + "\n"

    def __eq__(self, other):
        if not isinstance(other, Scene):
            return NotImplemented
        return self.to_json_obj() == other.to_json_obj()


def scene_from_json_obj(obj) -> Scene:
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object")
    extra = set(obj) - {"bbox", "regions"}
    if extra:
        raise ParseError(f"unknown top-level fields: {sorted(extra)}")
    if "bbox" not in obj or "regions" not in obj:
        raise ParseError("missing 'bbox' or 'regions'")
    bb = obj["bbox"]
    if not isinstance(bb, list) or len(bb) != 2:
        raise ParseError("bbox must be [[x,y,z],[x,y,z]]")
    lo = point_from_json(bb[0], "bbox[0]")
    hi = point_from_json(bb[1], "bbox[1]")
    regions = []
    if not isinstance(obj["regions"], list):
        raise ParseError("regions must be a list")
    for i, ro in enumerate(obj["regions"]):
        where = f"regions[{i}]"
        if not isinstance(ro, dict):
            raise ParseError(f"{where} must be an object")
        if "id" not in ro or "type" not in ro:
            raise ParseError(f"{where}: missing 'id' or 'type'")
        rid, rtype = ro["id"], ro["type"]
        if not isinstance(rid, int):
            raise ParseError(f"{where}.id must be an integer")
        if rtype == "polytope":
            extra = set(ro) - {"id", "type", "halfspaces"}
            if extra:
                raise ParseError(f"{where}: unknown fields {sorted(extra)}")
            hs_json = ro.get("halfspaces")
            if not isinstance(hs_json, list) or not hs_json:
                raise ParseError(f"{where}.halfspaces must be a non-empty list")
            hs = []
            for j, hj in enumerate(hs_json):
                if not isinstance(hj, list) or len(hj) != 5 or hj[4] not in ("le", "ge"):
                    raise ParseError(f"{where}.halfspaces[{j}] must be [a,b,c,d,'le'|'ge']")
                coeffs = [rat_from_json(v, f"{where}.halfspaces[{j}]") for v in hj[:4]]
                hs.append(Halfspace.of(*coeffs, -1 if hj[4] == "le" else +1))
            regions.append(Region(rid, ConvexPolytope(hs)))
        elif rtype == "triangle":
            extra = set(ro) - {"id", "type", "vertices"}
            if extra:
                raise ParseError(f"{where}: unknown fields {sorted(extra)}")
            vj = ro.get("vertices")
            if not isinstance(vj, list) or len(vj) != 3:
                raise ParseError(f"{where}.vertices must be three points")
            verts = tuple(point_from_json(v, f"{where}.vertices") for v in vj)
            regions.append(Region(rid, ThinTriangle(verts)))
        else:
            raise ParseError(f"{where}.type must be 'polytope' or 'triangle'")
    return Scene(lo, hi, regions)


def load_scene(path) -> Scene:
    with open(path, "r", encoding="utf-8") as f:
        try:
            obj = json.load(f)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}:{exc.lineno}: {exc.msg}") from exc
    return scene_from_json_obj(obj)


def save_scene(scene: Scene, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(scene.dumps())
