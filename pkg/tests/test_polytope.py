from vdtool.exact import Plane, Point3, QQ
from vdtool.polytope import (
    Halfspace,
    box_halfspaces,
    clip_segment,
    contains,
    facet_polygons,
    hull2d,
    is_fulldim,
    poly_area2,
    poly_clip,
    polytope_vertices,
    polytope_volume,
)

P = Point3.of


def unit_box():
    return box_halfspaces(P(0, 0, 0), P(1, 1, 1))


def test_box_vertices_and_volume():
    hs = unit_box()
    verts = polytope_vertices(hs)
    assert len(verts) == 8
    assert polytope_volume(hs, verts) == 1


def test_simplex_volume():
    # x,y,z >= 0, x+y+z <= 1 has volume 1/6
    hs = [
        Halfspace.of(1, 0, 0, 0, +1),
        Halfspace.of(0, 1, 0, 0, +1),
        Halfspace.of(0, 0, 1, 0, +1),
        Halfspace.of(1, 1, 1, -1, -1),
    ]
    assert polytope_volume(hs) == QQ(1, 6)


def test_skew_cut_box_volume():
    # unit box cut by z <= x splits it in half
    hs = unit_box() + [Halfspace.of(-1, 0, 1, 0, -1)]
    assert polytope_volume(hs) == QQ(1, 2)


def test_halfspace_side_survives_canonicalisation():
    # -2x + 0y + 0z + 1 >= 0  is  x <= 1/2; canonical plane flips sign
    h = Halfspace.of(-2, 0, 0, 1, +1)
    assert h.holds(P(0, 0, 0))
    assert not h.holds(P(1, 0, 0))
    assert h.holds(P(QQ(1, 2), 5, -3))


def test_fulldim_detects_flat_polytope():
    flat = unit_box() + [Halfspace.of(0, 0, 1, 0, -1)]  # z <= 0 squashes to a face
    assert not is_fulldim(flat)
    assert is_fulldim(unit_box())


def test_facet_polygons_of_box():
    polys = facet_polygons(unit_box())
    assert len(polys) == 6
    assert all(len(ring) == 4 for _, ring in polys)


def test_clip_segment():
    hs = unit_box()
    r = clip_segment(P(-1, QQ(1, 2), QQ(1, 2)), P(2, QQ(1, 2), QQ(1, 2)), hs)
    assert r == (QQ(1, 3), QQ(2, 3))
    assert clip_segment(P(-1, 5, 0), P(2, 5, 0), hs) is None


def test_poly_clip_and_area():
    square = [(QQ(0), QQ(0)), (QQ(2), QQ(0)), (QQ(2), QQ(2)), (QQ(0), QQ(2))]
    assert poly_area2(square) == 8
    half = poly_clip(square, -1, 0, 1)  # x <= 1
    assert poly_area2(half) == 4
    assert poly_clip(square, 1, 0, -5) == []


def test_hull2d_orders_ccw():
    pts = [(QQ(0), QQ(0)), (QQ(1), QQ(0)), (QQ(1), QQ(1)), (QQ(0), QQ(1)), (QQ(1, 2), QQ(1, 2))]
    h = hull2d(pts)
    assert len(h) == 4
    assert poly_area2(h) > 0


def test_contains_strictness():
    hs = unit_box()
    assert contains(hs, P(QQ(1, 2), QQ(1, 2), QQ(1, 2)), strict=True)
    assert contains(hs, P(0, 0, 0))
    assert not contains(hs, P(0, 0, 0), strict=True)
