import pytest
from hypothesis import given, strategies as st

from vdtool.errors import VerticalPlane
from vdtool.exact import (
    Plane,
    Point3,
    QQ,
    orient3,
    rat_from_json,
    rat_to_json,
    side_of_plane,
    z_order_at,
)

P = Point3.of


def test_orient3_unit_frame():
    assert orient3(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)) == 1


def test_orient3_coplanar():
    assert orient3(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(3, -2, 0)) == 0


def test_orient3_antisymmetry():
    a, b, c, d = P(0, 0, 0), P(2, 1, 0), P(-1, 3, 2), P(1, 1, 5)
    assert orient3(a, b, c, d) == -orient3(a, c, b, d)


def test_side_of_plane_examples():
    z0 = Plane.of(0, 0, 1, 0)
    assert side_of_plane(z0, P(0, 0, 1)) == 1
    assert side_of_plane(z0, P(3, 5, 0)) == 0
    diag = Plane.of(1, 1, 1, -3)
    assert side_of_plane(diag, P(1, 1, 1)) == 0


def test_z_order_examples():
    z0 = Plane.of(0, 0, 1, 0)
    z1 = Plane.of(0, 0, 1, -1)
    assert z_order_at(z0, z1, 0, 0) == -1
    assert z_order_at(z0, z0, QQ(7, 3), 5) == 0
    zx = Plane.of(-1, 0, 1, 0)   # z = x
    zmx = Plane.of(1, 0, 1, 0)   # z = -x
    assert z_order_at(zx, zmx, 2, 0) == 1


def test_z_order_rejects_vertical():
    with pytest.raises(VerticalPlane):
        z_order_at(Plane.of(1, 0, 0, 0), Plane.of(0, 0, 1, 0), 0, 0)


rationals = st.builds(QQ, st.integers(-10**6, 10**6), st.integers(1, 10**5))


@given(
    a=rationals, b=rationals, c=rationals, d=rationals,
    num=st.integers(-10**4, 10**4).filter(lambda n: n != 0),
    den=st.integers(1, 10**4),
)
def test_plane_canonical_scaling_invariance(a, b, c, d, num, den):
    if a == 0 and b == 0 and c == 0:
        return
    lam = QQ(num, den)
    assert Plane.of(a, b, c, d) == Plane.of(lam * a, lam * b, lam * c, lam * d)


@given(x=rationals)
def test_rational_json_round_trip(x):
    assert rat_from_json(rat_to_json(x)) == x


def test_plane_eval_is_canonical_form():
    # x + y + z - 3 = 0 scaled by 1/7 canonicalises back to integers
    pl = Plane.of(QQ(1, 7), QQ(1, 7), QQ(1, 7), QQ(-3, 7))
    assert (pl.a, pl.b, pl.c, pl.d) == (1, 1, 1, -3)
