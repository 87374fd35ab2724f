"""Exact rational scalars, points and planes, plus the sign predicates.

Every quantity in the geometric core is an arbitrary-precision rational
(gmpy2.mpq, falling back to fractions.Fraction).  There is no epsilon
anywhere: predicates return exact signs and algebraically equivalent
formulations agree bit-for-bit.
"""

from __future__ import annotations

from typing import NamedTuple, Union

from .errors import ParseError, VerticalPlane

try:
    from gmpy2 import mpq as _mpq, mpz as _mpz

    def QQ(p, q=1):
        """Exact rational from ints, rationals or 'p/q' / decimal strings."""
        if q != 1:
            return _mpq(p, q)
        if isinstance(p, str):
            return _mpq(p.strip())
        return _mpq(p)

    ZERO = _mpq(0)
    ONE = _mpq(1)

    def _as_int(x):
        return int(_mpz(x))

except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _mpq

    def QQ(p, q=1):
        if q != 1:
            return _mpq(p, q)
        if isinstance(p, str):
            return _mpq(p.strip())
        return _mpq(p)

    ZERO = _mpq(0)
    ONE = _mpq(1)

    def _as_int(x):
        return int(x)


Scalar = type(ZERO)
Rat = Union[int, str, Scalar]


def sign(x) -> int:
    """Exact sign in {-1, 0, +1}."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def rat_to_json(x) -> "int | str":
    """Integers as ints, other rationals as 'p/q' strings."""
    n, d = x.numerator, x.denominator
    if d == 1:
        return _as_int(n)
    return f"{n}/{d}"


def rat_from_json(v, where: str = "") -> Scalar:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ParseError(f"expected integer or 'p/q' string{' at ' + where if where else ''}: {v!r}")
    try:
        return QQ(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational{' at ' + where if where else ''}: {v!r}") from exc


class Point3(NamedTuple):
    x: Scalar
    y: Scalar
    z: Scalar

    @staticmethod
    def of(x: Rat, y: Rat, z: Rat) -> "Point3":
        return Point3(QQ(x), QQ(y), QQ(z))

    def to_json(self):
        return [rat_to_json(self.x), rat_to_json(self.y), rat_to_json(self.z)]


def point_from_json(v, where: str = "") -> Point3:
    if not isinstance(v, list) or len(v) != 3:
        raise ParseError(f"expected [x, y, z]{' at ' + where if where else ''}")
    return Point3(*(rat_from_json(c, where) for c in v))


class Plane(NamedTuple):
    """Oriented plane a*x + b*y + c*z + d = 0 in canonical integer form.

    Canonicalisation divides by the gcd of the integerised coefficients and
    fixes the sign so the first nonzero of (a, b, c) is positive; two rational
    quadruples describing the same geometric plane (up to nonzero scaling)
    therefore compare and hash equal.
    """

    a: int
    b: int
    c: int
    d: int

    @staticmethod
    def of(a: Rat, b: Rat, c: Rat, d: Rat) -> "Plane":
        qa, qb, qc, qd = QQ(a), QQ(b), QQ(c), QQ(d)
        if qa == 0 and qb == 0 and qc == 0:
            raise ValueError("degenerate plane: normal is zero")
        from math import gcd, lcm

        den = lcm(qa.denominator, qb.denominator, qc.denominator, qd.denominator)
        ia, ib, ic, id_ = (_as_int(q.numerator * (den // q.denominator)) for q in (qa, qb, qc, qd))
        g = gcd(ia, ib, ic, id_)
        ia, ib, ic, id_ = ia // g, ib // g, ic // g, id_ // g
        lead = ia if ia != 0 else (ib if ib != 0 else ic)
        if lead < 0:
            ia, ib, ic, id_ = -ia, -ib, -ic, -id_
        return Plane(ia, ib, ic, id_)

    def eval_at(self, p: Point3) -> Scalar:
        return self.a * p.x + self.b * p.y + self.c * p.z + QQ(self.d)

    def is_vertical(self) -> bool:
        """True when the plane is parallel to the z-axis (cannot be solved for z)."""
        return self.c == 0

    def z_at(self, x: Scalar, y: Scalar) -> Scalar:
        """Height of the plane above (x, y); requires a non-vertical plane."""
        if self.c == 0:
            raise VerticalPlane("plane is parallel to the z-axis")
        return QQ(-(self.a * x + self.b * y + self.d), self.c)

    def to_json(self):
        return [self.a, self.b, self.c, self.d]


def orient3(p: Point3, q: Point3, r: Point3, s: Point3) -> int:
    """Sign of det[q-p; r-p; s-p]; +1 when s is on the positive side of (p,q,r)."""
    ax, ay, az = q.x - p.x, q.y - p.y, q.z - p.z
    bx, by, bz = r.x - p.x, r.y - p.y, r.z - p.z
    cx, cy, cz = s.x - p.x, s.y - p.y, s.z - p.z
    det = ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx)
    return sign(det)


def side_of_plane(h: Plane, p: Point3) -> int:
    return sign(h.eval_at(p))


def z_order_at(h1: Plane, h2: Plane, x: Rat, y: Rat) -> int:
    """Sign of z1(x, y) - z2(x, y) for two non-vertical planes."""
    if h1.c == 0 or h2.c == 0:
        raise VerticalPlane("z_order_at requires non-vertical planes")
    qx, qy = QQ(x), QQ(y)
    # z_i = -(a_i x + b_i y + d_i) / c_i; compare without dividing.
    lhs = -(h1.a * qx + h1.b * qy + h1.d) * h2.c
    rhs = -(h2.a * qx + h2.b * qy + h2.d) * h1.c
    return sign(lhs - rhs) * sign(h1.c) * sign(h2.c)
