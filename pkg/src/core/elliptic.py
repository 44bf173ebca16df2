"""
Elliptic curves y^2 = x^3 + Ax + B over F_q, characteristic >= 5.

Group law by the affine chord-tangent formulas, point enumeration through the
field's square-root table, vectorized point counting, torsion census,
supersingularity (p | trace of Frobenius), the explicit 2-isogeny
(x, y) -> (y^2/x^2, y(b - x^2)/x^2), the Frobenius map and curves of given j.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple, Union

import numpy as np
from sympy import factorint

from ..models.config import GROUP_BUDGET, POINT_BUDGET
from ..models.entities import GroupStructure
from ..utils.logging_utils import get_logger
from ..models.exceptions import (
    BadCharacteristic,
    BudgetExceeded,
    PointNotOnCurve,
    SingularCurve,
    SingularInput,
    SpecMismatch,
)
from .field import (
    FieldElement,
    FieldSpec,
    codes_of,
    coefficient_array,
    enumerate_field,
    frobenius,
    multiplication_matrix,
    parse_element,
    parse_field_spec,
    square_character,
    square_roots,
)

logger = get_logger(__name__)

Scalar = Union[FieldElement, int]


@dataclass(frozen=True)
class Affine:
    x: FieldElement
    y: FieldElement

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


@dataclass(frozen=True)
class Infinity:
    """The neutral element O_E."""

    def __str__(self) -> str:
        return "O"


INFINITY = Infinity()
ECPoint = Union[Affine, Infinity]


@dataclass(frozen=True)
class WeierstrassCurve:
    field: FieldSpec
    A: FieldElement
    B: FieldElement

    def rhs(self, x: FieldElement) -> FieldElement:
        return x * x * x + self.A * x + self.B

    def contains(self, point: ECPoint) -> bool:
        if isinstance(point, Infinity):
            return True
        if point.x.spec != self.field or point.y.spec != self.field:
            return False
        return point.y * point.y == self.rhs(point.x)

    def serialize(self) -> str:
        """`E[q=..;A=..;B=..]`, with the field's `mod=` whenever it is not the default modulus."""
        field = f"q={self.field.q}" if self.field.is_canonical() else self.field.serialize()
        return f"E[{field};A={self.A};B={self.B}]"

    def __str__(self) -> str:
        return self.serialize()


def _check_characteristic(field: FieldSpec) -> None:
    if field.p in (2, 3):
        raise BadCharacteristic(f"characteristic {field.p} is not supported (need p >= 5)")


def discriminant(field: FieldSpec, A: FieldElement, B: FieldElement) -> FieldElement:
    """4A^3 + 27B^2; zero exactly when the curve is singular."""
    return 4 * A * A * A + 27 * B * B


def curve_new(field: FieldSpec, A: Scalar, B: Scalar) -> WeierstrassCurve:
    """
    Smooth curve y^2 = x^3 + Ax + B.

    Raises:
        BadCharacteristic: for p in {2, 3}
        SingularCurve: if 4A^3 + 27B^2 = 0
    """
    _check_characteristic(field)
    A, B = field.element(A), field.element(B)
    if discriminant(field, A, B).is_zero():
        raise SingularCurve(f"y^2 = x^3 + ({A})x + ({B}) is singular over {field.describe()}")
    return WeierstrassCurve(field=field, A=A, B=B)


def parse_curve(text: str) -> WeierstrassCurve:
    """Parse `E[q=...;A=...;B=...]`; a `mod=` entry pins a non-canonical modulus."""
    body = text.strip()
    if body.startswith("E[") and body.endswith("]"):
        body = body[2:-1]
    parts = {}
    for chunk in body.split(";"):
        key, sep, value = chunk.partition("=")
        if not sep:
            raise SpecMismatch(f"malformed curve entry {chunk!r}")
        parts[key.strip()] = value.strip()
    missing = [k for k in ("q", "A", "B") if k not in parts]
    if missing:
        raise SpecMismatch(f"curve spec missing {missing}")
    if "mod" in parts:
        field = parse_field_spec(f"q={parts['q']};mod={parts['mod']}")
    else:
        field = parse_field_spec(parts["q"])
    return curve_new(field, parse_element(field, parts["A"]), parse_element(field, parts["B"]))


def j_invariant(curve: WeierstrassCurve) -> FieldElement:
    four_a3 = 4 * curve.A * curve.A * curve.A
    return 1728 * four_a3 / (four_a3 + 27 * curve.B * curve.B)


def _require_on_curve(curve: WeierstrassCurve, *points: ECPoint) -> None:
    for point in points:
        if not curve.contains(point):
            raise PointNotOnCurve(f"{point} is not on {curve}")


def _neg(point: ECPoint) -> ECPoint:
    if isinstance(point, Infinity):
        return point
    return Affine(point.x, -point.y)


def _add(curve: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    if isinstance(P, Infinity):
        return Q
    if isinstance(Q, Infinity):
        return P
    if P.x == Q.x:
        if P.y != Q.y or P.y.is_zero():
            # vertical chord or vertical tangent
            return INFINITY
        slope = (3 * P.x * P.x + curve.A) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x3 = slope * slope - P.x - Q.x
    y3 = slope * (P.x - x3) - P.y
    return Affine(x3, y3)


def _mul(curve: WeierstrassCurve, n: int, P: ECPoint) -> ECPoint:
    if n < 0:
        return _mul(curve, -n, _neg(P))
    result: ECPoint = INFINITY
    addend = P
    while n:
        if n & 1:
            result = _add(curve, result, addend)
        addend = _add(curve, addend, addend)
        n >>= 1
    return result


def add(curve: WeierstrassCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    """Chord-tangent sum of two points of the curve."""
    _require_on_curve(curve, P, Q)
    return _add(curve, P, Q)


def neg(curve: WeierstrassCurve, P: ECPoint) -> ECPoint:
    _require_on_curve(curve, P)
    return _neg(P)


def scalar_mul(curve: WeierstrassCurve, n: int, P: ECPoint) -> ECPoint:
    """[n]P by double-and-add."""
    _require_on_curve(curve, P)
    return _mul(curve, n, P)


def enumerate_points(curve: WeierstrassCurve, budget: int = POINT_BUDGET) -> List[ECPoint]:
    """
    O_E followed by the affine points, ordered by x then y in field enumeration order.

    Raises:
        BudgetExceeded: if q exceeds the budget
    """
    if curve.field.q > budget:
        raise BudgetExceeded("point enumeration", curve.field.q, budget)
    roots = square_roots(curve.field)
    points: List[ECPoint] = [INFINITY]
    for x in enumerate_field(curve.field, budget=budget):
        for y in roots.get(curve.rhs(x).to_int(), ()):
            points.append(Affine(x, y))
    return points


def affine_points(curve: WeierstrassCurve, budget: int = POINT_BUDGET) -> List[Affine]:
    return [P for P in enumerate_points(curve, budget) if isinstance(P, Affine)]


@lru_cache(maxsize=64)
def _cube_array(field: FieldSpec) -> np.ndarray:
    cubes = np.array([(x * x * x).coeffs for x in enumerate_field(field)], dtype=np.int64)
    cubes.setflags(write=False)
    return cubes


def count_points(curve: WeierstrassCurve, budget: int = POINT_BUDGET) -> int:
    """#E(F_q) = q + 1 + sum over x of chi(x^3 + Ax + B), without listing points."""
    field = curve.field
    if field.q > budget:
        raise BudgetExceeded("point counting", field.q, budget)
    xs = coefficient_array(field)
    rhs = _cube_array(field) + xs @ multiplication_matrix(curve.A).T + np.array(curve.B.coeffs)
    chi = square_character(field)
    return field.q + 1 + int(chi[codes_of(field, rhs)].sum())


def frobenius_trace(curve: WeierstrassCurve, budget: int = POINT_BUDGET) -> int:
    return curve.field.q + 1 - count_points(curve, budget)


def is_supersingular(curve: WeierstrassCurve, budget: int = POINT_BUDGET) -> bool:
    """p divides the trace of Frobenius (equivalent to E[p] = 0 for p >= 5)."""
    return frobenius_trace(curve, budget) % curve.field.p == 0


def point_order(curve: WeierstrassCurve, P: ECPoint, group_order: int) -> int:
    """Order of P, given any multiple of it (usually #E(F_q))."""
    order = group_order
    for prime in factorint(group_order):
        while order % prime == 0 and isinstance(_mul(curve, order // prime, P), Infinity):
            order //= prime
    return order


def group_structure(curve: WeierstrassCurve, budget: int = GROUP_BUDGET) -> GroupStructure:
    """
    (n1, n2) with E(F_q) isomorphic to Z/n1 x Z/n2 and n1 | n2.

    n2 is the exponent of the group, i.e. the largest element order.
    """
    if curve.field.q > budget:
        raise BudgetExceeded("group structure", curve.field.q, budget)
    points = enumerate_points(curve, budget)
    N = len(points)
    exponent = 1
    for P in points:
        exponent = max(exponent, point_order(curve, P, N))
        if exponent == N:
            break
    logger.debug(f"{curve}: N={N}, exponent={exponent}")
    return GroupStructure(n1=N // exponent, n2=exponent)


def m_torsion_count(curve: WeierstrassCurve, m: int, budget: int = GROUP_BUDGET) -> int:
    """#{P in E(F_q) : [m]P = O}."""
    if curve.field.q > budget:
        raise BudgetExceeded("torsion census", curve.field.q, budget)
    return sum(1 for P in enumerate_points(curve, budget) if isinstance(_mul(curve, m, P), Infinity))


def lift_curve(curve: WeierstrassCurve, extension: FieldSpec) -> WeierstrassCurve:
    """The same prime-field curve viewed over an extension F_{p^k}."""
    if curve.field.m != 1 or extension.p != curve.field.p:
        raise SpecMismatch(f"cannot lift {curve} to {extension.describe()}")
    return curve_new(extension, curve.A.coeffs[0], curve.B.coeffs[0])


def frobenius_curve(curve: WeierstrassCurve) -> WeierstrassCurve:
    """E^(p): y^2 = x^3 + A^p x + B^p."""
    return WeierstrassCurve(field=curve.field, A=frobenius(curve.A), B=frobenius(curve.B))


def frobenius_map(curve: WeierstrassCurve, P: ECPoint) -> ECPoint:
    """(x, y) -> (x^p, y^p), a point of frobenius_curve(curve)."""
    _require_on_curve(curve, P)
    if isinstance(P, Infinity):
        return P
    return Affine(frobenius(P.x), frobenius(P.y))


def short_weierstrass(
    field: FieldSpec, a1: Scalar, a2: Scalar, a3: Scalar, a4: Scalar, a6: Scalar
) -> WeierstrassCurve:
    """y^2 = x^3 - 27 c4 x - 54 c6, isomorphic to the general Weierstrass curve (p >= 5)."""
    _check_characteristic(field)
    a1, a2, a3, a4, a6 = (field.element(a) for a in (a1, a2, a3, a4, a6))
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2 * b2 * b2) + 36 * b2 * b4 - 216 * b6
    return curve_new(field, -27 * c4, -54 * c6)


def curve_from_j(field: FieldSpec, j0: Scalar) -> WeierstrassCurve:
    """
    A curve with j-invariant j0.

    j0 = 0 gives y^2 = x^3 + 1 and j0 = 1728 gives y^2 = x^3 + x; otherwise
    y^2 + xy = x^3 - 36/(j0 - 1728) x - 1/(j0 - 1728) brought to short form.
    """
    _check_characteristic(field)
    j0 = field.element(j0)
    if j0.is_zero():
        return curve_new(field, 0, 1)
    shifted = j0 - 1728
    if shifted.is_zero():
        return curve_new(field, 1, 0)
    inv = shifted.inv()
    return short_weierstrass(field, 1, 0, 0, -36 * inv, -inv)


@dataclass(frozen=True)
class TwoIsogeny:
    """
    y^2 = x^3 + ax^2 + bx  ->  y^2 = x^3 - 2ax^2 + (a^2 - 4b)x,
    (x, y) -> (y^2/x^2, y(b - x^2)/x^2), kernel {O, (0, 0)}.
    """
    field: FieldSpec
    a: FieldElement
    b: FieldElement

    def source_rhs(self, x: FieldElement) -> FieldElement:
        return x * x * x + self.a * x * x + self.b * x

    def target_rhs(self, x: FieldElement) -> FieldElement:
        return x * x * x - 2 * self.a * x * x + (self.a * self.a - 4 * self.b) * x

    def on_source(self, P: ECPoint) -> bool:
        return isinstance(P, Infinity) or P.y * P.y == self.source_rhs(P.x)

    def on_target(self, P: ECPoint) -> bool:
        return isinstance(P, Infinity) or P.y * P.y == self.target_rhs(P.x)

    def kernel(self) -> Tuple[ECPoint, ECPoint]:
        return INFINITY, Affine(self.field.zero(), self.field.zero())

    def apply(self, P: ECPoint) -> ECPoint:
        if not self.on_source(P):
            raise PointNotOnCurve(f"{P} is not on the source curve")
        if isinstance(P, Infinity) or P.x.is_zero():
            return INFINITY
        x_sq = P.x * P.x
        return Affine(P.y * P.y / x_sq, P.y * (self.b - x_sq) / x_sq)

    def source_points(self, budget: int = POINT_BUDGET) -> List[ECPoint]:
        roots = square_roots(self.field)
        points: List[ECPoint] = [INFINITY]
        for x in enumerate_field(self.field, budget=budget):
            for y in roots.get(self.source_rhs(x).to_int(), ()):
                points.append(Affine(x, y))
        return points


def two_isogeny(field: FieldSpec, a: Scalar, b: Scalar) -> TwoIsogeny:
    """
    Raises:
        BadCharacteristic: for p in {2, 3}
        SingularInput: if b = 0 or a^2 = 4b
    """
    _check_characteristic(field)
    a, b = field.element(a), field.element(b)
    if b.is_zero() or (a * a - 4 * b).is_zero():
        raise SingularInput(f"2-isogeny needs b != 0 and a^2 != 4b, got a={a}, b={b}")
    return TwoIsogeny(field=field, a=a, b=b)


def all_curves(field: FieldSpec) -> List[WeierstrassCurve]:
    """Every smooth short Weierstrass curve over the field, (A, B) in enumeration order."""
    _check_characteristic(field)
    elements = enumerate_field(field)
    curves = []
    for A in elements:
        for B in elements:
            if not discriminant(field, A, B).is_zero():
                curves.append(WeierstrassCurve(field=field, A=A, B=B))
    return curves
