"""
2x2 matrices over ℚ(λ_L) acting as Möbius transformations z ↦ (az + b)/(cz + d), and points of the
projective line on which they act.
"""
from dataclasses import dataclass
from typing import Iterable

from friezes.ring import FieldContext, RingElement, invert


@dataclass(frozen=True)
class Moebius:
    a: RingElement
    b: RingElement
    c: RingElement
    d: RingElement

    @classmethod
    def identity(cls, ctx: FieldContext) -> "Moebius":
        return cls(ctx.one, ctx.zero, ctx.zero, ctx.one)

    @property
    def context(self) -> FieldContext:
        return self.a.context

    def __matmul__(self, other: "Moebius") -> "Moebius":
        return Moebius(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                       self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)

    def det(self) -> RingElement:
        return self.a * self.d - self.b * self.c

    def apply(self, point: "ProjectivePoint") -> "ProjectivePoint":
        return ProjectivePoint(self.a * point.x + self.b * point.y, self.c * point.x + self.d * point.y)

    def is_minus_identity(self) -> bool:
        return self.b.is_zero() and self.c.is_zero() and self.a == -1 and self.d == -1


def product(matrices: Iterable[Moebius], ctx: FieldContext) -> Moebius:
    result = Moebius.identity(ctx)
    for matrix in matrices:
        result = result @ matrix
    return result


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """ the point [x : y] of the projective line; kept unnormalized, compared by cross-multiplication """
    x: RingElement
    y: RingElement

    def __post_init__(self):
        if self.x.is_zero() and self.y.is_zero():
            raise ValueError("[0 : 0] is not a projective point")

    @classmethod
    def infinity(cls, ctx: FieldContext) -> "ProjectivePoint":
        return cls(ctx.one, ctx.zero)

    @classmethod
    def finite(cls, value: RingElement) -> "ProjectivePoint":
        return cls(value, value.context.one)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.x * other.y == other.x * self.y

    def __hash__(self):
        return hash(self.value()) if self.is_finite() else hash("∞")

    def is_finite(self) -> bool:
        return not self.y.is_zero()

    def value(self) -> RingElement:
        """ x / y for a finite point """
        if not self.is_finite():
            raise ValueError("∞ has no finite value")
        return self.x * invert(self.y)

    def approximate(self) -> float:
        return self.value().approximate()

    def __repr__(self):
        return f"[{self.x!r} : {self.y!r}]"
