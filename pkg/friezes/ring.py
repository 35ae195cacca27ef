"""
Exact arithmetic in the real cyclotomic field ℚ(λ_L), λ_L = 2cos(π/L).

Elements are coefficient vectors in the power basis 1, λ_L, ..., λ_L^(d-1), kept fully
reduced modulo the minimal polynomial of λ_L, so equality is structural. Internally a
vector is stored as integer numerators over one positive common denominator.
"""
import math
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import mpmath
import sympy

from friezes import get_logger, settings
from friezes.errors import (ContextMismatchError, IncompatibleLevelError, InvalidLevelError, ParseError,
                            RingDivisionError)

logger = get_logger(__name__)

Rational = Union[int, Fraction]

_Y = sympy.Symbol("y")


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def chebyshev_polys(k: int) -> List[List[int]]:
    """
    The integer polynomials C_0, ..., C_k (coefficients from low to high degree) with
    C_0 = 2, C_1 = y, C_{j+1} = y C_j - C_{j-1}, so that x^j + x^-j = C_j(x + 1/x).
    """
    polys = [[2], [0, 1]]
    for _ in range(2, k + 1):
        prev, last = polys[-2], polys[-1]
        nxt = [0] + last
        for i, c in enumerate(prev):
            nxt[i] -= c
        polys.append(nxt)
    return polys[:k + 1]


def minimal_polynomial(level: int) -> Tuple[int, ...]:
    """
    The minimal polynomial of 2cos(π/L), low to high degree, obtained from the palindromic
    cyclotomic polynomial Φ_2L(x) = x^d Ψ(x + 1/x).
    """
    cyclo = sympy.cyclotomic_poly(2 * level, _Y, polys=True)
    a = [int(c) for c in reversed(cyclo.all_coeffs())]
    d = (len(a) - 1) // 2
    cheb = chebyshev_polys(d)
    psi = [0] * (d + 1)
    psi[0] = a[d]
    for k in range(1, d + 1):
        for i, c in enumerate(cheb[k]):
            psi[i] += a[d + k] * c
    return tuple(psi)


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    # sympy Rational / Integer
    return Fraction(int(value.p), int(value.q))


class FieldContext:
    """
    The field ℚ(λ_L). Contexts are immutable and compare by level; use context_create to obtain one.
    """

    __slots__ = ("level", "min_poly", "basis_degree")

    def __init__(self, level: int, min_poly: Sequence[int]):
        self.level = level
        self.min_poly = tuple(min_poly)
        self.basis_degree = len(self.min_poly) - 1

    def __eq__(self, other):
        if not isinstance(other, FieldContext):
            return NotImplemented
        return self.level == other.level

    def __hash__(self):
        return hash(("FieldContext", self.level))

    def __repr__(self):
        return f"FieldContext(L={self.level}, min_poly={self.min_poly_expr()})"

    def __reduce__(self):
        return context_create, (self.level,)

    def min_poly_expr(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.min_poly)), _Y)

    def element(self, coeffs: Iterable[Rational]) -> "RingElement":
        return RingElement(self, coeffs)

    def constant(self, value: Rational) -> "RingElement":
        value = _to_fraction(value)
        nums = [0] * self.basis_degree
        nums[0] = value.numerator
        return RingElement._make(self, nums, value.denominator)

    @property
    def zero(self) -> "RingElement":
        return self.constant(0)

    @property
    def one(self) -> "RingElement":
        return self.constant(1)

    @property
    def gen(self) -> "RingElement":
        """ λ_L itself; the constant 1 when L = 3 """
        return RingElement._from_poly(self, [0, 1], 1)

    def numeric_check(self, dps: int = 50) -> mpmath.mpf:
        """ |min_poly(2cos(π/L))| evaluated with mpmath at dps decimal digits """
        with mpmath.workdps(dps):
            y = 2 * mpmath.cos(mpmath.pi / self.level)
            return abs(mpmath.polyval(list(reversed(self.min_poly)), y))


@lru_cache(maxsize=None)
def context_create(level: int) -> FieldContext:
    if not isinstance(level, int) or isinstance(level, bool) or level < 3:
        raise InvalidLevelError(f"Level must be an integer L >= 3, but is {level}")
    min_poly = minimal_polynomial(level)
    logger.debug("Created field context L=%s with minimal polynomial %s", level, min_poly)
    return FieldContext(level, min_poly)


def common_level(*levels: int) -> int:
    return math.lcm(*levels)


def _reduce(coeffs: List[int], min_poly: Tuple[int, ...]) -> List[int]:
    """ Remainder modulo a monic integer polynomial, in place on an integer coefficient list. """
    d = len(min_poly) - 1
    for k in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[k]
        if c:
            base = k - d
            for i in range(d):
                coeffs[base + i] -= c * min_poly[i]
            coeffs[k] = 0
    del coeffs[d:]
    coeffs.extend([0] * (d - len(coeffs)))
    return coeffs


class RingElement:
    """
    An element c_0 + c_1 λ_L + ... + c_{d-1} λ_L^{d-1} of ℚ(λ_L).

    ints and Fractions are coerced into the context by the arithmetic operators.
    Order comparisons use the exact sign determination of the real embedding λ_L = 2cos(π/L).
    """

    __slots__ = ("context", "_nums", "_den")

    def __init__(self, context: FieldContext, coeffs: Iterable[Rational]):
        coeffs = [_to_fraction(c) for c in coeffs]
        if len(coeffs) != context.basis_degree:
            raise ValueError(f"Expected {context.basis_degree} coefficients for L={context.level}, "
                             f"but got {len(coeffs)}")
        den = math.lcm(*[c.denominator for c in coeffs]) if coeffs else 1
        nums = [c.numerator * (den // c.denominator) for c in coeffs]
        self.context = context
        self._nums, self._den = RingElement._normalize(nums, den)

    @staticmethod
    def _normalize(nums: List[int], den: int) -> Tuple[Tuple[int, ...], int]:
        g = math.gcd(den, *nums)
        if g != 1:
            nums = [n // g for n in nums]
            den //= g
        return tuple(nums), den

    @classmethod
    def _make(cls, context: FieldContext, nums: List[int], den: int) -> "RingElement":
        element = cls.__new__(cls)
        element.context = context
        element._nums, element._den = RingElement._normalize(nums, den)
        return element

    @classmethod
    def _from_poly(cls, context: FieldContext, nums: List[int], den: int) -> "RingElement":
        return cls._make(context, _reduce(list(nums), context.min_poly), den)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(n, self._den) for n in self._nums)

    @property
    def denominator(self) -> int:
        return self._den

    def _coerce(self, other) -> Optional["RingElement"]:
        if isinstance(other, RingElement):
            if other.context != self.context:
                raise ContextMismatchError(f"Cannot combine elements of levels {self.context.level} "
                                           f"and {other.context.level}; lift both to a common level first")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.context.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._den == other._den:
            return RingElement._make(self.context, [a + b for a, b in zip(self._nums, other._nums)], self._den)
        return RingElement._make(self.context,
                                 [a * other._den + b * self._den for a, b in zip(self._nums, other._nums)],
                                 self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        return RingElement._make(self.context, [-a for a in self._nums], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._nums, other._nums
        product = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    product[i + j] += x * y
        return RingElement._from_poly(self.context, product, self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result, base = self.context.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * invert(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * invert(self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = self.context.constant(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.context == other.context and self._den == other._den and self._nums == other._nums

    def __hash__(self):
        if self.is_rational():
            # consistent with int and Fraction hashes
            return hash(Fraction(self._nums[0], self._den))
        return hash((self.context.level, self._nums, self._den))

    def __lt__(self, other):
        return sign(self - other) is Sign.NEGATIVE

    def __le__(self, other):
        return sign(self - other) is not Sign.POSITIVE

    def __gt__(self, other):
        return sign(self - other) is Sign.POSITIVE

    def __ge__(self, other):
        return sign(self - other) is not Sign.NEGATIVE

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        coeffs = ", ".join(str(c) for c in self.coeffs)
        return f"RingElement(L={self.context.level}, [{coeffs}])"

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def is_rational_integer(self) -> bool:
        return self.is_rational() and self._den == 1

    def is_integral(self) -> bool:
        """ integer coordinates in the power basis, i.e. membership in ℤ[λ_L] """
        return self._den == 1

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._nums[0], self._den)

    def sign(self) -> Sign:
        return sign(self)

    def enclosure(self, precision: int) -> Tuple[Fraction, Fraction]:
        """ A rational interval of width about 2^-precision (times the coefficient size) containing the value. """
        lo, hi = _fixed_point_interval(self._nums, self.context.level, precision)
        scale = self._den << precision
        return Fraction(lo, scale), Fraction(hi, scale)

    def approximate(self, precision: int = 64) -> float:
        lo, hi = self.enclosure(precision)
        return float((lo + hi) / 2)

    def to_mpf(self, dps: int = 50) -> mpmath.mpf:
        with mpmath.workdps(dps):
            y = 2 * mpmath.cos(mpmath.pi / self.context.level)
            value = mpmath.polyval([mpmath.mpf(n) for n in reversed(self._nums)], y)
            return value / self._den

    def lift(self, target: FieldContext) -> "RingElement":
        """ The image under the field embedding ℚ(λ_L) → ℚ(λ_M) for L | M, via λ_L = C_{M/L}(λ_M). """
        if target == self.context:
            return self
        image = lambda_embed(target, self.context.level)
        result = target.zero
        for c in reversed(self.coeffs):
            result = result * image + c
        return result

    def to_dict(self) -> Dict:
        return {"L": self.context.level,
                "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data: Dict, context: FieldContext = None) -> "RingElement":
        if not isinstance(data, dict) or "L" not in data or "coeffs" not in data:
            raise ParseError(f"A ring element needs the keys 'L' and 'coeffs', but got {data!r}")
        level = data["L"]
        if not isinstance(level, int) or level < 3:
            raise ParseError(f"Ring element level must be an integer >= 3, but is {level!r}")
        own_context = context_create(level)
        coeffs = data["coeffs"]
        if not isinstance(coeffs, list) or len(coeffs) != own_context.basis_degree:
            raise ParseError(f"Ring element at L={level} needs {own_context.basis_degree} coefficients, "
                             f"but got {coeffs!r}")
        try:
            values = [Fraction(c) for c in coeffs]
        except (ValueError, TypeError, ZeroDivisionError) as e:
            raise ParseError(f"Cannot read coefficients {coeffs!r}: {e}") from e
        element = cls(own_context, values)
        if context is not None and context != own_context:
            if context.level % level != 0:
                raise ParseError(f"Ring element at L={level} does not embed into L={context.level}")
            element = element.lift(context)
        return element


@lru_cache(maxsize=None)
def lambda_embed(ctx: FieldContext, p: int) -> RingElement:
    """ λ_p = 2cos(π/p) as C_{L/p}(λ_L) in ℚ(λ_L) """
    if not isinstance(p, int) or p < 3 or ctx.level % p != 0:
        raise IncompatibleLevelError(f"λ_{p} is not in ℚ(λ_{ctx.level}); p must be >= 3 and divide {ctx.level}")
    k = ctx.level // p
    polys = chebyshev_polys(k)
    return RingElement._from_poly(ctx, polys[k], 1)


@lru_cache(maxsize=None)
def _lambda_enclosure(level: int, precision: int) -> Tuple[Fraction, Fraction]:
    ctx = context_create(level)
    if ctx.basis_degree == 1:
        root = Fraction(-ctx.min_poly[0])
        return root, root
    poly = ctx.min_poly_expr()
    # λ_L = 2cos(π/L) is the largest real root
    (a, b), _ = max(poly.intervals(), key=lambda entry: entry[0][1])
    a, b = poly.refine_root(a, b, eps=sympy.Rational(1, 2 ** precision))
    return _to_fraction(a), _to_fraction(b)


@lru_cache(maxsize=256)
def _power_bounds(level: int, precision: int) -> Tuple[Tuple[int, int], ...]:
    """ integer bounds floor(a^k 2^prec), ceil(b^k 2^prec) of the powers of the enclosure [a, b] of λ_L """
    a, b = _lambda_enclosure(level, precision)
    d = context_create(level).basis_degree
    scale = 1 << precision
    bounds = []
    pa, pb = Fraction(1), Fraction(1)
    for _ in range(d):
        bounds.append((math.floor(pa * scale), math.ceil(pb * scale)))
        pa, pb = pa * a, pb * b
    return tuple(bounds)


def _fixed_point_interval(nums: Sequence[int], level: int, precision: int) -> Tuple[int, int]:
    lo = hi = 0
    for n, (low, high) in zip(nums, _power_bounds(level, precision)):
        if n > 0:
            lo += n * low
            hi += n * high
        elif n < 0:
            lo += n * high
            hi += n * low
    return lo, hi


def sign(x: RingElement, precision_start: int = None) -> Sign:
    """
    Exact sign of x under the real embedding: zero by coefficient test, otherwise from a rational
    enclosure of λ_L whose precision doubles until the enclosure of x excludes 0.
    """
    if x.is_zero():
        return Sign.ZERO
    if x.is_rational():
        return Sign.POSITIVE if x._nums[0] > 0 else Sign.NEGATIVE
    precision = settings.precision_start if precision_start is None else precision_start
    while True:
        lo, hi = _fixed_point_interval(x._nums, x.context.level, precision)
        if lo > 0:
            return Sign.POSITIVE
        if hi < 0:
            return Sign.NEGATIVE
        logger.debug("Sign of %r undecided at %s bits, doubling", x, precision)
        precision *= 2


def invert(x: RingElement) -> RingElement:
    """ The field inverse by the extended Euclidean algorithm modulo the minimal polynomial. """
    if x.is_zero():
        raise RingDivisionError(f"Cannot invert zero in ℚ(λ_{x.context.level})")
    ctx = x.context
    if x.is_rational():
        return ctx.constant(1 / x.rational())
    f = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(x.coeffs)], _Y, domain=sympy.QQ)
    g = sympy.Poly(list(reversed(ctx.min_poly)), _Y, domain=sympy.QQ)
    inverse = [_to_fraction(c) for c in reversed(f.invert(g).all_coeffs())]
    inverse.extend([Fraction(0)] * (ctx.basis_degree - len(inverse)))
    return RingElement(ctx, inverse)


@lru_cache(maxsize=None)
def _lambda_inverse(ctx: FieldContext, p: int) -> RingElement:
    return invert(lambda_embed(ctx, p))


def integer_multiple_of_lambda(x: RingElement, p: int) -> Optional[int]:
    """ q if x = q λ_p for a positive integer q, otherwise None """
    quotient = x * _lambda_inverse(x.context, p)
    if quotient.is_rational_integer() and quotient._nums[0] > 0:
        return quotient._nums[0]
    return None
