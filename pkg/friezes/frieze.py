"""
Friezes on polygons and their frieze patterns.

A frieze f on the N-gon is stored as the triangle f(α, β), 0 <= α <= β <= N-1; the frieze pattern
F is the view F(i, j) with 0 <= j - i <= N, tiled from the triangle by the glide reflection
(i, j) ↦ (j, i + N).
"""
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from friezes import get_logger, settings
from friezes.errors import (ContextMismatchError, InternalDisagreementError, InvalidQuiddityError, NotAFriezeError,
                            OutOfStripError, ParseError, PositivityError)
from friezes.moebius import Moebius, product
from friezes.ring import FieldContext, RingElement, Sign, context_create, integer_multiple_of_lambda, lambda_embed

logger = get_logger(__name__)


@dataclass(frozen=True)
class QuiddityRow:
    """ t_0, ..., t_{N-1} with t_α = f(α-1, α+1) """
    context: FieldContext
    entries: Tuple[RingElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) < 3:
            raise InvalidQuiddityError(f"A quiddity row has at least 3 entries, but got {len(self.entries)}")
        for entry in self.entries:
            if entry.context != self.context:
                raise ContextMismatchError(f"Quiddity entry of level {entry.context.level} "
                                           f"in a row of level {self.context.level}")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, idx: int) -> RingElement:
        return self.entries[idx % len(self.entries)]

    @classmethod
    def from_integers(cls, ctx: FieldContext, q_list: Sequence[int], p: int) -> "QuiddityRow":
        """ the row (q_0 λ_p, ..., q_{N-1} λ_p) """
        lambda_p = lambda_embed(ctx, p)
        return cls(ctx, tuple(lambda_p * q for q in q_list))

    def lift(self, ctx: FieldContext) -> "QuiddityRow":
        return QuiddityRow(ctx, tuple(t.lift(ctx) for t in self.entries))

    def to_dict(self) -> Dict:
        return {"L": self.context.level, "entries": [t.to_dict() for t in self.entries]}

    @classmethod
    def from_dict(cls, data: Dict) -> "QuiddityRow":
        if not isinstance(data, dict) or not isinstance(data.get("L"), int) or not isinstance(data.get("entries"), list):
            raise ParseError(f"A quiddity file needs an integer 'L' and a list 'entries', but got {data!r}")
        if data["L"] < 3:
            raise ParseError(f"Level must be >= 3, but is {data['L']}")
        ctx = context_create(data["L"])
        try:
            return cls(ctx, tuple(RingElement.from_dict(e, ctx) for e in data["entries"]))
        except InvalidQuiddityError as e:
            raise ParseError(str(e)) from e


class Frieze:
    """
    A symmetric function on vertex pairs of the N-gon, stored as the triangle α <= β.
    The constructor checks the shape of the table only; validate_frieze checks the axioms.
    """

    def __init__(self, context: FieldContext, n_vertices: int, table: Iterable[Iterable[RingElement]]):
        self.context = context
        self.n_vertices = n_vertices
        self.table = tuple(tuple(row) for row in table)
        if len(self.table) != n_vertices or any(len(row) != n_vertices - a for a, row in enumerate(self.table)):
            raise ValueError(f"A frieze table on the {n_vertices}-gon has rows of lengths {n_vertices}..1")

    @classmethod
    def from_function(cls, context: FieldContext, n_vertices: int,
                      value: Callable[[int, int], RingElement]) -> "Frieze":
        return cls(context, n_vertices, [[value(a, b) for b in range(a, n_vertices)] for a in range(n_vertices)])

    def value(self, alpha: int, beta: int) -> RingElement:
        """ f(α, β) with indices taken modulo N """
        alpha, beta = alpha % self.n_vertices, beta % self.n_vertices
        if alpha > beta:
            alpha, beta = beta, alpha
        return self.table[alpha][beta - alpha]

    def __eq__(self, other):
        if not isinstance(other, Frieze):
            return NotImplemented
        return self.n_vertices == other.n_vertices and self.context == other.context and self.table == other.table

    def __hash__(self):
        return hash((self.n_vertices, self.table))

    def __repr__(self):
        return f"Frieze(N={self.n_vertices}, L={self.context.level})"

    def pairs(self) -> Iterable[Tuple[int, int]]:
        return itertools.combinations(range(self.n_vertices), 2)

    def is_neighbour_pair(self, alpha: int, beta: int) -> bool:
        return (beta - alpha) % self.n_vertices in (1, self.n_vertices - 1)

    def lift(self, ctx: FieldContext) -> "Frieze":
        if ctx == self.context:
            return self
        return Frieze(ctx, self.n_vertices, [[x.lift(ctx) for x in row] for row in self.table])

    def restrict(self, vertices: Sequence[int]) -> "Frieze":
        """ the frieze on the subpolygon with the given vertices, relabelled 0..k-1 in cyclic order """
        vertices = sorted(vertices)
        return Frieze.from_function(self.context, len(vertices), lambda a, b: self.value(vertices[a], vertices[b]))

    def to_dict(self) -> Dict:
        return {"n_vertices": self.n_vertices, "L": self.context.level,
                "table": [[x.to_dict() for x in row] for row in self.table]}

    @classmethod
    def from_dict(cls, data: Dict) -> "Frieze":
        if not isinstance(data, dict) or not all(k in data for k in ("n_vertices", "L", "table")):
            raise ParseError("A frieze file needs the keys 'n_vertices', 'L' and 'table'")
        n, level, table = data["n_vertices"], data["L"], data["table"]
        if not isinstance(n, int) or n < 3 or not isinstance(level, int) or level < 3:
            raise ParseError(f"Invalid frieze header n_vertices={n!r}, L={level!r}")
        if not isinstance(table, list) or len(table) != n \
                or any(not isinstance(row, list) or len(row) != n - a for a, row in enumerate(table)):
            raise ParseError(f"The table of a frieze on the {n}-gon needs rows of lengths {n}..1")
        ctx = context_create(level)
        return cls(ctx, n, [[RingElement.from_dict(x, ctx) for x in row] for row in table])


def _continuant_row(quiddity: QuiddityRow, base: int, stop: int) -> List[RingElement]:
    """ f(base, base), ..., f(base, stop) from f(α, β+1) = t_β f(α, β) - f(α, β-1) """
    ctx = quiddity.context
    row = [ctx.zero, ctx.one]
    for beta in range(base + 1, stop):
        row.append(quiddity[beta] * row[-1] - row[-2])
    return row[:stop - base + 1]


def matrix_word(quiddity: QuiddityRow) -> Moebius:
    """ X_0 ⋯ X_{N-1} with X_α = [[t_α, -1], [1, 0]] """
    ctx = quiddity.context
    return product((Moebius(t, -ctx.one, ctx.one, ctx.zero) for t in quiddity.entries), ctx)


def frieze_from_quiddity(quiddity: QuiddityRow, debug: bool = None) -> Frieze:
    """
    The frieze with the given quiddity row.

    :raises NotAFriezeError: when the matrix word is not -I, so the recurrence does not close up
    :raises PositivityError: when it closes up but an entry f(α, β) at non-neighbours is not positive
    """
    debug = settings.debug if debug is None else debug
    n = len(quiddity)
    if not matrix_word(quiddity).is_minus_identity():
        raise NotAFriezeError(f"The recurrence of the quiddity row {_short(quiddity)} does not close up: "
                              f"the matrix word is not -I")
    table = [_continuant_row(quiddity, alpha, n - 1) for alpha in range(n)]
    frieze = Frieze(quiddity.context, n, table)
    for alpha, beta in frieze.pairs():
        if not frieze.is_neighbour_pair(alpha, beta) and frieze.value(alpha, beta).sign() is not Sign.POSITIVE:
            raise PositivityError(f"f({alpha},{beta}) of the quiddity row {_short(quiddity)} is not positive")
    if debug:
        _check_wrap(frieze, quiddity)
    return frieze


def _check_wrap(frieze: Frieze, quiddity: QuiddityRow):
    n = frieze.n_vertices
    for alpha in range(n):
        row = _continuant_row(quiddity, alpha, alpha + n)
        if row[n - 1] != 1 or not row[n].is_zero():
            raise InternalDisagreementError(f"Recurrence from base {alpha} does not close up")
        for offset, x in enumerate(row[:n]):
            if x != frieze.value(alpha, alpha + offset):
                raise InternalDisagreementError(f"Recurrence from base {alpha} disagrees at "
                                                f"f({alpha},{(alpha + offset) % n})")
    logger.debug("Recomputed all %s rows of the frieze across the wrap", n)


def _short(quiddity: QuiddityRow) -> str:
    return "(" + ", ".join(format_element(t) for t in quiddity.entries) + ")"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    condition: Optional[str] = None
    witness: Tuple[int, ...] = field(default=())
    message: str = ""

    def to_dict(self) -> Dict:
        return {"ok": self.ok, "condition": self.condition, "witness": list(self.witness), "message": self.message}


CONDITION_ZERO = "zero diagonal"
CONDITION_EDGE = "edge ones"
CONDITION_POSITIVITY = "positivity"
CONDITION_PTOLEMY = "ptolemy"


def validate_frieze(f: Frieze) -> ValidationReport:
    """
    Checks f(α, α) = 0, f(α, α+1) = 1, positivity at non-neighbours and the Ptolemy relation
    f(a,c) f(b,d) = f(a,b) f(c,d) + f(a,d) f(b,c) for every crossing pair {a,c}, {b,d}, a < b < c < d.
    Symmetry holds by storage. Reports the first violation.
    """
    n = f.n_vertices
    for alpha in range(n):
        if not f.value(alpha, alpha).is_zero():
            return _violation(CONDITION_ZERO, (alpha,), f"f({alpha},{alpha}) is not 0")
    for alpha in range(n):
        if f.value(alpha, alpha + 1) != 1:
            return _violation(CONDITION_EDGE, (alpha, (alpha + 1) % n), f"f({alpha},{(alpha + 1) % n}) is not 1")
    for alpha, beta in f.pairs():
        if not f.is_neighbour_pair(alpha, beta) and f.value(alpha, beta).sign() is not Sign.POSITIVE:
            return _violation(CONDITION_POSITIVITY, (alpha, beta), f"f({alpha},{beta}) is not positive")
    for a, b, c, d in itertools.combinations(range(n), 4):
        lhs = f.value(a, c) * f.value(b, d)
        rhs = f.value(a, b) * f.value(c, d) + f.value(a, d) * f.value(b, c)
        if lhs != rhs:
            return _violation(CONDITION_PTOLEMY, (a, b, c, d),
                              f"Ptolemy relation fails for the crossing diagonals {{{a},{c}}} and {{{b},{d}}}")
    return ValidationReport(ok=True)


def _violation(condition: str, witness: Tuple[int, ...], message: str) -> ValidationReport:
    logger.warning("Frieze validation failed: %s", message)
    return ValidationReport(ok=False, condition=condition, witness=witness, message=message)


def quiddity_of(f: Frieze) -> QuiddityRow:
    return QuiddityRow(f.context, tuple(f.value(alpha - 1, alpha + 1) for alpha in range(f.n_vertices)))


def pattern_entry(f: Frieze, i: int, j: int) -> RingElement:
    """
    F(i, j) for 0 <= j - i <= N. Translation by N (the glide reflection applied twice) moves i into
    0..N-1, and the inverse glide reflection (i, j) ↦ (j - N, i) moves j back into the stored triangle.
    """
    n = f.n_vertices
    if not 0 <= j - i <= n:
        raise OutOfStripError(f"({i},{j}) is outside the strip 0 <= j - i <= {n}")
    shift = (i // n) * n
    i, j = i - shift, j - shift
    if j > n - 1:
        i, j = j - n, i
    return f.value(i, j)


def diamond_rule_check(f: Frieze, periods: int = 1) -> bool:
    """ F(i,j) F(i+1,j+1) - F(i,j+1) F(i+1,j) = 1 for all diamonds over the given number of periods """
    n = f.n_vertices
    for i in range(periods * n):
        for width in range(1, n):
            j = i + width
            determinant = pattern_entry(f, i, j) * pattern_entry(f, i + 1, j + 1) \
                - pattern_entry(f, i, j + 1) * pattern_entry(f, i + 1, j)
            if determinant != 1:
                logger.warning("Diamond rule fails at (%s,%s)", i, j)
                return False
    return True


def matrix_word_check(f: Frieze) -> bool:
    return matrix_word(quiddity_of(f)).is_minus_identity()


def frieze_type(f: Frieze, p: int) -> Optional[Tuple[int, ...]]:
    """ (q_0, ..., q_{N-1}) when every quiddity entry is q_α λ_p for a positive integer q_α """
    quotients = []
    for t in quiddity_of(f).entries:
        q = integer_multiple_of_lambda(t, p)
        if q is None:
            return None
        quotients.append(q)
    return tuple(quotients)


def is_conway_coxeter(f: Frieze) -> bool:
    """ a positive integer quiddity row, which makes every entry a rational integer """
    return all(t.is_rational_integer() for t in quiddity_of(f).entries) \
        and all(f.value(a, b).is_rational_integer() for a, b in f.pairs())


@lru_cache(maxsize=None)
def _quadratic_shape(level: int) -> Tuple[Fraction, int, int]:
    """ (c1, k, m) with min_poly y^2 + c1 y + c0 and discriminant k^2 m, m squarefree """
    c0, c1, _ = context_create(level).min_poly
    discriminant = c1 * c1 - 4 * c0
    k, m = 1, 1
    for prime, exponent in sympy.factorint(discriminant).items():
        k *= prime ** (exponent // 2)
        m *= prime ** (exponent % 2)
    return Fraction(c1), k, m


def _rational_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _surd_str(coefficient: Fraction, m: int) -> str:
    """ |coefficient|·√m """
    num, den = abs(coefficient.numerator), coefficient.denominator
    text = ("" if num == 1 else str(num)) + f"√{m}"
    return text if den == 1 else f"{text}/{den}"


def format_element(x: RingElement) -> str:
    """
    Exact symbolic form: a rational, q√m or a+b√m in a quadratic field, the coefficient vector otherwise.
    """
    ctx = x.context
    if x.is_rational():
        return _rational_str(x.rational())
    if ctx.basis_degree != 2:
        return "[" + ",".join(_rational_str(c) for c in x.coeffs) + "]"
    a, b = x.coeffs
    c1, k, m = _quadratic_shape(ctx.level)
    # λ = (-c1 + k√m) / 2
    rational_part = a - b * c1 / 2
    surd = b * k / 2
    if rational_part == 0:
        return ("-" if surd < 0 else "") + _surd_str(surd, m)
    return _rational_str(rational_part) + ("-" if surd < 0 else "+") + _surd_str(surd, m)


def render_pattern_text(f: Frieze, periods: int = 1) -> str:
    """
    The rows N down to 0 of the frieze pattern with a half-cell offset between adjacent rows.
    Row r holds F(i, i + r) at half-cell position 2i + r.
    """
    if periods < 1:
        raise ValueError(f"periods must be >= 1, but is {periods}")
    n = f.n_vertices
    count = periods * n
    rows = [[format_element(pattern_entry(f, i, i + r)) for i in range(count)] for r in range(n, -1, -1)]
    width = max(len(s) for row in rows for s in row) + 2
    half = (width + 1) // 2
    lines = []
    for r, row in zip(range(n, -1, -1), rows):
        line = ""
        for i, text in enumerate(row):
            line = line.ljust((2 * i + r) * half) + text
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"
