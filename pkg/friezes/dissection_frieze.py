"""
From dissections to friezes and back.

Every cell P_i of a dissection D carries ℓ_{p_i}, the frieze of exact side-and-diagonal lengths of
the regular unit p_i-gon. Gluing these along the diagonals of D gives Φ(D); the diagonals of D are
exactly the non-neighbour pairs where Φ(D) takes the value 1.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from friezes import get_logger, settings
from friezes.errors import GlueSpecError, InternalDisagreementError, NotInImageError
from friezes.frieze import (Frieze, QuiddityRow, frieze_from_quiddity, frieze_type, quiddity_of,
                            validate_frieze)
from friezes.polygon import Cell, Diagonal, Dissection, Polygon, cells, incident_cells, is_p_angulation, interleaves
from friezes.ring import FieldContext, Sign, common_level, context_create, lambda_embed

logger = get_logger(__name__)


@lru_cache(maxsize=None)
def ell_p(ctx: FieldContext, p: int) -> Frieze:
    """ ℓ_p on the p-gon: the frieze with constant quiddity row λ_p """
    lambda_p = lambda_embed(ctx, p)
    return frieze_from_quiddity(QuiddityRow(ctx, (lambda_p,) * p))


@dataclass(frozen=True)
class GlueSpec:
    """
    Two friezes on subpolygons sharing the diagonal {ζ, η}.
    vertices1 and vertices2 label the vertices 0..k-1 of f1 and f2 in the glued polygon, ascending.
    """
    f1: Frieze
    f2: Frieze
    vertices1: Tuple[int, ...]
    vertices2: Tuple[int, ...]
    diagonal: Tuple[int, int]

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.vertices1) | set(self.vertices2)))

    def check(self):
        for f, vs in ((self.f1, self.vertices1), (self.f2, self.vertices2)):
            if len(vs) != f.n_vertices:
                raise GlueSpecError(f"{len(vs)} labels for a frieze on the {f.n_vertices}-gon")
            if list(vs) != sorted(set(vs)):
                raise GlueSpecError(f"Vertex labels {tuple(vs)} are not strictly ascending")
        zeta, eta = sorted(self.diagonal)
        shared = set(self.vertices1) & set(self.vertices2)
        if shared != {zeta, eta}:
            raise GlueSpecError(f"The subpolygons share {sorted(shared)}, not the diagonal {{{zeta},{eta}}}")
        inside1 = [zeta < v < eta for v in self.vertices1 if v not in shared]
        inside2 = [zeta < v < eta for v in self.vertices2 if v not in shared]
        if not inside1 or not inside2 or len(set(inside1)) != 1 or len(set(inside2)) != 1 \
                or inside1[0] == inside2[0]:
            raise GlueSpecError(f"The subpolygons do not lie on opposite sides of {{{zeta},{eta}}}")
        for f, vs in ((self.f1, self.vertices1), (self.f2, self.vertices2)):
            if f.value(vs.index(zeta), vs.index(eta)) != 1:
                raise GlueSpecError(f"{{{zeta},{eta}}} is an edge of both subpolygons, "
                                    f"but a frieze does not take the value 1 on it")


def glue(spec: GlueSpec, debug: bool = None) -> Frieze:
    """
    The unique frieze on the union restricting to f1 and f2: for α in U1 = V1 minus {ζ, η} and
    β in U2 = V2 minus {ζ, η}, f(α,β) = f1(ζ,α) f2(η,β) + f1(η,α) f2(ζ,β).
    The result is labelled by the positions in spec.vertices.
    """
    debug = settings.debug if debug is None else debug
    ctx = context_create(common_level(spec.f1.context.level, spec.f2.context.level))
    spec = GlueSpec(spec.f1.lift(ctx), spec.f2.lift(ctx), tuple(spec.vertices1), tuple(spec.vertices2),
                    spec.diagonal)
    spec.check()
    zeta, eta = spec.diagonal
    pos1 = {v: i for i, v in enumerate(spec.vertices1)}
    pos2 = {v: i for i, v in enumerate(spec.vertices2)}
    f1, f2 = spec.f1, spec.f2
    labels = spec.vertices

    def value(a: int, b: int):
        alpha, beta = labels[a], labels[b]
        if alpha in pos1 and beta in pos1:
            return f1.value(pos1[alpha], pos1[beta])
        if alpha in pos2 and beta in pos2:
            return f2.value(pos2[alpha], pos2[beta])
        if alpha in pos2:
            alpha, beta = beta, alpha
        return f1.value(pos1[zeta], pos1[alpha]) * f2.value(pos2[eta], pos2[beta]) \
            + f1.value(pos1[eta], pos1[alpha]) * f2.value(pos2[zeta], pos2[beta])

    glued = Frieze.from_function(ctx, len(labels), value)
    if debug:
        report = validate_frieze(glued)
        if not report.ok:
            raise InternalDisagreementError(f"Glued frieze is not a frieze: {report.message}")
    return glued


def _level_for(dissection: Dissection, context: Optional[FieldContext]) -> FieldContext:
    if context is not None:
        return context
    return context_create(common_level(*{cell.size for cell in cells(dissection)}))


def quiddity_from_dissection(dissection: Dissection, context: FieldContext = None) -> QuiddityRow:
    """ t_α = Σ λ_{p_i} over the cells P_i incident with α """
    ctx = _level_for(dissection, context)
    entries = []
    for alpha in dissection.polygon.vertices:
        entry = ctx.zero
        for cell in incident_cells(dissection, alpha):
            entry = entry + lambda_embed(ctx, cell.size)
        entries.append(entry)
    return QuiddityRow(ctx, tuple(entries))


def _shared_diagonal(cell: Cell, region: Sequence[int], diagonals) -> Optional[Diagonal]:
    shared = sorted(set(cell.vertices) & set(region))
    if len(shared) == 2 and Diagonal(*shared) in diagonals:
        return Diagonal(*shared)
    return None


def glue_cells(dissection: Dissection, context: FieldContext = None) -> Frieze:
    """
    Folds glue over the cells in canonical order, each time attaching the first remaining cell that
    shares a diagonal of D with the region glued so far.
    """
    ctx = _level_for(dissection, context)
    remaining = cells(dissection)
    first = remaining.pop(0)
    region, frieze = first.vertices, ell_p(ctx, first.size)
    diagonals = set(dissection.diagonals)
    while remaining:
        for idx, cell in enumerate(remaining):
            diagonal = _shared_diagonal(cell, region, diagonals)
            if diagonal is not None:
                break
        else:
            raise InternalDisagreementError(f"No cell of {dissection.to_dict()} is adjacent to {region}")
        remaining.pop(idx)
        spec = GlueSpec(frieze, ell_p(ctx, cell.size), tuple(region), cell.vertices, tuple(diagonal))
        frieze, region = glue(spec), spec.vertices
        logger.debug("Glued cell %s along %s", cell.vertices, tuple(diagonal))
    return frieze


def phi(dissection: Dissection, context: FieldContext = None) -> Frieze:
    """
    Φ(D), built by gluing the friezes ℓ_{p_i} of the cells and cross-checked against the frieze of
    the quiddity row Σ λ_{p_i}.

    :raises InternalDisagreementError: if the two constructions differ
    """
    ctx = _level_for(dissection, context)
    glued = glue_cells(dissection, ctx)
    recipe = frieze_from_quiddity(quiddity_from_dissection(dissection, ctx))
    if glued != recipe:
        raise InternalDisagreementError(f"Gluing and quiddity recurrence disagree on {dissection.to_dict()}")
    return glued


def _ones(f: Frieze) -> List[Diagonal]:
    return [Diagonal(a, b) for a, b in f.pairs() if not f.is_neighbour_pair(a, b) and f.value(a, b) == 1]


def _crossing(diagonals: List[Diagonal]) -> bool:
    return any(interleaves(d1, d2) for i, d1 in enumerate(diagonals) for d2 in diagonals[i + 1:])


def recover_dissection(f: Frieze) -> Dissection:
    """
    The diagonals {α, β} with f(α, β) = 1.

    :raises NotInImageError: when two of them cross
    """
    ones = _ones(f)
    if _crossing(ones):
        raise NotInImageError("The ones of the frieze contain crossing diagonals, so it is not Φ of a dissection",
                              ones=ones)
    return Dissection(Polygon(f.n_vertices), tuple(ones))


@dataclass(frozen=True)
class RecoveryReport:
    ones: Tuple[Diagonal, ...]
    dissection: Optional[Dissection]
    in_image: bool

    def to_dict(self) -> Dict:
        return {"in_image": self.in_image, "ones": [[d.a, d.b] for d in self.ones]}


def recovery_report(f: Frieze) -> RecoveryReport:
    """ in_image holds iff the ones do not cross and Φ of them equals f exactly """
    ones = _ones(f)
    if _crossing(ones):
        return RecoveryReport(tuple(ones), None, False)
    dissection = Dissection(Polygon(f.n_vertices), tuple(ones))
    image = phi(dissection)
    ctx = context_create(common_level(image.context.level, f.context.level))
    in_image = image.lift(ctx) == f.lift(ctx)
    if not in_image:
        logger.info("Ones of the frieze are non-crossing, but Φ of them differs from the frieze")
    return RecoveryReport(tuple(ones), dissection, in_image)


def integrality_check(f: Frieze) -> bool:
    """ every entry lies in ℤ[λ_L] """
    return all(x.is_integral() for row in f.table for x in row)


def ones_are_diagonals_check(f: Frieze, dissection: Dissection) -> bool:
    """ f(α, β) > 1 at every non-neighbour pair that is not a diagonal of D """
    diagonals = set(dissection.diagonals)
    return all((f.value(a, b) - 1).sign() is Sign.POSITIVE
               for a, b in f.pairs() if not f.is_neighbour_pair(a, b) and (a, b) not in diagonals)


def quiddity_sum_check(f: Frieze, dissection: Dissection) -> bool:
    """ f(α-1, α+1) = Σ λ_{p_i} over the cells incident with α """
    expected = quiddity_from_dissection(dissection)
    ctx = context_create(common_level(expected.context.level, f.context.level))
    return quiddity_of(f).lift(ctx) == expected.lift(ctx)


def p_angulation_from_frieze(f: Frieze, p: int) -> Dissection:
    """
    The p-angulation D with Φ(D) = f for a frieze of type Λ_p.

    :raises NotInImageError: when f is not of type Λ_p or not Φ of a p-angulation
    """
    if frieze_type(f, p) is None:
        raise NotInImageError(f"The frieze is not of type Λ_{p}")
    report = recovery_report(f)
    if not report.in_image:
        raise NotInImageError("The frieze is not Φ of any dissection", ones=list(report.ones))
    if not is_p_angulation(report.dissection, p):
        raise NotInImageError(f"The recovered dissection is not a {p}-angulation", ones=list(report.ones))
    return report.dissection


def p_angulation_from_quiddity(q_list: Sequence[int], p: int, context: FieldContext = None) -> Dissection:
    ctx = context if context is not None else context_create(p)
    return p_angulation_from_frieze(frieze_from_quiddity(QuiddityRow.from_integers(ctx, q_list, p)), p)
