"""
The Farey graph picture of a frieze of type Λ_p.

With ξ_α(z) = q_α λ_p - 1/z = τ_p^{q_α} σ(z), the points υ_0 = ∞ and υ_α = ξ_0 ⋯ ξ_{α-1}(∞) walk along
edges of the Farey graph of the Hecke group generated by σ(z) = -1/z and τ_p(z) = z + λ_p, and close up
exactly when the q_α λ_p form a frieze quiddity row.
"""
from dataclasses import dataclass, fields, replace
from typing import Dict, List, Sequence, Tuple

import numpy as np

from friezes import get_logger
from friezes.errors import InvalidQuiddityError
from friezes.file_utils import load_resource_json
from friezes.frieze import QuiddityRow, frieze_from_quiddity
from friezes.moebius import Moebius, ProjectivePoint, product
from friezes.polygon import incident_cells
from friezes.dissection_frieze import recover_dissection
from friezes.ring import FieldContext, lambda_embed

logger = get_logger(__name__)


def sigma_matrix(ctx: FieldContext) -> Moebius:
    """ z ↦ -1/z """
    return Moebius(ctx.zero, -ctx.one, ctx.one, ctx.zero)


def tau_matrix(ctx: FieldContext, p: int) -> Moebius:
    """ z ↦ z + λ_p """
    return Moebius(ctx.one, lambda_embed(ctx, p), ctx.zero, ctx.one)


def xi_matrix(ctx: FieldContext, q: int, p: int) -> Moebius:
    """ [[q λ_p, -1], [1, 0]] """
    if not isinstance(q, int) or q <= 0:
        raise InvalidQuiddityError(f"The entries q_α must be positive integers, but got {q!r}")
    return Moebius(lambda_embed(ctx, p) * q, -ctx.one, ctx.one, ctx.zero)


def _prefix_products(ctx: FieldContext, q_list: Sequence[int], p: int) -> List[Moebius]:
    """ ξ_0 ⋯ ξ_{α-1} for α = 0, ..., N """
    prefixes = [Moebius.identity(ctx)]
    for q in q_list:
        prefixes.append(prefixes[-1] @ xi_matrix(ctx, q, p))
    return prefixes


def walk_vertices(ctx: FieldContext, q_list: Sequence[int], p: int) -> List[ProjectivePoint]:
    """ υ_0 = ∞, υ_α = ξ_0 ⋯ ξ_{α-1}(∞) for α < N """
    infinity = ProjectivePoint.infinity(ctx)
    return [prefix.apply(infinity) for prefix in _prefix_products(ctx, q_list, p)[:len(q_list)]]


def closed_path_check(ctx: FieldContext, q_list: Sequence[int], p: int) -> bool:
    """ true iff ξ_0 ⋯ ξ_{N-1} = -I exactly; +I is not accepted """
    return product((xi_matrix(ctx, q, p) for q in q_list), ctx).is_minus_identity()


def path_edges(ctx: FieldContext, q_list: Sequence[int], p: int) -> List[Tuple[Moebius, ProjectivePoint, ProjectivePoint]]:
    """
    For α = 1, ..., N the word M = ξ_0 ⋯ ξ_{α-1} with M(0) = υ_{α-1} and M(∞) = υ_α (υ_N = υ_0 on a
    closed path), so every step of the walk is the image of the edge from 0 to ∞.
    """
    zero, infinity = ProjectivePoint.finite(ctx.zero), ProjectivePoint.infinity(ctx)
    return [(prefix, prefix.apply(zero), prefix.apply(infinity))
            for prefix in _prefix_products(ctx, q_list, p)[1:]]


def turn_count_check(ctx: FieldContext, q_list: Sequence[int], p: int) -> bool:
    """ q_α equals the number of cells at α of the p-angulation recovered from the frieze of (q_α λ_p) """
    frieze = frieze_from_quiddity(QuiddityRow.from_integers(ctx, q_list, p))
    dissection = recover_dissection(frieze)
    counts = [len(incident_cells(dissection, alpha)) for alpha in range(len(q_list))]
    if counts != list(q_list):
        logger.warning("Turn counts %s differ from q = %s", counts, list(q_list))
        return False
    return True


@dataclass(frozen=True)
class RenderOptions:
    width: float
    margin: float
    ray_height: float
    background: str
    axis_color: str
    axis_width: float
    geodesic_color: str
    geodesic_width: float
    path_color: str
    path_width: float
    vertex_radius: float
    labels: bool
    font_size: float

    @classmethod
    def from_dict(cls, data: Dict) -> "RenderOptions":
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in names})

    @classmethod
    def defaults(cls) -> "RenderOptions":
        return cls.from_dict(load_resource_json("render_defaults.json"))

    def override(self, **changes) -> "RenderOptions":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


SVG_HEADER = '''<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.6f}" height="{height:.6f}" viewBox="0 0 {width:.6f} {height:.6f}">
<rect x="0" y="0" width="{width:.6f}" height="{height:.6f}" fill="{background}"/>
'''

SVG_AXIS = '''<line class="axis" x1="0" y1="{y:.6f}" x2="{width:.6f}" y2="{y:.6f}" stroke="{color}" stroke-width="{stroke:.6f}"/>
'''

SVG_RAY = '''<line class="{kind}" x1="{x:.6f}" y1="{y:.6f}" x2="{x:.6f}" y2="{top:.6f}" stroke="{color}" stroke-width="{stroke:.6f}" fill="none"/>
'''

SVG_ARC = '''<path class="{kind}" d="M {x1:.6f} {y:.6f} A {r:.6f} {r:.6f} 0 0 1 {x2:.6f} {y:.6f}" stroke="{color}" stroke-width="{stroke:.6f}" fill="none"/>
'''

SVG_VERTEX = '''<circle class="vertex" cx="{x:.6f}" cy="{y:.6f}" r="{r:.6f}" fill="{color}"/>
'''

SVG_LABEL = '''<text x="{x:.6f}" y="{y:.6f}" font-size="{size:.6f}" text-anchor="middle">υ{index}</text>
'''

SVG_FOOTER = '''</svg>
'''


def render_farey_svg(ctx: FieldContext, q_list: Sequence[int], p: int, options: RenderOptions = None) -> str:
    """
    The closed path υ_0, ..., υ_{N-1} in the upper half-plane: the real axis, geodesics as semicircles
    between finite points and as vertical rays towards υ_0 = ∞, the diagonals of the recovered
    p-angulation in the geodesic style and the path in the path style.
    """
    options = RenderOptions.defaults() if options is None else options
    if not closed_path_check(ctx, q_list, p):
        raise InvalidQuiddityError(f"The path of q = {list(q_list)} at p = {p} does not close up")
    points = walk_vertices(ctx, q_list, p)
    dissection = recover_dissection(frieze_from_quiddity(QuiddityRow.from_integers(ctx, q_list, p)))
    n = len(points)

    reals = np.array([point.approximate() for point in points[1:]])
    lo, hi = reals.min(), reals.max()
    drawable = options.width - 2 * options.margin
    scale = drawable / (hi - lo) if hi > lo else 1.0
    xs = np.concatenate(([np.nan], options.margin + (reals - lo) * scale))

    radius = (hi - lo) * scale / 2
    height = 2 * options.margin + radius + options.ray_height
    baseline, top = height - options.margin, options.margin

    def geodesic(alpha: int, beta: int, kind: str, color: str, stroke: float) -> str:
        if alpha == 0 or beta == 0:
            return SVG_RAY.format(kind=kind, x=xs[alpha or beta], y=baseline, top=top, color=color, stroke=stroke)
        x1, x2 = sorted((xs[alpha], xs[beta]))
        return SVG_ARC.format(kind=kind, x1=x1, x2=x2, y=baseline, r=(x2 - x1) / 2, color=color, stroke=stroke)

    parts = [SVG_HEADER.format(width=options.width, height=height, background=options.background),
             SVG_AXIS.format(y=baseline, width=options.width, color=options.axis_color, stroke=options.axis_width)]
    for a, b in dissection.diagonals:
        parts.append(geodesic(a, b, "diagonal", options.geodesic_color, options.geodesic_width))
    for alpha in range(n):
        parts.append(geodesic(alpha, (alpha + 1) % n, "path", options.path_color, options.path_width))
    for alpha in range(1, n):
        parts.append(SVG_VERTEX.format(x=xs[alpha], y=baseline, r=options.vertex_radius, color=options.path_color))
        if options.labels:
            parts.append(SVG_LABEL.format(x=xs[alpha], y=baseline + options.font_size + options.vertex_radius,
                                          size=options.font_size, index=alpha))
    parts.append(SVG_FOOTER)
    logger.info("Rendered Farey path with %s vertices and %s diagonals", n, len(dissection.diagonals))
    return "".join(parts)
