"""
Cyclic polygons with vertices 0, ..., N-1 in positive order, their diagonals and dissections.
"""
import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, Iterable, Iterator, List, NamedTuple, Sequence, Tuple

from friezes import get_logger
from friezes.errors import (FriezeError, InvalidDiagonalError, InvalidDissectionError, InvalidVertexError,
                            ParseError)

logger = get_logger(__name__)


@dataclass(frozen=True)
class Polygon:
    n_vertices: int

    def __post_init__(self):
        if not isinstance(self.n_vertices, int) or self.n_vertices < 3:
            raise InvalidDissectionError(f"A polygon needs at least 3 vertices, but got {self.n_vertices}")

    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    def check_vertex(self, vertex: int):
        if not isinstance(vertex, int) or not 0 <= vertex < self.n_vertices:
            raise InvalidVertexError(f"Vertex {vertex} is not in 0..{self.n_vertices - 1}")

    def are_neighbours(self, a: int, b: int) -> bool:
        return (b - a) % self.n_vertices in (1, self.n_vertices - 1)

    def diagonals(self) -> List["Diagonal"]:
        """ all diagonals in lexicographic order """
        n = self.n_vertices
        return [Diagonal(a, b) for a in range(n) for b in range(a + 2, n) if not (a == 0 and b == n - 1)]


class Diagonal(NamedTuple):
    """ stored as (min, max) """
    a: int
    b: int

    @classmethod
    def of(cls, u: int, v: int, polygon: Polygon) -> "Diagonal":
        diagonal = cls(min(u, v), max(u, v))
        check_diagonal(diagonal, polygon)
        return diagonal


def check_diagonal(diagonal: Tuple[int, int], polygon: Polygon):
    a, b = diagonal
    n = polygon.n_vertices
    if not (isinstance(a, int) and isinstance(b, int)) or not (0 <= a < n and 0 <= b < n):
        raise InvalidDiagonalError(f"Diagonal {tuple(diagonal)} has endpoints outside 0..{n - 1}")
    if a == b or polygon.are_neighbours(a, b):
        raise InvalidDiagonalError(f"{tuple(diagonal)} is a point or an edge of the {n}-gon, not a diagonal")


def interleaves(d1: Tuple[int, int], d2: Tuple[int, int]) -> bool:
    a, b = sorted(d1)
    c, d = sorted(d2)
    return a < c < b < d or c < a < d < b


def crosses(d1: Tuple[int, int], d2: Tuple[int, int], polygon: Polygon) -> bool:
    """ true iff the endpoints strictly interleave in the cyclic order """
    check_diagonal(d1, polygon)
    check_diagonal(d2, polygon)
    return interleaves(d1, d2)


@dataclass(frozen=True)
class Cell:
    """ one subpolygon of a dissection; vertices ascending, which is their cyclic order """
    vertices: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def __contains__(self, vertex: int) -> bool:
        return vertex in self.vertices

    def edges(self) -> List[Tuple[int, int]]:
        vs = self.vertices
        return [(min(u, v), max(u, v)) for u, v in zip(vs, vs[1:] + vs[:1])]

    def sort_key(self):
        return self.vertices[0], len(self.vertices), self.vertices


@dataclass(frozen=True)
class Dissection:
    """
    A polygon and a set of diagonals, stored canonically (each as (min, max), sorted).

    The constructor only canonicalizes; use Dissection.create to validate input.
    """
    polygon: Polygon
    diagonals: Tuple[Diagonal, ...] = field(default=())

    def __post_init__(self):
        canonical = tuple(sorted({Diagonal(min(d), max(d)) for d in self.diagonals}))
        object.__setattr__(self, "diagonals", canonical)

    @property
    def n_vertices(self) -> int:
        return self.polygon.n_vertices

    @classmethod
    def create(cls, n_vertices: int, diagonals: Iterable[Sequence[int]] = ()) -> "Dissection":
        polygon = Polygon(n_vertices)
        seen = set()
        for d in diagonals:
            if len(d) != 2:
                raise InvalidDiagonalError(f"A diagonal has two endpoints, but got {d!r}")
            diagonal = Diagonal.of(d[0], d[1], polygon)
            if diagonal in seen:
                raise InvalidDissectionError(f"Duplicate diagonal {tuple(diagonal)}")
            seen.add(diagonal)
        dissection = cls(polygon, tuple(seen))
        dissection.check_non_crossing()
        return dissection

    def crossing_pair(self):
        for d1, d2 in itertools.combinations(self.diagonals, 2):
            if interleaves(d1, d2):
                return d1, d2
        return None

    def is_valid(self) -> bool:
        return self.crossing_pair() is None

    def check_non_crossing(self):
        pair = self.crossing_pair()
        if pair is not None:
            raise InvalidDissectionError(f"Diagonals {tuple(pair[0])} and {tuple(pair[1])} cross")

    @cached_property
    def _cells(self) -> Tuple[Cell, ...]:
        self.check_non_crossing()
        found = _split(tuple(self.polygon.vertices), list(self.diagonals))
        return tuple(sorted((Cell(vs) for vs in found), key=Cell.sort_key))

    def to_dict(self) -> Dict:
        return {"n": self.n_vertices, "diagonals": [[d.a, d.b] for d in self.diagonals]}

    @classmethod
    def from_dict(cls, data: Dict) -> "Dissection":
        if not isinstance(data, dict) or "n" not in data or "diagonals" not in data:
            raise ParseError(f"A dissection needs the keys 'n' and 'diagonals', but got {data!r}")
        if not isinstance(data["diagonals"], list):
            raise ParseError(f"'diagonals' must be a list of [a, b] pairs, but is {data['diagonals']!r}")
        try:
            return cls.create(data["n"], data["diagonals"])
        except (FriezeError, TypeError) as e:
            raise ParseError(f"Invalid dissection: {e}") from e


def _split(vertices: Tuple[int, ...], diagonals: List[Diagonal]) -> List[Tuple[int, ...]]:
    """ recursive splitting along the lexicographically smallest diagonal inside the cell """
    if not diagonals:
        return [vertices]
    a, b = diagonals[0]
    ia, ib = vertices.index(a), vertices.index(b)
    inner = vertices[ia:ib + 1]
    outer = vertices[:ia + 1] + vertices[ib:]
    inner_set = set(inner)
    inner_diagonals, outer_diagonals = [], []
    for d in diagonals[1:]:
        if d.a in inner_set and d.b in inner_set:
            inner_diagonals.append(d)
        else:
            outer_diagonals.append(d)
    return _split(inner, inner_diagonals) + _split(outer, outer_diagonals)


def cells(dissection: Dissection) -> List[Cell]:
    return list(dissection._cells)


def incident_cells(dissection: Dissection, vertex: int) -> List[Cell]:
    dissection.polygon.check_vertex(vertex)
    return [cell for cell in dissection._cells if vertex in cell]


def cell_sizes(dissection: Dissection) -> List[int]:
    return [cell.size for cell in dissection._cells]


def is_p_angulation(dissection: Dissection, p: int) -> bool:
    return all(size == p for size in cell_sizes(dissection))


def enumerate_dissections(n_vertices: int) -> Iterator[Dissection]:
    """
    Every set of pairwise non-crossing diagonals exactly once, the empty set first,
    in lexicographic order of the sorted diagonal tuples.
    """
    polygon = Polygon(n_vertices)
    candidates = polygon.diagonals()

    def extend(chosen: List[Diagonal], start: int) -> Iterator[Dissection]:
        yield Dissection(polygon, tuple(chosen))
        for idx in range(start, len(candidates)):
            candidate = candidates[idx]
            if not any(interleaves(candidate, d) for d in chosen):
                chosen.append(candidate)
                yield from extend(chosen, idx + 1)
                chosen.pop()

    yield from extend([], 0)


@lru_cache(maxsize=None)
def _p_angulation_shapes(m: int, p: int) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """
    The p-angulations of a polygon with corners 0..m-1, built from the cell containing the edge {0, m-1}.
    m = 2 stands for a bare edge.
    """
    if m == 2:
        return (),
    if m < p or (m - 2) % (p - 2):
        return ()
    shapes = []
    for inner in itertools.combinations(range(1, m - 1), p - 2):
        corners = (0,) + inner + (m - 1,)
        parts = []
        for lo, hi in zip(corners, corners[1:]):
            sub_shapes = _p_angulation_shapes(hi - lo + 1, p)
            if not sub_shapes:
                break
            own = ((lo, hi),) if hi - lo > 1 else ()
            parts.append([own + tuple((lo + u, lo + v) for u, v in shape) for shape in sub_shapes])
        else:
            for combination in itertools.product(*parts):
                shapes.append(tuple(sorted(itertools.chain.from_iterable(combination))))
    return tuple(shapes)


def enumerate_p_angulations(n_vertices: int, p: int) -> Iterator[Dissection]:
    """ the dissections all of whose cells are p-gons; nothing when N is not 2 modulo p-2 """
    polygon = Polygon(n_vertices)
    if p < 3:
        raise InvalidDissectionError(f"Cells have at least 3 vertices, but p is {p}")
    for shape in _p_angulation_shapes(n_vertices, p):
        yield Dissection(polygon, tuple(Diagonal(a, b) for a, b in shape))


def fuss_catalan(m: int, p: int) -> int:
    """ number of p-angulations of the ((p-2)m+2)-gon; the Catalan numbers for p = 3 """
    return math.comb((p - 1) * m, m) // ((p - 2) * m + 1)


def count_dissections(n_vertices: int) -> int:
    """ Σ_k C(N-3, k) C(N+k-1, k) / (k+1), the number of dissections of the N-gon by k diagonals summed over k """
    n = n_vertices
    return sum(math.comb(n - 3, k) * math.comb(n + k - 1, k) // (k + 1) for k in range(n - 2))
