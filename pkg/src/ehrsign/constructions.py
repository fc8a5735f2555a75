"""Lattice-polytope constructions: atoms plus product/pyramid/dilation nodes.

Atoms are full-dimensional in their ambient space: an interval [0, m], the
hypercube [0, m]^n, the twisted tetrahedron conv{0, e1, e2, (1,1,m)}, an
arbitrary full-dimensional lattice simplex, or a convex lattice polygon given
in boundary order.  Combinators form Cartesian products, iterated pyramids
(new apex one level up), and integer dilations.  Values are immutable trees;
all operations are pure.

Concrete syntax (accepted by ehrsign.dsl):

    expr := term ('*' term)*
    term := interval(M) | cube(M,N) | reeve(M)
          | simplex([v];[v];...) | polygon([x,y];...)
          | pyr(expr) | pyr(expr,K) | dilate(S,expr) | (expr)

with bracketed comma-separated integer vertices; whitespace is ignored and
'*' is the Cartesian product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

from .errors import ConstructionError
from .intlinalg import det, kernel_normal


@dataclass(frozen=True)
class Interval:
    """The segment [0, m] in R^1."""

    m: int


@dataclass(frozen=True)
class Cube:
    """The hypercube [0, m]^n (an n-fold product of intervals)."""

    m: int
    n: int


@dataclass(frozen=True)
class Reeve:
    """conv{(0,0,0), (1,0,0), (0,1,0), (1,1,m)}: the classical Reeve tetrahedron."""

    m: int


@dataclass(frozen=True)
class Simplex:
    """Full-dimensional lattice simplex: k+1 integer vertices in R^k."""

    vertices: tuple[tuple[int, ...], ...]

    def __init__(self, vertices):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in vertices))


@dataclass(frozen=True)
class Polygon:
    """Convex lattice polygon, vertices in boundary order."""

    vertices: tuple[tuple[int, int], ...]

    def __init__(self, vertices):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in vertices))


@dataclass(frozen=True)
class Product:
    left: "Construction"
    right: "Construction"


@dataclass(frozen=True)
class Pyramid:
    """k-fold iterated pyramid: each step adds an apex in a new coordinate."""

    inner: "Construction"
    k: int = 1


@dataclass(frozen=True)
class Dilate:
    """Integer dilation s*P (still a lattice polytope, same dimension)."""

    s: int
    inner: "Construction"


Construction = Union[Interval, Cube, Reeve, Simplex, Polygon, Product, Pyramid, Dilate]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple[str, ...]

    @property
    def first_failure(self) -> str | None:
        return self.failures[0] if self.failures else None


@dataclass(frozen=True)
class SimplexFacets:
    """Facet description normal . x <= offset, one inequality per facet."""

    inequalities: tuple[tuple[tuple[int, ...], int], ...]


@dataclass(frozen=True)
class PolygonData:
    area: Fraction
    boundary_points: int


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _check(c: Construction) -> list[str]:
    if isinstance(c, Interval):
        if not _is_int(c.m) or c.m < 1:
            return [f"interval: length must be a positive integer, got {c.m!r}"]
        return []
    if isinstance(c, Cube):
        if not _is_int(c.m) or c.m < 1:
            return [f"cube: side length must be a positive integer, got {c.m!r}"]
        if not _is_int(c.n) or c.n < 1:
            return [f"cube: dimension must be a positive integer, got {c.n!r}"]
        return []
    if isinstance(c, Reeve):
        if not _is_int(c.m) or c.m < 1:
            return [f"reeve: parameter must be a positive integer, got {c.m!r}"]
        return []
    if isinstance(c, Simplex):
        return _check_simplex(c)
    if isinstance(c, Polygon):
        return _check_polygon(c)
    if isinstance(c, Product):
        return _check(c.left) or _check(c.right)
    if isinstance(c, Pyramid):
        if not _is_int(c.k) or c.k < 1:
            return [f"pyr: height must be a positive integer, got {c.k!r}"]
        return _check(c.inner)
    if isinstance(c, Dilate):
        if not _is_int(c.s) or c.s < 1:
            return [f"dilate: scale must be a positive integer, got {c.s!r}"]
        return _check(c.inner)
    raise TypeError(f"not a construction: {c!r}")


def _check_simplex(s: Simplex) -> list[str]:
    verts = s.vertices
    if len(verts) < 2:
        return ["simplex: need at least 2 vertices"]
    k = len(verts) - 1
    for v in verts:
        if len(v) != k:
            return [f"simplex: {k + 1} vertices must live in R^{k}, got point of length {len(v)}"]
        if not all(_is_int(x) for x in v):
            return [f"simplex: vertex coordinates must be integers, got {v!r}"]
    edges = [[vj - v0 for vj, v0 in zip(v, verts[0])] for v in verts[1:]]
    if det(edges) == 0:
        return ["simplex: vertices are affinely dependent (not full-dimensional)"]
    return []


def _check_polygon(p: Polygon) -> list[str]:
    verts = p.vertices
    if len(verts) < 3:
        return ["polygon: need at least 3 vertices"]
    for v in verts:
        if len(v) != 2 or not all(_is_int(x) for x in v):
            return [f"polygon: vertices must be integer pairs, got {v!r}"]
    n = len(verts)
    orientation = 0
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        ex, ey = b[0] - a[0], b[1] - a[1]
        if ex == 0 and ey == 0:
            return [f"polygon: repeated vertex {a}"]
        # every other vertex must lie strictly on one side of this edge line
        side = 0
        for j in range(n):
            if j in (i, (i + 1) % n):
                continue
            cx = ex * (verts[j][1] - a[1]) - ey * (verts[j][0] - a[0])
            if cx == 0:
                return [f"polygon: vertex {verts[j]} is collinear with edge {a}-{b}"]
            sgn = 1 if cx > 0 else -1
            if side == 0:
                side = sgn
            elif side != sgn:
                return [f"polygon: not convex at edge {a}-{b}"]
        if orientation == 0:
            orientation = side
        elif side != orientation:
            return ["polygon: vertices are not in boundary order"]
    return []


def validate(c: Construction) -> ValidationReport:
    """Structural validation; the report carries the first violated rule."""
    failures = _check(c)
    return ValidationReport(not failures, tuple(failures))


def require_valid(c: Construction) -> None:
    report = validate(c)
    if not report.ok:
        raise ConstructionError(report.first_failure)


def dimension(c: Construction) -> int:
    """Dimension of the polytope the construction describes."""
    require_valid(c)
    return _dim(c)


def _dim(c: Construction) -> int:
    if isinstance(c, Interval):
        return 1
    if isinstance(c, Cube):
        return c.n
    if isinstance(c, Reeve):
        return 3
    if isinstance(c, Simplex):
        return len(c.vertices) - 1
    if isinstance(c, Polygon):
        return 2
    if isinstance(c, Product):
        return _dim(c.left) + _dim(c.right)
    if isinstance(c, Pyramid):
        return _dim(c.inner) + c.k
    if isinstance(c, Dilate):
        return _dim(c.inner)
    raise TypeError(f"not a construction: {c!r}")


def reeve_simplex(m: int) -> Simplex:
    """The Reeve atom in explicit simplex form (independent computation path)."""
    return Simplex(((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, m)))


def normalized_volume_simplex(s: Simplex) -> int:
    """d! times the Euclidean volume: |det| of the edge-vector matrix."""
    require_valid(s)
    verts = s.vertices
    edges = [[vj - v0 for vj, v0 in zip(v, verts[0])] for v in verts[1:]]
    return abs(det(edges))


def facet_inequalities_simplex(s: Simplex) -> SimplexFacets:
    """One content-reduced inequality normal . x <= offset per facet.

    Each facet is the hyperplane through all vertices but one, oriented so the
    remaining vertex satisfies the inequality strictly.
    """
    require_valid(s)
    verts = s.vertices
    k = len(verts) - 1
    inequalities = []
    for i in range(k + 1):
        others = [verts[j] for j in range(k + 1) if j != i]
        base = others[0]
        rows = [[v[t] - base[t] for t in range(k)] for v in others[1:]]
        if k == 1:
            normal = [1]
        else:
            normal = kernel_normal(rows)
        offset = sum(a * b for a, b in zip(normal, base))
        inside = sum(a * b for a, b in zip(normal, verts[i]))
        if inside > offset:
            normal = [-a for a in normal]
            offset = -offset
        elif inside == offset:
            raise ConstructionError("simplex: degenerate facet (vertex on opposite hyperplane)")
        inequalities.append((tuple(normal), offset))
    return SimplexFacets(tuple(inequalities))


def polygon_area_boundary(p: Polygon) -> PolygonData:
    """Shoelace area and the number of boundary lattice points (edge gcd sum)."""
    require_valid(p)
    verts = p.vertices
    n = len(verts)
    twice_area = 0
    boundary = 0
    for i in range(n):
        (x0, y0), (x1, y1) = verts[i], verts[(i + 1) % n]
        twice_area += x0 * y1 - x1 * y0
        boundary += gcd(abs(x1 - x0), abs(y1 - y0))
    return PolygonData(Fraction(abs(twice_area), 2), boundary)
