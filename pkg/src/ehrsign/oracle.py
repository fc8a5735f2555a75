"""Brute-force lattice-point counting, independent of the symbolic engine.

Simplices (including the Reeve atom, converted to explicit vertex form) and
polygons are enumerated coordinate by coordinate with exact integer bounds;
pyramids use the cumulative-sum recursion; products multiply factor counts.
Counts feed exact interpolation, giving a second, independent route to every
Ehrhart polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from . import caps
from .constructions import (
    Construction,
    Cube,
    Dilate,
    Interval,
    Polygon,
    Product,
    Pyramid,
    Reeve,
    Simplex,
    _dim,
    facet_inequalities_simplex,
    normalized_volume_simplex,
    polygon_area_boundary,
    reeve_simplex,
    require_valid,
)
from .engine import ehrhart
from .errors import InvalidParameterError, ResourceLimitError
from .polynomial import Polynomial, lagrange_interpolate


def _floor_div(p: int, q: int) -> int:
    if q < 0:
        p, q = -p, -q
    return p // q


def _ceil_div(p: int, q: int) -> int:
    if q < 0:
        p, q = -p, -q
    return -((-p) // q)


class _Budget:
    """Mutable visit counter; raises once the configured cap is exhausted."""

    __slots__ = ("limit", "remaining")

    def __init__(self, limit: int):
        self.limit = limit
        self.remaining = limit

    def charge(self, n: int = 1) -> None:
        self.remaining -= n
        if self.remaining < 0:
            raise ResourceLimitError(
                f"brute-force count exceeded the work cap of {self.limit} visits", self.limit
            )


def count_points(c: Construction, t: int, work_cap: int | None = None) -> int:
    """Number of lattice points in the t-th dilation of the construction."""
    require_valid(c)
    if t < 0:
        raise InvalidParameterError(f"dilation factor must be nonnegative, got {t}")
    if t == 0:
        return 1
    cap = caps.work_cap(work_cap)
    estimate = _estimate(c, t)
    if estimate > cap:
        raise ResourceLimitError(
            f"estimated {estimate} candidate visits exceed the work cap {cap}", estimate
        )
    return _count(c, t, _Budget(cap))


def _estimate(c: Construction, t: int) -> int:
    """Cheap upper-ballpark of enumeration visits (not of the count itself)."""
    if t == 0:
        return 1
    if isinstance(c, (Interval, Cube)):
        return 1
    if isinstance(c, Reeve):
        return 2 * (c.m * t**3 // 6 + 3 * t + 2)
    if isinstance(c, Simplex):
        d = len(c.vertices) - 1
        volume = normalized_volume_simplex(c)
        return 2 * (volume * t**d // factorial(d) + d * t + 2)
    if isinstance(c, Polygon):
        data = polygon_area_boundary(c)
        return 2 * (int(data.area * t * t) + data.boundary_points * t + 2)
    if isinstance(c, Product):
        return _estimate(c.left, t) + _estimate(c.right, t)
    if isinstance(c, Dilate):
        return _estimate(c.inner, c.s * t)
    if isinstance(c, Pyramid):
        return sum(_estimate(c.inner, j) for j in range(t + 1)) + t + 1
    raise TypeError(f"not a construction: {c!r}")


def _count(c: Construction, t: int, budget: _Budget) -> int:
    if t == 0:
        return 1
    if isinstance(c, Interval):
        return c.m * t + 1
    if isinstance(c, Cube):
        return (c.m * t + 1) ** c.n
    if isinstance(c, Reeve):
        return _count_simplex(reeve_simplex(c.m), t, budget)
    if isinstance(c, Simplex):
        return _count_simplex(c, t, budget)
    if isinstance(c, Polygon):
        return _count_polygon(c, t, budget)
    if isinstance(c, Product):
        return _count(c.left, t, budget) * _count(c.right, t, budget)
    if isinstance(c, Dilate):
        return _count(c.inner, c.s * t, budget)
    if isinstance(c, Pyramid):
        values = [_count(c.inner, j, budget) for j in range(t + 1)]
        for _ in range(c.k):
            level = [1] * (t + 1)
            for j in range(1, t + 1):
                level[j] = level[j - 1] + values[j]
            values = level
        return values[t]
    raise TypeError(f"not a construction: {c!r}")


def _count_simplex(s: Simplex, t: int, budget: _Budget) -> int:
    """Nested-loop enumeration of t*S with exact per-coordinate bounds.

    Bounds at each depth come from the facet inequalities, relaxing the not
    yet fixed coordinates to their dilation-wide ranges; at the innermost
    depth the bounds are exact, so no membership re-check is needed.
    """
    k = len(s.vertices) - 1
    facets = facet_inequalities_simplex(s).inequalities
    lows = [t * min(v[j] for v in s.vertices) for j in range(k)]
    highs = [t * max(v[j] for v in s.vertices) for j in range(k)]
    # rem_min[f][i]: least possible contribution of coordinates > i to facet f
    rem_min = []
    for normal, _ in facets:
        row = [0] * (k + 1)
        for i in range(k - 1, -1, -1):
            a = normal[i]
            contrib = min(a * lows[i], a * highs[i])
            row[i] = row[i + 1] + contrib
        rem_min.append(row)
    rhs = [offset * t for _, offset in facets]

    def recurse(depth: int, partials: list[int]) -> int:
        lo, hi = lows[depth], highs[depth]
        for f, (normal, _) in enumerate(facets):
            a = normal[depth]
            margin = rhs[f] - partials[f] - rem_min[f][depth + 1]
            if a > 0:
                hi = min(hi, _floor_div(margin, a))
            elif a < 0:
                lo = max(lo, _ceil_div(margin, a))
        if lo > hi:
            return 0
        if depth == k - 1:
            budget.charge(hi - lo + 1)
            return hi - lo + 1
        budget.charge(hi - lo + 1)
        total = 0
        base = [partials[f] + facets[f][0][depth] * lo for f in range(len(facets))]
        for x in range(lo, hi + 1):
            total += recurse(depth + 1, base)
            base = [b + facets[f][0][depth] for f, b in enumerate(base)]
        return total

    return recurse(0, [0] * len(facets))


def _count_polygon(p: Polygon, t: int, budget: _Budget) -> int:
    verts = [(t * x, t * y) for x, y in p.vertices]
    signed = 0
    n = len(verts)
    for i in range(n):
        (x0, y0), (x1, y1) = verts[i], verts[(i + 1) % n]
        signed += x0 * y1 - x1 * y0
    if signed < 0:
        verts.reverse()
    # counter-clockwise edges: inside means ey*x - ex*y <= ey*px - ex*py
    edges = []
    for i in range(n):
        (x0, y0), (x1, y1) = verts[i], verts[(i + 1) % n]
        ex, ey = x1 - x0, y1 - y0
        edges.append((ey, -ex, ey * x0 - ex * y0))
    x_lo = min(x for x, _ in verts)
    x_hi = max(x for x, _ in verts)
    total = 0
    for x in range(x_lo, x_hi + 1):
        y_lo = min(y for _, y in verts)
        y_hi = max(y for _, y in verts)
        feasible = True
        for a, b, cst in edges:
            margin = cst - a * x
            if b > 0:
                y_hi = min(y_hi, _floor_div(margin, b))
            elif b < 0:
                y_lo = max(y_lo, _ceil_div(margin, b))
            elif margin < 0:
                feasible = False
                break
        if feasible and y_lo <= y_hi:
            budget.charge(y_hi - y_lo + 1)
            total += y_hi - y_lo + 1
        else:
            budget.charge(1)
    return total


def interpolated_ehrhart(c: Construction, work_cap: int | None = None) -> Polynomial:
    """Exact interpolation through the counts at t = 0, 1, ..., dim."""
    require_valid(c)
    d = _dim(c)
    points = [(t, count_points(c, t, work_cap)) for t in range(d + 1)]
    return lagrange_interpolate(points)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of comparing the symbolic polynomial against the counting route."""

    expr: str
    symbolic: Polynomial
    interpolated: Polynomial
    equal: bool
    counts: tuple[tuple[int, int], ...]

    @property
    def first_difference(self) -> int | None:
        """Lowest degree where the two polynomials disagree, if any."""
        if self.equal:
            return None
        top = max(self.symbolic.degree, self.interpolated.degree)
        for k in range(top + 1):
            if self.symbolic.coefficient(k) != self.interpolated.coefficient(k):
                return k
        return None


def cross_check(
    c: Construction, work_cap: int | None = None, volume_cap: int | None = None
) -> CheckReport:
    """Compute both routes and report whether they agree exactly."""
    from .dsl import to_dsl

    require_valid(c)
    d = _dim(c)
    counts = tuple((t, count_points(c, t, work_cap)) for t in range(d + 1))
    interpolated = lagrange_interpolate(list(counts))
    symbolic = ehrhart(c, volume_cap)
    return CheckReport(
        expr=to_dsl(c),
        symbolic=symbolic,
        interpolated=interpolated,
        equal=symbolic == interpolated,
        counts=counts,
    )
