"""Symbolic Ehrhart engine.

Closed forms for the atoms, series-numerator coset enumeration for general
simplices, and the three combinator rules: products multiply polynomials,
integer dilation substitutes a scaled variable, and each pyramid level bumps
the series denominator by one power of (1-z).
"""

from __future__ import annotations

from fractions import Fraction
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
    polygon_area_boundary,
    require_valid,
)
from .errors import InvalidParameterError, ResourceLimitError
from .hstar import HStar, ehrhart_from_hstar, hstar_from_ehrhart
from .intlinalg import adjugate, hermite_diagonal
from .polynomial import Polynomial, binomial_poly, poly_mul, substitute_scaled


def ehrhart(c: Construction, volume_cap: int | None = None) -> Polynomial:
    """Exact Ehrhart polynomial of a valid construction.

    Degree equals the dimension and the constant term is 1.  Simplex atoms go
    through the coset-enumeration path, which is capped by normalized volume.
    """
    require_valid(c)
    return _ehrhart(c, caps.volume_cap(volume_cap))


def _ehrhart(c: Construction, vcap: int) -> Polynomial:
    if isinstance(c, Interval):
        return Polynomial((1, c.m))
    if isinstance(c, Cube):
        return Polynomial((1, c.m)) ** c.n
    if isinstance(c, Reeve):
        # closed form (m/6) t^3 + t^2 + ((12-m)/6) t + 1
        return Polynomial((1, Fraction(12 - c.m, 6), 1, Fraction(c.m, 6)))
    if isinstance(c, Simplex):
        d = len(c.vertices) - 1
        return ehrhart_from_hstar(hstar_simplex(c, vcap), d)
    if isinstance(c, Polygon):
        return ehrhart_polygon(c)
    if isinstance(c, Product):
        return poly_mul(_ehrhart(c.left, vcap), _ehrhart(c.right, vcap))
    if isinstance(c, Dilate):
        return substitute_scaled(_ehrhart(c.inner, vcap), c.s)
    if isinstance(c, Pyramid):
        inner = _ehrhart(c.inner, vcap)
        h = hstar_from_ehrhart(inner)
        return ehrhart_from_hstar(h.bump(c.k), inner.degree + c.k)
    raise TypeError(f"not a construction: {c!r}")


def hstar_simplex(s: Simplex, volume_cap: int | None = None) -> HStar:
    """Series numerator of a lattice simplex by coset enumeration.

    Lift each vertex v to (v, 1).  The lifted vertices span a finite-index
    sublattice L of Z^(d+1); the index N is the normalized volume, and the
    half-open parallelepiped they span contains exactly one lattice point per
    coset of L.  Integer row elimination (Hermite pivots) yields N box-shaped
    coset representatives; mapping each through the inverse lift matrix and
    taking fractional parts lands it in the parallelepiped, where its integer
    height grades the count.
    """
    require_valid(s)
    verts = s.vertices
    d = len(verts) - 1
    lifted = [list(v) + [1] for v in verts]
    pivots = hermite_diagonal([row[:] for row in lifted])
    volume = 1
    for p in pivots:
        volume *= p
    cap = caps.volume_cap(volume_cap)
    if volume > cap:
        raise ResourceLimitError(
            f"normalized volume {volume} exceeds the configured cap {cap}", volume
        )

    adj, det_w = adjugate(lifted)
    if det_w < 0:
        det_w = -det_w
        adj = [[-v for v in row] for row in adj]
    assert det_w == volume

    hist = [0] * (d + 1)
    # odometer over the coset box: y_adj tracks y @ adj incrementally
    counters = [0] * (d + 1)
    y_adj = [0] * (d + 1)
    while True:
        # residues of the barycentric coordinates; their sum is the height * det
        height = sum(v % det_w for v in y_adj) // det_w
        hist[height] += 1
        pos = 0
        while pos <= d and counters[pos] == pivots[pos] - 1:
            counters[pos] = 0
            y_adj = [a - (pivots[pos] - 1) * b for a, b in zip(y_adj, adj[pos])]
            pos += 1
        if pos > d:
            break
        counters[pos] += 1
        y_adj = [a + b for a, b in zip(y_adj, adj[pos])]
    return HStar(tuple(hist), d + 1)


def ehrhart_pyr_reeve(k: int, m: int) -> Polynomial:
    """Closed form for the k-fold pyramid over the Reeve tetrahedron:
    C(t+k+3, k+3) + (m-1) C(t+k+1, k+3)."""
    if k < 0:
        raise InvalidParameterError(f"pyramid height must be nonnegative, got {k}")
    if m < 1:
        raise InvalidParameterError(f"tetrahedron parameter must be positive, got {m}")
    return binomial_poly(k + 3, k + 3) + binomial_poly(k + 1, k + 3).scale(m - 1)


def ehrhart_polygon(p: Polygon) -> Polynomial:
    """a t^2 + (b/2) t + 1 from the area and boundary lattice-point count."""
    data = polygon_area_boundary(p)
    return Polynomial((1, Fraction(data.boundary_points, 2), data.area))


def normalized_volume(c: Construction) -> int:
    """d! times the leading Ehrhart coefficient (integer for every construction)."""
    p = ehrhart(c)
    value = p.coeffs[-1] * factorial(p.degree)
    assert value.denominator == 1
    return int(value)
