"""Conversions between Ehrhart polynomials and their series numerators.

The generating series sum_{t>=0} p(t) z^t of a degree-d Ehrhart polynomial
equals h(z) / (1-z)^(d+1) for a numerator h of degree at most d.  For a
lattice polytope the numerator has nonnegative integer coefficients summing
to the normalized volume; we validate that and refuse anything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DimensionMismatchError, NotEhrhartError
from .polynomial import Polynomial, binomial_poly, zero


@dataclass(frozen=True)
class HStar:
    """Series numerator: nonnegative integer coefficients h_0..h_d plus the
    exponent of the (1-z) denominator (dimension + 1)."""

    coeffs: tuple[int, ...]
    denom_exponent: int

    def __post_init__(self):
        if self.denom_exponent < 1:
            raise DimensionMismatchError("denominator exponent must be positive")
        if any(c < 0 for c in self.coeffs):
            raise NotEhrhartError(f"numerator coefficients must be nonnegative: {self.coeffs}")

    def bump(self, k: int) -> HStar:
        """Raise the denominator exponent by k (pyramid construction, k times)."""
        return HStar(self.coeffs, self.denom_exponent + k)

    def total(self) -> int:
        """Sum of coefficients (normalized volume when taken from a polytope)."""
        return sum(self.coeffs)


def hstar_from_ehrhart(p: Polynomial) -> HStar:
    """Numerator of (1-z)^(d+1) * sum p(t) z^t, for p of degree d with p(0)=1.

    Coefficient j is the alternating sum over binomials of p(j), ..., p(j-d-1);
    any negative or non-integer entry means p is not the Ehrhart polynomial of
    a lattice polytope (or its true degree is lower than claimed).
    """
    d = p.degree
    if d < 0:
        raise NotEhrhartError("zero polynomial has no Ehrhart series numerator")
    if p(0) != 1:
        raise NotEhrhartError(f"constant term must be 1, got {p(0)}")
    values = [p(t) for t in range(d + 1)]
    coeffs = []
    for j in range(d + 1):
        h = Fraction(0)
        for i in range(j + 1):
            h += (-1) ** i * comb(d + 1, i) * values[j - i]
        if h.denominator != 1 or h < 0:
            raise NotEhrhartError(
                f"series numerator entry {j} is {h}; input is not a lattice Ehrhart polynomial"
            )
        coeffs.append(int(h))
    return HStar(tuple(coeffs), d + 1)


def ehrhart_from_hstar(h: HStar, d: int) -> Polynomial:
    """Polynomial sum_j h_j * C(t + d - j, d) of degree d.

    Inverts hstar_from_ehrhart when d matches the source degree; with a larger
    d it realizes the pyramid lift (same numerator over a higher denominator
    power).
    """
    if len(h.coeffs) > d + 1:
        raise DimensionMismatchError(
            f"numerator has {len(h.coeffs)} entries but degree {d} admits at most {d + 1}"
        )
    if h.denom_exponent != d + 1:
        raise DimensionMismatchError(
            f"denominator exponent {h.denom_exponent} does not match degree {d}"
        )
    total = zero()
    for j, hj in enumerate(h.coeffs):
        if hj:
            total = total + binomial_poly(d - j, d).scale(hj)
    return total
