"""Dense univariate polynomials with exact rational coefficients.

A polynomial is an immutable sequence of ``Fraction`` coefficients in
ascending degree order with trailing zeros trimmed; the zero polynomial is
the empty sequence.  Nothing in this module (or anywhere in the package)
ever touches floating point: all arithmetic stays in ``int``/``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .errors import InvalidParameterError, NotEhrhartError

# Exact rational scalar used throughout; always stored in lowest terms with
# a positive denominator (guaranteed by fractions.Fraction itself).
Rational = Fraction

Scalar = int | Fraction


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Immutable dense polynomial; ``coeffs[k]`` is the coefficient of t^k."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of t^k (zero beyond the stored degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, t: Scalar) -> Fraction:
        """Evaluate at ``t`` by Horner's rule, exactly."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __mul__(self, other: Polynomial) -> Polynomial:
        return poly_mul(self, other)

    def scale(self, s: Scalar) -> Polynomial:
        """Multiply every coefficient by the scalar ``s``."""
        return Polynomial(Fraction(s) * c for c in self.coeffs)

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise InvalidParameterError("polynomial powers must be nonnegative")
        result = one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        return format_human(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_human(self)!r})"


def zero() -> Polynomial:
    return Polynomial()


def one() -> Polynomial:
    return Polynomial((1,))


def monomial(k: int, c: Scalar = 1) -> Polynomial:
    """The polynomial c * t^k."""
    return Polynomial([0] * k + [c])


def from_coeffs(coeffs: Sequence[Scalar]) -> Polynomial:
    return Polynomial(coeffs)


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact convolution product of two polynomials."""
    if p.is_zero() or q.is_zero():
        return zero()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return Polynomial(out)


def substitute_scaled(p: Polynomial, s: int) -> Polynomial:
    """Return p(s*t) for a positive integer scale; coefficient k picks up s^k."""
    if s < 1:
        raise InvalidParameterError(f"scale must be a positive integer, got {s}")
    power = 1
    out = []
    for c in p.coeffs:
        out.append(c * power)
        power *= s
    return Polynomial(out)


def shift(p: Polynomial, a: Scalar) -> Polynomial:
    """Return p(t + a) (exact Taylor shift by repeated Horner steps)."""
    result = zero()
    x_plus_a = Polynomial((Fraction(a), Fraction(1)))
    for c in reversed(p.coeffs):
        result = result * x_plus_a + Polynomial((c,))
    return result


def binomial_poly(a: int, b: int) -> Polynomial:
    """The binomial coefficient C(t + a, b) as a degree-b polynomial in t.

    Expands (t+a)(t+a-1)...(t+a-b+1)/b!; for b = 0 this is the constant 1.
    At any integer t >= b - a the value is the usual integer binomial.
    """
    if b < 0:
        raise InvalidParameterError(f"binomial order must be nonnegative, got {b}")
    prod = one()
    for i in range(b):
        prod = prod * Polynomial((a - i, 1))
    return prod.scale(Fraction(1, factorial(b)))


def lagrange_interpolate(points: Sequence[tuple[int, int]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Abscissae must be pairwise distinct; arithmetic is exact so degree-d data
    from a degree-d rational polynomial is recovered bit-for-bit.
    """
    if not points:
        raise InvalidParameterError("need at least one interpolation point")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise InvalidParameterError(f"duplicate abscissa in interpolation nodes: {xs}")
    total = zero()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = one()
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = basis * Polynomial((-xj, 1))
            denom *= xi - xj
        total = total + basis.scale(Fraction(yi) / denom)
    return total


def format_human(p: Polynomial) -> str:
    """Plain-text rendering, descending by degree, zero terms skipped."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "t" if k == 1 else f"t^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def format_latex(p: Polynomial) -> str:
    """LaTeX rendering with explicit \\frac fractions, descending by degree."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if mag.denominator == 1:
            num = str(mag.numerator)
        else:
            num = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
        if k == 0:
            body = num
        else:
            var = "t" if k == 1 else f"t^{{{k}}}"
            body = var if mag == 1 else f"{num}{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return "".join(parts)


def to_json_coeffs(p: Polynomial) -> list[list[str]]:
    """JSON form: ascending dense [numerator, denominator] decimal-string pairs."""
    return [[str(c.numerator), str(c.denominator)] for c in p.coeffs]


def from_json_coeffs(data: Sequence[Sequence[str | int]]) -> Polynomial:
    return Polynomial(Fraction(int(n), int(d)) for n, d in data)
