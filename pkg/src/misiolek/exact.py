"""Exact arithmetic substrate: big rationals, factorials and signed square roots.

Every coupling coefficient handled downstream is of the form ``s*sqrt(p/q)``
with ``s`` a sign and ``p/q`` a nonnegative rational, so a single radical
layer over :class:`fractions.Fraction` is all the algebra we ever need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Union

#: Rational scalars accepted by the constructors below.
RationalLike = Union[int, Fraction]

# Arbitrary-precision rationals, always in lowest terms with positive
# denominator.  fractions.Fraction already guarantees both invariants.
BigRational = Fraction


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    """n! as an exact integer, memoized for heavy reuse by the Racah sums."""
    if n < 0:
        raise ValueError(f"factorial of negative argument {n}")
    return math.factorial(n)


def sqrt_to_float(value: Fraction) -> float:
    """Nearest double to sqrt(value) for a nonnegative rational.

    The square root is taken on a >=120-bit integer approximation before the
    final rounding, so factorial ratios far beyond double range still convert
    correctly as long as the *result* is representable.

    Raises OverflowError if the result exceeds double range.
    """
    if value < 0:
        raise ValueError("square root of negative rational")
    p, q = value.numerator, value.denominator
    if p == 0:
        return 0.0
    # sqrt(p/q) = sqrt(p*q)/q.  Shift so isqrt carries ~120 significant bits,
    # keeping the shift even so it can be undone exactly via ldexp.
    n = p * q
    shift = max(0, 240 - n.bit_length())
    shift += shift % 2
    root = math.isqrt(n << shift)
    half = shift // 2
    # root / (q * 2**half), both exact integers; Fraction redoes the gcd but
    # guarantees a correctly rounded quotient even for huge operands.
    try:
        return float(Fraction(root, q << half))
    except OverflowError:
        raise OverflowError(f"sqrt({value}) exceeds double range") from None


@total_ordering
@dataclass(frozen=True)
class SignedSqrtRational:
    """Exact value ``sign * sqrt(radicand)`` with rational ``radicand >= 0``.

    The representation is canonical: the magnitude determines the radicand
    uniquely, so dataclass equality is exact value equality.  ``sign == 0``
    iff ``radicand == 0``.
    """

    sign: int
    radicand: Fraction

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign}")
        if self.radicand < 0:
            raise ValueError(f"radicand must be nonnegative, got {self.radicand}")
        if (self.sign == 0) != (self.radicand == 0):
            raise ValueError("sign is zero exactly when the radicand is zero")

    @classmethod
    def of(cls, sign: int, radicand: RationalLike) -> "SignedSqrtRational":
        """Normalizing constructor: collapses any zero to the canonical zero."""
        rad = Fraction(radicand)
        if sign == 0 or rad == 0:
            return cls(0, Fraction(0))
        return cls(1 if sign > 0 else -1, rad)

    @classmethod
    def zero(cls) -> "SignedSqrtRational":
        return cls(0, Fraction(0))

    @classmethod
    def from_rational(cls, value: RationalLike) -> "SignedSqrtRational":
        """Embed an exact rational r as sign(r)*sqrt(r**2)."""
        v = Fraction(value)
        if v == 0:
            return cls.zero()
        return cls(1 if v > 0 else -1, v * v)

    @classmethod
    def sqrt(cls, value: RationalLike) -> "SignedSqrtRational":
        """Principal square root of a nonnegative rational."""
        v = Fraction(value)
        if v < 0:
            raise ValueError("sqrt of negative rational")
        return cls.of(1, v)

    def __mul__(self, other: "SignedSqrtRational") -> "SignedSqrtRational":
        return SignedSqrtRational.of(self.sign * other.sign, self.radicand * other.radicand)

    def __neg__(self) -> "SignedSqrtRational":
        return SignedSqrtRational.of(-self.sign, self.radicand)

    def scale(self, factor: RationalLike) -> "SignedSqrtRational":
        """Exact product with a rational scalar (folded into the radicand)."""
        return self * SignedSqrtRational.from_rational(factor)

    def square(self) -> Fraction:
        """Exact square; always the radicand thanks to the zero invariant."""
        return self.radicand

    def is_zero(self) -> bool:
        return self.sign == 0

    def to_float(self) -> float:
        return self.sign * sqrt_to_float(self.radicand)

    def __lt__(self, other: "SignedSqrtRational") -> bool:
        if self.sign != other.sign:
            return self.sign < other.sign
        if self.sign >= 0:
            return self.radicand < other.radicand
        return self.radicand > other.radicand

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        prefix = "-" if self.sign < 0 else ""
        return f"{prefix}sqrt({self.radicand})"


def ssr_mul(a: SignedSqrtRational, b: SignedSqrtRational) -> SignedSqrtRational:
    """Exact product of two signed square roots."""
    return a * b


def ssr_to_float(a: SignedSqrtRational) -> float:
    """Nearest double to a signed square root (<= 2 ulp off)."""
    return a.to_float()
