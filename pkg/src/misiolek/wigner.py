"""Exact Wigner 3j symbols for integer angular momenta.

The general path evaluates the Racah alternating sum entirely in rational
arithmetic and only then splits off the square root, so cancellations are
exact.  Two closed forms and one recursion are kept as separate operations:
they are cross-validation targets, not fast paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .exact import SignedSqrtRational, factorial


class ClosedFormDomainError(ValueError):
    """A closed form was asked for arguments outside its structural domain.

    Callers should fall back to the general Racah path; the symbol itself is
    typically nonzero there, so returning zero would be wrong.
    """


def _parity(n: int) -> int:
    return -1 if n % 2 else 1


@dataclass(frozen=True)
class ThreeJArgs:
    """Arguments (l1 l2 l3; m1 m2 m3) of a 3j symbol, order bounds enforced."""

    l1: int
    l2: int
    l3: int
    m1: int
    m2: int
    m3: int

    def __post_init__(self) -> None:
        for l, m in ((self.l1, self.m1), (self.l2, self.m2), (self.l3, self.m3)):
            if l < 0:
                raise ValueError(f"negative degree {l}")
            if abs(m) > l:
                raise ValueError(f"order {m} exceeds degree {l}")

    @classmethod
    def checked(cls, l1: int, l2: int, l3: int, m1: int, m2: int, m3: int) -> Optional["ThreeJArgs"]:
        """None when an order exceeds its degree (the symbol is then zero)."""
        if min(l1, l2, l3) < 0:
            raise ValueError("negative degree")
        if abs(m1) > l1 or abs(m2) > l2 or abs(m3) > l3:
            return None
        return cls(l1, l2, l3, m1, m2, m3)

    def triangle_ok(self) -> bool:
        return abs(self.l1 - self.l2) <= self.l3 <= self.l1 + self.l2


@lru_cache(maxsize=None)
def _racah(l1: int, l2: int, l3: int, m1: int, m2: int, m3: int) -> SignedSqrtRational:
    """Racah single-sum evaluation; assumes selection rules already hold."""
    delta = Fraction(
        factorial(l1 + l2 - l3) * factorial(l1 - l2 + l3) * factorial(-l1 + l2 + l3),
        factorial(l1 + l2 + l3 + 1),
    )
    prod = (
        factorial(l1 + m1) * factorial(l1 - m1)
        * factorial(l2 + m2) * factorial(l2 - m2)
        * factorial(l3 + m3) * factorial(l3 - m3)
    )
    t_min = max(0, l2 - l3 - m1, l1 - l3 + m2)
    t_max = min(l1 + l2 - l3, l1 - m1, l2 + m2)
    total = Fraction(0)
    for t in range(t_min, t_max + 1):
        denom = (
            factorial(t)
            * factorial(l3 - l2 + t + m1)
            * factorial(l3 - l1 + t - m2)
            * factorial(l1 + l2 - l3 - t)
            * factorial(l1 - t - m1)
            * factorial(l2 - t + m2)
        )
        total += Fraction(_parity(t), denom)
    if total == 0:
        return SignedSqrtRational.zero()
    sign = _parity(l1 - l2 - m3) * (1 if total > 0 else -1)
    return SignedSqrtRational.of(sign, total * total * delta * prod)


def threej(args: ThreeJArgs) -> SignedSqrtRational:
    """Exact 3j symbol; zero whenever a selection rule fails."""
    if args.m1 + args.m2 + args.m3 != 0 or not args.triangle_ok():
        return SignedSqrtRational.zero()
    return _racah(args.l1, args.l2, args.l3, args.m1, args.m2, args.m3)


def threej_lm(l1: int, l2: int, l3: int, m1: int, m2: int, m3: int) -> SignedSqrtRational:
    """threej on bare integers; out-of-range orders also yield zero."""
    args = ThreeJArgs.checked(l1, l2, l3, m1, m2, m3)
    if args is None:
        return SignedSqrtRational.zero()
    return threej(args)


def threej_closed_stretched(l1: int, m: int, l3: int, m1: int) -> SignedSqrtRational:
    """Closed form for (l1 m l3; m1 -m m-m1), second column stretched.

    Zero is returned where the symbol genuinely vanishes (triangle or order
    bounds); patterns the formula cannot represent raise
    ClosedFormDomainError.
    """
    if m < 0 or l1 < 0 or l3 < 0:
        raise ClosedFormDomainError("degrees must be nonnegative")
    if abs(m1) > l1 or abs(m - m1) > l3:
        return SignedSqrtRational.zero()
    if not abs(l1 - m) <= l3 <= l1 + m:
        return SignedSqrtRational.zero()
    radicand = Fraction(
        factorial(2 * m)
        * factorial(l1 + l3 - m)
        * factorial(l3 - m1 + m)
        * factorial(l1 + m1),
        factorial(l1 + l3 + m + 1)
        * factorial(l1 - l3 + m)
        * factorial(-l1 + l3 + m)
        * factorial(l3 + m1 - m)
        * factorial(l1 - m1),
    )
    return SignedSqrtRational.of(_parity(l1 - m1), radicand)


def threej_closed_110(l1: int, l2: int, l3: int) -> SignedSqrtRational:
    """Closed form for (l1 l2 l3; 1 -1 0); needs l1+l2+l3 odd.

    For an even degree sum the symbol is generally nonzero but the closed
    form does not apply, so that case is rejected rather than zeroed.
    """
    if l1 < 1 or l2 < 1 or l3 < 0:
        raise ClosedFormDomainError("requires l1, l2 >= 1 and l3 >= 0")
    big_j = l1 + l2 + l3 + 1
    if big_j % 2:
        raise ClosedFormDomainError("degree sum must be odd for this closed form")
    if not abs(l1 - l2) <= l3 <= l1 + l2:
        return SignedSqrtRational.zero()
    half = big_j // 2
    radicand = Fraction(
        (big_j + 1) * (big_j - 2 * l3) * (big_j - 2 * l1) * (big_j - 2 * l2 - 1)
        * factorial(big_j - 2 * l3) * factorial(big_j - 2 * l1) * factorial(big_j - 2 * l2 - 2),
        l1 * (l1 + 1) * l2 * (l2 + 1) * factorial(big_j + 1),
    )
    prefactor = Fraction(
        factorial(half),
        2 * factorial(half - l3) * factorial(half - l1) * factorial(half - l2 - 1),
    )
    root = SignedSqrtRational.of(_parity(half), radicand)
    return root.scale(prefactor)


def threej_recursive_112(l1: int, l2: int, l3: int) -> SignedSqrtRational:
    """(l1 l2 l3; 1 1 -2) from the (1 -1 0) closed form of permuted degrees.

    For an odd degree sum the ladder-operator recursions collapse to

        (l1 l2 l3; 1 1 -2)
            = (l2(l2+1) - l1(l1+1)) / sqrt(l1(l1+1) (l3(l3+1)-2))
              * (l2 l3 l1; 1 -1 0),

    so equal l1, l2 force a zero.  l3 <= 1 makes the denominator vanish and
    an even degree sum breaks the derivation; both are rejected.
    """
    if l1 < 1 or l2 < 1:
        raise ClosedFormDomainError("requires l1, l2 >= 1")
    if l3 < 2:
        raise ClosedFormDomainError("denominator l3(l3+1)-2 vanishes for l3 <= 1")
    if (l1 + l2 + l3) % 2 == 0:
        raise ClosedFormDomainError("degree sum must be odd for this recursion")
    if not abs(l1 - l2) <= l3 <= l1 + l2:
        return SignedSqrtRational.zero()
    turn1 = l1 * (l1 + 1)
    turn2 = l2 * (l2 + 1)
    turn3 = l3 * (l3 + 1)
    base = threej_closed_110(l2, l3, l1).scale(turn2 - turn1)
    return base * SignedSqrtRational.sqrt(Fraction(1, turn1 * (turn3 - 2)))


def clebsch_gordan(l1: int, m1: int, l2: int, m2: int, l3: int, m3: int) -> SignedSqrtRational:
    """Clebsch-Gordan coefficient C^{l3 m3}_{l1 m1 l2 m2} from the 3j symbol."""
    base = threej_lm(l1, l2, l3, -m1, -m2, m3)
    return base.scale(_parity(l3 + m3)) * SignedSqrtRational.sqrt(2 * l3 + 1)
