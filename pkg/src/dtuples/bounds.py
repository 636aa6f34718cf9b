"""Closed-form upper bounds on the size of D(n) sets, and Bennett's gamma/lambda.

All logarithms are natural. Bounds are returned as real numbers; turning a
strict bound m < B into m <= floor(B) is left to the caller.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from .errors import InapplicableBoundError, InputError

LARGE_BOUND = 21  # elements >= |n|^3
SMALL_BOUND_SLOPE, SMALL_BOUND_OFFSET = 0.65, 2.24
VERY_SMALL_MAIN, VERY_SMALL_TAIL = 265.55, 9.01
TOTAL_BOUND_SMALL_N = 32
TOTAL_BOUND_MAIN = 267.81
THRESHOLD = 400


@dataclass(frozen=True)
class BoundReport:
    n: int
    bound_A: float
    bound_B: float
    bound_C: Optional[float]
    bound_M: float
    gyarmati_C: Optional[float]

    def to_json(self) -> dict:
        return asdict(self)


def theorem_bounds(n: int) -> BoundReport:
    if n == 0:
        raise InputError("n must be nonzero")
    m = abs(n)
    ln = math.log(m)
    lnln = math.log(ln) if m > 1 else None
    bound_c = None
    if m >= THRESHOLD:
        bound_c = VERY_SMALL_MAIN * ln * lnln**2 + VERY_SMALL_TAIL * lnln
    if m <= THRESHOLD:
        bound_m = float(TOTAL_BOUND_SMALL_N)
    else:
        bound_m = TOTAL_BOUND_MAIN * ln * lnln**2
    return BoundReport(
        n=n,
        bound_A=float(LARGE_BOUND),
        bound_B=SMALL_BOUND_SLOPE * ln + SMALL_BOUND_OFFSET,
        bound_C=bound_c,
        bound_M=bound_m,
        gyarmati_C=4 * n * math.log(n) if n >= 2 else None,
    )


@dataclass(frozen=True)
class BennettQuantities:
    c0: int
    c1: int
    c2: int
    L: int
    M: int
    gamma: Fraction
    lam: mpmath.mpf

    @property
    def valid(self) -> bool:
        """The simultaneous-approximation theorem needs L > M^9."""
        return self.L > self.M**9


def bennett_gamma(c0: int, c1: int, c2: int) -> Fraction:
    if c2 - c1 >= c1 - c0:
        return Fraction((c2 - c0) ** 2 * (c2 - c1) ** 2, 2 * c2 - c0 - c1)
    return Fraction((c2 - c0) ** 2 * (c1 - c0) ** 2, c1 + c2 - 2 * c0)


def bennett_gamma_lambda(c0: int, c1: int, c2: int, L: int) -> BennettQuantities:
    if not c0 < c1 < c2:
        raise InputError(f"need c0 < c1 < c2, got {c0}, {c1}, {c2}")
    if 0 not in (c0, c1, c2):
        raise InputError("one of c0, c1, c2 must be zero")
    if L < 1:
        raise InputError("L must be >= 1")
    gamma = bennett_gamma(c0, c1, c2)
    prod = ((c0 - c1) * (c0 - c2) * (c1 - c2)) ** 2
    with mpmath.workdps(40):
        den = mpmath.log(mpmath.mpf("1.7") * L * L / prod)
        if den <= 0:
            raise InapplicableBoundError("log(1.7 L^2 / prod (c_i - c_j)^2) is not positive")
        num = mpmath.log(33 * L * mpmath.mpf(gamma.numerator) / gamma.denominator)
        lam = 1 + num / den
    return BennettQuantities(c0, c1, c2, L, max(abs(c0), abs(c1), abs(c2)), gamma, lam)
