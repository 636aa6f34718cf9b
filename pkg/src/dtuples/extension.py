"""Algebraic extension of D(n) triples, gap inequalities, approximation defects.

For a D(n) triple {a, b, c} with ab+n = r^2, ac+n = s^2, bc+n = t^2 the integer

    e = n(a+b+c) + 2abc - 2rst

makes ae+n^2, be+n^2, ce+n^2 perfect squares with roots x = at-rs, y = bs-rt,
z = cr-st, and c is recovered from (a, b, e, x, y) by

    n^2 (c - a - b) - n e = 2 (abe + rxy).

All checks are exact integer or Fraction comparisons except the defect
computation, which uses mpmath at 40 significant digits.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .arith import square_witness
from .errors import IncompatibleError, InputError
from .tuples import check_elements, verify

LEMMA4_FACTOR = Fraction(3847, 1000)
LEMMA5_C_FACTOR = Fraction(388, 100)
LEMMA5_D_FACTOR = Fraction(489, 100)

_DPS = 40


@dataclass(frozen=True)
class ExtensionData:
    a: int
    b: int
    c: int
    n: int
    r: int
    s: int
    t: int
    e: int
    x: int
    y: int
    z: int

    def square_identities(self) -> tuple[bool, bool, bool]:
        n2 = self.n * self.n
        return (
            self.a * self.e + n2 == self.x * self.x,
            self.b * self.e + n2 == self.y * self.y,
            self.c * self.e + n2 == self.z * self.z,
        )

    def reconstruction_identity(self) -> bool:
        a, b, c, n, e = self.a, self.b, self.c, self.n, self.e
        return n * n * (c - a - b) - n * e == 2 * (a * b * e + self.r * self.x * self.y)

    def identities_hold(self) -> bool:
        return all(self.square_identities()) and self.reconstruction_identity()


def _sorted_triple(triple: Sequence[int], n: int) -> tuple[int, int, int]:
    if len(triple) != 3:
        raise InputError(f"expected three elements, got {len(triple)}")
    check_elements(n, list(triple))
    a, b, c = sorted(triple)
    return a, b, c


def _roots(a: int, b: int, c: int, n: int) -> tuple[int, int, int]:
    r, s, t = (square_witness(u * v + n) for u, v in ((a, b), (a, c), (b, c)))
    if r is None or s is None or t is None:
        raise IncompatibleError(f"{{{a}, {b}, {c}}} does not have the property D({n})")
    return r, s, t


def compute_e(triple: Sequence[int], n: int) -> ExtensionData:
    a, b, c = _sorted_triple(triple, n)
    r, s, t = _roots(a, b, c, n)
    e = n * (a + b + c) + 2 * a * b * c - 2 * r * s * t
    return ExtensionData(a, b, c, n, r, s, t, e, a * t - r * s, b * s - r * t, c * r - s * t)


def regular_fourth(triple: Sequence[int], n: int) -> list[int]:
    """Fourth elements d = a+b+c + 2(abc +- rst)/n that pass verification.

    Both signs are tried; a sign is dropped when n does not divide
    2(abc +- rst), when d <= c, or when {a, b, c, d} fails verify.
    """
    a, b, c = _sorted_triple(triple, n)
    r, s, t = _roots(a, b, c, n)
    out = set()
    for sign in (1, -1):
        num = 2 * (a * b * c + sign * r * s * t)
        if num % n:
            continue
        d = a + b + c + num // n
        if d > c and verify(n, (a, b, c, d)).valid:
            out.add(d)
    return sorted(out)


@dataclass(frozen=True)
class GapReport:
    """Applicability and truth of the two gap principles for one quadruple.

    The ``*_holds`` flags are the raw inequalities, evaluated whether or not
    the corresponding lemma applies.
    """

    n: int
    quadruple: tuple[int, int, int, int]
    applicable_lemma4: bool
    applicable_lemma5: bool
    d_bound_lemma4: Fraction  # 3.847 bc / n^2
    c_bound_lemma5: Fraction  # 3.88 a
    d_bound_lemma5: Fraction  # 4.89 c
    lemma4_holds: bool
    lemma5_c_holds: bool
    lemma5_d_holds: bool

    @property
    def violations(self) -> list[str]:
        out = []
        if self.applicable_lemma4 and not self.lemma4_holds:
            out.append("d > 3.847bc/n^2")
        if self.applicable_lemma5 and not self.lemma5_c_holds:
            out.append("c > 3.88a")
        if self.applicable_lemma5 and not self.lemma5_d_holds:
            out.append("d > 4.89c")
        return out


def gap_check(quadruple: Sequence[int], n: int) -> GapReport:
    if len(quadruple) != 4:
        raise InputError(f"expected four elements, got {len(quadruple)}")
    rep = verify(n, quadruple)
    if not rep.valid:
        raise InputError(f"{sorted(quadruple)} does not have the property D({n})")
    a, b, c, d = rep.elements
    n2 = n * n
    d4 = LEMMA4_FACTOR * b * c / n2
    c5 = LEMMA5_C_FACTOR * a
    d5 = LEMMA5_D_FACTOR * c
    return GapReport(
        n=n,
        quadruple=(a, b, c, d),
        applicable_lemma4=abs(n) ** 3 <= a,
        applicable_lemma5=n2 <= a and abs(n) != 1,
        d_bound_lemma4=d4,
        c_bound_lemma5=c5,
        d_bound_lemma5=d5,
        lemma4_holds=d > d4,
        lemma5_c_holds=c > c5,
        lemma5_d_holds=d > d5,
    )


def gap_lower_bounds(first: int, second: int, n: int, count: int) -> list[Fraction]:
    """Iterate L_{j+1} = 3.847 * L_j * L_{j-1} / n^2 from two seed lower bounds.

    Returns ``count`` successive values (the seeds are not included).
    """
    if first < 1 or second < 1:
        raise InputError("seeds must be >= 1")
    if count < 1:
        raise InputError("count must be >= 1")
    if n == 0:
        raise InputError("n must be nonzero")
    prev, cur = Fraction(first), Fraction(second)
    out = []
    for _ in range(count):
        prev, cur = cur, LEMMA4_FACTOR * cur * prev / (n * n)
        out.append(cur)
    return out


@dataclass(frozen=True)
class Lemma1Defect:
    defect1: mpmath.mpf
    defect2: mpmath.mpf
    bound: mpmath.mpf

    @property
    def holds(self) -> bool:
        return max(self.defect1, self.defect2) < self.bound


def lemma1_defect(a: int, b: int, c: int, d: int, n: int) -> Lemma1Defect:
    """Distances of sbx/(abz) and tay/(abz) from sqrt(1+n/ac) and sqrt(1+n/bc).

    x, y, z are the positive roots of ad+n, bd+n, cd+n; the returned bound
    is c|n| / (a z^2).
    """
    if not a < b < c:
        raise InputError("need a < b < c")
    if a * c <= n:
        raise InputError(f"need ac > n, got ac = {a * c}, n = {n}")
    if not verify(n, (a, b, c, d)).valid:
        raise InputError(f"{{{a}, {b}, {c}, {d}}} does not have the property D({n})")
    s = square_witness(a * c + n)
    t = square_witness(b * c + n)
    x = square_witness(a * d + n)
    y = square_witness(b * d + n)
    z = square_witness(c * d + n)
    if min(x, y, z) <= 0:
        raise InputError("x, y, z must be positive")
    with mpmath.workdps(_DPS):
        theta1 = mpmath.sqrt(1 + mpmath.mpf(n) / (a * c))
        theta2 = mpmath.sqrt(1 + mpmath.mpf(n) / (b * c))
        q = mpmath.mpf(a * b * z)
        defect1 = abs(theta1 - s * b * x / q)
        defect2 = abs(theta2 - t * a * y / q)
        bound = mpmath.mpf(c * abs(n)) / (a * z * z)
    return Lemma1Defect(defect1, defect2, bound)
