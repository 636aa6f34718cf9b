"""Residue-class sieving for the system a_1 x + n = square, ..., a_k x + n = square.

For an odd prime p coprime to every a_i, a class x mod p can be discarded as
soon as some a_i x + n is a quadratic non-residue mod p. ``solve_system``
uses the surviving classes only to thin the candidate list; every reported
solution is confirmed with an exact integer square root.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import mpmath
import numpy as np

from .arith import factorize, prime_power, primes_upto, square_witness
from .errors import InapplicableBoundError, InputError

DEFAULT_SIEVE_LIMIT = 256
SEGMENT = 1 << 18
G_BOUND_CONST = 0.722


def _require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or factorize(p) != {p: 1}:
        raise InputError(f"{p} is not an odd prime")


def _check_prefix(prefix: Sequence[int], n: int) -> list[int]:
    if n == 0:
        raise InputError("n must be nonzero")
    prefix = [int(a) for a in prefix]
    if not prefix:
        raise InputError("empty prefix")
    if any(a < 1 for a in prefix):
        raise InputError("prefix elements must be positive")
    if len(set(prefix)) != len(prefix):
        raise InputError("prefix elements must be distinct")
    return prefix


def _allowed_mask(prefix: Sequence[int], n: int, p: int) -> np.ndarray:
    squares = np.zeros(p, dtype=bool)
    squares[(np.arange(p, dtype=np.int64) ** 2) % p] = True
    xs = np.arange(p, dtype=np.int64)
    mask = np.ones(p, dtype=bool)
    for a in prefix:
        mask &= squares[((a % p) * xs + n % p) % p]
    return mask


def admissible_residues(prefix: Sequence[int], n: int, p: int) -> frozenset[int]:
    """Classes x mod p with (a_i x + n | p) in {0, 1} for every prefix element.

    The size of the result is g(p).
    """
    prefix = _check_prefix(prefix, n)
    _require_odd_prime(p)
    bad = [a for a in prefix if a % p == 0]
    if bad:
        raise InputError(f"p = {p} divides prefix element {bad[0]}")
    return frozenset(np.flatnonzero(_allowed_mask(prefix, n, p)).tolist())


@dataclass
class SieveSpec:
    """Allowed residue classes per modulus. ``allowed[q]`` is a bool mask of length q."""

    primes: list[int]
    allowed: dict[int, np.ndarray] = field(repr=False)

    def g(self, q: int) -> int:
        return int(self.allowed[q].sum())

    def residues(self, q: int) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.allowed[q]).tolist())

    def admits(self, x: int) -> bool:
        return all(self.allowed[q][x % q] for q in self.primes)

    def gallagher_entries(self) -> list[tuple[int, None, int]]:
        return [(q, None, self.g(q)) for q in self.primes]

    @classmethod
    def build(cls, prefix: Sequence[int], n: int, primes: Optional[Iterable[int]] = None) -> "SieveSpec":
        """Spec over ``primes`` (default: odd primes <= 256), skipping those dividing the prefix."""
        prefix = _check_prefix(prefix, n)
        if primes is None:
            primes = [p for p in primes_upto(DEFAULT_SIEVE_LIMIT) if p > 2]
            primes = [p for p in primes if all(a % p for a in prefix)]
        else:
            primes = list(primes)
            for p in primes:
                _require_odd_prime(p)
                if any(a % p == 0 for a in prefix):
                    raise InputError(f"p = {p} divides a prefix element")
        return cls(primes, {p: _allowed_mask(prefix, n, p) for p in primes})


def _segment_mask(spec: SieveSpec, lo: int, hi: int) -> np.ndarray:
    length = hi - lo + 1
    mask = np.ones(length, dtype=bool)
    offsets = np.arange(length, dtype=np.int64)
    for q in spec.primes:
        mask &= spec.allowed[q][(offsets + lo % q) % q]
    return mask


def solve_system(
    prefix: Sequence[int],
    n: int,
    N: int,
    spec: Optional[SieveSpec] = None,
    segment: int = SEGMENT,
) -> list[int]:
    """All 1 <= x <= N such that a*x + n is a perfect square for every a in ``prefix``."""
    prefix = _check_prefix(prefix, n)
    if N < 1:
        raise InputError("N must be >= 1")
    if spec is None:
        spec = SieveSpec.build(prefix, n)
    out = []
    for lo in range(1, N + 1, segment):
        hi = min(N, lo + segment - 1)
        for off in np.flatnonzero(_segment_mask(spec, lo, hi)).tolist():
            x = lo + off
            if all(square_witness(a * x + n) is not None for a in prefix):
                out.append(x)
    return out


def gallagher_bound(entries: Sequence[tuple], N: int) -> mpmath.mpf:
    """(sum L(q) - log N) / (sum L(q)/g(q) - log N) for entries (q, L(q), g(q)).

    L(q) = log p for q = p^alpha; pass None to have it computed at full
    precision. Raises InapplicableBoundError when the denominator is not
    positive.
    """
    if not entries:
        raise InputError("no sieve entries")
    if N < 1:
        raise InputError("N must be >= 1")
    with mpmath.workdps(40):
        num = mpmath.mpf(0)
        den = mpmath.mpf(0)
        for q, lam, g in entries:
            if g < 1:
                raise InputError(f"g({q}) = {g} < 1")
            if lam is None:
                lam = mpmath.log(prime_power(q)[0])
            lam = mpmath.mpf(lam)
            num += lam
            den += lam / g
        log_n = mpmath.log(N)
        num -= log_n
        den -= log_n
        if den <= 0:
            raise InapplicableBoundError(f"denominator {mpmath.nstr(den, 8)} is not positive")
        return num / den


def g_bound(p: int) -> float:
    """0.722 sqrt(p) log p."""
    return G_BOUND_CONST * math.sqrt(p) * math.log(p)


def g_table(prefix: Sequence[int], n: int, primes: Iterable[int]) -> list[dict]:
    """Rows (p, g, bound_0722, ok) for each prime coprime to the prefix."""
    rows = []
    for p in primes:
        if any(a % p == 0 for a in prefix):
            continue
        g = len(admissible_residues(prefix, n, p))
        bound = g_bound(p)
        rows.append({"p": p, "g": g, "bound_0722": bound, "ok": g < bound})
    return rows
