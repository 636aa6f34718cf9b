"""Exact integer primitives: square roots, perfect-square witnesses, square roots mod q.

Everything here works on Python ints, so nothing overflows. The small-prime
helpers (``primes_upto``, ``spf_table``) use numpy for the sieve itself and
hand back plain ints.
"""
from __future__ import annotations

import math
from typing import Optional

import numpy as np

from .errors import DomainError


def isqrt(m: int) -> int:
    """Largest r with r*r <= m."""
    if m < 0:
        raise DomainError(f"isqrt of negative number {m}")
    return math.isqrt(m)


def square_witness(v: int) -> Optional[int]:
    """Return r >= 0 with r*r == v, or None when v is not a perfect square."""
    if v < 0:
        return None
    r = math.isqrt(v)
    return r if r * r == v else None


def is_square(v: int) -> bool:
    return square_witness(v) is not None


def legendre(v: int, p: int) -> int:
    """Legendre symbol (v|p) for an odd prime p, as -1, 0 or 1."""
    v %= p
    if v == 0:
        return 0
    return 1 if pow(v, (p - 1) // 2, p) == 1 else -1


def primes_upto(n: int) -> list[int]:
    """All primes p <= n."""
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).tolist()


def spf_table(n: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..n (entries 0 and 1 are 0)."""
    spf = np.zeros(n + 1, dtype=np.int64)
    if n < 2:
        return spf
    for p in range(2, n + 1):
        if p * p > n:
            break
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest
    spf[:2] = 0
    return spf


def factorize(m: int) -> dict[int, int]:
    """Trial-division factorization; intended for the small moduli used here."""
    if m < 1:
        raise DomainError(f"cannot factor {m}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, alpha) with q == p**alpha, or raise DomainError."""
    if q < 2:
        raise DomainError(f"{q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise DomainError(f"{q} is not a prime power")
    ((p, alpha),) = f.items()
    return p, alpha


def _tonelli_shanks(v: int, p: int) -> int:
    # v is a nonzero quadratic residue mod the odd prime p
    if p % 4 == 3:
        return pow(v, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(v, q, p), pow(v, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _roots_mod_prime(v: int, p: int) -> list[int]:
    v %= p
    if p == 2:
        return [v]
    if v == 0:
        return [0]
    if pow(v, (p - 1) // 2, p) != 1:
        return []
    r = _tonelli_shanks(v, p)
    return sorted({r, p - r})


def sqrtmod(v: int, q: int) -> list[int]:
    """All residues 0 <= r < q with r*r == v (mod q), ascending.

    q must be a prime power p**alpha. Roots mod p come from Tonelli-Shanks.
    Lifting to higher powers uses Newton's step when p is odd and p does not
    divide v (the lift is then unique); otherwise (p == 2, or p | v) every
    root mod p**(k-1) is tried against its p lifts r + j*p**(k-1).
    """
    p, alpha = prime_power(q)
    v %= q
    roots = _roots_mod_prime(v, p)
    mod = p
    for _ in range(1, alpha):
        nxt = mod * p
        target = v % nxt
        lifted: set[int] = set()
        if p != 2 and target % p:
            for r in roots:
                # r*r == v mod `mod`; one Newton step doubles p-adic precision
                inv = pow(2 * r, -1, nxt)
                lifted.add((r - (r * r - target) * inv) % nxt)
        else:
            for r in roots:
                for j in range(p):
                    c = r + j * mod
                    if (c * c - target) % nxt == 0:
                        lifted.add(c)
        roots = sorted(lifted)
        mod = nxt
        if not roots:
            break
    return sorted(roots)


def crt_combine(r1: int, m1: int, r2: int, m2: int, inv_m1: int) -> int:
    """Unique x mod m1*m2 with x == r1 (m1), x == r2 (m2); inv_m1 = m1^-1 mod m2."""
    return r1 + m1 * ((r2 - r1) * inv_m1 % m2)
