"""Brute-force reference implementations.

None of these import from dtuples; they are deliberately slow and obvious so
the fast paths can be checked against them.
"""
from itertools import combinations


def bisect_isqrt(m):
    lo, hi = 0, 1
    while hi * hi <= m:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid * mid <= m:
            lo = mid
        else:
            hi = mid
    return lo


def root_or_none(v):
    if v < 0:
        return None
    r = bisect_isqrt(v)
    return r if r * r == v else None


def sqrtmod_scan(v, q):
    return [r for r in range(q) if (r * r - v) % q == 0]


def legendre_scan(v, p):
    v %= p
    if v == 0:
        return 0
    return 1 if any(r * r % p == v for r in range(1, p)) else -1


def admissible_scan(prefix, n, p):
    return {x for x in range(p) if all(legendre_scan(a * x + n, p) >= 0 for a in prefix)}


def solve_scan(prefix, n, N):
    return [x for x in range(1, N + 1) if all(root_or_none(a * x + n) is not None for a in prefix)]


def pairs_scan(n, N):
    out = []
    for a in range(1, N + 1):
        for b in range(a + 1, N + 1):
            r = root_or_none(a * b + n)
            if r is not None:
                out.append((a, b, r))
    return out


def max_clique_scan(n, N):
    """(size, lexicographically smallest witness) by growing every D(n) set in [1, N]."""
    adj = {v: set() for v in range(1, N + 1)}
    for a, b, _ in pairs_scan(n, N):
        adj[a].add(b)
        adj[b].add(a)
    best = [1]

    def grow(clique, cand):
        nonlocal best
        if len(clique) > len(best):
            best = list(clique)
        for i, u in enumerate(cand):
            grow(clique + [u], [w for w in cand[i + 1:] if w in adj[u]])

    for v in range(1, N + 1):
        grow([v], sorted(u for u in adj[v] if u > v))
    return len(best), best


def all_pairs_square(n, elems):
    return all(root_or_none(a * b + n) is not None for a, b in combinations(elems, 2))
