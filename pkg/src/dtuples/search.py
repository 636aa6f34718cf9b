"""Exhaustive search for the largest D(n) set inside [1, N].

The compatibility graph has an edge a--b whenever ab + n is a square. D(n)
sets in [1, N] are exactly the cliques of that graph, so the search is:

1. enumerate edges without touching all N^2/2 pairs: for each a, the roots
   of r^2 = n (mod a) come from square roots modulo prime powers glued by
   CRT along a smallest-prime-factor table, and each admissible r gives
   b = (r^2 - n)/a directly;
2. compute the clique number by branch and bound over a degeneracy order,
   pruning with greedy colourings;
3. find the lexicographically smallest clique of that size, searching only
   the (size-1)-core in ascending vertex order.

``cn_scan`` repeats this with N = n^2 over a range of n and checkpoints one
JSON line per n.
"""
from __future__ import annotations

import json
import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator, Optional

from .arith import spf_table, sqrtmod
from .errors import CacheError, InputError
from .tuples import DTuple, verify

log = logging.getLogger(__name__)


def _check(n: int, N: int, min_N: int = 1) -> None:
    if n == 0:
        raise InputError("n must be nonzero")
    if N < min_N:
        raise InputError(f"N must be >= {min_N}")


def roots_table(n: int, N: int) -> list[list[int]]:
    """roots[a] = sorted residues r mod a with r^2 = n (mod a), for 1 <= a <= N."""
    spf = spf_table(N).tolist()
    roots: list[list[int]] = [[] for _ in range(N + 1)]
    if N >= 1:
        roots[1] = [0]
    prime_power_roots: dict[int, list[int]] = {}
    for a in range(2, N + 1):
        p = spf[a]
        m, q = a, 1
        while m % p == 0:
            m //= p
            q *= p
        rq = prime_power_roots.get(q)
        if rq is None:
            rq = prime_power_roots[q] = sqrtmod(n % q, q)
        if m == 1:
            roots[a] = rq
            continue
        rm = roots[m]
        if not rm or not rq:
            continue
        inv = pow(m, -1, q)
        roots[a] = sorted(r1 + m * ((r2 - r1) * inv % q) for r1 in rm for r2 in rq)
    return roots


def _pairs_by_a(n: int, N: int) -> Iterator[tuple[int, list[int]]]:
    """Yield (a, roots r ascending) with a < b = (r^2-n)/a <= N."""
    roots = roots_table(n, N)
    isqrt = math.isqrt
    for a in range(1, N):
        ra = roots[a]
        if not ra:
            continue
        # b >= a + 1  <=>  r^2 >= a(a+1) + n ;  b <= N  <=>  r^2 <= aN + n
        lo = a * (a + 1) + n
        rlo = isqrt(lo - 1) + 1 if lo > 0 else 0
        top = a * N + n
        if top < 0:
            continue
        rhi = isqrt(top)
        if rhi < rlo:
            continue
        base = rlo - rlo % a
        rs = []
        for r0 in ra:
            r = base + r0
            if r < rlo:
                r += a
            while r <= rhi:
                rs.append(r)
                r += a
        if rs:
            rs.sort()
            yield a, rs


def compatibility_pairs(n: int, N: int) -> Iterator[tuple[int, int, int]]:
    """All (a, b, r) with 1 <= a < b <= N and ab + n = r^2, ordered by a then b."""
    _check(n, N, 2)
    for a, rs in _pairs_by_a(n, N):
        for r in rs:
            yield a, (r * r - n) // a, r


def _adjacency(n: int, N: int) -> tuple[dict[int, set[int]], int]:
    adj: dict[int, set[int]] = {}
    count = 0
    for a, rs in _pairs_by_a(n, N):
        na = adj.setdefault(a, set())
        for r in rs:
            b = (r * r - n) // a
            na.add(b)
            nb = adj.get(b)
            if nb is None:
                adj[b] = {a}
            else:
                nb.add(a)
        count += len(rs)
    return adj, count


def core_order(adj: dict[int, set[int]]) -> tuple[list[int], dict[int, int]]:
    """Degeneracy (smallest-last) order and core numbers (Batagelj-Zaversnik)."""
    verts = sorted(adj)
    if not verts:
        return [], {}
    index = {v: i for i, v in enumerate(verts)}
    nbrs = [[index[u] for u in adj[v]] for v in verts]
    deg = [len(nb) for nb in nbrs]
    maxdeg = max(deg)
    bin_start = [0] * (maxdeg + 1)
    for d in deg:
        bin_start[d] += 1
    start = 0
    for d in range(maxdeg + 1):
        bin_start[d], start = start, start + bin_start[d]
    pos = [0] * len(verts)
    vert = [0] * len(verts)
    for v, d in enumerate(deg):
        pos[v] = bin_start[d]
        vert[pos[v]] = v
        bin_start[d] += 1
    for d in range(maxdeg, 0, -1):
        bin_start[d] = bin_start[d - 1]
    bin_start[0] = 0
    for i in range(len(verts)):
        v = vert[i]
        dv = deg[v]
        for u in nbrs[v]:
            du = deg[u]
            if du > dv:
                # swap u to the front of its bin, then shrink the bin
                pu, pw = pos[u], bin_start[du]
                w = vert[pw]
                if u != w:
                    pos[u], pos[w] = pw, pu
                    vert[pu], vert[pw] = w, u
                bin_start[du] += 1
                deg[u] = du - 1
    order = [verts[v] for v in vert]
    core = {verts[v]: deg[v] for v in range(len(verts))}
    return order, core


def _colour_bound(cand: list[int], adj: dict[int, set[int]]) -> int:
    """Number of colours in a greedy colouring of ``cand``: an upper bound on its clique number."""
    classes: list[list[int]] = []
    for v in cand:
        nv = adj[v]
        for cls in classes:
            if not any(u in nv for u in cls):
                cls.append(v)
                break
        else:
            classes.append([v])
    return len(classes)


class _Counter:
    __slots__ = ("nodes",)

    def __init__(self):
        self.nodes = 0


def _clique_number(adj: dict[int, set[int]], order: list[int], core: dict[int, int], counter: _Counter) -> int:
    pos = {v: i for i, v in enumerate(order)}
    best = 1 if adj else 0

    def expand(size: int, cand: list[int]) -> None:
        nonlocal best
        counter.nodes += 1
        if size > best:
            best = size
        if not cand or size + len(cand) <= best:
            return
        if size + _colour_bound(cand, adj) <= best:
            return
        for i, u in enumerate(cand):
            if size + len(cand) - i <= best:
                return
            nu = adj[u]
            expand(size + 1, [w for w in cand[i + 1 :] if w in nu])

    # process the densest part of the graph first so `best` rises early
    for v in reversed(order):
        # v has at most core[v] neighbours later in the order
        if core[v] + 1 <= best:
            continue
        pv = pos[v]
        # a clique larger than `best` only uses vertices of core number >= best
        later = [u for u in adj[v] if pos[u] > pv and core[u] >= best]
        if len(later) + 1 <= best:
            continue
        later.sort(key=pos.__getitem__)
        expand(1, later)
    return best


def _smallest_clique(adj: dict[int, set[int]], core: dict[int, int], size: int, counter: _Counter) -> list[int]:
    """Lexicographically smallest clique with ``size`` vertices (size >= 2)."""
    keep = {v for v, k in core.items() if k >= size - 1}

    def dfs(clique: list[int], cand: list[int]) -> Optional[list[int]]:
        counter.nodes += 1
        if len(clique) == size:
            return clique
        for i, u in enumerate(cand):
            if len(clique) + len(cand) - i < size:
                return None
            nu = adj[u]
            found = dfs(clique + [u], [w for w in cand[i + 1 :] if w in nu])
            if found:
                return found
        return None

    for v in sorted(keep):
        cand = sorted(u for u in adj[v] if u > v and u in keep)
        if len(cand) + 1 < size:
            continue
        found = dfs([v], cand)
        if found:
            return found
    raise AssertionError(f"no clique of size {size}; clique number computation is inconsistent")


@dataclass
class SearchReport:
    n: int
    N: int
    max_size: int
    witness: DTuple
    nodes_explored: int
    pairs_found: int
    elapsed: float  # seconds

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "n": self.n,
            "N": self.N,
            "c": self.max_size,
            "witness": list(self.witness.elements),
            "nodes": self.nodes_explored,
            "pairs": self.pairs_found,
        }
        if timing:
            out["ms"] = round(self.elapsed * 1000)
        return out


def max_tuple(n: int, N: int) -> SearchReport:
    """Largest D(n) set contained in [1, N]; ties go to the lexicographically smallest."""
    _check(n, N)
    start = time.perf_counter()
    counter = _Counter()
    if N >= 2:
        adj, pairs = _adjacency(n, N)
    else:
        adj, pairs = {}, 0
    if not adj:
        witness = [1]
    else:
        order, core = core_order(adj)
        omega = _clique_number(adj, order, core, counter)
        witness = _smallest_clique(adj, core, omega, counter)
    report = SearchReport(
        n=n,
        N=N,
        max_size=len(witness),
        witness=DTuple(n, tuple(witness)),
        nodes_explored=counter.nodes,
        pairs_found=pairs,
        elapsed=time.perf_counter() - start,
    )
    if not verify(n, witness).valid:
        raise AssertionError(f"search produced a non-D({n}) witness {witness}")
    return report


# --- resumable scan -------------------------------------------------------

@dataclass(frozen=True)
class ScanRecord:
    n: int
    N: int
    c: int
    witness: tuple[int, ...]
    nodes: int
    pairs: int
    ms: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "N": self.N,
            "c": self.c,
            "witness": list(self.witness),
            "nodes": self.nodes,
            "pairs": self.pairs,
            "ms": self.ms,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ScanRecord":
        return cls(
            n=int(obj["n"]),
            N=int(obj["N"]),
            c=int(obj["c"]),
            witness=tuple(int(v) for v in obj["witness"]),
            nodes=int(obj.get("nodes", 0)),
            pairs=int(obj.get("pairs", 0)),
            ms=int(obj.get("ms", 0)),
        )


def _scan_one(n: int) -> dict:
    return max_tuple(n, n * n).to_json()


def load_cache(path: Path) -> dict[int, ScanRecord]:
    """Read a JSONL cache; a truncated final line is cut from the file."""
    path = Path(path)
    if not path.exists():
        return {}
    try:
        lines = path.read_bytes().splitlines(keepends=True)
    except OSError as exc:
        raise CacheError(f"cannot read cache {path}: {exc}") from exc
    records: dict[int, ScanRecord] = {}
    offset = 0
    for lineno, line in enumerate(lines, 1):
        last_unterminated = lineno == len(lines) and not line.endswith(b"\n")
        if line.strip():
            try:
                rec = ScanRecord.from_json(json.loads(line))
            except (ValueError, KeyError, TypeError) as exc:
                if last_unterminated:
                    log.warning("dropping truncated final line %d of %s", lineno, path)
                    with open(path, "r+b") as fh:
                        fh.truncate(offset)
                    break
                raise CacheError(f"{path}: corrupt record on line {lineno}: {exc}") from exc
            if rec.N != rec.n * rec.n or len(rec.witness) != rec.c or not verify(rec.n, rec.witness).valid:
                raise CacheError(f"{path}: inconsistent record on line {lineno}")
            records[rec.n] = rec
            if last_unterminated:
                with open(path, "ab") as fh:
                    fh.write(b"\n")
        offset += len(line)
    return records


def default_jobs() -> int:
    env = os.environ.get("DTUPLE_JOBS")
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise InputError(f"DTUPLE_JOBS={env!r} is not an integer") from None
        if jobs >= 1:
            return jobs
        raise InputError("DTUPLE_JOBS must be >= 1")
    return os.cpu_count() or 1


def cn_scan(
    n_from: int,
    n_to: int,
    cache_path: Optional[Path] = None,
    jobs: int = 1,
    progress: Optional[Callable[[ScanRecord], None]] = None,
) -> list[ScanRecord]:
    """max_tuple(n, n^2) for every nonzero n in [n_from, n_to], sorted by n.

    With a cache path, finished n are read back instead of recomputed and each
    new result is appended as one complete JSON line as soon as it is known.
    """
    if n_from > n_to:
        raise InputError(f"empty range [{n_from}, {n_to}]")
    if jobs < 1:
        raise InputError("jobs must be >= 1")
    wanted = [n for n in range(n_from, n_to + 1) if n != 0]
    if not wanted:
        raise InputError("range contains only n = 0")
    done: dict[int, ScanRecord] = {}
    if cache_path is not None:
        cache_path = Path(cache_path)
        done = load_cache(cache_path)
    todo = [n for n in wanted if n not in done]
    # largest |n| first: those dominate the running time
    todo.sort(key=lambda n: (-abs(n), n))

    sink = None
    if cache_path is not None and todo:
        try:
            sink = open(cache_path, "a", encoding="utf-8")
        except OSError as exc:
            raise CacheError(f"cannot write cache {cache_path}: {exc}") from exc

    def record(obj: dict) -> None:
        rec = ScanRecord.from_json(obj)
        done[rec.n] = rec
        if sink is not None:
            sink.write(json.dumps(rec.to_json(), separators=(",", ":")) + "\n")
            sink.flush()
        if progress is not None:
            progress(rec)

    try:
        if jobs == 1 or len(todo) <= 1:
            for n in todo:
                record(_scan_one(n))
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = [pool.submit(_scan_one, n) for n in todo]
                for fut in as_completed(futures):
                    record(fut.result())
    finally:
        if sink is not None:
            sink.close()
    return [done[n] for n in wanted]
