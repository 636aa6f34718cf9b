"""Sample admissible-residue counts g(p) against 0.722 sqrt(p) ln p.

For each prime p in [pmin, pmax], draw random prefixes of length floor(log2 p)
coprime to p and a random nonzero n, and record the largest g(p) seen.
"""
from __future__ import annotations

import argparse
import csv
import math
import random
import sys
from dataclasses import dataclass

from dtuples.arith import primes_upto
from dtuples.sieve import admissible_residues, g_bound


@dataclass
class SamplingConfig:
    pmin: int = 83
    pmax: int = 499
    prefixes: int = 200
    element_max: int = 10**6
    n_max: int = 1000
    seed: int = 0


def sample(cfg: SamplingConfig):
    rng = random.Random(cfg.seed)
    ns = [v for v in range(-cfg.n_max, cfg.n_max + 1) if v]
    for p in (q for q in primes_upto(cfg.pmax) if q >= max(cfg.pmin, 3)):
        k = int(math.log2(p))
        worst = 0
        for _ in range(cfg.prefixes):
            prefix = set()
            while len(prefix) < k:
                a = rng.randint(1, cfg.element_max)
                if a % p:
                    prefix.add(a)
            worst = max(worst, len(admissible_residues(sorted(prefix), rng.choice(ns), p)))
        yield p, k, worst, g_bound(p)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SamplingConfig()).items():
        p.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int, default=default)
    cfg = SamplingConfig(**vars(p.parse_args(argv)))
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["p", "prefix_len", "max_g", "bound_0722", "ok"])
    violations = 0
    for prime, k, worst, bound in sample(cfg):
        violations += worst >= bound
        w.writerow([prime, k, worst, f"{bound:.6f}", str(worst < bound).lower()])
    print(f"violations: {violations}", file=sys.stderr)
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
