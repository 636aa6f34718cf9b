"""Compute C_n over a range of n and summarise the result.

    python3 scripts/run_cn_scan.py --from -400 --to 400 --cache results/cn_scan.jsonl

Re-running with the same cache resumes where the last run stopped.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from dtuples.search import cn_scan, default_jobs


@dataclass
class ScanConfig:
    n_from: int = -400
    n_to: int = 400
    cache: Path = Path("results/cn_scan.jsonl")
    jobs: Optional[int] = None


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--from", dest="n_from", type=int, default=ScanConfig.n_from)
    p.add_argument("--to", dest="n_to", type=int, default=ScanConfig.n_to)
    p.add_argument("--cache", type=Path, default=ScanConfig.cache)
    p.add_argument("--jobs", type=int, default=None)
    cfg = ScanConfig(**vars(p.parse_args(argv)))
    cfg.cache.parent.mkdir(parents=True, exist_ok=True)

    def progress(rec):
        print(f"n={rec.n:5d} C={rec.c} {rec.ms:7d} ms", file=sys.stderr, flush=True)

    recs = cn_scan(cfg.n_from, cfg.n_to, cfg.cache, jobs=cfg.jobs or default_jobs(), progress=progress)
    hist = Counter(r.c for r in recs)
    summary = {
        "config": asdict(cfg),
        "count": len(recs),
        "max_c": max(hist),
        "histogram": {str(c): hist[c] for c in sorted(hist)},
        "argmax": [{"n": r.n, "witness": list(r.witness)} for r in recs if r.c == max(hist)],
        "search_seconds": round(sum(r.ms for r in recs) / 1000, 1),
    }
    print(json.dumps(summary, indent=2, default=str))
    return 0


if __name__ == "__main__":
    sys.exit(main())
