"""Run every exhaustive check over a range of orders and write the JSON report."""

import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path

from eccspectra.formatting import dumps
from eccspectra.verifier import EXHAUSTIVE_MAX, TheoremId, check


@dataclass
class Config:
    n_lo: int = 4
    n_hi: int = 10
    jobs: int = 1
    out: Path = Path("results/verification.json")
    ids: list[str] = field(default_factory=lambda: [t.value for t in TheoremId])


def parse_args() -> Config:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-lo", type=int, default=Config.n_lo)
    p.add_argument("--n-hi", type=int, default=Config.n_hi, help=f"at most {EXHAUSTIVE_MAX}")
    p.add_argument("--jobs", type=int, default=Config.jobs)
    p.add_argument("--out", type=Path, default=Config.out)
    p.add_argument("--id", action="append", dest="ids", choices=[t.value for t in TheoremId])
    a = p.parse_args()
    cfg = Config(n_lo=a.n_lo, n_hi=a.n_hi, jobs=a.jobs, out=a.out)
    if a.ids:
        cfg.ids = a.ids
    return cfg


def main() -> None:
    cfg = parse_args()
    reports = []
    for tid in cfg.ids:
        t0 = time.perf_counter()
        r = check(tid, cfg.n_lo, cfg.n_hi, cfg.jobs)
        print(f"{tid:22s} {r.verdict:14s} {time.perf_counter() - t0:7.2f}s")
        reports.append(r.to_dict(timings=True))
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(dumps({"n_range": [cfg.n_lo, cfg.n_hi], "reports": reports}, indent=1) + "\n")
    print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
