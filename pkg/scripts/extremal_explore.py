"""Print the extreme trees of one statistic for each order, to eyeball extremal patterns."""

import argparse
from dataclasses import dataclass

from eccspectra.graphs import ecc_info
from eccspectra.verifier import STATISTICS, extremal_table


@dataclass
class Config:
    stat: str = "energy-complement"
    n_lo: int = 5
    n_hi: int = 10
    top: int = 3


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--stat", choices=sorted(STATISTICS), default=Config.stat)
    p.add_argument("--n-lo", type=int, default=Config.n_lo)
    p.add_argument("--n-hi", type=int, default=Config.n_hi)
    p.add_argument("--top", type=int, default=Config.top)
    a = p.parse_args()
    cfg = Config(a.stat, a.n_lo, a.n_hi, a.top)

    print(f"# {cfg.stat}: {STATISTICS[cfg.stat].description}")
    for n in range(cfg.n_lo, cfg.n_hi + 1):
        rows = extremal_table(cfg.stat, n)
        shown = rows[: cfg.top] + [None] + rows[-cfg.top :] if len(rows) > 2 * cfg.top else rows
        print(f"n={n}  ({len(rows)} trees)")
        for row in shown:
            if row is None:
                print("    ...")
                continue
            t, code, v = row
            print(f"    {v:12.6f}  diam={ecc_info(t).diameter}  {code}")


if __name__ == "__main__":
    main()
