"""Table of the smallest k admitting a t-relaxed 2-distant coloring.

Compares the exact solver with the closed forms for paths, cycles and
complete graphs.

    python3 scripts/min_k_table.py --max-n 8 --max-t 3
"""

import argparse
import time
from dataclasses import dataclass

from relaxcolor.families import closed_form_cchi
from relaxcolor.graph import make_family
from relaxcolor.solver import min_k


@dataclass
class TableConfig:
    max_n: int = 8
    max_t: int = 3


def run(cfg: TableConfig):
    print(f"{'family':>9} {'n':>3} {'t':>2} {'solver':>7} {'closed':>7} {'secs':>6}")
    mismatches = 0
    for kind, first in (("path", 3), ("cycle", 3), ("complete", 1)):
        for n in range(first, cfg.max_n + 1):
            for t in range(1, cfg.max_t + 1):
                start = time.perf_counter()
                got = min_k(make_family(kind, n), "relaxed", t)
                secs = time.perf_counter() - start
                want = closed_form_cchi(kind, n, t)
                mismatches += got != want
                flag = "" if got == want else "  <-- mismatch"
                print(f"{kind:>9} {n:>3} {t:>2} {got:>7} {want:>7} {secs:>6.2f}{flag}")
    print(f"{mismatches} mismatches")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=TableConfig.max_n)
    ap.add_argument("--max-t", type=int, default=TableConfig.max_t)
    args = ap.parse_args()
    run(TableConfig(args.max_n, args.max_t))
