"""Run both outerplanar coloring pipelines over a seeded random corpus.

Prints one summary row per size bucket: how many graphs, how many passed every
check, the largest relaxation count seen and the mean number of non-tree edges.

    python3 scripts/outerplanar_corpus.py --count 1000 --max-n 200
"""

import argparse
import random
import time
from dataclasses import dataclass

from relaxcolor.families import random_outerplanar
from relaxcolor.obft import obft_partition
from relaxcolor.outerplanar import color_outerplanar_52
from relaxcolor.reproduce import outerplanar_instance_failures
from relaxcolor.semantics import check_relaxed


@dataclass
class CorpusConfig:
    count: int = 1000
    max_n: int = 200
    seed: int = 2024
    buckets: int = 4


def run(cfg: CorpusConfig):
    rng = random.Random(cfg.seed)
    width = max(1, cfg.max_n // cfg.buckets)
    rows = {}
    start = time.perf_counter()
    for _ in range(cfg.count):
        n = rng.randint(3, cfg.max_n)
        g, emb = random_outerplanar(n, rng.random(), rng.randrange(2**31))
        failures = outerplanar_instance_failures(g, emb)
        f = color_outerplanar_52(g, emb, emb.order[0])
        part = obft_partition(g, emb, emb.order[0])
        row = rows.setdefault(min((n - 1) // width, cfg.buckets - 1), [0, 0, 0, 0])
        row[0] += 1
        row[1] += not failures
        row[2] = max(row[2], check_relaxed(g, f, 4).max_relaxations)
        row[3] += len(part.nontree_edges)
    print(f"{'n range':>12} {'graphs':>7} {'passed':>7} {'max RT':>7} {'mean |H|':>9}")
    for b in sorted(rows):
        cnt, ok, mx, h = rows[b]
        lo, hi = b * width + 1, (b + 1) * width if b < cfg.buckets - 1 else cfg.max_n
        print(f"{f'{max(lo, 3)}-{hi}':>12} {cnt:>7} {ok:>7} {mx:>7} {h / cnt:>9.1f}")
    print(f"total {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=CorpusConfig.count)
    ap.add_argument("--max-n", type=int, default=CorpusConfig.max_n)
    ap.add_argument("--seed", type=int, default=CorpusConfig.seed)
    args = ap.parse_args()
    run(CorpusConfig(args.count, args.max_n, args.seed))
