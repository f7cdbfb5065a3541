"""Look for small outerplanar graphs that are not (k/2,t)*-colorable.

With the defaults this hunts for an outerplanar graph that needs more than one
relaxation with five colors; the outerplanar pipeline always succeeds with
four relaxations.

    python3 scripts/search_not_colorable.py --k 5 --t 1 --max-n 14 --samples 300
"""

import argparse
import time
from dataclasses import dataclass

from relaxcolor.families import search_not_colorable_outerplanar
from relaxcolor.textio import GraphDocument, emit_graph


@dataclass
class SearchConfig:
    k: int = 5
    t: int = 1
    min_n: int = 4
    max_n: int = 14
    samples: int = 300
    seed: int = 0
    semantics: str = "relaxed"


def run(cfg: SearchConfig):
    start = time.perf_counter()
    found = search_not_colorable_outerplanar(cfg.k, cfg.t, range(cfg.min_n, cfg.max_n + 1),
                                             cfg.samples, cfg.seed, cfg.semantics)
    secs = time.perf_counter() - start
    if found is None:
        print(f"no counterexample among {cfg.samples} samples per size "
              f"{cfg.min_n}..{cfg.max_n} ({secs:.1f}s)")
        return
    g, emb = found
    doc = GraphDocument(g, emb, comments=(f"not ({cfg.k}/2,{cfg.t}) {cfg.semantics}-colorable",))
    print(emit_graph(doc), end="")
    print(f"c found in {secs:.1f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SearchConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    run(SearchConfig(**vars(ap.parse_args())))
