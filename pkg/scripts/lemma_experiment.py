"""Randomized test of the restriction criterion on the hexagon prism.

Draws isotropy assignments (fully random, or one vector of the valid
assignment perturbed) and compares "all three restrictions characteristic"
with the basis condition at every vertex.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from cobordkit.hexprism import build
from cobordkit.lattice import VectorAssignment, check_lemma_equivalence


@dataclass
class LemmaConfig:
    trials: int = 2000
    seed: int = 0
    entry_max: int = 4
    dims: tuple = (2, 3)
    perturb_fraction: float = 0.5


def run(cfg: LemmaConfig) -> Counter:
    rnd = random.Random(cfg.seed)
    tally = Counter()
    for _ in range(cfg.trials):
        n = rnd.choice(cfg.dims)
        d = build(n, rnd.randint(-3, 3), rnd.randint(-3, 3))
        draw = lambda: tuple(rnd.randint(-cfg.entry_max, cfg.entry_max) for _ in range(n))
        if rnd.random() < cfg.perturb_fraction:
            lam = dict(d.lam.vectors)
            lam[rnd.choice(d.lam.ids())] = draw()
        else:
            lam = {f: draw() for f in d.lam.ids()}
        rep = check_lemma_equivalence(d.Q, d.E, VectorAssignment(n, lam))
        tally[(rep.details["restrictions_characteristic"], rep.details["sarkar_condition"])] += 1
    return tally


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trials", type=int, default=LemmaConfig.trials)
    p.add_argument("--seed", type=int, default=LemmaConfig.seed)
    p.add_argument("--entry-max", type=int, default=LemmaConfig.entry_max)
    args = p.parse_args()
    cfg = LemmaConfig(trials=args.trials, seed=args.seed, entry_max=args.entry_max)
    tally = run(cfg)
    print(cfg)
    print("restrictions  basis-cond  count")
    for (left, right), count in sorted(tally.items()):
        print(f"{left!s:>12}  {right!s:>10}  {count:5d}")
    disagreements = tally[(True, False)] + tally[(False, True)]
    print(f"disagreements: {disagreements}")
    raise SystemExit(1 if disagreements else 0)


if __name__ == "__main__":
    main()
