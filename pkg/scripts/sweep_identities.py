"""Sweep the Chern-number identities over a parameter box and print a summary.

    python scripts/sweep_identities.py --n-max 8 --a-max 5
"""

import argparse
import time
from dataclasses import dataclass

from cobordkit.chern import StructureKind, all_chern_numbers, chern_number_closed, verify_triple
from cobordkit.clutch import verify_gluing_bordism
from cobordkit.exactring import partitions


@dataclass
class SweepConfig:
    n_max: int = 8
    a_max: int = 5
    triple_n_max: int = 6
    triple_a_max: int = 3


def run(cfg: SweepConfig) -> dict:
    counts = {"independence": 0, "twisted-null": 0, "triple": 0, "gluing": 0}
    failures = []
    for n in range(1, cfg.n_max + 1):
        closed = {I: chern_number_closed(n, I) for I in partitions(n)}
        for a in range(-cfg.a_max, cfg.a_max + 1):
            std = all_chern_numbers(n, a, StructureKind.STANDARD)
            tw = all_chern_numbers(n, a, StructureKind.TWISTED)
            counts["independence"] += len(closed)
            counts["twisted-null"] += len(closed)
            failures += [("independence", n, a, I) for I in closed if std[I] != closed[I]]
            failures += [("twisted-null", n, a, I) for I in closed if tw[I] != 0]
    for n in range(1, cfg.triple_n_max + 1):
        for a in range(-cfg.triple_a_max, cfg.triple_a_max + 1):
            for b in range(-cfg.triple_a_max, cfg.triple_a_max + 1):
                for name, check in (("triple", verify_triple), ("gluing", verify_gluing_bordism)):
                    counts[name] += 1
                    rep = check(n, a, b)
                    if not rep.ok:
                        failures.append((name, n, a, b, rep.witness))
    return {"counts": counts, "failures": failures}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    p.add_argument("--a-max", type=int, default=SweepConfig.a_max)
    p.add_argument("--triple-n-max", type=int, default=SweepConfig.triple_n_max)
    p.add_argument("--triple-a-max", type=int, default=SweepConfig.triple_a_max)
    cfg = SweepConfig(**vars(p.parse_args()))
    t0 = time.perf_counter()
    result = run(cfg)
    print(cfg)
    for name, count in result["counts"].items():
        bad = sum(1 for f in result["failures"] if f[0] == name)
        print(f"{name:>13}: {count:6d} checks, {bad} failures")
    for f in result["failures"][:10]:
        print("  ", f)
    print(f"elapsed {time.perf_counter() - t0:.2f}s")
    raise SystemExit(1 if result["failures"] else 0)


if __name__ == "__main__":
    main()
