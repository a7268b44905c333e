"""Write hexagon-prism certificates for a grid of (n, a, b) into a directory."""

import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from cobordkit.hexprism import certificate


@dataclass
class GridConfig:
    n_min: int = 2
    n_max: int = 6
    ab_max: int = 3
    out_dir: str = "certificates"


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-min", type=int, default=GridConfig.n_min)
    p.add_argument("--n-max", type=int, default=GridConfig.n_max)
    p.add_argument("--ab-max", type=int, default=GridConfig.ab_max)
    p.add_argument("--out-dir", default=GridConfig.out_dir)
    cfg = GridConfig(**vars(p.parse_args()))
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    failed = 0
    r = range(-cfg.ab_max, cfg.ab_max + 1)
    for n in range(cfg.n_min, cfg.n_max + 1):
        for a in r:
            for b in r:
                cert = certificate(n, a, b)
                (out / f"cert_n{n}_a{a}_b{b}.json").write_text(json.dumps(cert, indent=2) + "\n")
                failed += cert["verdict"] != "pass"
    total = (cfg.n_max - cfg.n_min + 1) * len(r) ** 2
    print(f"{total - failed}/{total} certificates pass; written to {out}/")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
