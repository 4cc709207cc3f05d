"""Corrupt one column multiplier at a time and count how often the
self-orthogonality checks notice.

    python scripts/negative_controls.py --trials 1000

Self-orthogonality depends on the multipliers only through their norms
v^(q+1).  A replacement drawn uniformly from the other q^2 - 2 nonzero
values keeps the norm with probability q / (q^2 - 2), and those
corruptions are invisible to any Gram-based check.  The script prints the
observed detection rate next to that prediction.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from qmds.constructions import build
from qmds.grs import hermitian_gram, power_sum_check

sys.path.insert(0, __file__.rsplit("/", 1)[0])
from intro_examples import EXAMPLES  # noqa: E402


@dataclass
class ControlConfig:
    trials: int = 100
    seed: int = 20240601


def run(cfg: ControlConfig) -> None:
    rng = np.random.default_rng(cfg.seed)
    print(f"{'family':8s} {'q':>3s} {'detected':>9s} {'same norm':>9s} {'predicted':>9s}")
    for top in EXAMPLES:
        cert = build(top, level="gram")
        ctx, code = cert.ctx, cert.code
        hits = kept = 0
        for _ in range(cfg.trials):
            i = int(rng.integers(code.n))
            new = int(rng.integers(1, ctx.order - 1))
            if new >= code.v[i]:
                new += 1
            bad = code.with_multiplier(i, new)
            hits += (not hermitian_gram(bad).is_zero()) or (not power_sum_check(bad))
            kept += ctx.norm(new) == ctx.norm(code.v[i])
        q = top.q
        print(f"{top.family:8s} {q:3d} {hits / cfg.trials:9.3f} {kept / cfg.trials:9.3f} "
              f"{1 - q / (q * q - 2):9.3f}")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=20240601)
    a = ap.parse_args(argv)
    run(ControlConfig(a.trials, a.seed))
    return 0


if __name__ == "__main__":
    sys.exit(main())
