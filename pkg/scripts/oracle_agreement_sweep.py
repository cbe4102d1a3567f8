"""Compare float oracles with exact verdicts over seeded random specs.

Two sweeps: tangency of vH against ambient H-minimality (forms J and K),
and sampled omega_I against the exact omega_I-isotropy test.
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from isotori import oracle
from isotori.certify import FORMS, omega_I_isotropic, omega_I_obstruction
from isotori.random_specs import random_specs


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 2024
    count: int = 1000
    samples: int = 10
    max_n: int = 5


def tangency_sweep(cfg: SweepConfig) -> Counter:
    params = oracle.OracleParams(sample_count=cfg.samples)
    outcomes = Counter()
    for spec in random_specs(cfg.seed, cfg.count, max_n=cfg.max_n):
        for form in FORMS:
            r = oracle.tangency_residual(spec, form, False, params)
            outcomes[(form, r.expect_zero, r.outcome)] += 1
    return outcomes


def omega_i_sweep(cfg: SweepConfig) -> Counter:
    params = oracle.OracleParams(sample_count=cfg.samples)
    tally = Counter()
    for spec in random_specs(cfg.seed, cfg.count, max_n=cfg.max_n):
        if not (spec.l and spec.m):
            continue
        r = oracle.isotropy_residual(spec, params)[-1]
        tally["checked"] += 1
        tally[f"oracle {r.outcome}"] += 1
        tally["C = 0"] += omega_I_obstruction(spec).is_zero()
        tally["isotropic"] += omega_I_isotropic(spec)
    return tally


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=SweepConfig.seed)
    parser.add_argument("--count", type=int, default=SweepConfig.count)
    parser.add_argument("--samples", type=int, default=SweepConfig.samples)
    parser.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    args = parser.parse_args()
    cfg = SweepConfig(args.seed, args.count, args.samples, args.max_n)

    t0 = time.perf_counter()
    outcomes = tangency_sweep(cfg)
    print(f"tangency vs H-minimality ({time.perf_counter() - t0:.1f}s)")
    for (form, expect, outcome), k in sorted(outcomes.items(), key=str):
        print(f"  form {form}  hmin={expect!s:5s}  {outcome:13s} {k}")
    disagree = sum(k for (_, _, o), k in outcomes.items() if o == oracle.DISAGREE)

    t0 = time.perf_counter()
    tally = omega_i_sweep(cfg)
    print(f"omega_I isotropy ({time.perf_counter() - t0:.1f}s)")
    for key, k in sorted(tally.items()):
        print(f"  {key:18s} {k}")
    disagree += tally["oracle DISAGREE"]
    return 2 if disagree else 0


if __name__ == "__main__":
    raise SystemExit(main())
