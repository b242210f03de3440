"""Route histogram and failure list for a seeded fuzz run.

    python scripts/fuzz_stats.py --cases 500 --seed 20240501
"""
import argparse
import json

from nonconvex.fuzz import FuzzConfig, run_fuzz


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cases", type=int, default=500)
    ap.add_argument("--seed", type=int, default=20240501)
    ap.add_argument("--coord", type=int, default=FuzzConfig.coord)
    ap.add_argument("--density", type=int, default=FuzzConfig.witness_density)
    a = ap.parse_args()
    cfg = FuzzConfig(coord=a.coord, witness_density=a.density)
    st = run_fuzz(a.cases, a.seed, cfg)
    print(json.dumps(st.summary(), indent=2))


if __name__ == "__main__":
    main()
