"""Compare structure-constant composition with dense matrix products.

    python3 scripts/oracle_sweep.py --n 3 --exhaustive
    python3 scripts/oracle_sweep.py --n 4 --samples 50 --seed 1
"""
import argparse
import time

from hyperschur.denseoracle import composable_pairs, oracle_sweep, sample_pairs
from hyperschur.hypercomb import SymmetryMode


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--mode", default="hyper")
    ap.add_argument("--exhaustive", action="store_true")
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    mode = SymmetryMode.parse(args.mode)
    pairs = composable_pairs(args.n, mode) if args.exhaustive else sample_pairs(args.n, mode, args.samples, args.seed)
    start = time.perf_counter()
    results = oracle_sweep(pairs)
    bad = [(A, B) for A, B, ok in results if not ok]
    print(f"n={args.n} mode={mode.value}: {len(results) - len(bad)}/{len(results)} agree in {time.perf_counter() - start:.2f}s")
    for A, B in bad[:5]:
        print(f"  disagree: {A} after {B}")
    return 0 if not bad else 1


if __name__ == "__main__":
    raise SystemExit(main())
