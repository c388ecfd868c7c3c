"""Time basis compositions and basis sizes per degree.

    python3 scripts/compose_timing.py --max-n 4
"""
import argparse
import itertools
import random
import time

from hyperschur.hypercomb import enumerate_hypercompositions, tuple_labels
from hyperschur.schurcat import Morphism, compose, enumerate_hmat


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'n':>2} {'objects':>8} {'basis':>8} {'max |I|':>8} {'ms/compose':>11}")
    for n in range(1, args.max_n + 1):
        objs = enumerate_hypercompositions(n)
        basis = sum(len(enumerate_hmat(a, b)) for a, b in itertools.product(objs, objs))
        start = time.perf_counter()
        for _ in range(args.samples):
            lam, mu, nu = (rng.choice(objs) for _ in range(3))
            f = Morphism.basis(rng.choice(enumerate_hmat(lam, mu)))
            g = Morphism.basis(rng.choice(enumerate_hmat(mu, nu)))
            compose.__wrapped__(f, g)
        per = 1000 * (time.perf_counter() - start) / args.samples
        print(f"{n:>2} {len(objs):>8} {basis:>8} {max(len(tuple_labels(o)) for o in objs):>8} {per:>11.2f}")


if __name__ == "__main__":
    main()
