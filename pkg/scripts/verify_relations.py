"""Check every relation family up to a boundary-size bound and write a JSON report.

    python3 scripts/verify_relations.py --bound 10 --out results/relations.json
"""
import argparse
import time
from pathlib import Path

from hyperschur.relationsuite import FAMILIES, check_relation, generate_cases, report_json


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bound", type=int, default=8)
    ap.add_argument("--out", type=Path, default=None)
    ap.add_argument("--timestamp", default="fixed")
    args = ap.parse_args()

    reports = []
    for family in FAMILIES:
        start = time.perf_counter()
        cases = generate_cases(family, args.bound)
        results = [check_relation(c) for c in cases]
        failed = sum(not r.passed for r in results)
        print(f"{family:18s} {len(cases):6d} cases  {failed:3d} failed  {time.perf_counter() - start:7.2f}s")
        reports += results
    text = report_json(f"relations<= {args.bound}", reports, args.timestamp)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text + "\n")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
