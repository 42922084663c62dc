"""Genus census: how the symmetry classes and the type bound populate.

Enumerates every numerical semigroup up to a genus bound, runs the full
claim battery, and prints counts per genus plus the per-cell maximum
type (cells are keyed by embedding dimension and the nearly Gorenstein
and almost symmetric flags).

Run: python3 demos/census.py [--genus-max N] [--workers W]
"""

import argparse
import time

from numsgps.verify import HarnessConfig, check_all


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--genus-max", type=int, default=14)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    cfg = HarnessConfig(genus_max=args.genus_max, workers=args.workers)
    start = time.perf_counter()
    summary = check_all(cfg)
    elapsed = time.perf_counter() - start

    print(f"{summary['semigroups']} semigroups of genus <= {args.genus_max} "
          f"checked in {elapsed:.1f}s")
    print()
    print("count by genus:")
    for g in sorted(summary["by_genus"], key=int):
        print(f"  genus {g:>2}: {summary['by_genus'][g]}")
    print()
    print("claim outcomes (pass / inapplicable / fail):")
    for name in summary["claims_checked"]:
        c = summary["claims"][name]
        print(f"  {name:<16} {c['pass']:>6} / {c['inapplicable']:>6} / "
              f"{c['fail']}")
    print()
    print("maximum type per cell:")
    for key in sorted(summary["cells"]):
        cell = summary["cells"][key]
        print(f"  {key:<32} count={cell['count']:>6}  "
              f"max_type={cell['max_type']}")
    print()
    print(f"total failures: {summary['total_failures']}")
    if summary["question_flags"]:
        print(f"flagged for the open question: {summary['question_flags']}")
    else:
        print("no semigroup flagged for the open five-generator question")


if __name__ == "__main__":
    main()
