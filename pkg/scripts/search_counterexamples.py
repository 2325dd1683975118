"""Search small graded posets for Z != toric h of the interval poset (BE definitions).

Reports the number of findings per poset size under both truncation
variants and prints the smallest ones.

    python3 scripts/search_counterexamples.py --max-elements 8
    python3 scripts/search_counterexamples.py --max-elements 10 --max-rank 9 --jobs 4
"""

import argparse
import json
from collections import Counter

from klsposets.polynomial import format_poly
from klsposets.search import SearchConfig, run_search


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-elements", type=int, default=8)
    parser.add_argument("--max-rank", type=int, default=3)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--show", type=int, default=5, help="smallest findings to print")
    parser.add_argument("--json", metavar="PATH")
    args = parser.parse_args()

    results = {}
    for trunc in ("paper", "strict"):
        cfg = SearchConfig(max_elements=args.max_elements, max_rank=args.max_rank,
                           truncation_variant=trunc, jobs=args.jobs)
        res = run_search(cfg)
        results[trunc] = res
        sizes = Counter(f["poset"]["n"] for f in res["findings"])
        print(f"[{trunc}] {res['count']} findings among {res['candidates']} posets; by size: {dict(sorted(sizes.items()))}")
        for f in sorted(res["findings"], key=lambda f: (f["poset"]["n"], f["rank"]))[: args.show]:
            print(f"    n={f['poset']['n']} rank={f['rank']} covers={f['poset']['covers']}")
            print(f"        Z = {format_poly(f['Z'])}   toric h of interval poset = {format_poly(f['hhat'])}")

    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(results, fh, ensure_ascii=False, indent=2)


if __name__ == "__main__":
    main()
