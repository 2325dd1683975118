"""Tabulate invariants and theorem checks over the built-in Eulerian corpus.

    python3 scripts/run_suite.py            # text table
    python3 scripts/run_suite.py --json out.json
"""

import argparse
import json
import time

from klsposets.cli import compute_invariants
from klsposets.polynomial import format_poly
from klsposets.poset import interval_poset
from klsposets.suite import eulerian_suite
from klsposets.verify import THEOREMS


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--json", metavar="PATH", help="also write the full records here")
    args = parser.parse_args()

    records = []
    for P in eulerian_suite():
        start = time.perf_counter()
        inv = compute_invariants(P)
        hat = interval_poset(P)
        checks = {name: check(P, hat).passed for name, check in THEOREMS.items()}
        inv["checks"] = checks
        inv["seconds"] = round(time.perf_counter() - start, 4)
        records.append(inv)
        status = "ok" if all(checks.values()) else "FAIL " + ",".join(k for k, v in checks.items() if not v)
        print(f"{P.name:<7} |P|={P.n:<3} rk={P.height}  Z = {format_poly(inv['Z']):<32} "
              f"h = {format_poly(inv['h']):<22} H = {format_poly(inv['H']):<24} {status}")

    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(records, fh, ensure_ascii=False, indent=2)


if __name__ == "__main__":
    main()
