"""Gamma vectors of Z and the Chow polynomial across polytopal posets and Eulerian lattices.

A finding is an Eulerian lattice whose Z-polynomial is not gamma-positive.

    python3 scripts/gamma_scan.py
    python3 scripts/gamma_scan.py --enumerate 10
"""

import argparse

from klsposets.kls import chow_function, kls_bundle
from klsposets.props import gamma_vector
from klsposets.search import SearchConfig, run_search
from klsposets.suite import gamma_scan_suite


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--enumerate", type=int, metavar="N",
                        help="also scan every graded poset up to N elements")
    args = parser.parse_args()

    for P in gamma_scan_suite():
        top = (P.bottom, P.top)
        z = kls_bundle(P).z[top]
        H = chow_function(P)[top]
        gz = gamma_vector(z, P.height).gamma
        gh = gamma_vector(H, max(P.height - 1, 0)).gamma
        print(f"{P.name:<7} gamma(Z) = {list(gz)!s:<18} gamma(H) = {list(gh)}")

    res = run_search(SearchConfig(mode="gamma_scan"), gamma_scan_suite())
    print(f"suite: {res['count']} non-gamma-positive Eulerian lattices")
    if args.enumerate:
        cfg = SearchConfig(mode="gamma_scan", max_elements=args.enumerate, max_rank=args.enumerate - 1)
        res = run_search(cfg)
        print(f"enumerated up to {args.enumerate}: {res['candidates']} posets, {res['count']} findings")
        for f in res["findings"]:
            print(f"    covers={f['poset']['covers']} Z={f['Z']} gamma={f['gamma']}")


if __name__ == "__main__":
    main()
