"""Command-line interface.

Inputs are a poset JSON file path, ``-`` for stdin, or ``gen:<kind>[:<n>]``.
Exit codes: 0 success / all checks pass, 1 verification failure (or an
unmet finding threshold), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import generators
from .errors import KLSError
from .kls import TRUNCATIONS, be_toric, be_z, chow_function, kls_bundle
from .polynomial import IntPolynomial, format_poly
from .poset import Poset, chain_counts, dual, interval_poset, is_eulerian, is_lattice, poset_from_dict
from .props import property_profile
from .search import MODES, SearchConfig, run_search
from .suite import eulerian_suite, gamma_scan_suite
from .verify import THEOREMS, verify_z_equals_hhat

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def load_poset(spec: str) -> Poset:
    if spec.startswith("gen:"):
        parts = spec.split(":")
        kind = parts[1] if len(parts) > 1 else ""
        try:
            n = int(parts[2]) if len(parts) > 2 else None
        except ValueError:
            raise InputError(f"bad generator parameter in {spec!r}") from None
        if len(parts) > 3:
            raise InputError(f"bad generator spec {spec!r}")
        try:
            return generators.generate(kind, n)
        except KLSError as exc:
            raise InputError(str(exc)) from None
    try:
        text = sys.stdin.read() if spec == "-" else open(spec, encoding="utf-8").read()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read poset from {spec!r}: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("poset JSON must be an object")
    try:
        return poset_from_dict(data)
    except KLSError as exc:
        raise InputError(str(exc)) from None


def _emit(obj, as_json: bool, text: Optional[str] = None) -> None:
    if as_json or text is None:
        print(json.dumps(obj, ensure_ascii=False, indent=2))
    else:
        print(text)


def _poly(p: Optional[IntPolynomial]):
    return None if p is None else p.to_list()


def compute_invariants(P: Poset, be: bool = False, truncation: str = "paper") -> dict:
    """The invariant record printed by ``invariants``."""
    eulerian = is_eulerian(P)
    top = (P.bottom, P.top)
    out = {
        "name": P.name,
        "size": P.n,
        "rank": P.height,
        "eulerian": eulerian,
        "lattice": is_lattice(P),
    }
    if be:
        g, h = be_toric(P, truncation)
        gd, _ = be_toric(dual(P), truncation)
        z = be_z(P, truncation)[top]
        out.update(route="bayer_ehrenborg", truncation=truncation,
                   g=_poly(g[top]), f=_poly(gd[(P.top, P.bottom)]), Z=_poly(z), h=_poly(h[top]))
        H = chow_function(P)[top] if eulerian else None
    else:
        bundle = kls_bundle(P)
        z = bundle.z[top]
        H = chow_function(P)[top]
        out.update(route="eulerian", g=_poly(bundle.g[top]), f=_poly(bundle.f[top]),
                   Z=_poly(z), h=_poly(bundle.h[top]))
    out["H"] = _poly(H)
    out["properties"] = {"Z": property_profile(z, P.height)}
    if H is not None:
        out["properties"]["H"] = property_profile(H, max(P.height - 1, 0))
    return out


def _invariants_text(inv: dict) -> str:
    lines = [f"{inv['name'] or 'poset'}: {inv['size']} elements, rank {inv['rank']}, "
             f"eulerian={inv['eulerian']}, lattice={inv['lattice']} ({inv['route']} route)"]
    for key in ("g", "f", "Z", "h", "H"):
        if inv.get(key) is not None:
            lines.append(f"  {key} = {format_poly(inv[key])}   {inv[key]}")
    for key, prof in inv["properties"].items():
        lines.append(f"  {key}: " + ", ".join(f"{k}={v}" for k, v in prof.items()))
    return "\n".join(lines)


def cmd_info(args) -> int:
    P = load_poset(args.input)
    info = {
        "name": P.name,
        "size": P.n,
        "rank": P.height,
        "covers": len(P.covers),
        "intervals": len(P.intervals),
        "bottom": P.labels[P.bottom],
        "top": P.labels[P.top],
        "eulerian": is_eulerian(P),
        "lattice": is_lattice(P),
        "chain_counts": chain_counts(P),
    }
    text = "\n".join(f"{k}: {v}" for k, v in info.items())
    _emit(info, args.json, text)
    return EXIT_OK


def cmd_invariants(args) -> int:
    posets = eulerian_suite() if args.suite else [load_poset(args.input)]
    records = []
    for P in posets:
        if not args.be and not is_eulerian(P):
            print(f"error: {P.name or 'poset'} is not Eulerian; pass --be for the "
                  "Bayer–Ehrenborg definitions", file=sys.stderr)
            return EXIT_FAIL
        records.append(compute_invariants(P, args.be, args.trunc))
    payload = records if args.suite else records[0]
    _emit(payload, args.json, "\n".join(_invariants_text(r) for r in records))
    return EXIT_OK


def cmd_interval_poset(args) -> int:
    P = load_poset(args.input)
    hat = interval_poset(P).poset
    data = hat.to_dict()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(data, fh, ensure_ascii=False, indent=2)
    else:
        print(json.dumps(data, ensure_ascii=False, indent=2))
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        P = generators.generate(args.kind, args.n)
    except KLSError as exc:
        raise InputError(str(exc)) from None
    print(json.dumps(P.to_dict(), ensure_ascii=False, indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(THEOREMS) if args.theorems == "all" else args.theorems.split(",")
    unknown = [n for n in names if n not in THEOREMS]
    if unknown:
        raise InputError(f"unknown theorem(s): {', '.join(unknown)}")
    posets = eulerian_suite() if args.suite else [load_poset(args.input)]
    results = []
    all_pass = True
    for P in posets:
        hat = interval_poset(P)
        reports = []
        for name in names:
            if name == "z_equals_hhat" and args.be:
                rep = verify_z_equals_hhat(P, hat, be=True, truncation=args.trunc)
            else:
                rep = THEOREMS[name](P, hat)
            reports.append(rep)
            all_pass &= rep.passed
            if not args.json:
                status = "PASS" if rep.passed else "FAIL"
                print(f"{status} {rep.theorem:<18} {P.name or 'poset'} ({rep.checked} checks)"
                      + (f"  [{rep.note}]" if rep.note else ""))
                for fail in rep.failures[: args.max_failures]:
                    if fail.lhs is None:
                        continue
                    print(f"    at {fail.interval}: lhs={format_poly(fail.lhs)} "
                          f"rhs={format_poly(fail.rhs)}  {fail.lhs.to_list()} vs {fail.rhs.to_list()}")
        results.append({"poset": P.name, "reports": [r.to_dict() for r in reports]})
    if args.json:
        print(json.dumps(results if args.suite else results[0]["reports"], ensure_ascii=False, indent=2))
    return EXIT_OK if all_pass else EXIT_FAIL


def cmd_search(args) -> int:
    config = SearchConfig(
        max_elements=args.max_elements,
        max_rank=args.max_rank,
        mode=args.mode,
        truncation_variant=args.trunc,
        seed=args.seed,
        exhaustive=args.exhaustive,
        samples=args.samples,
        eulerian_only=args.eulerian_only,
        jobs=args.jobs,
    )
    try:
        config.validate()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    posets = gamma_scan_suite() if args.suite else None
    result = run_search(config, posets)
    if args.json:
        print(json.dumps(result, ensure_ascii=False, indent=2))
    else:
        print(f"{result['candidates']} candidates, {result['count']} findings ({config.mode})")
        for f in result["findings"][: args.max_failures]:
            detail = {k: v for k, v in f.items() if k != "poset"}
            print(f"  covers={f['poset']['covers']} {detail}")
    if args.expect_findings is not None and result["count"] < args.expect_findings:
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="klsposets", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p, optional=False):
        if optional:
            p.add_argument("input", nargs="?", help="poset JSON path, '-', or gen:<kind>[:<n>]")
        else:
            p.add_argument("input", help="poset JSON path, '-', or gen:<kind>[:<n>]")

    def add_common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--be", action="store_true", help="use Bayer–Ehrenborg definitions")
        p.add_argument("--trunc", choices=TRUNCATIONS, default="paper",
                       help="truncation bound for Bayer–Ehrenborg g")
        p.add_argument("--suite", action="store_true", help="run over the built-in corpus")

    p = sub.add_parser("info", help="basic order-theoretic data")
    add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("invariants", help="g, f, Z, toric h, Chow and their properties")
    add_input(p, optional=True)
    add_common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("interval-poset", help="serialize the poset of intervals")
    add_input(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_interval_poset)

    p = sub.add_parser("verify", help="check the interval-poset identities")
    add_input(p, optional=True)
    add_common(p)
    p.add_argument("--theorems", default="all",
                   help=f"comma-separated subset of {','.join(THEOREMS)} (default: all)")
    p.add_argument("--max-failures", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="counterexample search / gamma-positivity scan")
    p.add_argument("--mode", choices=MODES, default="z_vs_hhat")
    p.add_argument("--max-elements", type=int, default=8)
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--trunc", choices=TRUNCATIONS, default="paper")
    p.add_argument("--seed", type=int, default=0)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", dest="exhaustive", action="store_true", default=True)
    group.add_argument("--sampled", dest="exhaustive", action="store_false")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--eulerian-only", action="store_true")
    p.add_argument("--suite", action="store_true", help="scan the built-in polytopal corpus")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--expect-findings", type=int, default=None,
                   help="exit 1 unless at least this many findings")
    p.add_argument("--max-failures", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gen", help="emit a generated poset as JSON")
    p.add_argument("kind", choices=generators.KINDS)
    p.add_argument("n", nargs="?", type=int)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "suite", False) is False and getattr(args, "input", "") is None:
        parser.error("an input is required unless --suite is given")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
