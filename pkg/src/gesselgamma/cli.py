"""Command-line interface.

Exit codes: 0 on success (and on PASS for verify/golden), 1 when a
verification run reports a failure, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .action import TYPE_Y, is_canonical, orbit, prune, serialize_pruned
from .counts import (
    c_polynomial_enum,
    gamma_count_mma,
    gamma_count_perms,
    gamma_count_ternary,
    gamma_count_trees,
)
from .errors import (
    DomainError,
    FamilyTooLargeError,
    GammaExtractionError,
    ParseError,
    TreeValidationError,
)
from .grammar import (
    c_polynomial_grammar,
    derive,
    gamma_polynomial_grammar,
    uvz_rules,
    xyz_rules,
)
from .harness import (
    CHECKS,
    DEFAULT_COST_CAP,
    FamilySpec,
    default_campaign_family,
    golden_examples,
    verify,
)
from .multiset import Multiset
from .poly import (
    UVZ,
    XYZ,
    Poly3,
    gamma_extract,
    gamma_table_from_uvz,
)
from .stirling import (
    StirlingPermutation,
    enumerate_stirling,
    parse_word,
    statistics,
)
from .trees import gessel_forward, gessel_inverse, parse_tree, serialize


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gesselgamma",
        description="Stirling permutations, Gessel trees and gamma expansions, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all Stirling permutations of a multiset")
    p.add_argument("--multiset", required=True, help="multiplicity list, e.g. 2,2")
    p.add_argument("--stats", action="store_true", help="include per-word statistics")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("tree", help="map a permutation to its tree")
    p.add_argument("--perm", required=True,
                   help="word, e.g. '1 2 2 1', '1,2,2,1' or digits '1221'")

    p = sub.add_parser("perm", help="map a tree back to its permutation")
    p.add_argument("--tree", required=True, help="tree text, e.g. '(1 * (2 * *) *)'")

    p = sub.add_parser("poly", help="the (asc, des, plat) polynomial of a multiset")
    p.add_argument("--multiset", required=True)
    p.add_argument("--via", choices=["enum", "grammar"], required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("gamma", help="the gamma table of a multiset, by any route")
    p.add_argument("--multiset", required=True)
    p.add_argument("--via", required=True,
                   choices=["extract", "grammar", "trees", "perms", "mma", "ternary"])

    p = sub.add_parser("orbit", help="the flip orbit of a permutation's tree")
    p.add_argument("--perm", required=True)

    p = sub.add_parser("prune", help="prune a tree and report its (u, v)-weight")
    p.add_argument("--tree", required=True)

    p = sub.add_parser("grammar-derive", help="stream a derivative chain step by step")
    p.add_argument("--rules", choices=["xyz", "uvz"], required=True)
    p.add_argument("--k-seq", required=True, help="multiplicities, e.g. 2,2,2")

    p = sub.add_parser("verify", help="run theorem checks over a family of multisets")
    p.add_argument("--check", required=True,
                   help="a check id or 'all'; ids: " + ", ".join(sorted(CHECKS)))
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.add_argument("--max-k", type=int, default=None, dest="max_k")
    p.add_argument("--max-K", type=int, default=None, dest="max_total",
                   help="bound on the total size K")
    p.add_argument("--multisets", default=None,
                   help="explicit family, semicolon-separated: '2,2;1,2,1'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_COST_CAP,
                   help="refuse families with more total permutations than this")

    sub.add_parser("golden", help="replay the worked examples with frozen expected values")

    return parser


def _cmd_enumerate(args) -> int:
    m = Multiset.parse(args.multiset)
    rows = []
    for s in enumerate_stirling(m):
        if args.stats:
            prof = statistics(s)
            rows.append({
                "word": list(s.word),
                "asc": prof.asc, "des": prof.des, "plat": prof.plat,
                "plat_by_j": {str(j): c for j, c in sorted(prof.plat_by_j.items())},
                "dfall": prof.dfall, "aplat": prof.aplat, "dplat": prof.dplat,
            })
        else:
            rows.append({"word": list(s.word)})
    if args.format == "json":
        print(json.dumps({"multiset": list(m.mults), "count": len(rows), "words": rows}))
    else:
        cols = ["word"] + (["asc", "des", "plat", "dfall", "aplat", "dplat"]
                           if args.stats else [])
        print(",".join(cols))
        for row in rows:
            cells = [" ".join(str(v) for v in row["word"])]
            cells += [str(row[c]) for c in cols[1:]]
            print(",".join(cells))
    return 0


def _cmd_tree(args) -> int:
    s = StirlingPermutation.from_word(parse_word(args.perm))
    print(serialize(gessel_forward(s)))
    return 0


def _cmd_perm(args) -> int:
    t = parse_tree(args.tree)
    print(str(gessel_inverse(t)))
    return 0


def _cmd_poly(args) -> int:
    m = Multiset.parse(args.multiset)
    p = c_polynomial_enum(m) if args.via == "enum" else c_polynomial_grammar(m)
    if args.format == "json":
        print(p.to_json())
    else:
        sys.stdout.write(p.to_csv())
    return 0


def _cmd_gamma(args) -> int:
    m = Multiset.parse(args.multiset)
    if args.via in ("mma", "ternary") and not m.is_uniform(2):
        raise DomainError(
            f"--via {args.via} needs a doubled multiset 2,2,...,2, got {m.spec()!r}")
    if args.via == "extract":
        table = gamma_extract(c_polynomial_enum(m), m.K)
    elif args.via == "grammar":
        table = gamma_table_from_uvz(gamma_polynomial_grammar(m), m.K)
    elif args.via == "trees":
        table = gamma_count_trees(m)
    elif args.via == "perms":
        table = gamma_count_perms(m)
    elif args.via == "mma":
        table = gamma_count_mma(m.n)
    else:
        table = gamma_count_ternary(m.n)
    print(table.to_json())
    return 0


def _cmd_orbit(args) -> int:
    s = StirlingPermutation.from_word(parse_word(args.perm))
    members = orbit(gessel_forward(s))
    canonical = None
    rows = []
    for t in members:
        text = serialize(t)
        word = str(gessel_inverse(t))
        rows.append({"tree": text, "perm": word})
        if is_canonical(t):
            canonical = text
    rows.sort(key=lambda r: r["tree"])
    print(json.dumps({"canonical": canonical, "size": len(rows), "members": rows}))
    return 0


def _cmd_prune(args) -> int:
    t = parse_tree(args.tree)
    p = prune(t)
    y_vertices = sorted(v for v, ty in p.types.items() if ty == TYPE_Y)
    out = {
        "pruned": serialize_pruned(p),
        "zleaf": p.zleaf,
        "weight": None if y_vertices else {"u": p.u_count, "v": p.v_count},
    }
    if y_vertices:
        out["y_vertices"] = y_vertices
    print(json.dumps(out))
    return 0


def _cmd_grammar_derive(args) -> int:
    try:
        kseq = [int(x) for x in args.k_seq.split(",") if x.strip()]
    except ValueError as exc:
        raise ParseError(f"bad --k-seq {args.k_seq!r}: {exc}") from None
    if not kseq or any(k < 1 for k in kseq):
        raise ParseError(f"--k-seq needs positive multiplicities, got {args.k_seq!r}")
    if args.rules == "xyz":
        p = Poly3.variable("x", XYZ)
        for k in kseq:
            p = derive(p, xyz_rules(k))
            print(p.to_json())
    else:
        p = Poly3.monomial((1, 0, kseq[0] - 1), 1, UVZ)
        print(p.to_json())
        for k in kseq[1:]:
            p = derive(p, uvz_rules(k))
            print(p.to_json())
    return 0


def _cmd_verify(args) -> int:
    if args.check != "all" and args.check not in CHECKS:
        raise DomainError(
            f"unknown check id {args.check!r}; known ids: {', '.join(sorted(CHECKS))} or 'all'")
    bounds_given = any(v is not None for v in (args.max_n, args.max_k, args.max_total))
    if args.multisets is not None and bounds_given:
        raise DomainError("--multisets cannot be combined with --max-n/--max-k/--max-K")
    if args.multisets is not None:
        members = [Multiset.parse(spec) for spec in args.multisets.split(";")]
        members = sorted(set(members), key=lambda m: m.mults)
    elif bounds_given:
        spec = FamilySpec(
            max_n=args.max_n if args.max_n is not None else 4,
            max_k=args.max_k if args.max_k is not None else 3,
            max_total=args.max_total if args.max_total is not None else 10,
        )
        members = spec.members()
    else:
        members = default_campaign_family()
    report = verify(args.check, members, cap=args.cap, jobs=max(1, args.jobs))
    print(json.dumps(report.to_json_dict(), indent=2))
    return 0 if report.passed else 1


def _cmd_golden(_args) -> int:
    report = golden_examples()
    print(json.dumps(report.to_json_dict(), indent=2))
    return 0 if report.passed else 1


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "tree": _cmd_tree,
    "perm": _cmd_perm,
    "poly": _cmd_poly,
    "gamma": _cmd_gamma,
    "orbit": _cmd_orbit,
    "prune": _cmd_prune,
    "grammar-derive": _cmd_grammar_derive,
    "verify": _cmd_verify,
    "golden": _cmd_golden,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except FamilyTooLargeError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (ParseError, DomainError, TreeValidationError, GammaExtractionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
