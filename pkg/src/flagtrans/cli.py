"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from collections import Counter
from typing import Sequence

from . import __version__
from .catalog import ENV_VAR, Catalog, CatalogError, load, validate
from .classify import catalog_instances, format_design_table, run_pipeline, verify_record
from .designs import (DesignError, IsoVerdict, are_isomorphic, check_design, complement, full_design,
                      relabel, verify_2design)
from .group import PermGroup
from .params import ParamError, ParamTuple, complement_params, enumerate_all, full_design_params
from .perm import Permutation

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
TSV_COLUMNS = ("group", "stabilizer", "v", "b", "r", "k", "lambda")


class UsageError(Exception):
    pass


def _global_options(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda x: argparse.SUPPRESS) if suppress else (lambda x: x)
    p.add_argument("--catalog", metavar="PATH", default=d(None),
                   help=f"catalog JSON (default: ${ENV_VAR}, then the bundled reference catalog)")
    p.add_argument("--format", choices=("json", "tsv", "text"), default=d("text"))
    p.add_argument("--threads", type=int, metavar="N", default=d(os.cpu_count() or 1))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="flagtrans", description=(
        "Flag-transitive point-primitive 2-designs with alternating socle A_n, 5 <= n <= 10."))
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_options(ap, suppress=False)
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        _global_options(p, suppress=True)
        return p

    p = cmd("enumerate", "list admissible (v,b,r,k,lambda) tuples per group")
    p.add_argument("--summary", action="store_true", help="per-group counts and the total only")
    p.add_argument("--group", metavar="ID", help="restrict to one group")
    p = cmd("verify", "develop a catalog design and check it")
    p.add_argument("--design", required=True, metavar="ID")
    p = cmd("classify", "run the elimination pipeline and deduplicate all designs")
    p.add_argument("--emit-table", type=int, choices=(1, 2), metavar="{1,2}",
                   help="print the design table (1: v = n, 2: v != n)")
    p.add_argument("--node-budget", type=int, default=10**7, metavar="N")
    p = cmd("complement", "complement of a catalog design, or complement parameters of a tuple")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--design", metavar="ID")
    g.add_argument("--params", metavar="v,b,r,k,lambda")
    p = cmd("iso", "isomorphism test between two catalog designs, or a design and a relabeling")
    p.add_argument("designs", nargs="+", metavar="ID")
    p.add_argument("--relabel-seed", type=int, metavar="SEED",
                   help="with one design: compare it with a random relabeling of itself")
    p.add_argument("--node-budget", type=int, default=10**7, metavar="N")
    p = cmd("fulldesigns", "construct and verify the full designs on n points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    cmd("validate-catalog", "re-derive every fact stated in the catalog")
    return ap


def _load_catalog(args) -> Catalog:
    path = args.catalog or os.environ.get(ENV_VAR) or None
    return load(path)


def _emit(args, obj, text: str, tsv: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=1))
    elif args.format == "tsv" and tsv is not None:
        sys.stdout.write(tsv)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _report_text(rep, expected: ParamTuple | None = None) -> str:
    lines = [f"parameters      {rep.params if rep.params else 'not a 2-design'}"]
    if expected is not None:
        lines.append(f"expected        {expected}")
    if rep.lambda_witness and not rep.is_2design:
        (p1, c1), (p2, c2) = rep.lambda_witness
        lines.append(f"witness         pair {p1} in {c1} blocks, pair {p2} in {c2}")
    lines.append(f"2-design        {'yes' if rep.is_2design else 'no'}")
    if rep.flag_transitive is not None:
        lines.append(f"flag-transitive {'yes' if rep.flag_transitive else 'no'}")
    if rep.point_primitive is not None:
        lines.append(f"point-primitive {'yes' if rep.point_primitive else 'no'}")
    return "\n".join(lines) + "\n"


# commands


def cmd_enumerate(args) -> int:
    c = _load_catalog(args)
    if args.group is not None:
        c.group(args.group)  # raises for unknown ids
    res = enumerate_all(c)
    gids = [g.id for g in c.groups if args.group in (None, g.id)]
    if args.summary:
        total = sum(res.per_group[g] for g in gids)
        obj = {"per_group": {g: res.per_group[g] for g in gids}, "total": total}
        text = "".join(f"{c.group(g).display:<12}{res.per_group[g]:>6}\n" for g in gids) + f"{'total':<12}{total:>6}\n"
        tsv = "group\tcount\n" + "".join(f"{g}\t{res.per_group[g]}\n" for g in gids) + f"total\t{total}\n"
        _emit(args, obj, text, tsv)
        return EXIT_OK
    rows = [(gid, sid, t) for (gid, sid), ts in res.per_action.items() if gid in gids for t in ts]
    obj = [{"group": g, "stabilizer": s, "v": t.v, "b": t.b, "r": t.r, "k": t.k, "lambda": t.lam} for g, s, t in rows]
    tsv = "\t".join(TSV_COLUMNS) + "\n" + "".join(f"{g}\t{s}\t" + "\t".join(map(str, t)) + "\n" for g, s, t in rows)
    text = "".join(f"{g:<12}{s:<14}{t}\n" for g, s, t in rows) + f"{len(rows)} tuples\n"
    _emit(args, obj, text, tsv)
    return EXIT_OK


def cmd_verify(args) -> int:
    c = _load_catalog(args)
    rec = c.design(args.design)
    rep = verify_record(c, rec)
    obj = {"design_id": rec.design_id, "group_id": rec.group_id, "action_ref": rec.action_ref,
           "expected": list(rec.params), **rep.to_json(), "ok": rep.ok}
    head = f"{rec.design_id} under {c.group(rec.group_id).display} on the cosets of {rec.action_ref}\n"
    _emit(args, obj, head + _report_text(rep, rec.params))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_classify(args) -> int:
    c = _load_catalog(args)
    res = run_pipeline(c, threads=max(1, args.threads), node_budget=args.node_budget)
    n_classes = len(res.dedup_classes)
    expected = len(c.designs)
    ok = res.ok and n_classes == expected
    if args.format == "json":
        print(res.dumps())
    elif args.emit_table:
        sys.stdout.write(format_design_table(c, res, args.emit_table))
    else:
        status = _count_summary(t.status for t in res.traces)
        lines = [f"isomorphism classes  {n_classes} (catalog lists {expected})",
                 f"tuples               {len(res.traces)} ({status})",
                 f"unknown iso verdicts {res.unknown_verdicts}"]
        lines += [f"DISCREPANCY: {d}" for d in res.discrepancies]
        print("\n".join(lines))
    if not ok and args.format == "json":
        for d in res.discrepancies:
            print(f"DISCREPANCY: {d}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def _count_summary(items) -> str:
    return ", ".join(f"{k} {v}" for k, v in sorted(Counter(items).items()))


def cmd_complement(args) -> int:
    if args.params is not None:
        try:
            t = ParamTuple(*(int(x) for x in args.params.split(",")))
        except (TypeError, ValueError):
            raise UsageError("--params needs five comma-separated integers v,b,r,k,lambda") from None
        ct = complement_params(t)
        _emit(args, {"params": list(t), "complement": list(ct)}, f"{t} -> {ct}")
        return EXIT_OK
    c = _load_catalog(args)
    rec = c.design(args.design)
    inst = catalog_instances(c, rec, include_also=False)[0]
    expected = complement_params(rec.params)
    comp = complement(inst.design)
    G_v = c.resolve_action(rec.group_id, rec.action_ref).group
    rep = check_design(G_v, comp)
    ok = rep.is_2design and rep.params == expected
    obj = {"design_id": rec.design_id, "params": list(rec.params), "expected_complement": list(expected),
           **rep.to_json(), "ok": ok}
    head = f"complement of {rec.design_id} {rec.params}\n"
    _emit(args, obj, head + _report_text(rep, expected))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_iso(args) -> int:
    c = _load_catalog(args)
    if len(args.designs) == 1:
        if args.relabel_seed is None:
            raise UsageError("iso needs two designs, or one design with --relabel-seed")
        rec = c.design(args.designs[0])
        d1 = catalog_instances(c, rec, include_also=False)[0].design
        perm = list(range(1, d1.v + 1))
        random.Random(args.relabel_seed).shuffle(perm)
        d2 = relabel(d1, perm)
        names = (rec.design_id, f"{rec.design_id} relabelled (seed {args.relabel_seed})")
    elif len(args.designs) == 2:
        r1, r2 = (c.design(d) for d in args.designs)
        d1 = catalog_instances(c, r1, include_also=False)[0].design
        d2 = catalog_instances(c, r2, include_also=False)[0].design
        names = (r1.design_id, r2.design_id)
    else:
        raise UsageError("iso takes one or two design ids")
    res = are_isomorphic(d1, d2, node_budget=args.node_budget, point_transitive=True)
    obj = {"designs": list(names), "verdict": res.verdict.value, "nodes": res.nodes, "mapping": res.mapping}
    _emit(args, obj, f"{names[0]} vs {names[1]}: {res.verdict.value} ({res.nodes} refinement nodes)")
    return EXIT_FAIL if res.verdict is IsoVerdict.UNKNOWN else EXIT_OK


def cmd_fulldesigns(args) -> int:
    n = args.n
    if not 5 <= n <= 10:
        raise UsageError(f"--n must lie in 5..10, got {n}")
    ks = [args.k] if args.k is not None else list(range(3, n - 1))
    if any(not 3 <= k <= n - 2 for k in ks):
        raise UsageError(f"--k must lie in 3..{n - 2}")
    Sn = PermGroup([Permutation.from_cycles([(1, 2)], n), Permutation.from_cycles([tuple(range(1, n + 1))], n)])
    An = PermGroup([Permutation.from_cycles([(1, 2, x)], n) for x in range(3, n + 1)])
    out, ok = [], True
    for k in ks:
        D = full_design(n, k)
        rep_s, rep_a = check_design(Sn, D), check_design(An, D)
        good = rep_s.ok and rep_a.ok and rep_s.params == full_design_params(n, k)
        ok &= good
        out.append({"n": n, "k": k, "params": list(rep_s.params) if rep_s.params else None,
                    "flag_transitive_Sn": rep_s.flag_transitive, "flag_transitive_An": rep_a.flag_transitive,
                    "point_primitive": rep_s.point_primitive, "ok": good})
    text = "".join(f"n={o['n']} k={o['k']}  {ParamTuple(*o['params'])}  "
                   f"{'verified' if o['ok'] else 'FAILED'}\n" for o in out)
    tsv = "n\tk\tv\tb\tr\tk\tlambda\tok\n" + "".join(
        f"{o['n']}\t{o['k']}\t" + "\t".join(map(str, o["params"])) + f"\t{o['ok']}\n" for o in out)
    _emit(args, out, text, tsv)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_validate_catalog(args) -> int:
    c = _load_catalog(args)
    rep = validate(c)
    text = f"{len(rep.entries)} checks, {len(rep.failures)} failures\n" + "".join(
        f"FAIL {e.record}: {e.check} {e.detail}\n" for e in rep.failures)
    _emit(args, rep.to_json(), text)
    return EXIT_OK if rep.ok else EXIT_FAIL


COMMANDS = {
    "enumerate": cmd_enumerate, "verify": cmd_verify, "classify": cmd_classify, "complement": cmd_complement,
    "iso": cmd_iso, "fulldesigns": cmd_fulldesigns, "validate-catalog": cmd_validate_catalog,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, CatalogError, ParamError, DesignError) as exc:
        print(f"flagtrans: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
