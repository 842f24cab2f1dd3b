"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 computation error,
3 verification failure.  Output is deterministic for a given input;
``--json`` replaces the human rendering with the JSON payload.

Notation on the command line: partitions and multipartitions are JSON
arrays (``[2,1]``, ``[[2],[1,1],[1,1]]``); compositions are
parenthesized comma lists that keep zero parts visible, e.g.
``(3,1,0,2,3)``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import branching, perms, shapes, tableaux, verify
from .lr import lr_coefficient, lr_multi
from .shapes import concat_parts

USAGE_ERROR, COMPUTATION_ERROR, VERIFICATION_FAILURE = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_partition(text: str) -> shapes.Partition:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad partition syntax {text!r}: {exc}") from None
    if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
        raise ValueError(f"bad partition {text!r}")
    return shapes.check_partition(tuple(data))


def parse_multipartition(text: str) -> shapes.Multipartition:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad multipartition syntax {text!r}: {exc}") from None
    if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
        raise ValueError(f"bad multipartition {text!r}")
    return tuple(shapes.check_partition(tuple(c)) for c in data)


def parse_composition(text: str) -> shapes.Composition:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"compositions are written (a,b,...): {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return ()
    parts = tuple(int(v) for v in inner.split(","))
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in composition {text!r}")
    return parts


def _mp_sort_key(mp):
    return (concat_parts(mp), mp)


def _mult_payload(m, n, rule, lam, mults) -> dict:
    ordered = sorted(mults, key=_mp_sort_key, reverse=True)
    return {
        "m": m, "n": n, "rule": rule,
        "lambda": [list(p) for p in lam],
        "multiplicities": [{"nu": [list(p) for p in nu], "mult": mults[nu]}
                           for nu in ordered],
    }


def _mult_human(payload) -> str:
    lines = [f"rule={payload['rule']} m={payload['m']} n={payload['n']} "
             f"lambda={json.dumps(payload['lambda'])}"]
    for entry in payload["multiplicities"]:
        lines.append(f"  nu={json.dumps(entry['nu'])} mult={entry['mult']}")
    return "\n".join(lines)


def build_parser() -> _Parser:
    parser = _Parser(prog="wreathbranch")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", dest="as_json",
                       help="print the JSON payload only")
        return p

    p = add("partitions", help="list the partitions of m")
    p.add_argument("m", type=int)

    p = add("dim", help="Specht module dimension by hook lengths")
    p.add_argument("--partition", required=True)

    p = add("lr", help="Littlewood-Richardson coefficient")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)

    p = add("lr-multi", help="generalized LR coefficient")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--parts", required=True,
                   help="semicolon-separated partitions, e.g. [2];[1,1]")

    p = add("young-layer", help="two adjacent layers of the Young graph")
    p.add_argument("m", type=int)

    p = add("labellings", help="good labellings with their coefficients")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--nu", required=True)

    p = add("branch-first", help="restriction to the smaller inner group")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--method", choices=["labellings", "matrices", "both"],
                   default="matrices")

    p = add("branch-second", help="restriction to the smaller outer group")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)

    p = add("wreath-dim", help="dimension of a wreath product Specht module")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)

    p = add("cosets", help="double coset representatives from tableaux")
    p.add_argument("--gamma", required=True)
    p.add_argument("--alpha", required=True)

    p = add("rho", help="cyclic coset representatives for given sizes")
    p.add_argument("--sizes", required=True)

    p = add("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", required=True, choices=sorted(verify.SUITES))
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)

    return parser


def _run(args) -> tuple[dict, str, int]:
    cmd = args.command
    if cmd == "partitions":
        parts = shapes.enumerate_partitions(args.m)
        listing = [list(p) for p in parts]
        return ({"m": args.m, "partitions": listing},
                json.dumps(listing, separators=(",", ":")), 0)

    if cmd == "dim":
        lam = parse_partition(args.partition)
        dim = shapes.specht_dimension(lam)
        return ({"partition": list(lam), "dim": dim}, str(dim), 0)

    if cmd == "lr":
        lam = parse_partition(args.lam)
        alpha = parse_partition(args.alpha)
        beta = parse_partition(args.beta)
        c = lr_coefficient(lam, alpha, beta)
        return ({"lambda": list(lam), "alpha": list(alpha),
                 "beta": list(beta), "coefficient": c}, str(c), 0)

    if cmd == "lr-multi":
        lam = parse_partition(args.lam)
        parts = tuple(parse_partition(p) for p in args.parts.split(";"))
        c = lr_multi(lam, parts)
        return ({"lambda": list(lam), "parts": [list(p) for p in parts],
                 "coefficient": c}, str(c), 0)

    if cmd == "young-layer":
        layer = branching.young_layer(args.m)
        payload = {
            "m": layer.m,
            "upper": [list(p) for p in layer.upper],
            "lower": [list(p) for p in layer.lower],
            "edges": [{"upper": i + 1, "lower": j + 1}
                      for i, j in layer.edges],
            "adjacency": [list(row) for row in layer.adjacency],
        }
        human = "\n".join(
            [f"upper: {json.dumps(payload['upper'])}",
             f"lower: {json.dumps(payload['lower'])}",
             f"edges: {len(layer.edges)}"])
        return payload, human, 0

    if cmd == "labellings":
        layer = branching.young_layer(args.m)
        lam = parse_multipartition(args.lam)
        nu = parse_multipartition(args.nu)
        entries = []
        for gl in branching.enumerate_good_labellings(layer, lam, nu):
            entries.append({
                "labels": [{"upper": i + 1, "lower": j + 1, "label": list(lbl)}
                           for (i, j), lbl in zip(layer.edges, gl.labels)],
                "coefficient": branching.labelling_coefficient(gl),
            })
        payload = {"m": args.m, "lambda": [list(p) for p in lam],
                   "nu": [list(p) for p in nu], "labellings": entries,
                   "total": sum(e["coefficient"] for e in entries)}
        human_lines = [f"{len(entries)} good labellings, "
                       f"coefficient sum {payload['total']}"]
        for e in entries:
            lbls = " ".join(f"({l['upper']},{l['lower']}):{l['label']}"
                            for l in e["labels"])
            human_lines.append(f"  M(L)={e['coefficient']}  {lbls}")
        return payload, "\n".join(human_lines), 0

    if cmd == "branch-first":
        lam = parse_multipartition(args.lam)
        n = sum(map(sum, lam))
        if args.method == "both":
            mats = branching.branch_first(args.m, lam, method="matrices")
            labs = branching.branch_first(args.m, lam, method="labellings")
            if mats != labs:
                payload = {"status": "error", "code": "method-disagreement",
                           "matrices": _mult_payload(args.m, n, "first",
                                                     lam, mats),
                           "labellings": _mult_payload(args.m, n, "first",
                                                       lam, labs)}
                return payload, "methods disagree", VERIFICATION_FAILURE
            mults = mats
        else:
            mults = branching.branch_first(args.m, lam, method=args.method)
        payload = _mult_payload(args.m, n, "first", lam, mults)
        return payload, _mult_human(payload), 0

    if cmd == "branch-second":
        lam = parse_multipartition(args.lam)
        n = sum(map(sum, lam))
        mults = branching.branch_second(args.m, n, lam)
        payload = _mult_payload(args.m, n, "second", lam, mults)
        return payload, _mult_human(payload), 0

    if cmd == "wreath-dim":
        lam = parse_multipartition(args.lam)
        dim = branching.wreath_specht_dimension(args.m, lam)
        return ({"m": args.m, "lambda": [list(p) for p in lam],
                 "dim": dim}, str(dim), 0)

    if cmd == "cosets":
        gamma = parse_composition(args.gamma)
        alpha = parse_composition(args.alpha)
        system = perms.double_coset_reps(gamma, alpha)
        reps = [perms.to_cycles(p) for p in system.reps]
        payload = {"gamma": list(gamma), "alpha": list(alpha),
                   "count": len(reps), "reps": reps}
        return payload, "\n".join(reps), 0

    if cmd == "rho":
        sizes = parse_composition(args.sizes)
        entries = [{"index": i, "cycles": perms.to_cycles(p)}
                   for i, p in perms.rho_cosets(sizes)]
        payload = {"sizes": list(sizes), "reps": entries}
        human = "\n".join(f"rho_{e['index']} = {e['cycles']}"
                          for e in entries)
        return payload, human, 0

    if cmd == "verify":
        report = verify.run_suite(args.suite, args.max_m, args.max_n)
        ok = not report["failures"]
        human_lines = [f"suite {args.suite}: {report['checked']} instances "
                       f"checked, {len(report['failures'])} failures"]
        human_lines += [f"  FAIL {f}" for f in report["failures"]]
        return report, "\n".join(human_lines), 0 if ok else VERIFICATION_FAILURE

    raise UsageError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        payload, human, code = _run(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        err = {"status": "error", "code": "computation-error",
               "message": str(exc)}
        print(json.dumps(err, sort_keys=True))
        return COMPUTATION_ERROR
    if args.as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)
    return code


if __name__ == "__main__":
    sys.exit(main())
