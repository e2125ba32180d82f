"""Command-line front end.

Subcommands: chi (exact solve), construct (family labeling), verify
(check a labeling file against a graph file), sweep (construct/verify/solve a
parameter range), lobster-table (the m-value grid), and bounds.

Exit codes: 0 ok, 1 usage or parse error, 2 indeterminate (budget), 3
verification failure, 4 sweep disagreement.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
import time

from .constructions import ConstructionResult, closed_form
from . import constructions
from .families import (
    CaterpillarSpec, CycleSpec, GearSpec, HelmSpec, MaximalLobsterSpec,
    PathSpec, StarSpec, UniformTreeSpec, WheelSpec, build,
)
from .graph import GraphError, diameter, emit_edge_list, parse_edge_list
from .lobster import label_maximal_lobster, m_table
from .solver import SearchOptions, chi_td, lower_bound
from .verifier import (
    LabelingError, find_violations, labeling_from_json, max_label_used,
    report_to_json,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INDETERMINATE = 2
EXIT_VERIFY_FAIL = 3
EXIT_SWEEP_DISAGREE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=[
        "path", "cycle", "star", "wheel", "gear", "helm", "caterpillar",
        "lobster", "uniform-tree"])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--delta1", type=int)
    p.add_argument("--delta2", type=int)
    p.add_argument("--spine", type=str,
                   help="comma-separated spine degrees, e.g. 1,3,3,3,1")


def _require(args, names):
    for name in names:
        if getattr(args, name.replace("-", "_")) is None:
            raise GraphError(f"--family {args.family} requires --{name}")


def _spec_from_args(args):
    fam = args.family
    if fam is None:
        raise GraphError("either --input or --family is required")
    if fam == "path":
        _require(args, ["n"])
        return PathSpec(args.n)
    if fam == "cycle":
        _require(args, ["n"])
        return CycleSpec(args.n)
    if fam == "star":
        _require(args, ["m"])
        return StarSpec(args.m)
    if fam == "wheel":
        _require(args, ["n"])
        return WheelSpec(args.n)
    if fam == "gear":
        _require(args, ["n"])
        return GearSpec(args.n)
    if fam == "helm":
        _require(args, ["n"])
        return HelmSpec(args.n)
    if fam == "caterpillar":
        _require(args, ["spine"])
        return CaterpillarSpec(int(x) for x in args.spine.split(","))
    if fam == "lobster":
        _require(args, ["n", "delta1", "delta2"])
        return MaximalLobsterSpec(args.n, args.delta1, args.delta2)
    _require(args, ["delta", "h"])
    return UniformTreeSpec(args.delta, args.h)


def _graph_from_args(args):
    if getattr(args, "input", None):
        with open(args.input) as f:
            return parse_edge_list(f.read())
    g, _ = build(_spec_from_args(args))
    return g


def _search_options(args) -> SearchOptions:
    node_limit = args.node_limit
    if node_limit is None and os.environ.get("TDL_NODE_LIMIT"):
        node_limit = int(os.environ["TDL_NODE_LIMIT"])
    return SearchOptions(max_k=args.max_k, node_limit=node_limit,
                         time_limit=args.time_limit)


def cmd_chi(args) -> int:
    g = _graph_from_args(args)
    res = chi_td(g, _search_options(args))
    if args.json:
        print(json.dumps({
            "lower": res.lower, "upper": res.upper, "exact": res.exact,
            "witness": list(res.witness) if res.witness else None,
            "provenance": res.provenance,
        }))
    elif res.exact is not None:
        print(f"chi_td = {res.exact}")
        print(f"witness: {list(res.witness)}")
    elif "max_k" in res.provenance:
        print(f"no k <= {res.lower - 1}: chi_td in [{res.lower}, {res.upper}]")
    else:
        print(f"indeterminate: bounds [{res.lower}, {res.upper}] "
              f"({res.provenance})")
    if res.exact is not None or "max_k" in res.provenance:
        return EXIT_OK
    return EXIT_INDETERMINATE


def _construct(spec) -> ConstructionResult:
    if isinstance(spec, PathSpec):
        return constructions.label_path(spec.n)
    if isinstance(spec, CycleSpec):
        return constructions.label_cycle(spec.n)
    if isinstance(spec, StarSpec):
        return constructions.label_star(spec.m)
    if isinstance(spec, WheelSpec):
        return constructions.label_wheel(spec.n)
    if isinstance(spec, GearSpec):
        return constructions.label_gear(spec.n)
    if isinstance(spec, HelmSpec):
        return constructions.label_helm(spec.n)
    if isinstance(spec, CaterpillarSpec):
        return constructions.label_caterpillar(spec.spine_degrees)
    if isinstance(spec, UniformTreeSpec):
        return constructions.label_uniform_tree(spec.delta, spec.h)
    return label_maximal_lobster(spec.n, spec.delta1, spec.delta2)


def cmd_construct(args) -> int:
    spec = _spec_from_args(args)
    res = _construct(spec)
    if args.out:
        with open(args.out, "w") as f:
            f.write(res.to_json() + "\n")
    if args.graph_out:
        with open(args.graph_out, "w") as f:
            f.write(emit_edge_list(res.graph))
    print(res.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.graph) as f:
        g = parse_edge_list(f.read())
    with open(args.labeling) as f:
        labels = labeling_from_json(f.read())
    report = find_violations(g, labels)
    print(report_to_json(g, labels, report))
    if not report.ok:
        return EXIT_VERIFY_FAIL
    if args.k is not None and max_label_used(g, labels) > args.k:
        print(f"max label exceeds k = {args.k}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    return EXIT_OK


_SWEEP_SPECS = {
    "path": PathSpec, "cycle": CycleSpec, "star": StarSpec,
    "wheel": WheelSpec, "gear": GearSpec, "helm": HelmSpec,
}


def _sweep_one(family: str, value: int, check: str,
               node_limit: int | None) -> dict:
    spec = _SWEEP_SPECS[family](value)
    start = time.monotonic()
    res = _construct(spec)
    report = find_violations(res.graph, res.labeling)
    witness_ok = report.ok and max(res.labeling) <= res.claimed_k
    theorem = closed_form(spec)
    row = {
        "spec": f"{family}({value})",
        "theorem_value": theorem.exact,
        "bounds": [theorem.lower, theorem.upper],
        "claimed_k": res.claimed_k,
        "witness_ok": witness_ok,
        "solver_value": None,
        "agree": witness_ok and (theorem.exact is None
                                 or theorem.exact == res.claimed_k),
    }
    if check == "exact":
        opts = SearchOptions(node_limit=node_limit)
        solved = chi_td(res.graph, opts)
        row["solver_value"] = solved.exact
        row["agree"] = (row["agree"]
                        and solved.exact is not None
                        and solved.exact == theorem.exact)
    row["elapsed"] = round(time.monotonic() - start, 3)
    return row


def cmd_sweep(args) -> int:
    if args.family not in _SWEEP_SPECS:
        print(f"error: sweep supports families {sorted(_SWEEP_SPECS)}",
              file=sys.stderr)
        return EXIT_USAGE
    node_limit = None
    if os.environ.get("TDL_NODE_LIMIT"):
        node_limit = int(os.environ["TDL_NODE_LIMIT"])
    values = range(args.start, args.end + 1)
    if args.parallel and args.parallel > 1:
        with concurrent.futures.ProcessPoolExecutor(args.parallel) as pool:
            rows = list(pool.map(
                _sweep_one, [args.family] * len(values), values,
                [args.check] * len(values), [node_limit] * len(values)))
    else:
        rows = [_sweep_one(args.family, v, args.check, node_limit)
                for v in values]
    if args.json:
        print(json.dumps({"rows": rows}))
    else:
        for row in rows:
            status = "ok" if row["agree"] else "DISAGREE"
            print(f"{row['spec']:>12}  claimed {row['claimed_k']:>3}  "
                  f"theorem {row['theorem_value']}  "
                  f"solver {row['solver_value']}  "
                  f"verified {row['witness_ok']}  {status}")
    return EXIT_OK if all(r["agree"] for r in rows) else EXIT_SWEEP_DISAGREE


def cmd_lobster_table(args) -> int:
    table = m_table(args.delta1, args.delta2)
    print(table.to_csv() if args.csv else table.to_text(), end="")
    return EXIT_OK


def cmd_bounds(args) -> int:
    with open(args.input) as f:
        g = parse_edge_list(f.read())
    lower = lower_bound(g)
    reasons = [f"star subgraph: {g.max_degree() + 1}"]
    if diameter(g) <= 2:
        reasons.append(f"diameter <= 2: {g.n} distinct vertex labels")
    is_tree = g.edge_count() == g.n - 1 and diameter(g) != float("inf")
    if is_tree:
        upper = 2 * g.max_degree() + 1
        upper_reason = "greedy tree bound 2*Delta+1"
    else:
        upper = 3 ** (g.n - 1)
        upper_reason = "power-of-three bound 3^(n-1)"
    print(f"lower = {lower} ({'; '.join(reasons)})")
    print(f"upper = {upper} ({upper_reason})")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _Parser(prog="totaldiff",
                     description="Total difference chromatic numbers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", help="compute chi_td exactly")
    p.add_argument("--input", help="edge-list file")
    _add_family_args(p)
    p.add_argument("--max-k", type=int)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("construct", help="emit a family labeling")
    _add_family_args(p)
    p.add_argument("--out", help="labeling JSON output file")
    p.add_argument("--graph-out", help="edge-list output file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a labeling file")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="construct/verify/solve a range")
    p.add_argument("--family", required=True)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="end", type=int, required=True)
    p.add_argument("--check", choices=["exact", "verify-only"],
                   default="verify-only")
    p.add_argument("--parallel", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("lobster-table", help="print the m-value grid")
    p.add_argument("--delta1", type=int, required=True)
    p.add_argument("--delta2", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_lobster_table)

    p = sub.add_parser("bounds", help="structural bounds for a graph file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_bounds)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, LabelingError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
