"""Command-line front end: ``baldom <command> [flags]``.

Exit status: 0 success, 1 argument error, 2 resource limit hit, 3 a checked
theorem statement failed at this instance.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from typing import Callable, Sequence

from . import generators as gen
from .generators import CaterpillarSpec, TwoLevelTreeSpec
from .graph import Graph
from .grids import (
    all_bdfs_by_propagation,
    antidiagonal_violations,
    applicable_schemes,
    build_scheme,
    classify_all,
)
from .layers import LayerPartition, certificate_report, natural_partition
from .solver import Limits, ResourceLimitError, backtracking_oracle, gamma_bd, summarize
from .trees import caterpillar_mbdf_search, full_binary_sweep, two_level_verdict

EXIT_OK, EXIT_ARGS, EXIT_RESOURCE, EXIT_VIOLATION = 0, 1, 2, 3

FAMILIES = ("antiprism", "polytope-d", "polytope-r2", "grid", "caterpillar", "two-level",
            "full-binary")
POLYTOPES = {"antiprism": gen.antiprism, "polytope-d": gen.polytope_d,
             "polytope-r2": gen.polytope_r2}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from exc


def _shape_from_json(obj):
    if not isinstance(obj, list) or len(obj) not in (0, 2):
        raise UsageError(f"malformed full binary shape {obj!r}")
    return () if not obj else (_shape_from_json(obj[0]), _shape_from_json(obj[1]))


def _require(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--family {args.family} needs " + ", ".join("--" + m for m in missing))


def build_family(args) -> Graph:
    fam = args.family
    if fam in POLYTOPES:
        _require(args, "n")
        return POLYTOPES[fam](args.n)
    if fam == "grid":
        _require(args, "m", "n")
        return gen.grid(args.m, args.n)
    if fam == "caterpillar":
        _require(args, "spec")
        return gen.caterpillar(CaterpillarSpec.of(_int_list(args.spec)))
    if fam == "two-level":
        _require(args, "spec")
        return gen.two_level_tree(TwoLevelTreeSpec.of(_int_list(args.spec)))
    if fam == "full-binary":
        if args.shape is not None:
            return gen.full_binary_tree(_shape_from_json(json.loads(args.shape)))
        _require(args, "n")
        return gen.full_binary_tree(gen.perfect_shape(args.n))
    raise UsageError(f"unknown family {fam!r}")


def _load_graph(args) -> Graph:
    if args.family:
        return build_family(args)
    if args.graph:
        text = sys.stdin.read() if args.graph == "-" else open(args.graph, encoding="utf-8").read()
        return Graph.from_json(text)
    raise UsageError("give --family or --graph (use '-' for standard input)")


def _limits(args) -> Limits:
    return Limits(
        max_free_enumeration=args.limits_max_free,
        node_budget=args.limits_node_budget,
        workers=args.limits_workers,
        fallback=args.limits_fallback,
    )


# -- commands -------------------------------------------------------------
# each returns (report, exit_status); report is a dict or a preformatted str


def cmd_gen(args):
    g = build_family(args)
    if args.format == "dot":
        return g.to_dot(), EXIT_OK
    if args.format == "text":
        lines = [f"{g.n_vertices} {g.n_edges}"] + [f"{i} {j}" for i, j in g.edges]
        return "\n".join(lines) + "\n", EXIT_OK
    return g.to_dict(), EXIT_OK


def _claimed_gamma(g: Graph) -> int | None:
    """γ_bd asserted by a proved statement for this generated graph, if any."""
    fam = g.family
    if fam is None:
        return None
    if fam.name in ("antiprism", "polytope_d", "polytope_r2", "full_binary", "grid"):
        return 0
    if fam.name == "two_level":
        return two_level_verdict(TwoLevelTreeSpec.of(fam.params["leaf_counts"])).gamma_formula
    return None


def cmd_solve(args):
    g = _load_graph(args)
    limits = _limits(args)
    res = backtracking_oracle(g, limits) if args.method == "backtracking" else gamma_bd(g, limits)
    claim = _claimed_gamma(g)
    status = EXIT_VIOLATION if claim is not None and claim != res.gamma else EXIT_OK
    if args.format == "dot":
        return g.to_dot(res.witness), status
    if args.format == "text":
        verdict = "d-balanced" if res.d_balanced else "not d-balanced"
        return (f"gamma_bd = {res.gamma} ({verdict}); nullity {res.nullity}; "
                f"{res.bdf_count} BDFs; method {res.method}\n"), status
    return res.to_dict(), status


def _parse_layers(text: str) -> LayerPartition:
    return LayerPartition.of([_int_list(part) for part in text.split(";")])


def cmd_certify(args):
    g = _load_graph(args)
    if args.layers:
        p = _parse_layers(args.layers)
    else:
        p = natural_partition(g)
        if p is None:
            raise UsageError("no natural layer partition for this graph; pass --layers")
    report = certificate_report(g, p)
    claimed = g.family is not None and g.family.name in ("antiprism", "polytope_d", "polytope_r2")
    status = EXIT_VIOLATION if claimed and not args.layers and not report["certified"] else EXIT_OK
    if args.format == "text":
        return f"{report['reason']}; quotient {report['quotient']}; det {report['det']}\n", status
    return report, status


def grid_report(m: int, n: int, workers: int = 1) -> tuple[dict, list]:
    labs = all_bdfs_by_propagation(m, n, workers=workers)
    res = summarize([x.to_labeling() for x in labs], m * n, "propagation")
    nonzero = [x for x in labs if not x.is_zero()]
    classes = []
    for x in nonzero:
        matches = classify_all(x)
        classes.append({"type": matches[0].name, "layout": list(matches[0].row_layout)}
                       if matches else {"type": None, "layout": []})
    report = {"m": m, "n": n, "gamma": res.gamma, "nonzero_bdfs": len(nonzero),
              "classifications": classes}
    return report, nonzero


def cmd_grid_classify(args):
    if args.m is None or args.n is None:
        raise UsageError("grid-classify needs --m and --n")
    report, nonzero = grid_report(args.m, args.n, args.limits_workers)
    bad = report["gamma"] != 0 or any(c["type"] is None for c in report["classifications"])
    status = EXIT_VIOLATION if bad else EXIT_OK
    if args.dump:
        os.makedirs(args.dump, exist_ok=True)
        for k, lab in enumerate(nonzero):
            path = os.path.join(args.dump, f"grid_{args.m}x{args.n}_{k:03d}.pgm")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(lab.to_pgm())
    if args.format == "text":
        parts = [f"Grid {args.m}x{args.n}: gamma {report['gamma']}, "
                 f"{report['nonzero_bdfs']} non-zero BDFs\n"]
        for lab, c in zip(nonzero, report["classifications"]):
            parts.append(f"\n{c['type']} {' / '.join(c['layout'])}\n{lab.to_text()}")
        return "".join(parts), status
    return report, status


def cmd_tree_check(args):
    limits = _limits(args)
    if args.two_level:
        spec = TwoLevelTreeSpec.of(_int_list(args.two_level))
        verdict = two_level_verdict(spec)
        res = gamma_bd(gen.two_level_tree(spec), limits)
        consistent = verdict.d_balanced == res.d_balanced and verdict.gamma_formula == res.gamma
        report = {"kind": "two-level", "leaf_counts": list(spec.child_leaf_counts),
                  "d_balanced": res.d_balanced, "gamma": res.gamma,
                  "verdict": verdict.to_dict(), "consistent": consistent}
    elif args.full_binary is not None:
        rows = full_binary_sweep(args.full_binary, limits)
        consistent = all(r["bdf_count"] == 1 and r["root_zero"] and r["recursive_zero"]
                         for r in rows)
        report = {"kind": "full-binary", "max_vertices": args.full_binary, "shapes": len(rows),
                  "d_balanced": consistent, "consistent": consistent}
    elif args.caterpillar:
        spec = CaterpillarSpec.of(_int_list(args.caterpillar))
        res = gamma_bd(gen.caterpillar(spec), limits)
        report = {"kind": "caterpillar", "leaf_counts": list(spec.leaf_counts),
                  "d_balanced": res.d_balanced, "gamma": res.gamma,
                  "bdf_count": res.bdf_count, "consistent": True}
    else:
        raise UsageError("tree-check needs --two-level, --full-binary or --caterpillar")
    status = EXIT_OK if report["consistent"] else EXIT_VIOLATION
    return report, status


def cmd_caterpillar_search(args):
    if args.n is None:
        raise UsageError("caterpillar-search needs --n")
    found = caterpillar_mbdf_search(args.n)
    violations = sum(1 for a in found if not a.satisfies_mod4() or a.pair_type_counts[2] % 2)
    report = {"n": args.n, "count": len(found), "violations": violations,
              "results": [a.to_dict() for a in found]}
    return report, EXIT_VIOLATION if violations else EXIT_OK


def run_sweep(quick: bool = True, limits: Limits | None = None) -> list[dict]:
    """Theorem checks over parameter ranges; one row per statement."""
    limits = limits or Limits()
    rows = []

    def check(name: str, cases, pred: Callable) -> None:
        failures = [repr(c) for c in cases if not pred(c)]
        rows.append({"check": name, "instances": len(cases), "failures": failures[:5],
                     "passed": not failures})

    top = 8 if quick else 10
    check("antiprism d-balanced", list(range(5, top + 1)),
          lambda n: gamma_bd(gen.antiprism(n), limits).gamma == 0)
    check("polytope D d-balanced", list(range(5, min(top, 8) + 1)),
          lambda n: gamma_bd(gen.polytope_d(n), limits).gamma == 0)
    check("polytope R'' d-balanced", list(range(5, 8)),
          lambda n: gamma_bd(gen.polytope_r2(n), limits).gamma == 0)
    check("layer certificates", [(f, n) for f in POLYTOPES for n in range(5, 13)],
          lambda c: certificate_report(POLYTOPES[c[0]](c[1]),
                                       natural_partition(POLYTOPES[c[0]](c[1])))["certified"])
    gmax = 6 if quick else 8
    grids = [(m, n) for m in range(1, gmax + 1) for n in range(m, gmax + 1)]
    reports = {mn: grid_report(*mn)[0] for mn in grids}
    check("grids d-balanced", grids, lambda mn: reports[mn]["gamma"] == 0)
    check("grid classification", grids,
          lambda mn: all(c["type"] for c in reports[mn]["classifications"])
          and (reports[mn]["nonzero_bdfs"] == 0) == (not applicable_schemes(*mn)))
    tl = [(n, ls) for n in range(2, 5 if quick else 6)
          for ls in itertools.product(range(5), repeat=n)]
    check("two-level characterization", tl, lambda c: _two_level_ok(c[1], limits))
    check("full binary trees", [11 if quick else 15],
          lambda nmax: all(r["bdf_count"] == 1 and r["root_zero"] and r["recursive_zero"]
                           for r in full_binary_sweep(nmax, limits)))
    check("caterpillar L ≡ 3n-2 (mod 4)", list(range(2, 10)),
          lambda n: all(a.satisfies_mod4() for a in caterpillar_mbdf_search(n)))
    schemes = [(m, n, s) for m in range(8, 15) for n in range(m, 15)
               for s in applicable_schemes(m, n)]
    check("anti-diagonal relations", schemes,
          lambda c: not antidiagonal_violations(build_scheme(c[2], c[1])))
    return rows


def _two_level_ok(leaf_counts, limits) -> bool:
    spec = TwoLevelTreeSpec.of(leaf_counts)
    v = two_level_verdict(spec)
    r = gamma_bd(gen.two_level_tree(spec), limits)
    return v.d_balanced == r.d_balanced and (v.d_balanced or r.gamma == spec.n_children - 1)


def cmd_sweep(args):
    rows = run_sweep(quick=not args.full, limits=_limits(args))
    status = EXIT_OK if all(r["passed"] for r in rows) else EXIT_VIOLATION
    if args.format == "text":
        width = max(len(r["check"]) for r in rows)
        lines = [f"{r['check']:<{width}}  {'PASS' if r['passed'] else 'FAIL'}  "
                 f"({r['instances']} instances)" for r in rows]
        return "\n".join(lines) + "\n", status
    return {"checks": rows}, status


COMMANDS = {
    "gen": cmd_gen,
    "solve": cmd_solve,
    "certify": cmd_certify,
    "grid-classify": cmd_grid_classify,
    "tree-check": cmd_tree_check,
    "caterpillar-search": cmd_caterpillar_search,
    "sweep": cmd_sweep,
}


def make_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "dot", "text"), default="json")
    common.add_argument("--out", help="write the report here instead of standard output")
    common.add_argument("--limits-max-free", type=int, default=20,
                        help="largest kernel nullity enumerated exhaustively")
    common.add_argument("--limits-node-budget", type=int, default=10_000_000)
    common.add_argument("--limits-workers", type=int, default=1)
    common.add_argument("--limits-fallback", action="store_true",
                        help="use backtracking instead of failing on large nullity")

    graph_args = _Parser(add_help=False)
    graph_args.add_argument("--family", choices=FAMILIES)
    graph_args.add_argument("--n", type=int)
    graph_args.add_argument("--m", type=int)
    graph_args.add_argument("--spec", help="comma-separated leaf counts")
    graph_args.add_argument("--shape", help="full binary shape as nested JSON lists")

    parser = _Parser(prog="baldom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    sub.add_parser("gen", parents=[common, graph_args], help="emit a generated graph")
    p = sub.add_parser("solve", parents=[common, graph_args], help="exact balanced domination number")
    p.add_argument("--graph", help="graph JSON file, '-' for standard input")
    p.add_argument("--method", choices=("kernel", "backtracking"), default="kernel")
    p = sub.add_parser("certify", parents=[common, graph_args], help="layer-sum certificate")
    p.add_argument("--graph")
    p.add_argument("--layers", help="layers as 'v,v,...;v,v,...'")
    p = sub.add_parser("grid-classify", parents=[common], help="classify all grid BDFs")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--dump", metavar="DIR", help="also write each non-zero BDF as a PGM image")
    p = sub.add_parser("tree-check", parents=[common], help="check tree characterizations")
    p.add_argument("--two-level", help="leaf counts of the root's children")
    p.add_argument("--full-binary", type=int, metavar="MAX_VERTICES")
    p.add_argument("--caterpillar", help="leaf counts along the spine")
    p = sub.add_parser("caterpillar-search", parents=[common], help="enumerate non-zero MBDFs")
    p.add_argument("--n", type=int)
    p = sub.add_parser("sweep", parents=[common], help="theorem verification table")
    p.add_argument("--full", action="store_true", help="use the larger parameter ranges")
    return parser


def to_json_text(obj, indent: int = 0) -> str:
    """Indented JSON with lists of scalars kept on one line."""
    pad = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {to_json_text(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        items = [pad + to_json_text(x, indent + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(obj, ensure_ascii=False)


def _render(report) -> str:
    if isinstance(report, str):
        return report
    return to_json_text(report) + "\n"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = make_parser().parse_args(argv)
        if args.limits_max_free < 0 or args.limits_node_budget < 1 or args.limits_workers < 1:
            raise UsageError("limits must be positive and workers >= 1")
        report, status = COMMANDS[args.command](args)
    except UsageError as exc:
        print(str(exc), file=stderr)
        return EXIT_ARGS
    except ValueError as exc:
        print(f"baldom: error: {exc}", file=stderr)
        return EXIT_ARGS
    except ResourceLimitError as exc:
        print(f"baldom: resource limit: {exc}", file=stderr)
        return EXIT_RESOURCE
    text = _render(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
