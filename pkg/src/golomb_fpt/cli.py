"""Command-line interface.

Exit codes: 0 ok, 1 negative answer or failed validation, 2 bad input,
3 magnitude / size guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Optional, Sequence

from .corpus import random_rulers
from .errors import GolombError, MagnitudeError, OracleSizeError
from .hypergraph import build_improved
from .kernel import kernelize
from .oracle import brute_force_max_subruler
from .ruler import Ruler, load_ruler
from .satreduce import parse_formula, reduce_to_ruler
from .search import DeletionInstance, SearchOptions, SearchStats, NodeLimitExceeded, solve_parameterized
from .solver import find_max_golomb_subruler, max_marks_for_length
from .structure import structure_report

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


@dataclass
class RunRecord:
    command: str
    input: str
    wall_time: float
    stats: dict[str, int] = field(default_factory=dict)
    result: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        return cls(**json.loads(text))

    def to_text(self) -> str:
        lines = [f"command: {self.command}", f"input: {self.input}"]
        lines += [f"{k}: {_fmt(v)}" for k, v in self.result.items()]
        lines += [f"{k}: {v}" for k, v in self.stats.items()]
        lines.append(f"wall-time: {self.wall_time:.6f}")
        return "\n".join(lines) + "\n"


def _fmt(v: Any) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return " ".join(_fmt(x) for x in v)
    return str(v)


def _options(args) -> SearchOptions:
    return SearchOptions(
        cement=not args.no_cement,
        domination=not args.no_domination,
        inner_kernel=not args.no_inner_kernel,
        node_limit=getattr(args, "node_limit", None),
    )


def _emit(rec: RunRecord, as_json: bool) -> None:
    sys.stdout.write(rec.to_json() + "\n" if as_json else rec.to_text())


def _solve_record(name: str, r: Ruler, opts: SearchOptions, command: str = "solve") -> RunRecord:
    t0 = time.perf_counter()
    out = find_max_golomb_subruler(r, opts)
    wall = time.perf_counter() - t0
    return RunRecord(
        command=command,
        input=name,
        wall_time=wall,
        stats=out.stats.as_dict(),
        result={
            "marks": len(r),
            "best-subruler": list(out.best_subruler.marks),
            "best-size": len(out.best_subruler),
            "deletions": len(out.deletions),
            "deleted": sorted(out.deletions),
            "greedy-bound": out.greedy_bound,
            "k-steps": [f"{s.k}:{'yes' if s.found else 'no'}:{s.stats.nodes_visited}" for s in out.steps],
        },
    )


def cmd_solve(args) -> int:
    r = load_ruler(args.ruler)
    opts = _options(args)
    if args.k is None:
        _emit(_solve_record(args.ruler, r, opts), args.json)
        return EXIT_OK
    h = build_improved(r)
    t0 = time.perf_counter()
    try:
        sol, stats = solve_parameterized(DeletionInstance(h, args.k), opts)
        limit_hit = False
    except NodeLimitExceeded:
        sol, stats, limit_hit = None, SearchStats(nodes_visited=opts.node_limit or 0), True
    rec = RunRecord(
        command="solve",
        input=args.ruler,
        wall_time=time.perf_counter() - t0,
        stats=stats.as_dict(),
        result={"k": args.k, "answer": sol is not None},
    )
    if limit_hit:
        rec.result["node-limit-hit"] = True
    if sol is not None:
        rec.result["deleted"] = sorted(sol)
        rec.result["subruler"] = list(r.without(sol).marks)
    _emit(rec, args.json)
    return EXIT_OK if sol is not None else EXIT_NO


def cmd_ogr(args) -> int:
    t0 = time.perf_counter()
    out = max_marks_for_length(args.max_length, _options(args))
    rec = RunRecord(
        command="ogr",
        input=f"max-length:{args.max_length}",
        wall_time=time.perf_counter() - t0,
        stats=out.stats.as_dict(),
        result={
            "best-subruler": list(out.best_subruler.marks),
            "best-size": len(out.best_subruler),
            "greedy-bound": out.greedy_bound,
        },
    )
    _emit(rec, args.json)
    return EXIT_OK


def cmd_graph(args) -> int:
    sys.stdout.write(build_improved(load_ruler(args.ruler)).dump())
    return EXIT_OK


def cmd_kernelize(args) -> int:
    h = build_improved(load_ruler(args.ruler))
    res = kernelize(h, args.k)
    sys.stdout.write(res.graph.dump())
    print(f"budget: {res.budget}")
    print(f"forced-deletions: {' '.join(map(str, sorted(res.forced_deletions)))}")
    print(f"kept-marks: {' '.join(map(str, sorted(res.kept_marks)))}")
    print(f"infeasible: {'yes' if res.infeasible else 'no'}")
    print(f"within-kernel-bounds: {'yes' if res.within_bounds else 'no'}")
    return EXIT_NO if res.infeasible else EXIT_OK


def cmd_oracle(args) -> int:
    r = load_ruler(args.ruler)
    t0 = time.perf_counter()
    res = brute_force_max_subruler(r)
    rec = RunRecord(
        command="oracle",
        input=args.ruler,
        wall_time=time.perf_counter() - t0,
        result={
            "max_size": res.max_size,
            "witness": list(res.witness),
            "instances_explored": res.instances_explored,
        },
    )
    _emit(rec, args.json)
    return EXIT_OK


def cmd_validate(args) -> int:
    report = structure_report(build_improved(load_ruler(args.ruler)))
    sys.stdout.write(report.to_text())
    return EXIT_OK if report.ok else EXIT_NO


def cmd_reduce_sat(args) -> int:
    with open(args.formula) as fh:
        f = parse_formula(fh.read())
    inst = reduce_to_ruler(f, args.k)
    text = inst.to_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


BENCH_CONFIGS = {
    "default": SearchOptions(),
    "no-cement": SearchOptions(cement=False),
    "no-inner-kernel": SearchOptions(inner_kernel=False),
}


def _bench_one(job: tuple[str, tuple[int, ...], str, Optional[int]]) -> RunRecord:
    name, marks, config, limit = job
    base = BENCH_CONFIGS[config]
    opts = SearchOptions(base.cement, base.domination, base.inner_kernel, limit)
    try:
        rec = _solve_record(name, Ruler(marks), opts, command="bench")
    except NodeLimitExceeded:
        rec = RunRecord("bench", name, 0.0, {}, {"node-limit-hit": True})
    rec.result["config"] = config
    return rec


def cmd_bench(args) -> int:
    if args.random:
        rulers = [(f"random:{args.seed}:{i}", r) for i, r in enumerate(
            random_rulers(args.random, args.max_marks, args.span, seed=args.seed, min_marks=2))]
    else:
        rulers = [(f"range:{n}", Ruler.range(n)) for n in range(args.start, args.stop + 1)]
    configs = list(BENCH_CONFIGS) if args.ablate else ["default"]
    jobs = [(name, r.marks, c, args.node_limit) for name, r in rulers for c in configs]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            records = list(pool.map(_bench_one, jobs))
    else:
        records = map(_bench_one, jobs)
    for rec in records:
        if args.json:
            print(rec.to_json())
        else:
            res = rec.result
            print(
                f"{rec.input} config={res['config']} size={res.get('best-size', '-')} "
                f"nodes={rec.stats.get('nodes_visited', '-')} "
                f"cement_deletions={rec.stats.get('cement_deletions', '-')} "
                f"rule_deletions={rec.stats.get('rule_deletions', '-')} "
                f"branches_aborted={rec.stats.get('branches_aborted', '-')} "
                f"wall={rec.wall_time:.3f}" + (" node-limit-hit" if res.get("node-limit-hit") else "")
            )
        sys.stdout.flush()
    return EXIT_OK


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--no-cement", action="store_true", help="disable cementation")
    p.add_argument("--no-domination", action="store_true", help="disable dominating-vertex branching")
    p.add_argument("--no-inner-kernel", action="store_true", help="skip reduction rules inside the search")
    p.add_argument("--json", action="store_true", help="print one JSON record instead of key: value lines")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="golomb-fpt", description="Exact Golomb subruler tools")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="maximum Golomb subruler, or decision with --k")
    p.add_argument("ruler", help="ruler file or range:N for {0..N-1}")
    p.add_argument("--k", type=int, help="decide whether at most K deletions suffice")
    p.add_argument("--node-limit", type=int, help="give up after this many search nodes (decision mode)")
    _add_search_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("ogr", help="most marks on a Golomb ruler of length <= D")
    p.add_argument("--max-length", type=int, required=True)
    _add_search_flags(p)
    p.set_defaults(func=cmd_ogr)

    p = sub.add_parser("graph", help="dump the characteristic hypergraph")
    p.add_argument("ruler")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("kernelize", help="apply the reduction rules")
    p.add_argument("ruler")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("oracle", help="brute-force maximum Golomb subruler")
    p.add_argument("ruler")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("validate", help="check forbidden substructures")
    p.add_argument("ruler")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("reduce-sat", help="ruler instance from an antimonotone 2-CNF")
    p.add_argument("formula")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="write the ruler file here instead of stdout")
    p.set_defaults(func=cmd_reduce_sat)

    p = sub.add_parser("bench", help="solve a family of rulers and report search counters")
    p.add_argument("--from", dest="start", type=int, default=5)
    p.add_argument("--to", dest="stop", type=int, default=15)
    p.add_argument("--random", type=int, default=0, help="use N random rulers instead of range:n")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-marks", type=int, default=14)
    p.add_argument("--span", type=int, default=30)
    p.add_argument("--ablate", action="store_true", help="also run without cementation / inner kernel")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true", help="one JSON record per line")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MagnitudeError, OracleSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GolombError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
