"""Command-line front end.

Exit status: 0 orientable / criterion met, 1 not, 2 input error, 3 a solver
result failed its own fairness check.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .ef1 import solve_ef1
from .efx import solve as solve_efx
from .hardness import RandomParams, gen_planted, gen_random, gen_three_vertex, gen_two_vertex
from .instance import (
    ChoreInstance,
    InstanceFormatError,
    dumps_instance,
    dumps_orientation,
    loads_instance,
    loads_orientation,
    negative_components,
    orientation_to_list,
)
from .oracle import Criterion, OracleBoundError, checker, enumerate_orientations

OK, NO, INPUT_ERROR, INTERNAL_ERROR = 0, 1, 2, 3


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _load_instance(path: str) -> ChoreInstance:
    try:
        return loads_instance(_read(path))
    except InstanceFormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _verdict(instance, criterion, orientation, micros) -> dict:
    out = {"criterion": criterion.value, "orientable": orientation is not None}
    if orientation is not None:
        out["orientation"] = orientation_to_list(orientation)
    out["stats"] = {
        "vertices": instance.vertex_count,
        "edges": instance.edge_count,
        "negative_components": len(negative_components(instance)),
        "solve_micros": micros,
    }
    return out


def _emit(args, instance, criterion, orientation, micros) -> int:
    if orientation is not None and not checker(criterion)(instance, orientation):
        print("internal error: produced orientation fails its own check", file=sys.stderr)
        return INTERNAL_ERROR
    print(json.dumps(_verdict(instance, criterion, orientation, micros)))
    if orientation is not None and args.out:
        Path(args.out).write_text(dumps_orientation(orientation))
    return OK if orientation is not None else NO


def cmd_solve(args) -> int:
    instance = _load_instance(args.instance)
    if instance.has_parallel_edges():
        raise CliError("instance has parallel edges; use the `oracle` command for multigraphs")
    criterion = Criterion(args.criterion)
    solver = solve_ef1 if criterion is Criterion.EF1 else solve_efx
    t0 = time.perf_counter()
    orientation = solver(instance)
    micros = int((time.perf_counter() - t0) * 1e6)
    return _emit(args, instance, criterion, orientation, micros)


def cmd_oracle(args) -> int:
    instance = _load_instance(args.instance)
    criterion = Criterion(args.criterion)
    t0 = time.perf_counter()
    try:
        orientation = enumerate_orientations(instance, criterion)
    except OracleBoundError as exc:
        raise CliError(str(exc)) from None
    micros = int((time.perf_counter() - t0) * 1e6)
    return _emit(args, instance, criterion, orientation, micros)


def cmd_check(args) -> int:
    instance = _load_instance(args.instance)
    try:
        orientation = loads_orientation(_read(args.orientation), instance)
    except InstanceFormatError as exc:
        raise CliError(f"{args.orientation}: {exc}") from None
    criterion = Criterion(args.criterion)
    satisfied = checker(criterion)(instance, orientation)
    print(json.dumps({"criterion": criterion.value, "satisfied": satisfied}))
    return OK if satisfied else NO


def cmd_gen(args) -> int:
    if args.kind in ("partition2", "partition3"):
        if not args.values:
            raise CliError("partition generators need at least one value")
        try:
            if args.kind == "partition2":
                instance = gen_two_vertex(args.values, Criterion.EFX0 if args.efx else Criterion.EF1)
            else:
                instance = gen_three_vertex(args.values)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    else:
        if args.values:
            raise CliError(f"{args.kind} takes no positional values")
        if args.vertices is None or args.edges is None:
            raise CliError(f"{args.kind} needs --vertices and --edges")
        try:
            if args.kind == "random":
                params = RandomParams(
                    vertices=args.vertices,
                    edges=args.edges,
                    utility_range=(args.min_utility, 0),
                    objective_fraction=args.objective_fraction,
                    self_loop_fraction=args.self_loop_fraction,
                    multigraph=args.multigraph,
                )
                instance = gen_random(params, args.seed)
            else:
                instance = gen_planted(args.vertices, args.edges, args.seed)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    sys.stdout.write(dumps_instance(instance))
    return OK


def cmd_bench(args) -> int:
    criterion = Criterion(args.criterion)
    solver = solve_ef1 if criterion is Criterion.EF1 else solve_efx
    print("size,vertices,edges,orientable,micros")
    for size in args.sizes:
        if size < 1:
            raise CliError("sizes must be positive")
        if args.family == "planted":
            instance = gen_planted(size, 2 * size, args.seed)
        else:
            instance = gen_random(RandomParams(size, 2 * size), args.seed)
        t0 = time.perf_counter()
        orientation = solver(instance)
        micros = int((time.perf_counter() - t0) * 1e6)
        print(f"{size},{instance.vertex_count},{instance.edge_count},{int(orientation is not None)},{micros}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="choreorient", description="EF1 / EFX0 orientations of graphs of chores"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    crit = dict(choices=[c.value for c in Criterion], default="efx0")

    p = sub.add_parser("solve", help="polynomial-time solver (simple graphs)")
    p.add_argument("instance", help="instance file, or - for stdin")
    p.add_argument("--criterion", **crit)
    p.add_argument("--out", help="also write the orientation file here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive search (multigraphs allowed)")
    p.add_argument("instance")
    p.add_argument("--criterion", **crit)
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="check an orientation file against an instance")
    p.add_argument("instance")
    p.add_argument("orientation")
    p.add_argument("--criterion", **crit)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="write a generated instance to stdout")
    p.add_argument("kind", choices=["partition2", "partition3", "random", "planted"])
    p.add_argument("values", nargs="*", type=int)
    p.add_argument("--efx", action="store_true", help="EFX0 variant of partition2")
    p.add_argument("--vertices", type=int)
    p.add_argument("--edges", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-utility", type=int, default=-3)
    p.add_argument("--objective-fraction", type=float, default=0.5)
    p.add_argument("--self-loop-fraction", type=float, default=0.0)
    p.add_argument("--multigraph", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the solver on generated instances")
    p.add_argument("--sizes", type=int, nargs="*", default=[])
    p.add_argument("--criterion", **crit)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--family", choices=["planted", "random"], default="planted")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # `gen partition2 --efx 1 2`: values after a flag land in extra
        if extra and args.command == "gen":
            try:
                args.values += [int(x) for x in extra]
            except ValueError:
                parser.error(f"unrecognized arguments: {' '.join(extra)}")
        elif extra:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
