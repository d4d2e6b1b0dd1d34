#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Command-line entry point of the sds-codes platform.

    python -m sdscodes.tools.sds_cli simulate --state 0001
    python -m sdscodes.tools.sds_cli phase-space --format dot --out example1.dot
    python -m sdscodes.tools.sds_cli clique --spec J:7
    python -m sdscodes.tools.sds_cli verify --n 4

Exit status: 0 on success, 1 on a disagreement or a property violation, 2 on
a usage or input error, 3 when a cap or budget is exhausted. Errors are written
on the standard error as one JSON line ``{"error": kind, "message": text}``.
"""

import os
import sys
import json
import argparse
import logging
from datetime import datetime, timezone

# 'tools/' lives inside the package, the following command ensures the import
# of the package when this file is run as a script.
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from sdscodes.utils import ProjectEnv, setup_logger
from sdscodes.errors import SdsError, BudgetExceeded, PrescriptionConflict, \
    IncompatibilityViolation
from sdscodes.dynamics import SdsDefinition, UpdateOrder, as_state, trajectory, \
    phase_space, two_cycle_count
from sdscodes.graphs import ImplicitGraphSpec
from sdscodes.graphs.clique import max_clique
from sdscodes.graphs.words import prefix_sum_int
from sdscodes.coding import hamming_code, min_distance, distance_to_json
from sdscodes.construction import HatClique, construct_update_function, brute_force_eta, \
    verify_theorems, solve_word_graph
from sdscodes.parsers import read_sds, read_code, read_edge_list
from sdscodes.generators import export_phase_space, phase_space_document, export_graph, code_file
from sdscodes.analysis import clique_chain, period_two_sweep, fixed_point_sweep, non_clique_sweep

logger = logging.getLogger("sdscodes")

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

FORMATS = {
    "simulate"      : ("json", "text"),
    "phase-space"   : ("json", "dot"),
    "eta"           : ("json",),
    "clique"        : ("json", "dot", "edges"),
    "construct"     : ("json",),
    "codes"         : ("json", "text"),
    "verify"        : ("json",),
    "sweep"         : ("csv", "json"),
    "properties"    : ("json",),
}


class UsageError(SdsError):
    kind = "usage"


class JsonArgumentParser(argparse.ArgumentParser):
    """Argument parser reporting usage errors as a JSON line."""

    def error(self, message):
        _emit_error("usage", f"{self.prog}: {message}")
        raise SystemExit(EXIT_USAGE)


def _emit_error(kind, message):
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")


# ============================================================================
#  Command-line arguments
# ============================================================================

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '-d', '--debug',
        action  = "store_true",
        default = False,
        help    = "Enable debug mode (default: %(default)s)",
    )
    common.add_argument(
        '--format',
        metavar = "<json|dot|text|edges|csv>",
        help    = "Output format, JSON unless stated otherwise by the subcommand",
    )
    common.add_argument(
        '--out',
        metavar = "<file>",
        help    = "Write the output in a file instead of the standard output",
    )
    common.add_argument(
        '--deterministic',
        action  = "store_true",
        default = False,
        help    = "Omit the timestamp of JSON reports (default: %(default)s)",
    )
    common.add_argument(
        '--seed',
        metavar = "<int>",
        type    = int,
        help    = "Seed of the randomized property sweeps",
    )
    common.add_argument(
        '--budget-secs',
        metavar = "<float>",
        type    = float,
        help    = "Time budget of a search, in seconds",
    )
    common.add_argument(
        '--budget-nodes',
        metavar = "<int>",
        type    = int,
        help    = "Node budget of a clique search",
    )
    common.add_argument(
        '--force',
        action  = "store_true",
        default = False,
        help    = "Lift the dimension caps (default: %(default)s)",
    )

    ap = JsonArgumentParser(
        prog            = "sds-codes",
        description     = __doc__,
        formatter_class = argparse.RawTextHelpFormatter,
    )
    sub = ap.add_subparsers(dest="command", metavar="<command>")
    sub.required = True

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[common],
                              formatter_class=argparse.RawTextHelpFormatter)

    def add_system_args(p):
        p.add_argument(
            '--sds',
            metavar = "<json-file>",
            help    = "SDS definition file (default: bundled Example 1)",
        )
        p.add_argument(
            '--complete',
            metavar = "<n>",
            type    = int,
            help    = "Use the symmetric system over K_n given by --table",
        )
        p.add_argument(
            '--table',
            metavar = "<bits>",
            help    = "Truth table of the shared function, f(0) first",
        )
        p.add_argument(
            '--order',
            metavar = "<permutation>",
            help    = "Update order such as 2413 or 2,4,1,3 (default: identity)",
        )

    p = add("simulate", "One system update, listing the intermediate states")
    add_system_args(p)
    p.add_argument(
        '--state',
        metavar = "<bits>",
        required = True,
        help    = "Initial system state, such as 0001",
    )

    p = add("phase-space", "Full phase-space enumeration with its cycle census")
    add_system_args(p)

    p = add("eta", "Exhaustive search of the largest 2-cycle count over [K_n, g, id]")
    p.add_argument('--n', metavar="<int>", type=int, required=True, help="Number of vertices")
    p.add_argument(
        '--workers',
        metavar = "<int>",
        type    = int,
        default = 1,
        help    = "Processes scanning table chunks (default: %(default)s)",
    )
    p.add_argument(
        '--checkpoint',
        metavar = "<json-file>",
        help    = "Progress file, resumed when it exists",
    )
    p.add_argument(
        '--start',
        metavar = "<int>",
        type    = int,
        default = 0,
        help    = "First truth table to scan (default: %(default)s)",
    )

    p = add("clique", "Maximum clique of a word graph or of an edge list")
    p.add_argument('--spec', metavar="<kind:dim>", help="Word graph such as J:7, H:6 or HatH:8")
    p.add_argument('--edges', metavar="<file>", help="Edge list file with bit-string labels")
    p.add_argument(
        '--no-seed',
        action  = "store_true",
        default = False,
        help    = "Do not seed word graphs with a Hamming code (default: %(default)s)",
    )

    p = add("construct", "Update function built from a hat-graph clique or a code")
    p.add_argument('file', metavar="<file>", help="One vector per line")
    p.add_argument(
        '--kind',
        choices = ["clique", "code"],
        default = "clique",
        help    = "Vectors of HatH(n) or words of a code of length n-1 (default: %(default)s)",
    )

    p = add("codes", "Generate a Hamming code or check the minimum distance of a code file")
    p.add_argument('--r', metavar="<int>", type=int, help="Hamming code of length 2^r - 1")
    p.add_argument('--check', metavar="<file>", help="Code file to check")

    p = add("verify", "Compare the brute-force, clique and code legs for dimension n")
    p.add_argument('--n', metavar="<int>", type=int, required=True, help="Number of vertices")

    p = add("sweep", "Clique numbers of HatH(m+1), H(m), J(m) for a range of m")
    p.add_argument('--m-min', metavar="<int>", type=int, default=2, help="(default: %(default)s)")
    p.add_argument('--m-max', metavar="<int>", type=int, default=6, help="(default: %(default)s)")

    p = add("properties", "Seeded random sweeps of structural properties")
    p.add_argument(
        '--property',
        choices = ["period-two", "fixed-points", "non-clique", "all"],
        default = "all",
        help    = "Property to sweep (default: %(default)s)",
    )
    p.add_argument(
        '--trials',
        metavar = "<int>",
        type    = int,
        default = 1000,
        help    = "Random samples per property (default: %(default)s)",
    )
    return ap


# ============================================================================
#  Subcommands
# ============================================================================

def _load_system(args):
    if args.complete is not None:
        if not args.table:
            raise UsageError("--complete needs --table")
        order = UpdateOrder.from_label(args.order) if args.order else None
        return SdsDefinition.complete(args.complete, args.table, order)
    sds = read_sds(args.sds or ProjectEnv.example1_file)
    if args.order:
        sds = SdsDefinition(sds.graph, sds.functions, UpdateOrder.from_label(args.order))
    return sds


def cmd_simulate(args):
    sds = _load_system(args)
    states = trajectory(sds, as_state(args.state))
    blocks = [{"step": 0, "vertex": None, "state": states[0].label}]
    for k, v in enumerate(sds.order, start=1):
        blocks.append({"step": k, "vertex": v, "state": states[k].label})
    if args.format == "text":
        lines = [f"G_0 = {states[0]}"]
        lines += [f"G_{b['step']} = {b['state']}  (update v_{b['vertex']})" for b in blocks[1:]]
        lines.append(f"F({states[0]}) = {states[-1]}")
        return "\n".join(lines) + "\n", EXIT_OK
    return {"n": sds.n, "order": list(sds.order), "state": states[0].label,
            "blocks": blocks, "image": states[-1].label}, EXIT_OK


def cmd_phase_space(args):
    ps = phase_space(_load_system(args), force=args.force)
    if args.format == "dot":
        return export_phase_space(ps, "dot"), EXIT_OK
    document = phase_space_document(ps)
    document["fixed_points"] = [x.label for x in ps.fixed_points]
    return document, EXIT_OK


def cmd_eta(args):
    eta, witness = brute_force_eta(args.n, force=args.force, start=args.start,
                                   workers=args.workers, checkpoint=args.checkpoint,
                                   max_seconds=args.budget_secs or 0)
    return {"n": args.n, "eta": eta, "witness": witness.bitstring}, EXIT_OK


def cmd_clique(args):
    if bool(args.spec) == bool(args.edges):
        raise UsageError("give exactly one of --spec and --edges")
    if args.spec:
        spec = ImplicitGraphSpec.parse(args.spec)
        graph, result = solve_word_graph(spec, args.budget_nodes, args.budget_secs,
                                         args.force, seeded=not args.no_seed)
    else:
        graph = read_edge_list(args.edges)
        result = max_clique(graph, max_nodes=args.budget_nodes, max_seconds=args.budget_secs)
    status = EXIT_OK if result.optimal else EXIT_BUDGET
    if args.format in ("dot", "edges"):
        return export_graph(graph, args.format), status
    document = {"graph": graph.name, "vertex_count": len(graph), "edge_count": graph.edge_count}
    document.update(result.to_dict(graph))
    return document, status


def cmd_construct(args):
    code = read_code(args.file)
    if args.kind == "code":
        # a code of length m is a clique of J(m); T then a leading 0 give HatH(m + 1)
        n = code.length + 1
        clique = HatClique.from_values(n, [prefix_sum_int(v, code.length) for v in code.values])
    else:
        n = code.length
        clique = HatClique(n, code.words)
    f = construct_update_function(clique)
    count = two_cycle_count(f.system(), force=args.force)
    return {"n": n, "members": [m.label for m in clique], "table": f.bitstring,
            "prescribed": bin(f.prescribed).count("1"), "two_cycles": count,
            "lower_bound_met": count >= len(clique)}, EXIT_OK


def cmd_codes(args):
    if bool(args.r is not None) == bool(args.check):
        raise UsageError("give exactly one of --r and --check")
    if args.r is not None:
        code = hamming_code(args.r)
        if args.format == "text":
            return code_file(code, f"Hamming code r={args.r}"), EXIT_OK
        source = f"hamming:{args.r}"
    else:
        code = read_code(args.check)
        source = args.check
    distance = min_distance(code)
    return {"source": source, "length": code.length, "size": len(code),
            "min_distance": distance_to_json(distance), "corrects_one_error": distance >= 3,
            "words": code.labels}, EXIT_OK


def cmd_verify(args):
    report = verify_theorems(args.n, max_nodes=args.budget_nodes,
                             max_seconds=args.budget_secs, force=args.force)
    return report, EXIT_OK if report["agree"] else EXIT_DISAGREE


def cmd_sweep(args):
    df = clique_chain(args.m_min, args.m_max, args.budget_nodes, args.budget_secs, args.force)
    status = EXIT_OK if df["agree"].all() else EXIT_DISAGREE
    if not df["optimal"].all():
        status = EXIT_BUDGET
    if args.format == "json":
        records = json.loads(df.to_json(orient="records"))
        return {"rows": records}, status
    return df.to_csv(index=False), status


def cmd_properties(args):
    sweeps = {
        "period-two"  : lambda: period_two_sweep(args.trials, seed=args.seed),
        "fixed-points": lambda: fixed_point_sweep(args.trials, seed=args.seed),
        "non-clique"  : lambda: non_clique_sweep(args.trials, seed=args.seed),
    }
    names = list(sweeps) if args.property == "all" else [args.property]
    results = [sweeps[name]() for name in names]
    violations = sum(r["violations"] for r in results)
    return {"seed": args.seed, "results": results, "violations": violations}, \
        EXIT_OK if violations == 0 else EXIT_DISAGREE


COMMANDS = {
    "simulate"      : cmd_simulate,
    "phase-space"   : cmd_phase_space,
    "eta"           : cmd_eta,
    "clique"        : cmd_clique,
    "construct"     : cmd_construct,
    "codes"         : cmd_codes,
    "verify"        : cmd_verify,
    "sweep"         : cmd_sweep,
    "properties"    : cmd_properties,
}


# ============================================================================
#  Main program
# ============================================================================

def _write(args, output):
    if isinstance(output, dict):
        if not args.deterministic:
            output = dict(output, timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"))
        output = json.dumps(output, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fp:
            fp.write(output)
    else:
        sys.stdout.write(output)


def run(argv=None):
    """Parse ``argv``, run the subcommand and return the exit status."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    setup_logger(level="DEBUG" if args.debug else None)
    allowed = FORMATS[args.command]
    if args.format is None:
        args.format = allowed[0]
    try:
        if args.format not in allowed:
            raise UsageError(f"{args.command} supports the formats {list(allowed)}")
        output, status = COMMANDS[args.command](args)
        _write(args, output)
        return status
    except BudgetExceeded as e:
        _emit_error(e.kind, str(e))
        return EXIT_BUDGET
    except (PrescriptionConflict, IncompatibilityViolation) as e:
        _emit_error(e.kind, str(e))
        return EXIT_DISAGREE
    except SdsError as e:
        _emit_error(e.kind, str(e))
        return EXIT_USAGE
    except OSError as e:
        _emit_error("io", str(e))
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
