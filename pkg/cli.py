"""
Command-line front end.

    python cli.py ops laplacian --algebra clifford:4 --power 4
    python cli.py member "x0 + x1*e1" --algebra clifford:2 --basis 1,e1,e2 --partition "{1}|{2}"
    python cli.py tree --partition "{1,2,3}|{4}|{5,6,7}" --algebra octonion
    python cli.py count 7
    python cli.py verify reference

Polynomials are expanded sums of terms [rat*](x<i>[^e]*)*[basis name], for
example "3/2*x0^2*x1*e12 - x2*e1 + 1"; the basis name comes last. Partitions
are written "{1}|{2,3,4}|{5,6,7}".
"""
import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from algebra import default_basis, parse_algebra, parse_basis
from config import (DEFAULT_ALGEBRA, DEFAULT_MULTIPLICITY_MODE,
                    DEFAULT_OUTPUT_FORMAT, EXIT_INPUT_ERROR, EXIT_OK,
                    EXIT_VERIFICATION_FAILED, MULTIPLICITY_MODES,
                    OPERATOR_ALIASES, OUTPUT_FORMATS, __project__,
                    __version__, configure_logging)
from errors import FueterError, VerificationFailed
from fueter import (PAIR_POLICIES, build_fueter_tree, even_case_descent,
                    export_dot, laplacian_decomposition, reduced_tree, tau,
                    verify_general_fueter, verify_polyharmonic)
from operators import OPERATOR_NAMES, OperatorContext
from parse_input import parse_index_list, parse_polynomial
from partitions import (counting_table, format_partition, is_odd_partition,
                        parse_partition, whole)
from poly import Polynomial, power_x
from spaces import (ck_extension, homogeneous_FP_basis, is_dunkl_monogenic,
                    is_P_slice, slice_decompose)
from verify import SUITES, run_suite

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CliConfig:
    algebra: str = DEFAULT_ALGEBRA
    basis: Optional[str] = None
    partition: Optional[str] = None
    multiplicity_mode: str = DEFAULT_MULTIPLICITY_MODE
    output: str = DEFAULT_OUTPUT_FORMAT
    alpha: Optional[str] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        return cls(args.algebra, args.basis, args.partition, args.multiplicities, args.format, args.alpha)

    def context(self) -> OperatorContext:
        spec = parse_algebra(self.algebra)
        basis = parse_basis(spec, self.basis) if self.basis else default_basis(spec)
        P = parse_partition(self.partition, basis.n) if self.partition else whole(basis.n)
        return OperatorContext.build(basis, P, self.multiplicity_mode, parse_index_list(self.alpha))

    def describe(self, ctx: OperatorContext) -> dict:
        return {
            "algebra": ctx.basis.spec.name,
            "basis": ctx.basis.describe(),
            "partition": format_partition(ctx.partition),
            "multiplicities": [str(k) for k in ctx.k.values],
        }


def _emit(config: CliConfig, ctx: OperatorContext, command: str, record: dict, text: Sequence[str]) -> None:
    if config.output == "jsonl":
        print(json.dumps({"command": command, **config.describe(ctx), **record}, ensure_ascii=False))
    else:
        for line in text:
            print(line)


def _input_polynomial(ctx: OperatorContext, args: argparse.Namespace) -> Polynomial:
    if getattr(args, 'power', None) is not None:
        return power_x(ctx.basis, args.power, conjugate=getattr(args, 'conjugate', False))
    if not args.polynomial:
        raise FueterError("give a polynomial or --power m")
    return parse_polynomial(ctx.basis, args.polynomial)


def cmd_ops(config: CliConfig, args: argparse.Namespace) -> int:
    ctx = config.context()
    f = _input_polynomial(ctx, args)
    name = OPERATOR_ALIASES.get(args.operator, args.operator)
    if name == "slice_decompose":
        A = ctx.block_set(args.block)
        parts = slice_decompose(f, A)
        _emit(config, ctx, "ops", {"operator": name, "input": str(f), "result": [str(g) for g in parts]},
              [f"g{i} = {g}" for i, g in enumerate(parts)])
        return EXIT_OK
    if name == "tau":
        if args.block is None:
            raise FueterError("tau needs --block")
        g = tau(f, ctx.partition, args.block, alpha=args.index)
    elif name == "laplacian_decomposition":
        parts = laplacian_decomposition(f, ctx.partition)
        _emit(config, ctx, "ops", {"operator": name, "input": str(f),
                                   "result": {str(j): str(g) for j, g in parts}},
              [f"g{j} = {g}" for j, g in parts])
        return EXIT_OK
    else:
        g = ctx.apply(name, f, index=args.index, block=args.block)
    _emit(config, ctx, "ops", {"operator": name, "input": str(f), "result": str(g)}, [str(g)])
    return EXIT_OK


def cmd_ck(config: CliConfig, args: argparse.Namespace) -> int:
    ctx = config.context()
    g = _input_polynomial(ctx, args)
    f = ck_extension(g, ctx.partition, ctx.k, verify=True)
    _emit(config, ctx, "ck", {"input": str(g), "result": str(f)}, [str(f)])
    return EXIT_OK


def cmd_member(config: CliConfig, args: argparse.Namespace) -> int:
    ctx = config.context()
    f = _input_polynomial(ctx, args)
    sliced = is_P_slice(f, ctx.partition, strict=args.strict)
    monogenic = is_dunkl_monogenic(f, ctx.partition, ctx.k)
    member = bool(sliced) and monogenic
    yes = lambda ok: "yes" if ok else "no"
    lines = [f"P-slice: {yes(sliced)}", f"Dunkl-monogenic: {yes(monogenic)}",
             f"in F_P: {yes(member)}"]
    if not sliced:
        lines.append(f"witness: {sliced.describe()}")
    _emit(config, ctx, "member", {"input": str(f), "p_slice": bool(sliced),
                                  "dunkl_monogenic": monogenic, "member": member}, lines)
    return EXIT_OK


def cmd_basis(config: CliConfig, args: argparse.Namespace) -> int:
    ctx = config.context()
    family = homogeneous_FP_basis(ctx.basis, ctx.partition, args.degree, verify=not args.no_verify)
    _emit(config, ctx, "basis", {"degree": args.degree, "result": [str(f) for f in family]},
          [str(f) for f in family])
    return EXIT_OK


def cmd_fueter(config: CliConfig, args: argparse.Namespace) -> int:
    ctx = config.context()
    f = _input_polynomial(ctx, args)
    if is_odd_partition(ctx.partition):
        reports = [verify_general_fueter(f, ctx.partition), verify_polyharmonic(f, ctx.partition)]
    else:
        reports = [even_case_descent(f)]
    lines = [line for r in reports for line in r.lines()]
    passed = all(r.passed for r in reports)
    _emit(config, ctx, "fueter", {"input": str(f), "passed": passed,
                                  "checks": [[name, ok] for r in reports for name, ok in r.checks]}, lines)
    return EXIT_OK if passed else EXIT_VERIFICATION_FAILED


def cmd_tree(config: CliConfig, args: argparse.Namespace) -> int:
    ctx = config.context()
    tree = build_fueter_tree(ctx.partition, args.pair_policy, merge=not args.no_merge)
    if args.reduced:
        reduced = reduced_tree(tree)
        lines = [f"{u} -> {v}" for u, v in reduced.edges]
        _emit(config, ctx, "tree", {"reduced": [[list(u), list(v)] for u, v in reduced.edges]}, lines)
        return EXIT_OK
    if config.output == "dot":
        print(export_dot(tree), end="")
        return EXIT_OK
    graph = tree.graph
    lines = [f"height {tree.height}, kappa {graph.graph['weight']}"]
    lines += [f"{graph.nodes[u]['label']} -> {graph.nodes[v]['label']} [{d['label']}]"
              for u, v, d in graph.edges(data=True)]
    _emit(config, ctx, "tree", {
        "height": tree.height,
        "nodes": [graph.nodes[v]['label'] for v in graph.nodes],
        "edges": [[graph.nodes[u]['label'], graph.nodes[v]['label'], d['label']] for u, v, d in graph.edges(data=True)],
    }, lines)
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    ns = range(1, args.table + 1) if args.table else [args.n]
    table = counting_table(ns)
    if args.format == "jsonl":
        for row in table.to_dict(orient="records"):
            print(json.dumps({"command": "count", **{k: int(v) for k, v in row.items()}}))
    elif args.table:
        print(table.to_string(index=False))
    else:
        print(" | ".join(str(int(v)) for v in table.iloc[0]))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, args.only)
    for r in results:
        if args.format == "jsonl":
            print(json.dumps({"command": "verify", "check": r.name, "suite": r.suite, "passed": r.passed,
                              "elapsed_ms": round(r.elapsed_ms, 1), "message": r.message}))
        else:
            status = "ok" if r.passed else "FAIL"
            print(f"[{status}] {r.name} ({r.elapsed_ms:.0f} ms)" + (f": {r.message}" if r.message else ""))
    failed = [r for r in results if not r.passed]
    if args.format != "jsonl":
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_VERIFICATION_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--algebra', type=str, default=DEFAULT_ALGEBRA,
                        help="'clifford:N' (1 <= N <= 8) or 'octonion'")
    common.add_argument('--basis', type=str, default=None,
                        help="comma-separated basis element names starting with 1 (default: paravectors)")
    common.add_argument('--partition', type=str, default=None,
                        help="set partition like '{1}|{2,3,4}|{5,6,7}' (default: one block)")
    common.add_argument('--multiplicities', choices=MULTIPLICITY_MODES, default=DEFAULT_MULTIPLICITY_MODE)
    common.add_argument('--alpha', type=str, default=None,
                        help="one distinguished index per block, e.g. '1,3,5'")
    common.add_argument('--format', choices=OUTPUT_FORMATS, default=DEFAULT_OUTPUT_FORMAT)
    common.add_argument('--verbose', action='store_true')
    common.add_argument('--debug', action='store_true')

    poly_input = argparse.ArgumentParser(add_help=False)
    poly_input.add_argument('polynomial', nargs='?', default=None)
    poly_input.add_argument('--power', type=int, default=None, help="use x^m instead of a polynomial")
    poly_input.add_argument('--conjugate', action='store_true', help="with --power, use (x^c)^m")

    parser = argparse.ArgumentParser(description=__project__)
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest='command', required=True)

    ops = sub.add_parser('ops', parents=[common, poly_input], help="apply an operator")
    ops.add_argument('operator', choices=sorted(set(OPERATOR_NAMES) | set(OPERATOR_ALIASES)
                                                | {"slice_decompose", "tau", "laplacian_decomposition"}))
    ops.add_argument('--index', type=int, default=None, help="variable index for delta1, delta2, dunkl_T; alpha for tau")
    ops.add_argument('--block', type=int, default=None, help="1-based block index for block operators")

    sub.add_parser('ck', parents=[common, poly_input], help="CK extension of x0-free P-slice data")

    member = sub.add_parser('member', parents=[common, poly_input], help="membership in F_P (the verdict is printed, exit code 0 either way)")
    member.add_argument('--strict', action='store_true', help="cross-check with uniform multiplicities")

    basis = sub.add_parser('basis', parents=[common], help="basis of the degree-d part of F_P")
    basis.add_argument('--degree', type=int, required=True)
    basis.add_argument('--no-verify', action='store_true')

    sub.add_parser('fueter', parents=[common, poly_input], help="Fueter theorem checks on f")

    tree = sub.add_parser('tree', parents=[common], help="Fueter tree of F_P")
    tree.add_argument('--pair-policy', choices=sorted(PAIR_POLICIES), default="smallest")
    tree.add_argument('--no-merge', action='store_true', help="keep a separate node per branch")
    tree.add_argument('--reduced', action='store_true', help="quotient by partition shape")

    count = sub.add_parser('count', parents=[common], help="p(n), q(n), B_n and q(n) - 1")
    count.add_argument('n', type=int, nargs='?', default=None)
    count.add_argument('--table', type=int, default=None, help="rows for n = 1..N")

    verify = sub.add_parser('verify', parents=[common], help="run a built-in suite")
    verify.add_argument('suite', nargs='?', choices=SUITES, default="reference")
    verify.add_argument('--only', type=str, default=None, help="substring filter on check names")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(verbose=args.verbose, debug=args.debug)
    config = CliConfig.from_args(args)
    try:
        if args.format == "dot" and args.command != "tree":
            raise FueterError("--format dot is only available for 'tree'")
        if args.command == 'count':
            if args.n is None and not args.table:
                parser.error("count needs n or --table N")
            return cmd_count(args)
        if args.command == 'verify':
            return cmd_verify(args)
        handlers = {
            'ops': cmd_ops, 'ck': cmd_ck, 'member': cmd_member, 'basis': cmd_basis,
            'fueter': cmd_fueter, 'tree': cmd_tree,
        }
        return handlers[args.command](config, args)
    except VerificationFailed as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except (FueterError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
