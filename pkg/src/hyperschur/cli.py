"""Command line: ``hyperschur {objects,basis,compose,eval,normalize,verify}``.

Exit status is 0 on success, 1 when a verification or oracle check fails and
2 for usage or parse errors.
"""
from __future__ import annotations

import argparse
import datetime
import json
import os
import sys

from .config import CliConfig, OracleConfig, SuiteConfig
from .denseoracle import composable_pairs, oracle_compose, oracle_sweep, sample_pairs
from .hypercomb import Hypercomposition, enumerate_hypercompositions
from .relationsuite import (
    SUITES,
    RelationReport,
    check_counting_identities,
    check_functor_on_basis,
    check_numeric_identities,
    report_json,
    run_suite,
    summarize,
)
from .schurcat import CompositionError, compose, enumerate_hmat, parse_morphism
from .webdsl import DiagramError, format_expr, normalize, parse, phi

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(cfg: CliConfig, text: str, payload) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def cmd_objects(args, cfg: CliConfig) -> int:
    if args.n < 1:
        raise UsageError("--n must be a positive integer")
    objs = enumerate_hypercompositions(args.n, cfg.mode)
    _emit(
        cfg,
        "\n".join(map(str, objs)),
        {"n": args.n, "mode": cfg.mode.value, "objects": [list(o.parts) for o in objs]},
    )
    return EXIT_OK


def _object(text: str, cfg: CliConfig) -> Hypercomposition:
    try:
        return Hypercomposition.parse(text, cfg.mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_basis(args, cfg: CliConfig) -> int:
    lam, mu = _object(args.target, cfg), _object(args.source, cfg)
    if lam.size != mu.size:
        raise UsageError(f"{lam} and {mu} have different degrees; the Hom space is zero")
    basis = enumerate_hmat(lam, mu)
    lines = [f"{len(basis)} basis elements {mu} -> {lam}"] + [str(A) for A in basis]
    _emit(
        cfg,
        "\n".join(lines),
        {"source": list(mu.parts), "target": list(lam.parts), "count": len(basis), "basis": [A.to_json() for A in basis]},
    )
    return EXIT_OK


def cmd_compose(args, cfg: CliConfig) -> int:
    try:
        f, g = parse_morphism(args.f, cfg.mode), parse_morphism(args.g, cfg.mode)
        value = compose(f, g)
    except (ValueError, CompositionError) as exc:
        raise UsageError(str(exc)) from None
    status, payload = EXIT_OK, value.to_json()
    text = value.render()
    if args.oracle:
        dense = oracle_compose(f, g)
        agree = dense == value
        payload = {"value": value.to_json(), "oracle": dense.to_json(), "agree": agree}
        if not agree:
            print(f"oracle disagrees: {dense.render()}", file=sys.stderr)
            status = EXIT_FAIL
        text += "\n(oracle agrees)" if agree else ""
    _emit(cfg, text, payload)
    return status


def _diagram(text: str, cfg: CliConfig):
    try:
        return parse(text, cfg.mode)
    except DiagramError as exc:
        raise UsageError(str(exc)) from None


def cmd_eval(args, cfg: CliConfig) -> int:
    value = phi(_diagram(args.expr, cfg))
    _emit(cfg, value.render(), value.to_json())
    return EXIT_OK


def cmd_normalize(args, cfg: CliConfig) -> int:
    result = normalize(_diagram(args.expr, cfg))
    _emit(cfg, format_expr(result), result.to_json())
    return EXIT_OK


def _timestamp(explicit: str | None) -> str:
    if explicit:
        return explicit
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    moment = (
        datetime.datetime.fromtimestamp(int(epoch), datetime.timezone.utc)
        if epoch
        else datetime.datetime.now(datetime.timezone.utc)
    )
    return moment.replace(microsecond=0).isoformat()


def _oracle_reports(ocfg: OracleConfig, mode) -> list:
    out = []
    exhaustive = oracle_sweep(composable_pairs(ocfg.exhaustive_n, mode))
    sampled = oracle_sweep(sample_pairs(ocfg.sampled_n, mode, ocfg.samples, ocfg.seed))
    for label, results in (("exhaustive", exhaustive), ("sampled", sampled)):
        for A, B, ok in results:
            params = (("A", str(A)), ("B", str(B)))
            out.append(RelationReport(f"oracle-{label}", params, ok))
    return out


def cmd_verify(args, cfg: CliConfig) -> int:
    scfg = SuiteConfig(max_degree=args.max_degree, numeric_bound=args.bound, functor_n=args.n, counting_n=args.n)
    ocfg = OracleConfig(samples=args.samples, seed=cfg.seed)
    suites = ("defining", "derived", "appendix", "numeric", "functor", "counting", "oracle") if args.suite == "all" else (args.suite,)
    reports = []
    for suite in suites:
        if suite in SUITES:
            reports += run_suite(suite, scfg.max_degree)
        elif suite == "relations":
            reports += run_suite("all", scfg.max_degree)
        elif suite == "numeric":
            reports += check_numeric_identities(scfg.numeric_bound)
        elif suite == "functor":
            reports += check_functor_on_basis(scfg.functor_n, cfg.mode)
        elif suite == "counting":
            reports += check_counting_identities(scfg.counting_n, cfg.mode)
        elif suite == "oracle":
            reports += _oracle_reports(ocfg, cfg.mode)
    summary = summarize(reports)
    if cfg.output == "json":
        print(report_json(args.suite, reports, _timestamp(args.timestamp)))
    else:
        for r in reports:
            if not r.passed:
                print(f"FAIL {r.name} {dict(r.params)}")
                if r.lhs_value is not None:
                    print(f"  lhs: {r.lhs_value}")
                    print(f"  rhs: {r.rhs_value}")
        print(f"{args.suite}: {summary['passed']}/{summary['total']} passed")
    return EXIT_OK if summary["failed"] == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("hyper", "plain"), default="hyper")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="hyperschur", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("objects", parents=[common], help="list objects of degree n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_objects)

    p = sub.add_parser("basis", parents=[common], help="orbit-matrix basis of Hom(source, target)")
    p.add_argument("--target", required=True, help='e.g. "(1,2,1)"')
    p.add_argument("--source", required=True)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("compose", parents=[common], help="F after G, each written like 2*[[1,0],[0,1]] + [[0,1],[1,0]]")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--oracle", action="store_true", help="cross-check against dense matrices")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("eval", parents=[common], help="evaluate a diagram expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("normalize", parents=[common], help="rewrite as reduced chicken-foot diagrams")
    p.add_argument("expr")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument(
        "--suite",
        choices=tuple(SUITES) + ("relations", "numeric", "functor", "counting", "oracle", "all"),
        default="all",
    )
    p.add_argument("--max-degree", type=int, default=SuiteConfig.max_degree, help="boundary size bound for relations")
    p.add_argument("--bound", type=int, default=SuiteConfig.numeric_bound, help="bound for numeric identities")
    p.add_argument("--n", type=int, default=SuiteConfig.functor_n, help="degree bound for functor/counting checks")
    p.add_argument("--samples", type=int, default=OracleConfig.samples)
    p.add_argument("--timestamp", default=None, help="fixed report timestamp (default: SOURCE_DATE_EPOCH or now)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = CliConfig(mode=args.mode, output="json" if args.json else "text", seed=args.seed)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
