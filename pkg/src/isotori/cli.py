"""Command-line front end.

    isotori check FILE [--json]
    isotori verify FILE [--seed N] [--samples K] [--fd-step H] [--tol T] [--json]
    isotori catalog list
    isotori catalog check [NAME]
    isotori catalog export NAME [-o FILE]

Exit codes: 0 success, 1 parse/validation error (or unknown catalog name),
2 an oracle disagrees with an exact certificate or a catalog verdict does
not match.  ``ISOTORI_SEED`` overrides the default seed 42.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import catalog, oracle, report, specfile
from .certify import classify
from .torus import InvalidSpecError, TorusSpec

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DISAGREE = 2
DEFAULT_SEED = 42


def default_seed() -> int:
    raw = os.environ.get("ISOTORI_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"ISOTORI_SEED must be an integer, got {raw!r}")


def _emit(tree: dict, as_json: bool, out) -> None:
    out.write(report.render_json(tree) if as_json else report.render_lines(tree))


def check_tree(spec: TorusSpec) -> dict:
    return report.classification_tree(classify(spec))


def verify_tree(spec: TorusSpec, params: oracle.OracleParams) -> tuple[dict, bool]:
    """Classification plus oracle sections; second value is True if anything DISAGREEs."""
    tree = check_tree(spec)
    reports = oracle.run_all(spec, params)
    tree["oracle"] = report.oracle_tree(reports, params)
    outcomes = [r.outcome for r in reports]
    tree["oracle"]["summary"] = {
        "agree": outcomes.count(oracle.AGREE),
        "disagree": outcomes.count(oracle.DISAGREE),
        "indeterminate": outcomes.count(oracle.INDETERMINATE),
        "informational": outcomes.count(oracle.INFORMATIONAL),
    }
    return tree, oracle.DISAGREE in outcomes


def compare_expected(entry: catalog.CatalogEntry) -> list[str]:
    """Mismatches between a catalog entry's stored verdicts and a fresh classification."""
    flat = dict(report.flatten(check_tree(entry.spec)))
    problems = []
    for key, want in entry.expected.items():
        got = flat.get(key, "<missing>")
        if got != want:
            problems.append(f"{key}: expected {want}, got {got}")
    return problems


def _load(path: str) -> TorusSpec:
    return specfile.load(path)


def cmd_check(args, out) -> int:
    _emit(check_tree(_load(args.file)), args.json, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    params = oracle.OracleParams(
        sample_count=args.samples,
        fd_step=args.fd_step,
        tolerance=args.tol,
        rng_seed=args.seed if args.seed is not None else default_seed(),
    )
    tree, disagree = verify_tree(_load(args.file), params)
    _emit(tree, args.json, out)
    return EXIT_DISAGREE if disagree else EXIT_OK


def cmd_catalog(args, out) -> int:
    if args.action == "list":
        for entry in catalog.CATALOG.values():
            out.write(f"{entry.name}\n    {entry.description}\n")
            for key, want in entry.expected.items():
                out.write(f"    {key} = {want}\n")
        return EXIT_OK
    if args.action == "check":
        names = [args.name] if args.name else list(catalog.CATALOG)
        status = EXIT_OK
        for name in names:
            problems = compare_expected(catalog.get(name))
            out.write(f"{'PASS' if not problems else 'FAIL'} {name}\n")
            for p in problems:
                out.write(f"    {p}\n")
            if problems:
                status = EXIT_DISAGREE
        return status
    if args.action == "export":
        if not args.name:
            raise KeyError("export needs a catalog entry name")
        text = specfile.dumps(catalog.get(args.name).spec)
        if args.output:
            Path(args.output).write_text(text)
        else:
            out.write(text)
        return EXIT_OK
    raise AssertionError(args.action)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isotori", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="exact classification of a spec file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="classification plus numerical oracles")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--fd-step", type=float, default=1e-4)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="built-in examples")
    p.add_argument("action", choices=["list", "check", "export"])
    p.add_argument("name", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except specfile.SpecParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except InvalidSpecError as exc:
        print("invalid spec:", file=sys.stderr)
        for v in exc.violations:
            print(f"  - {v}", file=sys.stderr)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
