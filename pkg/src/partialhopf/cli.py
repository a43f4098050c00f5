"""Command-line driver.

    partialhopf verify KIND FILE [--field q|fp:<p>] [--force] [--report PATH] [--quiet]
    partialhopf build KIND FILE [--out PATH] [--force] [--quiet]
    partialhopf catalog list | NAME [--dir DIR]

Exit codes: 0 all checks pass, 1 some check (or gate) failed, 2 malformed input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import CATALOG, catalog_names, get_entry
from .field import Field
from .io import ParseError, action_to_json, algebra_to_json, dumps, load_action, load_algebra, write
from .pipeline import BUILD_KINDS, VERIFY_KINDS, GateFailure, build, verify


def _field(s):
    try:
        return Field.from_flag(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(text: str, path: str | None):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    try:
        obj = load_algebra(args.file, args.field) if args.kind == "hopf" else load_action(args.file, args.field)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    code = 0
    try:
        rep = verify(args.kind, obj, args.force)
    except GateFailure as exc:
        rep = exc.report
        code = 1
        if not args.quiet:
            print(f"gate: {exc}; rerun with --force to continue", file=sys.stderr)
    if not rep.ok:
        code = 1
    if not args.quiet:
        _emit(rep.to_json(), args.report)
    return code


def cmd_build(args) -> int:
    try:
        d = load_action(args.file, args.field)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        out, rep, line = build(args.kind, d, args.force)
    except GateFailure as exc:
        if not args.quiet:
            print(f"gate: {exc}; rerun with --force to continue", file=sys.stderr)
            print(exc.report.summary(), file=sys.stderr)
        return 1
    _emit(dumps(out), args.out)
    if not args.quiet:
        print(line, file=sys.stderr)
    return 0 if rep.ok else 1


def cmd_catalog(args) -> int:
    if args.name == "list":
        for c in CATALOG:
            print(f"{c.name}\t{c.kind}\t{c.provenance}")
        return 0
    try:
        entry = get_entry(args.name)
    except KeyError:
        print(f"error: unknown catalog entry {args.name!r}; available: {', '.join(catalog_names())}",
              file=sys.stderr)
        return 2
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    obj = entry.build()
    written = []
    if entry.kind == "hopf":
        written.append(out / f"{entry.name}.json")
        write(written[0], algebra_to_json(obj))
    else:
        d = obj if entry.kind == "partial" else obj.as_partial()
        h_name, a_name = f"{entry.hopf_file or 'h'}.json", "a.json"
        write(out / h_name, algebra_to_json(d.H))
        write(out / a_name, algebra_to_json(d.A))
        write(out / "action.json", action_to_json(d, h_name, a_name))
        written += [out / h_name, out / a_name, out / "action.json"]
    if not args.quiet:
        for p in written:
            print(p)
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="partialhopf",
                                description="Exact verification of partial Hopf actions and their constructions.")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=None,
                        help="q or fp:<p>; overrides the field named in the files (default: as in the files, else q)")
    common.add_argument("--force", action="store_true", help="downgrade failed gates to warnings")
    common.add_argument("--quiet", action="store_true", help="exit code only")

    v = sub.add_parser("verify", parents=[common], help="verify axioms and identities")
    v.add_argument("kind", choices=VERIFY_KINDS)
    v.add_argument("file", help="AlgebraFile for hopf, ActionFile otherwise")
    v.add_argument("--report", default=None, help="write the JSON report here (default stdout)")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("build", parents=[common], help="construct an object and write it as JSON")
    b.add_argument("kind", choices=BUILD_KINDS)
    b.add_argument("file", help="ActionFile")
    b.add_argument("--out", default=None, help="output path (default stdout)")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("catalog", help="emit a built-in example, or 'list'")
    c.add_argument("name")
    c.add_argument("--dir", default=".", help="output directory")
    c.add_argument("--quiet", action="store_true")
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
