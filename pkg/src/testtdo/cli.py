"""Command-line interface.

Exit codes: 0 success (or validation under the --fail-on threshold);
1 validation findings at or above the threshold; 2 usage, parse, or I/O
errors.  Reports and listings go to stdout; tool diagnostics to stderr.
All behavior is flag-driven (no config files, no environment variables), so
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import axioms as axioms_mod
from . import fol, tkb
from .generator import MAX_SIZE, GenConfig, generate_conforming
from .schema import Schema, builtin_schema
from .validator import validate

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_ERROR = 2


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_ERROR


def _read_file(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


# -- validate ---------------------------------------------------------------


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        text = _read_file(args.file)
    except OSError as exc:
        return _fail(str(exc))
    try:
        kb = tkb.parse(text)
    except tkb.ParseError as exc:
        for diagnostic in exc.diagnostics:
            print(f"{args.file}:{diagnostic.render()}", file=sys.stderr)
        return EXIT_ERROR
    report = validate(kb, builtin_schema(), args.mode)
    if args.format == "json":
        print(report.render_json(), end="")
    else:
        print(report.render_text(), end="")
    over_threshold = report.errors > 0 or (args.fail_on == "warning" and report.warnings > 0)
    return EXIT_FINDINGS if over_threshold else EXIT_OK


# -- schema -----------------------------------------------------------------


def _term_record(schema: Schema, name: str) -> dict:
    term = schema.term(name)
    return {
        "canonical_name": term.canonical_name,
        "display_name": term.display_name,
        "synonyms": list(term.synonyms),
        "definition": term.definition,
        "provenance": term.provenance,
        "kind": term.kind,
    }


def _rel_record(row) -> dict:
    return {
        "rel_name": row.rel_name,
        "source": row.source,
        "target": row.target,
        "source_min": row.source_min,
        "source_max": row.source_max,
        "target_min": row.target_min,
        "target_max": row.target_max,
        "definition": row.definition,
    }


def _bounds(minimum: int, maximum: int | None) -> str:
    return f"{minimum}..{'*' if maximum is None else maximum}"


def cmd_schema(args: argparse.Namespace) -> int:
    schema = builtin_schema()
    term = args.term
    if term is not None and not schema.has_term(term):
        return _fail(f"unknown term '{term}'")

    if args.what == "counts":
        counts = schema.counts()
        payload = {
            "own": counts.own,
            "reused": counts.reused,
            "attributes": counts.attributes,
            "relationships": counts.relationships,
            "axioms": len(axioms_mod.builtin_axioms()),
        }
        if args.format == "json":
            _emit_json(payload)
        else:
            print(" ".join(f"{key}={value}" for key, value in payload.items()))
        return EXIT_OK

    if args.what == "terms":
        names = [term] if term else list(schema.term_names())
        if args.format == "json":
            _emit_json([_term_record(schema, name) for name in names])
        elif term:
            record = schema.term(term)
            print(f"name: {record.canonical_name}")
            print(f"display: {record.display_name}")
            print(f"provenance: {record.provenance}")
            print(f"kind: {record.kind}")
            print(f"synonyms: {', '.join(record.synonyms) if record.synonyms else '(none)'}")
            parents = schema.parents(term)
            print(f"parents: {', '.join(parents) if parents else '(none)'}")
            print(f"definition: {record.definition}")
        else:
            for name in names:
                record = schema.term(name)
                print(f"{record.canonical_name} ({record.display_name}) [{record.provenance}/{record.kind}]")
        return EXIT_OK

    if args.what == "attrs":
        rows = [a for a in schema.attributes if term is None or a.owner == term]
        if args.format == "json":
            _emit_json([{"owner": a.owner, "attr_name": a.attr_name, "definition": a.definition} for a in rows])
        else:
            for row in rows:
                print(f"{row.owner}.{row.attr_name}: {row.definition}")
        return EXIT_OK

    # rels
    rows = list(schema.relationship_defs(args.name))
    if term is not None:
        rows = [r for r in rows if term in (r.source, r.target)]
    if args.format == "json":
        _emit_json([_rel_record(row) for row in rows])
    else:
        for row in rows:
            print(
                f"{row.rel_name}: {row.source}[{_bounds(row.source_min, row.source_max)}] -> "
                f"{row.target}[{_bounds(row.target_min, row.target_max)}]"
            )
    return EXIT_OK


# -- axioms -----------------------------------------------------------------


def cmd_axioms(args: argparse.Namespace) -> int:
    if args.action == "list":
        if args.format == "json":
            _emit_json([{"id": a.id, "description": a.description} for a in axioms_mod.builtin_axioms()])
        else:
            for axiom_def in axioms_mod.builtin_axioms():
                print(f"{axiom_def.id}: {axiom_def.description}")
        return EXIT_OK
    try:
        axiom_def = axioms_mod.axiom(args.id)
    except axioms_mod.UnknownAxiomError as exc:
        return _fail(str(exc))
    rendered = fol.render(axiom_def.formula)
    if args.format == "json":
        _emit_json(
            {
                "id": axiom_def.id,
                "description": axiom_def.description,
                "deviations": list(axiom_def.deviations),
                "formula": rendered,
            }
        )
    else:
        print(f"id: {axiom_def.id}")
        print(f"description: {axiom_def.description}")
        if axiom_def.deviations:
            print("deviations:")
            for note in axiom_def.deviations:
                print(f"  - {note}")
        else:
            print("deviations: (none)")
        print("formula:")
        print(rendered)
    return EXIT_OK


# -- generate / fmt -----------------------------------------------------------


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        config = GenConfig(seed=args.seed, size=args.size)
    except ValueError as exc:
        return _fail(str(exc))
    document = tkb.serialize(generate_conforming(config))
    if args.output is None:
        print(document, end="")
        return EXIT_OK
    try:
        Path(args.output).write_text(document, encoding="utf-8")
    except OSError as exc:
        return _fail(str(exc))
    return EXIT_OK


def cmd_fmt(args: argparse.Namespace) -> int:
    try:
        text = _read_file(args.file)
    except OSError as exc:
        return _fail(str(exc))
    try:
        kb = tkb.parse(text)
    except tkb.ParseError as exc:
        for diagnostic in exc.diagnostics:
            print(f"{args.file}:{diagnostic.render()}", file=sys.stderr)
        return EXIT_ERROR
    try:
        Path(args.file).write_text(tkb.serialize(kb), encoding="utf-8")
    except OSError as exc:
        return _fail(str(exc))
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def _nonnegative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="testtdo",
        description="Validate .tkb instance models against the TestTDO v1.3 testing ontology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="validate a .tkb document")
    p_validate.add_argument("file")
    p_validate.add_argument("--mode", choices=["draft", "complete"], default="complete")
    p_validate.add_argument("--format", choices=["text", "json"], default="text")
    p_validate.add_argument("--fail-on", dest="fail_on", choices=["warning", "error"], default="error")
    p_validate.set_defaults(func=cmd_validate)

    p_schema = sub.add_parser("schema", help="inspect the built-in metamodel")
    p_schema.add_argument("what", choices=["terms", "attrs", "rels", "counts"])
    p_schema.add_argument("--term", default=None, help="restrict to one term")
    p_schema.add_argument("--name", default="*", help="relationship name filter (rels only)")
    p_schema.add_argument("--format", choices=["text", "json"], default="text")
    p_schema.set_defaults(func=cmd_schema)

    p_axioms = sub.add_parser("axioms", help="list or show the 17 axioms")
    axioms_sub = p_axioms.add_subparsers(dest="action", required=True)
    p_list = axioms_sub.add_parser("list")
    p_list.add_argument("--format", choices=["text", "json"], default="text")
    p_list.set_defaults(func=cmd_axioms, action="list")
    p_show = axioms_sub.add_parser("show")
    p_show.add_argument("id")
    p_show.add_argument("--format", choices=["text", "json"], default="text")
    p_show.set_defaults(func=cmd_axioms, action="show")

    p_generate = sub.add_parser("generate", help="emit a seeded conforming model")
    p_generate.add_argument("--seed", type=_nonnegative, required=True)
    p_generate.add_argument("--size", type=_nonnegative, required=True, help=f"target individuals (0..{MAX_SIZE})")
    p_generate.add_argument("-o", "--output", default=None)
    p_generate.set_defaults(func=cmd_generate)

    p_fmt = sub.add_parser("fmt", help="rewrite a .tkb file in canonical form")
    p_fmt.add_argument("file")
    p_fmt.set_defaults(func=cmd_fmt)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        code = exc.code
        return code if isinstance(code, int) else EXIT_ERROR
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
