"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure (a witness is printed),
2 resource bound exceeded, 3 input or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import actions, serialization
from .algebra import DEFAULT_MAX_N, enumerate_h2, h2_count
from .battery import run_battery
from .classification import classify
from .errors import BinarySpaceError, BoundExceededError, InputError
from .groups import make_named_group, make_subgroup
from .search import DEFAULT_CLOSURE_CAP, build_catalog

EXIT_OK, EXIT_MATH, EXIT_BOUND, EXIT_INPUT = 0, 1, 2, 3


def _load_group(name_or_path: str):
    path = Path(name_or_path)
    if path.suffix == ".json" or path.is_file():
        return serialization.group_from_json(serialization.load_json(path), name=path.stem)
    return make_named_group(name_or_path)


def _parse_members(text: str) -> list:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise InputError(f"subgroup must be a comma-separated list of integers: {text!r}") \
            from None


def _emit(text: str, out=None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _check_json(check) -> dict:
    return {"holds": check.holds,
            "witness": list(check.witness) if check.witness is not None else None}


def cmd_h2(args) -> int:
    if args.size > args.max_n:
        raise BoundExceededError(
            f"n={args.size} would produce {h2_count(args.size)} operations; "
            f"pass --max-n {args.size} to allow it")
    ops = enumerate_h2(args.size, max_n=args.max_n)
    if args.list:
        body = ",\n".join(serialization.dumps(op.to_list()) for op in ops)
        _emit("[\n" + body + "\n]", args.out)
    else:
        _emit(str(len(ops)), args.out)
    return EXIT_OK


def cmd_group(args) -> int:
    G = _load_group(args.name)
    _emit(serialization.dumps(G.to_dict()), args.out)
    return EXIT_OK


def cmd_make(args) -> int:
    G = _load_group(args.group)
    if args.kind == "conj":
        a = actions.conjugate_translation_action(G)
    elif args.kind == "inv-conj":
        a = actions.inverse_conjugation_action(G)
    else:
        if args.subgroup is None:
            raise InputError("--subgroup is required for coset actions")
        H = make_subgroup(G, _parse_members(args.subgroup))
        a = actions.coset_action(G, H)
    _emit(serialization.dumps(a.to_dict()), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    data = serialization.load_json(args.file)
    try:
        a = serialization.action_from_json(data)
    except InputError:
        raise
    except BinarySpaceError as exc:
        _emit(serialization.dumps({
            "axioms": False,
            "error": str(exc),
            "witness": list(exc.witness) if exc.witness is not None else None,
        }))
        return EXIT_MATH
    trans = actions.is_transitive(a)
    report = {
        "axioms": True,
        "group_order": a.group.order,
        "space_size": a.size,
        "distributive": _check_json(actions.is_distributive(a)),
        "transitive": {"holds": trans.holds,
                       "witness": [trans.witness[0], list(trans.witness[1])]
                       if trans.witness else None},
        "kernel": list(actions.kernel(a).members),
        "effective": actions.is_effective(a),
    }
    _emit(serialization.dumps(report), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    a = serialization.action_from_json(serialization.load_json(args.file))
    result = classify(a, args.basepoint)
    _emit(serialization.dumps(result.to_dict()), args.out)
    return EXIT_OK


def cmd_catalog(args) -> int:
    cat = build_catalog(enumerate_h2(args.size, max_n=args.max_n))
    _emit(serialization.dumps(cat.to_dict()), args.out)
    return EXIT_OK


def cmd_paper_check(args) -> int:
    def progress(entry):
        if args.verbose:
            print(f"... {entry.name}: {entry.elapsed:.2f}s", file=sys.stderr)

    report = run_battery(closure_cap=args.closure_cap, progress=progress)
    if args.json:
        _emit(serialization.dumps(report.to_dict(timings=args.timings)), args.out)
    else:
        _emit(report.render(timings=args.timings), args.out)
    return EXIT_OK if report.passed else EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binary-gspace",
        description="Finite binary G-spaces: invertible binary operations, distributive "
                    "actions, coset models and exhaustive checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("h2", help="count or list the invertible binary operations on n points")
    p.add_argument("--size", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                   help=f"largest size enumerated without complaint (default {DEFAULT_MAX_N})")
    p.add_argument("--out")
    p.set_defaults(func=cmd_h2)

    p = sub.add_parser("group", help="print a named group as a group file")
    p.add_argument("name")
    p.add_argument("--out")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("make", help="write an action file")
    p.add_argument("kind", choices=("conj", "inv-conj", "coset"))
    p.add_argument("--group", required=True, help="named group (Z4, S3, D4, Q8, ...) or group file")
    p.add_argument("--subgroup", help="comma-separated members, for coset actions")
    p.add_argument("--out")
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("verify", help="check an action file")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="recover the coset model of an action file")
    p.add_argument("file")
    p.add_argument("--basepoint", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("catalog", help="export the distributive-pair matrix of H2(n)")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("paper-check", help="run the full battery of exhaustive checks")
    p.add_argument("--closure-cap", type=int, default=DEFAULT_CLOSURE_CAP)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true",
                   help="include elapsed times (output is then not reproducible)")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_paper_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BinarySpaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(f"witness: {serialization.dumps(_jsonable(exc.witness))}", file=sys.stderr)
        return EXIT_MATH
    except IndexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _jsonable(obj):
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


if __name__ == "__main__":
    sys.exit(main())
