"""Command-line front end.

Exit codes: 0 pass, 1 mathematical failure, 2 usage, input or schema error,
3 internal error (two verdicts of one checker disagreed).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .bialg import bialgebra_from_rmatrix, drinfeld_double
from .coquad import (
    ca_to_coquad,
    coquad_to_ca,
    dirac_to_mult,
    double_lie2bialgebra,
    extract_lie2bialgebra,
    mult_to_dirac,
)
from .exactlin import to_q
from .fileformat import KINDS, FormatError, Structure, digest_text, dumps, from_dict, loads
from .fuzz import FUZZ_KINDS, run_fuzz
from .liealg import Multivector
from .quadratic import ManinTriple, extract_bialgebra
from .report import CheckFailed, Report
from .suites import run_suite
from .twovect import dualize

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(source: str) -> tuple:
    """``(structure, canonical text digest)`` for a path, ``-`` or ``catalog:NAME``."""
    if source.startswith("catalog:"):
        try:
            e = catalog.entry(source[len("catalog:"):])
        except KeyError as exc:
            raise InputError(str(exc)) from exc
        text = json.dumps(e.payload, sort_keys=True)
    elif source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc}") from exc
    try:
        s = loads(text)
    except FormatError as exc:
        raise InputError(str(exc)) from exc
    return s, digest_text(text)


def _write(s: Structure, path: str | None) -> None:
    text = dumps(s)
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit(payload: dict, as_json: bool, human: str, stream=None) -> None:
    stream = stream or sys.stdout
    if as_json:
        stream.write(json.dumps(payload, indent=1, sort_keys=True) + "\n")
    else:
        stream.write(human + "\n")


def _fail(command: str, digest: str, rep: Report | None, message: str, as_json: bool) -> int:
    payload = {"command": command, "input_digest": digest, "passed": False, "error": message}
    if rep is not None:
        payload["report"] = rep.to_dict()
    human = f"FAIL: {message}" + ("\n" + rep.summary() if rep is not None else "")
    # reports go to stdout only when they are the requested output
    _emit(payload, as_json, human, sys.stdout if as_json else sys.stderr)
    return EXIT_FAIL


# ---------------------------------------------------------------------------
# commands


def cmd_check(args) -> int:
    s, digest = _read(args.input)
    if args.kind and args.kind != s.kind:
        raise InputError(f"declared kind {args.kind!r} but file has kind {s.kind!r}")
    rep = run_suite(s)
    payload = {"command": "check", "input_digest": digest, "kind": s.kind, "passed": rep.passed, "report": rep.to_dict()}
    _emit(payload, args.json, rep.summary())
    return EXIT_OK if rep.passed else EXIT_FAIL


def _rmatrix_arg(g, specs) -> Multivector:
    data = {}
    for spec in specs:
        try:
            i, j, v = spec.split(",")
            data[(int(i), int(j))] = data.get((int(i), int(j)), 0) + to_q(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad --rmatrix entry {spec!r}; expected I,J,P/Q") from exc
    try:
        return Multivector.from_dict(g, 2, data)
    except (ValueError, IndexError) as exc:
        raise InputError(str(exc)) from exc


def _need(s: Structure, *kinds: str) -> None:
    if s.kind not in kinds:
        raise InputError(f"expected kind {' or '.join(kinds)}, got {s.kind!r}")


def cmd_build(args) -> int:
    s, digest = _read(args.input)
    what = args.construction
    try:
        if what == "double":
            _need(s, "bialgebra")
            q, l1, l2 = drinfeld_double(s.obj)
            out = Structure("quadratic", q, {"l1": l1, "l2": l2})
        elif what == "ca-from-coquad":
            _need(s, "coquadratic")
            ca = coquad_to_ca(s.obj)
            ex = {k: dirac_to_mult(s.obj, s.extras[k]) for k in ("l1", "l2") if k in s.extras}
            out = Structure("quadratic_lie2", ca, ex)
        elif what == "double-2":
            _need(s, "lie2_bialgebra")
            q, l1, l2 = double_lie2bialgebra(s.obj)
            out = Structure("quadratic_lie2", q, {"l1": l1, "l2": l2})
        elif what == "dual-vb":
            _need(s, "two_vect")
            out = Structure("two_vect", dualize(s.obj))
        elif what == "rmatrix-bialgebra":
            _need(s, "lie_algebra", "bialgebra")
            g = s.obj if s.kind == "lie_algebra" else s.obj.g
            if args.rmatrix:
                lam = _rmatrix_arg(g, args.rmatrix)
            elif "rmatrix" in s.extras:
                lam = s.extras["rmatrix"]
            else:
                raise InputError("rmatrix-bialgebra needs --rmatrix I,J,P/Q or an rmatrix in the input")
            out = Structure("bialgebra", bialgebra_from_rmatrix(g, lam), {"rmatrix": lam})
        else:  # pragma: no cover - argparse restricts the choices
            raise InputError(f"unknown construction {what!r}")
    except CheckFailed as exc:
        return _fail(f"build {what}", digest, exc.report, str(exc), args.json)
    _write(out, args.output)
    return EXIT_OK


def cmd_extract(args) -> int:
    s, digest = _read(args.input)
    what = args.target
    try:
        if what == "bialgebra":
            _need(s, "quadratic")
            if "l1" not in s.extras or "l2" not in s.extras:
                raise InputError("extract bialgebra needs l1 and l2 in the input")
            out = Structure("bialgebra", extract_bialgebra(ManinTriple(s.obj, s.extras["l1"], s.extras["l2"])))
        elif what == "coquad":
            _need(s, "quadratic_lie2")
            cq = ca_to_coquad(s.obj)
            ex = {k: mult_to_dirac(s.obj, s.extras[k]) for k in ("l1", "l2") if k in s.extras}
            out = Structure("coquadratic", cq, ex)
        elif what == "lie2-bialgebra":
            _need(s, "quadratic_lie2")
            if "l1" not in s.extras or "l2" not in s.extras:
                raise InputError("extract lie2-bialgebra needs l1 and l2 in the input")
            out = Structure("lie2_bialgebra", extract_lie2bialgebra(s.obj, s.extras["l1"], s.extras["l2"]))
        else:  # pragma: no cover
            raise InputError(f"unknown extraction {what!r}")
    except CheckFailed as exc:
        return _fail(f"extract {what}", digest, exc.report, str(exc), args.json)
    except ValueError as exc:
        return _fail(f"extract {what}", digest, None, str(exc), args.json)
    _write(out, args.output)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    res = run_fuzz(args.kind, args.count, args.dims, args.seed, args.parallel)
    res["command"] = "fuzz"
    lines = [
        f"fuzz {args.kind}: seed {args.seed}, {res['valid_instances']} instances, {res['mutants']} mutants",
        f"  invalid mutants detected: {res['mutants_detected']}/{res['mutants_invalid']}",
        f"  disagreements: {len(res['disagreements'])}",
        f"  digest: {res['digest']}",
    ]
    for d in res["disagreements"][:5]:
        lines.append(f"  ! {d['id']}: {json.dumps({k: v for k, v in d.items() if k != 'id'}, sort_keys=True)}")
    _emit(res, args.json, "\n".join(lines))
    return EXIT_OK if res["passed"] else EXIT_FAIL


def cmd_catalog(args) -> int:
    if args.action == "list":
        rows = []
        for name in catalog.names():
            e = catalog.entry(name)
            rows.append({"name": name, "kind": e.kind, "negative": e.negative, "description": e.description})
        human = "\n".join(f"{r['name']:<30} {r['kind']:<16} {'negative' if r['negative'] else ''}" for r in rows)
        _emit({"command": "catalog list", "entries": rows}, args.json, human)
        return EXIT_OK
    if args.action == "show":
        if not args.name:
            raise InputError("catalog show needs a NAME")
        try:
            e = catalog.entry(args.name)
        except KeyError as exc:
            raise InputError(str(exc)) from exc
        sys.stdout.write(dumps(from_dict(e.payload)))
        return EXIT_OK
    rep = catalog.verify_all()
    muts = catalog.mutation_summary()
    ok = rep.passed and muts["passed"]
    payload = {"command": "catalog verify", "passed": ok, "report": rep.to_dict(), "mutations": muts}
    human = (f"catalog: {'PASS' if rep.passed else 'FAIL'} ({len(catalog.names())} entries)\n"
             f"mutations: {muts['killed']}/{muts['invalid']} invalid mutants detected, "
             f"{muts['valid_accepted']}/{muts['valid']} valid mutants accepted")
    if not rep.passed:
        human += "\n" + "\n".join(f"  drift: {n}" for n in rep.failed())
    _emit(payload, args.json, human)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maninkit", description="Exact checks and constructions for Lie bialgebras, "
                                "Manin triples, crossed modules and their doubles.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run the full axiom suite for the file's kind")
    c.add_argument("input", help="structure file, '-' for stdin, or catalog:NAME")
    c.add_argument("--kind", choices=KINDS, help="require this kind")
    c.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("build", help="construct a structure")
    b.add_argument("construction", choices=["double", "ca-from-coquad", "double-2", "dual-vb", "rmatrix-bialgebra"])
    b.add_argument("input")
    b.add_argument("-o", "--output", help="output file (default stdout)")
    b.add_argument("--rmatrix", action="append", metavar="I,J,P/Q", help="bivector component (repeatable)")
    b.add_argument("--json", action="store_true", help="JSON failure report")
    b.set_defaults(func=cmd_build)

    e = sub.add_parser("extract", help="recover the data a double was built from")
    e.add_argument("target", choices=["bialgebra", "coquad", "lie2-bialgebra"])
    e.add_argument("input")
    e.add_argument("-o", "--output", help="output file (default stdout)")
    e.add_argument("--json", action="store_true", help="JSON failure report")
    e.set_defaults(func=cmd_extract)

    f = sub.add_parser("fuzz", help="seeded generative and mutation testing")
    f.add_argument("--kind", choices=FUZZ_KINDS, required=True)
    f.add_argument("--count", type=int, default=20)
    f.add_argument("--dims", type=int, default=3, help="maximum dimension of generated instances")
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--parallel", type=int, default=1, help="worker processes")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_fuzz)

    k = sub.add_parser("catalog", help="list, show or verify the built-in catalog")
    k.add_argument("action", choices=["list", "show", "verify"])
    k.add_argument("name", nargs="?")
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
