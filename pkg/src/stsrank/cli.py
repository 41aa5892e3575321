"""stsrank command line.

Exit codes: 0 success, 1 other library error, 2 usage, 3 unknown constant,
4 resource cap.  Errors are reported on stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager

from . import components, enumerator, fields, iso
from .errors import ResourceError, StsRankError, UnknownConstantError

EXIT_ERROR, EXIT_USAGE, EXIT_UNKNOWN, EXIT_RESOURCE = 1, 2, 3, 4

CONFIG_KEYS = {
    "oracle_block_cap": (enumerator, "BLOCK_CAP"),
    "canonical_v_cap": (iso, "CANONICAL_V_CAP"),
    "dual_word_cap": (fields, "DUAL_WORD_CAP"),
}


def load_config(path: str) -> dict[str, int]:
    """key=value lines; '#' starts a comment."""
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            if not sep or key not in CONFIG_KEYS:
                raise SystemExit(f"{path}:{lineno}: unknown setting {line!r}")
            out[key] = int(value.strip())
    return out


def apply_config(cfg: dict[str, int]) -> None:
    for key, value in cfg.items():
        module, attr = CONFIG_KEYS[key]
        setattr(module, attr, value)


def _emit(args, value, human: str | None = None) -> None:
    if args.json:
        print(json.dumps(value, separators=(",", ":")))
    else:
        print(human if human is not None else value)


@contextmanager
def _open_out(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _spec(args):
    return fields.CodeSpec(args.field, args.n, args.t)


# ---------------------------------------------------------------- commands

def cmd_code(args):
    H = fields.build_parity_check(_spec(args))
    print(H.to_json())


def cmd_rank(args):
    from .designs import TripleSystem, read_jsonl, sts_rank

    if args.matrix:
        with open(args.matrix) as fh:
            M = fields.FieldMatrix.from_json(fh.read())
        r = fields.matrix_rank(M)
        _emit(args, {"rank": r}, str(r))
        return
    with open(args.input) as fh:
        text = fh.read().strip()
    systems = list(read_jsonl(text.splitlines())) if "\n" in text else [TripleSystem.from_json(text)]
    ranks = [sts_rank(S, args.field) for S in systems]
    _emit(args, {"ranks": ranks}, "\n".join(map(str, ranks)))


def cmd_design(args):
    from .geometry import verify_gdd, weight3_design

    spec = _spec(args)
    if args.gdd:
        r = verify_gdd(spec)
        rep = {
            "groupCount": r.group_count, "groupSize": r.group_size,
            "lambdaSameGroup": r.lambda_same_group, "lambdaCrossGroup": r.lambda_cross_group,
            "zeroToGroup": r.zero_to_group,
            "interiorDesign": list(r.interior_params) if r.interior_params else None,
            "mixedPerSamePair": r.mixed_per_same_pair, "blocks": r.block_count,
            "classCensus": r.class_census, "passed": r.passed,
        }
        print(json.dumps(rep, separators=(",", ":")))
        return
    print(weight3_design(spec).to_json())


def cmd_inspect(args):
    from .geometry import inspect_json

    print(inspect_json(_spec(args)))


def cmd_enumerate(args):
    from .composer import enumerate_compositions, iter_compositions, RecipeSpace

    spec = _spec(args)
    if args.mode == "count":
        n = enumerate_compositions(spec, "count").count
        _emit(args, {"count": str(n)}, str(n))
        return
    total = RecipeSpace(spec).size
    start = 0
    if args.checkpoint and os.path.exists(args.checkpoint):
        with open(args.checkpoint) as fh:
            start = int(fh.read().strip() or 0)
    mode = "a" if start and args.out not in (None, "-") else "w"
    fh = sys.stdout if args.out in (None, "-") else open(args.out, mode)
    n = start
    try:
        for S in iter_compositions(spec, start):
            fh.write(S.to_json() + "\n")
            n += 1
            if args.checkpoint and n % 1000 == 0:
                fh.flush()
                _write_checkpoint(args.checkpoint, n)
    finally:
        if fh is not sys.stdout:
            fh.close()
    if args.checkpoint:
        _write_checkpoint(args.checkpoint, n)
    if args.out not in (None, "-"):
        _emit(args, {"count": str(total)}, str(total))


def _write_checkpoint(path, n):
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(f"{n}\n")
    os.replace(tmp, path)


def cmd_oracle(args):
    from .geometry import weight3_design

    D = weight3_design(_spec(args))
    if args.out:
        sols = enumerator.exact_cover_sts(D)
        with _open_out(args.out) as fh:
            for S in sols:
                fh.write(S.to_json() + "\n")
        if args.out != "-":
            _emit(args, {"count": str(len(sols))}, str(len(sols)))
        return
    n = enumerator.count_exact_cover(D)
    _emit(args, {"count": str(n)}, str(n))


def cmd_components(args):
    kind = args.kind.upper()
    if args.list:
        gen = {
            "N1": lambda k: (s.to_json() for s in components.iter_all_sts(k)),
            "N2": lambda k: (json.dumps({"m": f.vertex_count, "factors": [[list(e) for e in fac] for fac in f.factors]},
                                        separators=(",", ":")) for f in components.iter_one_factorizations(k)),
            "N3": lambda k: (json.dumps({"g": L.g, "cells": [list(r) for r in L.cells]}, separators=(",", ":"))
                             for L in components.iter_latin_squares(k)),
        }[kind]
        for line in gen(args.order):
            print(line)
        return
    c = components.catalog_count(kind, args.order)
    _emit(args, {"kind": c.kind, "order": c.order, "value": str(c.value), "provenance": c.provenance},
          str(c.value))


def cmd_formula(args):
    from . import counting

    which = args.which
    if which in ("cl", "exact-t1"):
        f = counting.formula_classical if which == "cl" else counting.formula_exact_rank_t1
        val = f(args.field, args.n)
        _emit(args, {"value": str(val)}, str(val))
        return
    if args.t is None:
        raise SystemExit("--t is required for this formula")
    spec = _spec(args)
    if which in ("s", "s-prime"):
        val = counting.formula_distinct(spec)
        _emit(args, {"value": str(val)}, str(val))
    elif which == "bounds":
        print(counting.iso_bounds(spec, sharp=args.sharp).to_json())
    elif which == "bounds-exact":
        val = counting.iso_bounds_exact_rank(spec, refined=args.refined, sharp=args.sharp)
        _emit(args, {"value": str(val)}, str(val))


def cmd_iso(args):
    from .designs import read_jsonl

    spec = _spec(args)
    with open(args.input) as fh:
        report = iso.iso_classes(read_jsonl(fh), spec)
    text = json.dumps(report.to_dict(), separators=(",", ":"))
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text + "\n")
    if args.json or not args.report:
        print(text)
    else:
        print(f"classes={len(report.classes)} total={report.total_distinct} mass_balanced={report.mass_balanced}")


def cmd_verify(args):
    from .verify import run_verification

    rows = run_verification(_spec(args))
    if args.json:
        print(json.dumps([{"check": n, "passed": ok, "detail": d} for n, ok, d in rows], separators=(",", ":")))
    else:
        width = max(len(n) for n, _, _ in rows)
        for name, ok, detail in rows:
            print(f"{name:<{width}}  {'PASS' if ok else 'FAIL'}  {detail}")
    if not all(ok for _, ok, _ in rows):
        return EXIT_ERROR


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=None, help="worker cap (results never depend on it)")
    common.add_argument("--config", help="key=value file overriding caps")

    def code_args(p, t_required=True):
        p.add_argument("--field", type=int, choices=(2, 3), required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--t", type=int, required=t_required)

    ap = argparse.ArgumentParser(prog="stsrank", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("code", parents=[common], help="print H_{n,t} as JSON")
    code_args(p)
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("rank", parents=[common], help="p-rank of designs or a matrix")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="input", help="design JSON or JSONL")
    src.add_argument("--matrix", help="matrix JSON")
    p.add_argument("--field", type=int, default=2)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("design", parents=[common], help="weight-3 design of the code")
    code_args(p)
    p.add_argument("--gdd", action="store_true", help="print the GDD verification report instead")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("inspect", parents=[common], help="column partition and geometry as JSON")
    code_args(p)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("enumerate", parents=[common], help="compose all STS in the code")
    code_args(p)
    p.add_argument("--mode", choices=("count", "stream"), default="count")
    p.add_argument("--out", default="-")
    p.add_argument("--checkpoint", help="cursor file for resumable streaming")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("oracle", parents=[common], help="exact-cover search for STS in the code")
    code_args(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true", default=True)
    g.add_argument("--out")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("components", parents=[common], help="N1/N2/N3 counts and listings")
    p.add_argument("--kind", choices=("n1", "n2", "n3", "N1", "N2", "N3"), required=True)
    p.add_argument("--order", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true", default=True)
    g.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("formula", parents=[common], help="closed-form counts and bounds")
    p.add_argument("--which", required=True, choices=("s", "s-prime", "cl", "exact-t1", "bounds", "bounds-exact"))
    code_args(p, t_required=False)
    p.add_argument("--refined", action="store_true")
    p.add_argument("--sharp", action="store_true", help="binary: tighter |Aut S| bound")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("iso", parents=[common], help="isomorphism classes and mass formula")
    p.add_argument("--in", dest="input", required=True)
    code_args(p)
    p.add_argument("--report")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("verify", parents=[common], help="structure-theorem checks for one code")
    code_args(p)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.config:
            apply_config(load_config(args.config))
        rc = args.func(args)
        return rc or 0
    except UnknownConstantError as e:
        _error(e, missing=[f"{k}({o})" for k, o in e.missing])
        return EXIT_UNKNOWN
    except ResourceError as e:
        _error(e)
        return EXIT_RESOURCE
    except StsRankError as e:
        _error(e)
        return EXIT_ERROR


def _error(e: StsRankError, **extra) -> None:
    obj = {"error": e.kind, "message": str(e), **extra}
    print(json.dumps(obj, separators=(",", ":")), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
