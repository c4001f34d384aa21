"""Command-line front end.

Verbs: mono, upper, betti, compare, witness, charscan, oracle (and a hidden
seeded selftest).  Identical invocations print byte-identical output.  Exit
codes: 0 success, 1 parse/input error, 2 precondition violation, 3 internal
cross-check failure (always a bug).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import betti as betti_mod
from .engine import (
    DEFAULT_DEGREE_CEILING,
    char_scan,
    mono_oracle,
    mono_upper,
    mono_via_gb,
    mono_via_puv,
)
from .errors import InternalCheckError, MonoError, ParseError, PreconditionError
from .fields import FieldSpec
from .monomial import MonomialIdeal
from .parse import parse_source
from .poly import _monomial_str

VISIBLE_VERBS = ("mono", "upper", "betti", "compare", "witness", "charscan", "oracle")


def _field_arg(value):
    if value in ("QQ", "0"):
        return FieldSpec(0)
    return FieldSpec(int(value))


def _primes_arg(value):
    return [int(v) for v in value.split(",") if v]


def _load_ideal(args):
    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()
    override = _field_arg(args.field) if getattr(args, "field", None) else None
    ring, ideals = parse_source(text, field_override=override)
    if args.ideal not in ideals:
        raise ParseError(f"no ideal named {args.ideal!r} in {args.input}")
    return ring, ideals[args.ideal]


def _ceiling(args):
    if getattr(args, "ceiling", None) is not None:
        return args.ceiling
    env = os.environ.get("MONO_DEGREE_CEILING")
    if env:
        return int(env)
    return DEFAULT_DEGREE_CEILING


def _gen_strings(ring, M):
    if M.is_zero():
        return ["0"]
    return [_monomial_str(ring, e) or "1" for e in M.sorted_gens()]


def _print_mono(ring, result, records):
    gens = _gen_strings(ring, result.mono)
    if records:
        for g in gens:
            print(g)
        return
    print(
        f"largest monomial subideal (method {result.method}, field {result.field}):"
    )
    for g in gens:
        print(f"  {g}")


def _require_monomial_ideal(ring, ideal):
    try:
        return MonomialIdeal.from_polys(ring, ideal.gens)
    except MonoError:
        raise PreconditionError(
            "this verb needs an ideal generated by monomials"
        ) from None


# ------------------------------------------------------------------ verbs


def _cmd_mono(args):
    ring, I = _load_ideal(args)
    if args.method == "gb":
        res = mono_via_gb(I)
    elif args.method == "puv":
        res = mono_via_puv(I, ceiling=_ceiling(args))
    else:
        res = mono_oracle(I, ceiling=_ceiling(args))
    _print_mono(ring, res, args.format == "records")
    return 0


def _cmd_upper(args):
    ring, I = _load_ideal(args)
    M = mono_upper(I)
    gens = _gen_strings(ring, M)
    if args.format == "records":
        for g in gens:
            print(g)
    else:
        print("smallest monomial over-ideal:")
        for g in gens:
            print(f"  {g}")
    return 0


def _cmd_betti(args):
    _, I = _load_ideal(args)
    table = betti_mod.graded_betti(I, max_degree=args.max_degree)
    if args.format == "records":
        for line in betti_mod.machine_records(table):
            print(line)
    else:
        print(betti_mod.format_table(table))
    return 0


def _cmd_compare(args):
    ring, I = _load_ideal(args)
    res = mono_via_gb(I)
    t_ideal = betti_mod.graded_betti(I)
    t_mono = betti_mod.graded_betti(res.mono.to_ideal())
    records = args.format == "records"
    mono_gens = _gen_strings(ring, res.mono)
    n = ring.n
    top_ok = all(
        t_ideal.beta(n, j) != 0
        for (i, j) in t_mono.entries
        if i == n
    )
    reg_equal = t_ideal.regularity() == t_mono.regularity()
    if records:
        for g in mono_gens:
            print(f"mono {g}")
        for line in betti_mod.machine_records(t_ideal):
            print(f"betti_ideal {line}")
        for line in betti_mod.machine_records(t_mono):
            print(f"betti_mono {line}")
        print(f"regularity_ideal {t_ideal.regularity()}")
        print(f"regularity_mono {t_mono.regularity()}")
        print(f"level_ideal {'yes' if t_ideal.is_level() else 'no'}")
        print(f"level_mono {'yes' if t_mono.is_level() else 'no'}")
        print(f"regularity_equal {'yes' if reg_equal else 'no'}")
        print(f"top_betti_implication {'yes' if top_ok else 'no'}")
        return 0
    print("largest monomial subideal:")
    for g in mono_gens:
        print(f"  {g}")
    print()
    print("Betti table of the quotient by the ideal:")
    print(betti_mod.format_table(t_ideal))
    print()
    print("Betti table of the quotient by its largest monomial subideal:")
    print(betti_mod.format_table(t_mono))
    print()
    print(f"regularity (ideal): {t_ideal.regularity()}")
    print(f"regularity (monomial subideal): {t_mono.regularity()}")
    print(f"regularity equal: {'yes' if reg_equal else 'no'}")
    print(f"level (ideal): {'yes' if t_ideal.is_level() else 'no'}")
    print(f"level (monomial subideal): {'yes' if t_mono.is_level() else 'no'}")
    print(f"socle degrees (ideal): {t_ideal.socle_degrees()}")
    print(f"socle degrees (monomial subideal): {t_mono.socle_degrees()}")
    print(f"top-Betti implication holds: {'yes' if top_ok else 'no'}")
    return 0


def _cmd_witness(args):
    ring, ideal = _load_ideal(args)
    M = _require_monomial_ideal(ring, ideal)
    if not M.is_artinian():
        raise PreconditionError("witness search requires an Artinian monomial ideal")
    classes = M.equal_colon_classes(max_degree=args.max_degree)
    records = args.format == "records"
    if records:
        for d, members in classes:
            names = " ".join(_monomial_str(ring, u) or "1" for u in members)
            print(f"class {d} {names}")
    else:
        print("equal-colon classes of standard monomials:")
        if not classes:
            print("  none")
        for d, members in classes:
            names = ", ".join(_monomial_str(ring, u) or "1" for u in members)
            print(f"  degree {d}: {names}")
    gor = M.is_gorenstein()
    has_preimage = not gor
    if records:
        print(f"gorenstein {'yes' if gor else 'no'}")
        print(f"nonmonomial_preimage {'exists' if has_preimage else 'none'}")
    else:
        print(f"Gorenstein: {'yes' if gor else 'no'}")
        if has_preimage:
            print("a non-monomial ideal with this largest monomial subideal exists")
        else:
            print("no non-monomial ideal has this as its largest monomial subideal")
    return 0


def _cmd_charscan(args):
    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()
    scan = char_scan(
        text, args.ideal, _primes_arg(args.primes), include_char_zero=args.qq
    )
    records = args.format == "records"
    names = {f: str(f).replace("ZZ/", "F") for f in scan.fields}
    from .poly import RingContext

    ring = RingContext(FieldSpec(0), scan.variables)
    if records:
        for f in scan.fields:
            for e in scan.generators[f]:
                print(f"{names[f]} {_monomial_str(ring, e) or '1'}")
        for e, flds in scan.field_dependent():
            where = ",".join(names[f] for f in flds)
            print(f"diff {_monomial_str(ring, e) or '1'} {where}")
        return 0
    print(f"largest monomial subideal of {scan.ideal_name} by ground field:")
    for f in scan.fields:
        gens = ", ".join(_monomial_str(ring, e) or "1" for e in scan.generators[f]) or "0"
        print(f"  {names[f]}: {gens}")
    dep = scan.field_dependent()
    print("field-dependent generators:")
    if not dep:
        print("  none (identical over all requested fields)")
    for e, flds in dep:
        where = ", ".join(names[f] for f in flds)
        print(f"  {_monomial_str(ring, e) or '1'}: only over {where}")
    return 0


def _cmd_oracle(args):
    ring, I = _load_ideal(args)
    res = mono_oracle(I, ceiling=_ceiling(args))
    _print_mono(ring, res, args.format == "records")
    return 0


def _cmd_selftest(args):
    from .selftest import run_suite

    report = run_suite(args.seed, instances=args.instances)
    print(report.summary())
    for f in report.failures:
        print(f"FAIL {f}")
    return 0 if report.ok else 3


# ------------------------------------------------------------------ plumbing


def _add_common(sp, ideal_required=True):
    sp.add_argument("--in", dest="input", required=True, help="ideal file")
    if ideal_required:
        sp.add_argument("--ideal", required=True, help="name of the ideal")
    sp.add_argument(
        "--format",
        choices=("text", "records"),
        default="text",
        help="human text or line-oriented records",
    )


def build_parser():
    ap = argparse.ArgumentParser(
        prog="monoideal",
        description=(
            "Monomial companions of polynomial ideals: largest monomial "
            "subideal, smallest monomial over-ideal, graded Betti tables."
        ),
    )
    sub = ap.add_subparsers(dest="verb", metavar="{" + ",".join(VISIBLE_VERBS) + "}")
    sub.required = True

    sp = sub.add_parser("mono", help="largest monomial subideal")
    _add_common(sp)
    sp.add_argument("--method", choices=("gb", "puv", "oracle"), default="gb")
    sp.add_argument("--field", help="override the coefficient field (QQ or a prime)")
    sp.add_argument("--ceiling", type=int, help="degree ceiling for searches")
    sp.set_defaults(func=_cmd_mono)

    sp = sub.add_parser("upper", help="smallest monomial over-ideal")
    _add_common(sp)
    sp.add_argument("--field")
    sp.set_defaults(func=_cmd_upper)

    sp = sub.add_parser("betti", help="graded Betti table of the quotient")
    _add_common(sp)
    sp.add_argument("--field")
    sp.add_argument("--max-degree", type=int, dest="max_degree")
    sp.set_defaults(func=_cmd_betti)

    sp = sub.add_parser("compare", help="ideal vs largest monomial subideal")
    _add_common(sp)
    sp.add_argument("--field")
    sp.set_defaults(func=_cmd_compare)

    sp = sub.add_parser("witness", help="equal-colon witnesses of a monomial ideal")
    _add_common(sp)
    sp.add_argument("--field")
    sp.add_argument("--max-degree", type=int, dest="max_degree")
    sp.set_defaults(func=_cmd_witness)

    sp = sub.add_parser("charscan", help="scan ground fields for monomial content")
    _add_common(sp)
    sp.add_argument("--primes", default="2,3,5", help="comma-separated primes")
    qq = sp.add_mutually_exclusive_group()
    qq.add_argument("--qq", dest="qq", action="store_true", default=True)
    qq.add_argument("--no-qq", dest="qq", action="store_false")
    sp.set_defaults(func=_cmd_charscan)

    sp = sub.add_parser("oracle", help="brute-force largest monomial subideal")
    _add_common(sp)
    sp.add_argument("--field")
    sp.add_argument("--ceiling", type=int)
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("selftest")  # hidden from the verb list on purpose
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--instances", type=int, default=50)
    sp.set_defaults(func=_cmd_selftest)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
