"""Command line interface.

Subcommands expose the enumerations (orbits, classes), the identity
verifiers (verify dmvv / frobenius / oracle), the genus series (genus
sigma / hecke / lambda / todd), and the canonical pairing (inner-product).
Output is byte-deterministic; exit code 0 means success (and, for
verifiers, that the identity holds), 1 means a verified identity failed,
2 means bad usage or configuration.
"""
from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import serialize
from .classes import (
    GuardExceededError,
    brute_force_classes,
    centralizer_order,
    class_size,
    enumerate_classes,
)
from .classfun import (
    ClassFunction,
    augmentation,
    induce_young,
    inner_product,
    product_inner_product,
    restrict_young,
)
from .genus import (
    IntegerModel,
    SymbolicModel,
    geometric_power_series,
    hecke_operator,
    lambda_series,
    sigma,
    todd_orbifold_series,
    verify_product_formula,
)
from .orbits import ALL_ORDERS, Mode, ModeError, enumerate_orbits


def _mode_from_args(args) -> Mode:
    return ALL_ORDERS if args.p is None else Mode.p_power(args.p)


def _model_from_spec(spec: str):
    if spec == "symbolic":
        return SymbolicModel("x")
    if spec.startswith("integer:"):
        return IntegerModel(int(spec.split(":", 1)[1]))
    if spec.startswith("table:"):
        return serialize.load_table_model(spec.split(":", 1)[1])
    raise ValueError(
        f"unknown model {spec!r}; expected 'symbolic', 'integer:D', or 'table:PATH'"
    )


def _emit(text: str):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _cmd_orbits(args) -> int:
    mode = _mode_from_args(args)
    orbits = enumerate_orbits(args.h, args.size, mode)
    if args.format == "json":
        _emit(serialize.dumps([serialize.orbit_to_json(t) for t in orbits]))
    else:
        _emit("size\thnf")
        for t in orbits:
            _emit(f"{t.size}\t{t.label()}")
    return 0


def _cmd_classes(args) -> int:
    mode = _mode_from_args(args)
    classes = enumerate_classes(args.h, args.l, mode)
    total = sum(class_size(c) for c in classes)
    if args.format == "json":
        _emit(
            serialize.dumps(
                {
                    "classes": [serialize.class_to_json(c) for c in classes],
                    "count": len(classes),
                    "total_tuples": str(total),
                }
            )
        )
    else:
        _emit("type\tcentralizer_order\tclass_size")
        for c in classes:
            type_label = ";".join(f"{m}x{o.label()}" for o, m in c.entries) or "-"
            _emit(f"{type_label}\t{centralizer_order(c)}\t{class_size(c)}")
        _emit(f"total\t{len(classes)}\t{total}")
    return 0


def _cmd_verify_dmvv(args) -> int:
    mode = _mode_from_args(args)
    model = _model_from_spec(args.model)
    report = verify_product_formula(model, args.n, args.h, mode)
    _emit(serialize.dumps(serialize.comparison_to_json(report)))
    return 0 if report.equal else 1


def _random_classfunction(h, mode, l, rng) -> ClassFunction:
    values = [
        Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        for _ in enumerate_classes(h, l, mode)
    ]
    return ClassFunction(h, mode, l, values)


def _cmd_verify_frobenius(args) -> int:
    mode = _mode_from_args(args)
    rng = random.Random(args.seed)
    checked = 0
    ok = True
    for j in range(1, args.l):
        k = args.l - j
        if j > k:
            break
        for _ in range(args.trials):
            chi = _random_classfunction(args.h, mode, j, rng)
            xi = _random_classfunction(args.h, mode, k, rng)
            zeta = _random_classfunction(args.h, mode, args.l, rng)
            lhs = inner_product(induce_young(chi, xi), zeta)
            rhs = product_inner_product(chi, xi, restrict_young(zeta, j, k))
            mult = augmentation(induce_young(chi, xi)) == augmentation(chi) * augmentation(xi)
            checked += 1
            if lhs != rhs or not mult:
                ok = False
    _emit(
        serialize.dumps(
            {
                "h": args.h,
                "mode": serialize.mode_to_json(mode),
                "l": args.l,
                "trials": checked,
                "equal": ok,
            }
        )
    )
    return 0 if ok else 1


def _cmd_verify_oracle(args) -> int:
    mode = _mode_from_args(args)
    counted = brute_force_classes(args.h, args.l, mode, guard=args.guard)
    expected = {c: class_size(c) for c in enumerate_classes(args.h, args.l, mode)}
    ok = counted == expected
    _emit(
        serialize.dumps(
            {
                "h": args.h,
                "mode": serialize.mode_to_json(mode),
                "l": args.l,
                "classes": len(expected),
                "tuples": str(sum(expected.values())),
                "equal": ok,
            }
        )
    )
    return 0 if ok else 1


def _value_str(v) -> str:
    if isinstance(v, Fraction):
        return serialize.fraction_to_str(v)
    return str(v)


def _emit_value_rows(rows, fmt: str):
    """rows: list of (n, value); json gives records, tsv a header plus lines."""
    if fmt == "json":
        _emit(
            serialize.dumps(
                [{"n": n, "value": serialize.value_to_json(v)} for n, v in rows]
            )
        )
    else:
        _emit("n\tvalue")
        for n, v in rows:
            _emit(f"{n}\t{_value_str(v)}")


def _cmd_genus(args) -> int:
    mode = _mode_from_args(args)
    model = _model_from_spec(args.model)
    if args.kind == "sigma":
        _emit_value_rows([(args.n, sigma(model, args.n, args.h, mode))], args.format)
    elif args.kind == "hecke":
        rows = [
            (n, hecke_operator(model, n, args.h, mode))
            for n in mode.sizes_up_to(args.n)
            if n >= 1
        ]
        _emit_value_rows(rows, args.format)
    elif args.kind == "lambda":
        series = lambda_series(model, args.n, args.h, mode)
        _emit_value_rows(list(enumerate(series.coeffs)), args.format)
    else:  # todd
        series = todd_orbifold_series(args.d, args.n)
        expected = geometric_power_series(args.d, args.n)
        equal = series == expected
        if args.format == "json":
            _emit(
                serialize.dumps(
                    {
                        "d": args.d,
                        "precision": args.n,
                        "series": serialize.series_to_json(series),
                        "closed_form": equal,
                    }
                )
            )
        else:
            _emit("n\tvalue")
            for n, v in enumerate(series.coeffs):
                _emit(f"{n}\t{_value_str(v)}")
            _emit(f"closed_form\t{'true' if equal else 'false'}")
        return 0 if equal else 1
    return 0


def _cmd_inner_product(args) -> int:
    mode = _mode_from_args(args)
    one = ClassFunction.one(args.h, mode, args.l)
    value = inner_product(one, one)
    _emit(serialize.fraction_to_str(value))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbigenus",
        description="Exact commuting-tuple combinatorics and symmetric-power series identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, l=False, n=False, size=False, d=False, model=False, fmt=False):
        p.add_argument("--h", type=int, default=1, help="rank of the acting lattice")
        p.add_argument("--p", type=int, default=None, help="prime for p-power mode (omit for all orders)")
        if l:
            p.add_argument("--l", type=int, required=True, help="symmetric group degree")
        if n:
            p.add_argument("--n", type=int, required=True, help="degree / precision")
        if size:
            p.add_argument("--size", type=int, required=True, help="orbit size")
        if d:
            p.add_argument("--d", type=int, default=1, help="dimension parameter")
        if model:
            p.add_argument(
                "--model",
                default="symbolic",
                help="psi model: 'symbolic', 'integer:D', or 'table:PATH'",
            )
        if fmt:
            p.add_argument("--format", choices=("json", "tsv"), default="json")

    p_orbits = sub.add_parser("orbits", help="list transitive orbits of one size")
    add_common(p_orbits, size=True, fmt=True)
    p_orbits.set_defaults(func=_cmd_orbits)

    p_classes = sub.add_parser("classes", help="list commuting-tuple conjugacy classes")
    add_common(p_classes, l=True, fmt=True)
    p_classes.set_defaults(func=_cmd_classes)

    p_verify = sub.add_parser("verify", help="check one of the exact identities")
    vsub = p_verify.add_subparsers(dest="which", required=True)

    p_dmvv = vsub.add_parser("dmvv", help="symmetric-power series vs exponential of Hecke sum")
    add_common(p_dmvv, n=True, model=True)
    p_dmvv.set_defaults(func=_cmd_verify_dmvv)

    p_frob = vsub.add_parser("frobenius", help="randomized Frobenius reciprocity check")
    add_common(p_frob, l=True)
    p_frob.add_argument("--trials", type=int, default=20)
    p_frob.add_argument("--seed", type=int, default=0)
    p_frob.set_defaults(func=_cmd_verify_frobenius)

    p_oracle = vsub.add_parser("oracle", help="class list and sizes vs brute-force enumeration")
    add_common(p_oracle, l=True)
    p_oracle.add_argument("--guard", type=int, default=None, help="override the size guard")
    p_oracle.set_defaults(func=_cmd_verify_oracle)

    p_genus = sub.add_parser("genus", help="genus series and operations")
    p_genus.add_argument("kind", choices=("sigma", "hecke", "lambda", "todd"))
    add_common(p_genus, n=True, d=True, model=True, fmt=True)
    p_genus.set_defaults(func=_cmd_genus)

    p_ip = sub.add_parser("inner-product", help="pairing of the trivial character with itself")
    add_common(p_ip, l=True)
    p_ip.set_defaults(func=_cmd_inner_product)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ModeError, GuardExceededError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, TypeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
