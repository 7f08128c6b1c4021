"""Canonical JSON encodings for orbits, classes, values, and reports.

Counts and sizes are emitted as decimal strings so arbitrarily large exact
integers survive any JSON reader; rationals are "num/den" with the
denominator omitted when it is one.  All list orders are the canonical
enumeration orders, so equal objects serialize to identical bytes.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .classes import OrbitTypeMultiset, centralizer_order, class_size
from .classfun import ClassFunction
from .genus import SeriesComparison, TableModel
from .orbits import ALL_ORDERS, Mode, TransitiveOrbit
from .psipoly import PsiPolynomial
from .series import TruncatedSeries


def fraction_to_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fraction_from_str(s: str) -> Fraction:
    try:
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational literal: {s!r}") from e


def orbit_to_json(orbit: TransitiveOrbit) -> dict:
    return {
        "h": orbit.h,
        "size": str(orbit.size),
        "hnf": [list(row) for row in orbit.rows],
    }


def orbit_from_json(obj) -> TransitiveOrbit:
    if not isinstance(obj, dict) or "h" not in obj or "hnf" not in obj:
        raise ValueError(f"not an orbit object: {obj!r}")
    try:
        orbit = TransitiveOrbit(
            int(obj["h"]), tuple(tuple(int(x) for x in row) for row in obj["hnf"])
        )
    except (TypeError, ValueError) as e:
        raise ValueError(f"invalid orbit matrix: {e}") from e
    if "size" in obj and str(orbit.size) != str(obj["size"]):
        raise ValueError(f"orbit size field {obj['size']!r} does not match matrix")
    return orbit


def mode_to_json(mode: Mode):
    return None if mode.p is None else {"p": mode.p}


def mode_from_json(obj) -> Mode:
    if obj is None:
        return ALL_ORDERS
    if isinstance(obj, dict) and set(obj) == {"p"}:
        return Mode.p_power(int(obj["p"]))
    raise ValueError(f"not a mode object: {obj!r}")


def class_to_json(cls: OrbitTypeMultiset) -> dict:
    return {
        "type": [
            {"orbit": orbit_to_json(orbit), "mult": mult} for orbit, mult in cls.entries
        ],
        "centralizer_order": str(centralizer_order(cls)),
        "class_size": str(class_size(cls)),
    }


def value_to_json(value):
    """Encode a Fraction as a string, a polynomial as a sorted monomial list."""
    if isinstance(value, (int, Fraction)):
        return fraction_to_str(Fraction(value))
    if isinstance(value, PsiPolynomial):
        return [
            {
                "monomial": [
                    {"family": sym.family, "orbit": orbit_to_json(sym.orbit), "power": e}
                    for sym, e in mono
                ],
                "value": fraction_to_str(coeff),
            }
            for mono, coeff in value.sorted_terms()
        ]
    raise TypeError(f"cannot serialize value of type {type(value).__name__}")


def series_to_json(series: TruncatedSeries) -> list:
    return [value_to_json(c) for c in series.coeffs]


def classfunction_to_json(chi: ClassFunction) -> dict:
    return {
        "h": chi.h,
        "mode": mode_to_json(chi.mode),
        "l": chi.l,
        "values": [
            {"class": class_to_json(c), "value": value_to_json(v)}
            for c, v in zip(chi.classes, chi.values)
        ],
    }


def comparison_to_json(report: SeriesComparison) -> dict:
    out = {
        "h": report.h,
        "p": report.mode.p,
        "precision": report.precision,
        "equal": report.equal,
        "lhs": series_to_json(report.lhs),
        "rhs": series_to_json(report.rhs),
    }
    if not report.equal:
        out["first_mismatch"] = report.first_mismatch
    return out


def table_model_from_json(obj) -> TableModel:
    """Parse a psi table: a JSON list of {"orbit": ..., "psi": "num/den"}."""
    if not isinstance(obj, list):
        raise ValueError("psi table must be a JSON list")
    table = {}
    for entry in obj:
        if not isinstance(entry, dict) or set(entry) != {"orbit", "psi"}:
            raise ValueError(f"psi table entries need 'orbit' and 'psi' keys: {entry!r}")
        orbit = orbit_from_json(entry["orbit"])
        if orbit in table:
            raise ValueError(f"duplicate psi table entry for orbit {orbit}")
        table[orbit] = fraction_from_str(entry["psi"])
    return TableModel(table)


def load_table_model(path: str) -> TableModel:
    with open(path) as f:
        try:
            obj = json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"psi table {path} is not valid JSON: {e}") from e
    return table_model_from_json(obj)


def dumps(obj) -> str:
    """Serialize an already-encoded JSON object deterministically."""
    return json.dumps(obj, indent=2, sort_keys=False)
