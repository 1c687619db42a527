"""Deterministic report serialization.

Reports are plain dicts built from strings, integers, booleans, lists and
dicts. Rationals render as "num/den" strings, points as sorted coefficient
maps, series via their canonical closed form. Rendering the same report twice
gives byte-identical output; JSON uses sorted keys and fixed separators.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from .curvegroup import Divisor, Point
from .hilbert import HilbertSeries
from .picard import SheafClass
from .sklyanin import SectionSpace, word_str
from .surface import (
    BlowdownLog,
    CheckRecord,
    DerivationRecord,
    EllipticAlgebra,
    IdealClass,
    LineClass,
)
from .zalgebra import SolvedPlane


def frac_str(x: Union[int, Fraction]) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def point_obj(p: Point) -> dict:
    return {g: frac_str(c) for g, c in p.coeffs}


def divisor_obj(d: Divisor) -> list:
    return [{"point": point_obj(p), "mult": m} for p, m in d.terms]


def sheaf_obj(c: SheafClass) -> dict:
    return {"degree": c.degree, "sum": point_obj(c.sum_point)}


def series_str(h: HilbertSeries) -> str:
    return str(h)


def line_obj(line: LineClass) -> dict:
    return {
        "name": line.name,
        "divisor_point": point_obj(line.div),
        "self_intersection": line.self_int,
        "origin": line.origin,
    }


def ideal_obj(ideal: IdealClass) -> dict:
    return {
        "name": ideal.name,
        "divisor": divisor_obj(ideal.divisor),
        "deficit": series_str(ideal.deficit),
        "former_entries": [
            {"line": ln, "entry": e} for ln, e in ideal.former_entries
        ],
    }


def algebra_obj(alg: EllipticAlgebra) -> dict:
    return {
        "degree": alg.degree,
        "class": sheaf_obj(alg.sheaf),
        "tau": point_obj(alg.tau),
        "series": series_str(alg.series()),
        "lines": [line_obj(ln) for ln in alg.lines],
        "entries": [
            {"pair": list(pair), "entry": e} for pair, e in alg.entries
        ],
        "ideals": [ideal_obj(i) for i in alg.ideals],
    }


def check_obj(c: CheckRecord) -> dict:
    return {"check": c.name, "ok": c.passed, "detail": c.detail}


def derivation_obj(d: DerivationRecord) -> dict:
    out: dict = {
        "subject": list(d.subject),
        "quantity": d.quantity,
        "value": d.value,
        "rule": d.rule,
    }
    if d.witness:
        out["witness"] = d.witness
    if d.dims:
        out["dims"] = list(d.dims)
    if d.note:
        out["note"] = d.note
    return out


def blowdown_obj(log: BlowdownLog) -> dict:
    return {
        "contracted": log.contracted,
        "contracted_divisor_point": point_obj(log.contracted_div),
        "degree_after": log.degree_after,
        "survivors": list(log.survivors),
        "demoted": list(log.demoted),
        "ideal_exponents": [
            {"ideal": name, "exponent": e} for name, e in log.ideal_exponents
        ],
    }


def section_obj(s: SectionSpace) -> dict:
    out: dict = {
        "word": word_str(s),
        "degree": s.degree,
        "rule": s.rule,
    }
    if s.dim_exact:
        out["dim"] = s.dim_lo
    else:
        out["dim_bounds"] = [s.dim_lo, s.dim_hi]
    if s.vanishing_defined:
        out["vanishing_divisor"] = divisor_obj(s.vanishing_divisor)
    return out


def solved_obj(solved: SolvedPlane) -> dict:
    return {"sigma": point_obj(solved.sigma), "class": sheaf_obj(solved.L)}


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    return str(v)


def _text_lines(value, indent: int, out: list) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        for key in sorted(value):
            v = value[key]
            if isinstance(v, (dict, list)):
                out.append(f"{pad}{key}:")
                _text_lines(v, indent + 1, out)
            else:
                out.append(f"{pad}{key}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                out.append(f"{pad}-")
                _text_lines(v, indent + 1, out)
            else:
                out.append(f"{pad}- {_scalar(v)}")
    else:
        out.append(f"{pad}{_scalar(value)}")


def render_text(report: dict) -> str:
    out: list = []
    _text_lines(report, 0, out)
    return "\n".join(out) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "text":
        return render_text(report)
    return render_json(report)
