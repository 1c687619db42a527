"""Scene files: TOML descriptions of the inputs to each CLI command.

A scene declares named points (rational coefficient maps over free generator
symbols), an algebra (three supported kinds), command arguments referring to
the named points, and output options. Example:

    [scene]
    command = "hexagon"
    normalization = "sum_L_zero"

    [points]
    p = { p = 1 }
    q = { q = 1 }
    r = { r = 1 }
    sigma = { s = 1 }

    [algebra]
    kind = "sklyanin"
    sigma_point = "sigma"

    [args]
    p = "p"
    q = "q"
    r = "r"

    [options]
    series_terms = 12
    report_format = "json"

Coefficients may be integers or strings like "1/3". The only supported
normalization for three-generator scenes is "sum_L_zero" (the degree-3 class
has sum zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .curvegroup import ZERO, Point
from .errors import InputError
from .picard import SheafClass
from .sklyanin import SklyaninContext
from .surface import QuadricData
from .zalgebra import StandardZAlgebra, ZPiece

COMMANDS = (
    "hilbmatrix",
    "hexagon",
    "cremona",
    "recognize",
    "quadric",
    "zalg-normalize",
    "zalg-solve",
    "product-table",
)


@dataclass(frozen=True)
class SklyaninDecl:
    sigma_point: str


@dataclass(frozen=True)
class QuadricDecl:
    alpha_point: str
    ruling_sum: str
    z: str
    zprime: str


@dataclass(frozen=True)
class EllipticDecl:
    degree: int
    class_sum: str
    tau: str


@dataclass(frozen=True)
class ZPieceDecl:
    n: int
    degree: int
    sum: str
    d: int


@dataclass(frozen=True)
class Options:
    series_terms: int = 12
    report_format: str = "json"


@dataclass(frozen=True)
class Scene:
    command: Optional[str]
    normalization: Optional[str]
    points: dict[str, Point]
    algebra: Union[SklyaninDecl, QuadricDecl, EllipticDecl]
    args: dict[str, Union[str, int]]
    options: Options
    zpieces: tuple[ZPieceDecl, ...] = ()

    def point(self, name: str) -> Point:
        if name not in self.points:
            raise InputError(f"unknown point name {name!r} (declared: {sorted(self.points)})")
        return self.points[name]

    def arg_point(self, key: str) -> Point:
        if key not in self.args:
            raise InputError(f"missing [args] entry {key!r}")
        name = self.args[key]
        if not isinstance(name, str):
            raise InputError(f"[args].{key} must name a point")
        return self.point(name)

    def arg_int(self, key: str, default: int) -> int:
        if key not in self.args:
            return default
        v = self.args[key]
        if not isinstance(v, int):
            raise InputError(f"[args].{key} must be an integer")
        return v

    def sklyanin_context(self) -> SklyaninContext:
        if not isinstance(self.algebra, SklyaninDecl):
            raise InputError("this command needs [algebra] kind = \"sklyanin\"")
        if self.normalization != "sum_L_zero":
            raise InputError(
                "three-generator scenes need normalization = \"sum_L_zero\""
            )
        return SklyaninContext(SheafClass(3, ZERO), self.point(self.algebra.sigma_point))

    def quadric_data(self) -> QuadricData:
        if not isinstance(self.algebra, QuadricDecl):
            raise InputError("this command needs [algebra] kind = \"quadric\"")
        return QuadricData(
            alpha_point=self.point(self.algebra.alpha_point),
            ruling_class=SheafClass(4, self.point(self.algebra.ruling_sum)),
            z=self.point(self.algebra.z),
            zprime=self.point(self.algebra.zprime),
        )

    def elliptic_data(self) -> tuple[SheafClass, Point]:
        if not isinstance(self.algebra, EllipticDecl):
            raise InputError("this command needs [algebra] kind = \"elliptic\"")
        return (
            SheafClass(self.algebra.degree, self.point(self.algebra.class_sum)),
            self.point(self.algebra.tau),
        )

    def zalgebra(self) -> StandardZAlgebra:
        if not self.zpieces:
            raise InputError("this command needs a [[zalgebra.pieces]] list")
        _, tau = self.elliptic_data()
        pieces = tuple(
            ZPiece(p.n, SheafClass(p.degree, self.point(p.sum)), p.d)
            for p in self.zpieces
        )
        return StandardZAlgebra(tau, pieces)


def _coeff(value: object, where: str) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"{where}: coefficient must be a number or \"num/den\" string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{where}: bad rational {value!r}") from exc
    raise InputError(f"{where}: coefficient must be a number or \"num/den\" string")


def _parse_point(raw: object, where: str) -> Point:
    if not isinstance(raw, dict):
        raise InputError(f"{where}: a point is a table of generator coefficients")
    return Point.from_map({g: _coeff(v, f"{where}.{g}") for g, v in raw.items()})


def _require_str(table: dict, key: str, where: str) -> str:
    v = table.get(key)
    if not isinstance(v, str):
        raise InputError(f"{where}: missing or non-string key {key!r}")
    return v


def _require_int(table: dict, key: str, where: str) -> int:
    v = table.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{where}: missing or non-integer key {key!r}")
    return v


def parse_scene(path: Union[str, Path]) -> Scene:
    p = Path(path)
    try:
        with open(p, "rb") as fh:
            data = tomllib.load(fh)
    except FileNotFoundError as exc:
        raise InputError(f"scene file not found: {p}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise InputError(f"scene file {p} is not valid TOML: {exc}") from exc

    meta = data.get("scene", {})
    if not isinstance(meta, dict):
        raise InputError("[scene] must be a table")
    command = meta.get("command")
    if command is not None and command not in COMMANDS:
        raise InputError(f"[scene].command {command!r} is not one of {COMMANDS}")
    normalization = meta.get("normalization")
    if normalization is not None and normalization != "sum_L_zero":
        raise InputError(
            f"[scene].normalization {normalization!r} unsupported; use \"sum_L_zero\""
        )

    raw_points = data.get("points", {})
    if not isinstance(raw_points, dict):
        raise InputError("[points] must be a table")
    points = {
        name: _parse_point(raw, f"[points].{name}") for name, raw in raw_points.items()
    }

    gens = meta.get("generators")
    if gens is not None:
        if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
            raise InputError("[scene].generators must be a list of strings")
        allowed = set(gens)
        for name, pt in points.items():
            for g, _ in pt.coeffs:
                if g not in allowed:
                    raise InputError(
                        f"[points].{name} uses undeclared generator {g!r}"
                    )

    alg = data.get("algebra")
    if not isinstance(alg, dict):
        raise InputError("missing [algebra] table")
    kind = _require_str(alg, "kind", "[algebra]")
    algebra: Union[SklyaninDecl, QuadricDecl, EllipticDecl]
    if kind == "sklyanin":
        algebra = SklyaninDecl(_require_str(alg, "sigma_point", "[algebra]"))
    elif kind == "quadric":
        algebra = QuadricDecl(
            alpha_point=_require_str(alg, "alpha_point", "[algebra]"),
            ruling_sum=_require_str(alg, "ruling_sum", "[algebra]"),
            z=_require_str(alg, "z", "[algebra]"),
            zprime=_require_str(alg, "zprime", "[algebra]"),
        )
    elif kind == "elliptic":
        algebra = EllipticDecl(
            degree=_require_int(alg, "degree", "[algebra]"),
            class_sum=_require_str(alg, "class_sum", "[algebra]"),
            tau=_require_str(alg, "tau", "[algebra]"),
        )
    else:
        raise InputError(
            f"[algebra].kind {kind!r} is not one of \"sklyanin\", \"quadric\", \"elliptic\""
        )

    raw_args = data.get("args", {})
    if not isinstance(raw_args, dict):
        raise InputError("[args] must be a table")
    args = {}
    for k, v in raw_args.items():
        if isinstance(v, str):
            args[k] = v
        elif isinstance(v, bool) or not isinstance(v, int):
            raise InputError(f"[args].{k} must be a point name or integer")
        else:
            args[k] = v  # integers pass through (window bounds etc.)

    raw_opts = data.get("options", {})
    if not isinstance(raw_opts, dict):
        raise InputError("[options] must be a table")
    series_terms = raw_opts.get("series_terms", 12)
    if isinstance(series_terms, bool) or not isinstance(series_terms, int) or series_terms < 1:
        raise InputError("[options].series_terms must be a positive integer")
    report_format = raw_opts.get("report_format", "json")
    if report_format not in ("json", "text"):
        raise InputError("[options].report_format must be \"json\" or \"text\"")

    zpieces: list[ZPieceDecl] = []
    zal = data.get("zalgebra", {})
    if zal:
        if not isinstance(zal, dict) or not isinstance(zal.get("pieces"), list):
            raise InputError("[zalgebra] needs a [[zalgebra.pieces]] list")
        for i, row in enumerate(zal["pieces"]):
            if not isinstance(row, dict):
                raise InputError(f"[[zalgebra.pieces]] entry {i} must be a table")
            where = f"[[zalgebra.pieces]] entry {i}"
            zpieces.append(
                ZPieceDecl(
                    n=_require_int(row, "n", where),
                    degree=_require_int(row, "degree", where),
                    sum=_require_str(row, "sum", where),
                    d=_require_int(row, "d", where),
                )
            )

    return Scene(
        command=command,
        normalization=normalization,
        points=points,
        algebra=algebra,
        args=args,
        options=Options(series_terms=series_terms, report_format=report_format),
        zpieces=tuple(zpieces),
    )
