"""Command line entry point.

Usage: nckit COMMAND SCENE.toml [--report PATH] [--format json|text]
[--series-terms N]

Exit codes: 0 on success; 2 when a pipeline hypothesis or verification check
fails (the report names the first failed check); 1 on input errors (bad scene
files, unknown names, unsupported queries).

All computations are exact over the rationals and fully deterministic. The
environment variable NCKIT_SEED is reserved for compatibility with batch
drivers and is read but ignored; no code path depends on randomness.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from typing import Callable, Optional

from . import report as rep
from .curvegroup import Divisor
from .errors import CheckFailed, InputError, NckitError
from .scene import COMMANDS, Scene, parse_scene
from .sklyanin import SklyaninContext
from .surface import (
    converse_scene,
    cremona_scene,
    cremona_transform,
    hexagon_matrix,
    quadric_to_plane,
    recognize,
)
from .tcrhom import recognition_hom_matrix
from .zalgebra import normalize, sheaf_sequence_window, solve_three_generator


def _cmd_hilbmatrix(scene: Scene) -> dict:
    N, t = scene.elliptic_data()
    pts = [scene.arg_point(k) for k in ("a", "b", "c", "d", "e", "f")]
    matrix = recognition_hom_matrix(*pts, N, t)
    terms = scene.options.series_terms
    return {
        "modules": [
            "dual of O(a+b+c)",
            "trivial",
            "O(d+e+f)",
        ],
        "matrix": [[rep.series_str(h) for h in row] for row in matrix],
        "coefficients": [
            [h.coefficients(terms) for h in row] for row in matrix
        ],
    }


def _cmd_hexagon(scene: Scene) -> dict:
    ctx = scene.sklyanin_context()
    p, q, r = (scene.arg_point(k) for k in ("p", "q", "r"))
    R, records, checks = cremona_scene(ctx, p, q, r)
    order = [
        "exc_p", "exc_q", "exc_r", "strict_p", "strict_q", "strict_r",
    ]
    matrix = hexagon_matrix(R, order)
    return {
        "surface": rep.algebra_obj(R),
        "order": order,
        "matrix": matrix,
        "derivations": [rep.derivation_obj(d) for d in records],
        "checks": [rep.check_obj(c) for c in checks],
    }


def _recognition_obj(rec) -> dict:
    return {
        "checks": [rep.check_obj(c) for c in rec.checks],
        "harvest": {
            k: rep.point_obj(v)
            for k, v in zip("abcdef", rec.harvest)
        },
        "solved": rep.solved_obj(rec.solved),
        "blowup_points": [rep.point_obj(p) for p in rec.blowup_points],
        "ideal": rep.ideal_obj(rec.ideal),
        "plane_class": rep.sheaf_obj(rec.plane.sheaf),
        "contractions": [rep.blowdown_obj(log) for log in rec.logs],
        "parked_ideals": [rep.ideal_obj(i) for i in rec.parked_ideals],
    }


def _cmd_cremona(scene: Scene) -> dict:
    ctx = scene.sklyanin_context()
    p, q, r = (scene.arg_point(k) for k in ("p", "q", "r"))
    res = cremona_transform(ctx, p, q, r)
    return {
        "hexagon": {
            "order": list(res.hexagon_order),
            "matrix": [list(row) for row in res.hexagon],
        },
        "degree_ledger": list(res.degree_ledger),
        "first_contraction": rep.blowdown_obj(res.first_log),
        "recognition": _recognition_obj(res.recognition),
        "new_points": [rep.point_obj(pt) for pt in res.new_points],
        "iso_witness": rep.point_obj(res.iso_witness),
        "checks": [rep.check_obj(c) for c in res.checks],
        "derivations": [rep.derivation_obj(d) for d in res.records],
    }


def _cmd_recognize(scene: Scene) -> dict:
    ctx = scene.sklyanin_context()
    p = scene.arg_point("p")
    q = scene.arg_point("q")
    R, records = converse_scene(ctx, p, q)
    rec = recognize(R, "exc_p", "exc_q", "third")
    bound = scene.arg_int("window", 9)
    rows = sheaf_sequence_window(rec.solved, *rec.harvest, ctx.tau, bound)
    return {
        "scene_surface": rep.algebra_obj(R),
        "scene_derivations": [rep.derivation_obj(d) for d in records],
        "recognition": _recognition_obj(rec),
        "sheaf_window": [
            {
                "n": n,
                "lhs": rep.sheaf_obj(lhs),
                "rhs": rep.sheaf_obj(rhs),
                "equal": eq,
            }
            for n, lhs, rhs, eq in rows
        ],
    }


def _cmd_quadric(scene: Scene) -> dict:
    qd = scene.quadric_data()
    t0 = scene.arg_point("blowup_point")
    res = quadric_to_plane(qd, t0)
    return {
        "quadric_surface": rep.algebra_obj(res.quadric_surface),
        "blown_up": rep.algebra_obj(res.blown_up),
        "degree_ledger": list(res.degree_ledger),
        "sigma": rep.point_obj(res.sigma_point),
        "blowup_points": [rep.point_obj(p) for p in res.blowup_points],
        "recognition": _recognition_obj(res.recognition),
        "checks": [rep.check_obj(c) for c in res.checks],
        "derivations": [rep.derivation_obj(d) for d in res.records],
    }


def _cmd_zalg_normalize(scene: Scene) -> dict:
    A = scene.zalgebra()
    exps, B = normalize(A)
    _, B2 = normalize(B)
    return {
        "exponents": [{"n": n, "e": e} for n, e in sorted(exps.items())],
        "normalized": [
            {"n": p.n, "class": rep.sheaf_obj(p.cls), "d": p.d}
            for p in B.pieces
        ],
        "idempotent": B2 == B,
    }


def _cmd_zalg_solve(scene: Scene) -> dict:
    N, t = scene.elliptic_data()
    pts = [scene.arg_point(k) for k in ("a", "b", "c", "d", "e", "f")]
    solved = solve_three_generator(*pts, N, t)
    bound = scene.arg_int("window", 9)
    rows = sheaf_sequence_window(solved, *pts, t, bound)
    return {
        "solved": rep.solved_obj(solved),
        "sheaf_window": [
            {
                "n": n,
                "lhs": rep.sheaf_obj(lhs),
                "rhs": rep.sheaf_obj(rhs),
                "equal": eq,
            }
            for n, lhs, rhs, eq in rows
        ],
        "all_equal": all(eq for _, _, _, eq in rows),
    }


def _product_cases(ctx: SklyaninContext, scene: Scene) -> list:
    a = scene.arg_point("a")
    b = scene.arg_point("b")
    c = scene.arg_point("c")
    s2 = ctx.shift(b, -2)
    cases = []

    def add(family: str, variant: str, space, moved: str) -> None:
        cases.append(
            {
                "family": family,
                "variant": variant,
                "moved_point": moved,
                "space": rep.section_obj(space),
            }
        )

    add("ww", "generic", ctx.mul(ctx.w(b), ctx.w(c)), "")
    add(
        "ww", "degenerate",
        ctx.mul(ctx.w(b), ctx.w(s2)),
        "second factor moved to the double back-shift of the first",
    )
    add("ww-s1", "generic", ctx.mul_chain(ctx.w(b), ctx.w(c), ctx.s1()), "")
    add(
        "ww-s1", "degenerate",
        ctx.mul_chain(ctx.w(b), ctx.w(s2), ctx.s1()),
        "second factor moved to the double back-shift of the first",
    )
    add("v3-s1", "generic", ctx.mul(ctx.v(Divisor.of(a, b, c)), ctx.s1()), "")
    add(
        "v3-s1", "degenerate",
        ctx.mul(
            ctx.v(Divisor.of(a, b, ctx.third_point(a, b))), ctx.s1(),
        ),
        "third vanishing point moved onto the linear section through the first two",
    )
    add("wv", "generic", ctx.mul(ctx.w(a), ctx.v(Divisor.of(b, c))), "")
    add(
        "wv", "degenerate",
        ctx.mul(ctx.w(ctx.shift(b, 2)), ctx.v(Divisor.of(b, c))),
        "left factor moved to the double shift of a vanishing point",
    )
    add("vw", "generic", ctx.mul(ctx.v(Divisor.of(a, b)), ctx.w(c)), "")
    add(
        "vw", "degenerate",
        ctx.mul(ctx.v(Divisor.of(a, b)), ctx.w(ctx.shift(a, -1))),
        "right factor moved to the back-shift of a vanishing point",
    )
    return cases


def _cmd_product_table(scene: Scene) -> dict:
    ctx = scene.sklyanin_context()
    return {"cases": _product_cases(ctx, scene)}


_HANDLERS: dict[str, Callable[[Scene], dict]] = {
    "hilbmatrix": _cmd_hilbmatrix,
    "hexagon": _cmd_hexagon,
    "cremona": _cmd_cremona,
    "recognize": _cmd_recognize,
    "quadric": _cmd_quadric,
    "zalg-normalize": _cmd_zalg_normalize,
    "zalg-solve": _cmd_zalg_solve,
    "product-table": _cmd_product_table,
}


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nckit",
        description="Exact divisor and Hilbert-series calculus for "
        "noncommutative surfaces.",
        epilog="NCKIT_SEED is read but ignored; every command is exact and "
        "deterministic.",
    )
    parser.add_argument("command", choices=COMMANDS, help="pipeline to run")
    parser.add_argument("scene", help="path to a TOML scene file")
    parser.add_argument(
        "--report", metavar="PATH", default=None,
        help="write the report here instead of stdout",
    )
    parser.add_argument(
        "--format", choices=("json", "text"), default=None,
        help="report format (default: the scene's report_format, else json)",
    )
    parser.add_argument(
        "--series-terms", type=int, default=None, metavar="N",
        help="series coefficients listed in reports (default: scene option, else 12)",
    )
    return parser


def main(argv: Optional[list] = None) -> int:
    os.environ.get("NCKIT_SEED")  # reserved; deliberately unused
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        scene = parse_scene(ns.scene)
    except InputError as exc:
        print(f"nckit: {exc}", file=sys.stderr)
        return 1

    if scene.command is not None and scene.command != ns.command:
        print(
            f"nckit: scene declares command {scene.command!r} "
            f"but {ns.command!r} was requested",
            file=sys.stderr,
        )
        return 1
    if ns.series_terms is not None:
        if ns.series_terms < 1:
            print("nckit: --series-terms must be positive", file=sys.stderr)
            return 1
        scene = replace(scene, options=replace(scene.options, series_terms=ns.series_terms))
    fmt = ns.format or scene.options.report_format

    report: dict = {"command": ns.command}
    try:
        payload = _HANDLERS[ns.command](scene)
    except CheckFailed as exc:
        report["verdict"] = "failed"
        report["first_failed_check"] = exc.check
        report["detail"] = exc.detail
        _emit(rep.render(report, fmt), ns.report)
        return 2
    except (InputError, NckitError) as exc:
        print(f"nckit: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"nckit: {exc}", file=sys.stderr)
        return 1
    report["verdict"] = "success"
    report.update(payload)
    try:
        _emit(rep.render(report, fmt), ns.report)
    except OSError as exc:
        print(f"nckit: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
