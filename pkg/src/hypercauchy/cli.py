"""Command-line interface.

Input files are JSON, complex numbers are two-element arrays [re, im] (plain
numbers are accepted for real values):

  spec    {"m": 4, "n": 1, "p": 3, "gamma": [0.333, 0], "A": [-0.5, 0], "B": [0, 0]}
          (an ``analyze`` report is accepted too: its "spec" entry is used)
  grid    {"t": [[re, im], ...], "x": [[re, im], ...]}   tensor product, t-major
          or {"points": [[t_re, t_im, x_re, x_im], ...]}
  data    {"coefficients": [[re, im], ...], "radius": 1.0}   radius may be "inf"

Grids are written as CSV with columns t_re,t_im,x_re,x_im,u_re,u_im,status;
a point that cannot be evaluated gets nan values and the error name as status.

Exit codes: 0 success, 2 input error, 3 mathematical degeneracy, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import warnings
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path

from . import continuation, fixtures
from .classify import classify
from .errors import BasepointInvalid, DegenerateParams, HyperCauchyError, PoleError, UniquenessWarning
from .problem import ProblemSpec, Root, alpha_roots, degeneracy_flags, derive_params
from .solution import SERIES_TOL, build_monomial, build_series, eval_series
from .specfun import is_integer
from .verify import residual

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_NUMERICAL = 4

CSV_HEADER = ("t_re", "t_im", "x_re", "x_im", "u_re", "u_im", "status")


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    spec_path: Path | None
    options: dict = field(default_factory=dict)


def _cplx(v) -> complex:
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2 and all(
            isinstance(e, (int, float)) and not isinstance(e, bool) for e in v):
        return complex(v[0], v[1])
    raise InputError(f"expected a number or [re, im], got {v!r}")


def _pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _read_json(path: Path) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    return doc


def parse_spec(doc: dict) -> ProblemSpec:
    if "spec" in doc and isinstance(doc["spec"], dict):
        doc = doc["spec"]
    try:
        ints = {}
        for k in ("m", "n", "p"):
            v = doc[k]
            if isinstance(v, bool) or not isinstance(v, (int, float)) or int(v) != v:
                raise InputError(f"{k} must be an integer, got {v!r}")
            ints[k] = int(v)
        return ProblemSpec(ints["m"], ints["n"], ints["p"],
                           _cplx(doc["gamma"]), _cplx(doc["A"]), _cplx(doc["B"]))
    except KeyError as exc:
        raise InputError(f"spec is missing field {exc}") from exc
    except (ValueError, TypeError) as exc:
        raise InputError(f"invalid spec: {exc}") from exc


def spec_to_json(spec: ProblemSpec) -> dict:
    return {"m": spec.m, "n": spec.n, "p": spec.p,
            "gamma": _pair(spec.gamma), "A": _pair(spec.A), "B": _pair(spec.B)}


def load_spec(path: Path) -> ProblemSpec:
    return parse_spec(_read_json(path))


def parse_points(doc: dict) -> list[tuple[complex, complex]]:
    if "points" in doc:
        pts = []
        for row in doc["points"]:
            if not isinstance(row, (list, tuple)) or len(row) != 4:
                raise InputError(f"a point needs [t_re, t_im, x_re, x_im], got {row!r}")
            t_re, t_im, x_re, x_im = (float(v) for v in row)
            pts.append((complex(t_re, t_im), complex(x_re, x_im)))
        return pts
    if "t" in doc and "x" in doc:
        ts = [_cplx(v) for v in doc["t"]]
        xs = [_cplx(v) for v in doc["x"]]
        return [(t, x) for t in ts for x in xs]
    raise InputError('grid needs either "points" or both "t" and "x"')


def parse_data(doc: dict) -> tuple[list[complex], float]:
    if "coefficients" not in doc:
        raise InputError('data needs "coefficients"')
    coefs = [_cplx(v) for v in doc["coefficients"]]
    if not coefs:
        raise InputError("data has no coefficients")
    radius = doc.get("radius", "inf")
    if radius == "inf":
        radius = math.inf
    if isinstance(radius, bool) or not isinstance(radius, (int, float)) or not radius > 0:
        raise InputError(f"radius must be positive or \"inf\", got {radius!r}")
    return coefs, float(radius)


def _write_json(path: Path, doc: dict) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _write_csv(path: Path, rows: Sequence[tuple]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in rows:
            w.writerow([repr(v) if isinstance(v, float) else v for v in r])


def _grid_rows(f, points) -> tuple[list[tuple], int]:
    rows, ok = [], 0
    for t, x in points:
        try:
            u = complex(f(t, x))
            if not (math.isfinite(u.real) and math.isfinite(u.imag)):
                raise ArithmeticError("non-finite value")
            status = "ok"
            ok += 1
        except (HyperCauchyError, ArithmeticError) as exc:
            u = complex(math.nan, math.nan)
            status = type(exc).__name__
        rows.append((t.real, t.imag, x.real, x.imag, u.real, u.imag, status))
    return rows, ok


def cmd_analyze(cfg: RunConfig) -> int:
    spec = load_spec(cfg.spec_path)
    l = cfg.options["l"]
    ap, am = alpha_roots(spec.A, spec.B)
    report = {"spec": spec_to_json(spec), "l": l, "q": spec.q,
              "alpha": {"plus": _pair(ap), "minus": _pair(am)}, "roots": {}}
    if is_integer(spec.gamma) and round(spec.gamma.real) <= -1:
        report["warning"] = {
            "message": "uniqueness fails: null solutions t^(1-gamma) V with L_(2-gamma) V = 0",
            "exponent": 1 - round(spec.gamma.real),
        }
    roots = [Root(cfg.options["root"])] if cfg.options.get("root") else list(Root)
    status = EXIT_OK
    for root in roots:
        dp = derive_params(spec, l, root)
        entry = {"a": _pair(dp.a), "b": _pair(dp.b), "c": _pair(dp.c)}
        flags = degeneracy_flags(spec, dp)
        entry["flags"] = {k: getattr(flags, k) for k in flags.__dataclass_fields__}
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", UniquenessWarning)
                u = build_monomial(spec, l, root)
            entry["classification"] = classify(u).as_dict()
        except (DegenerateParams, PoleError) as exc:
            entry["classification"] = None
            entry["error"] = str(exc)
            status = EXIT_DEGENERATE
        report["roots"][root.value] = entry
    _write_json(cfg.options["out"], report)
    return status


def cmd_eval(cfg: RunConfig) -> int:
    spec = load_spec(cfg.spec_path)
    points = parse_points(_read_json(cfg.options["grid"]))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UniquenessWarning)
        u = build_monomial(spec, cfg.options["l"], cfg.options.get("root") or "plus")
    rows, ok = _grid_rows(u, points)
    _write_csv(cfg.options["out"], rows)
    return EXIT_OK if ok else EXIT_NUMERICAL


def cmd_series(cfg: RunConfig) -> int:
    spec = load_spec(cfg.spec_path)
    coefs, radius = parse_data(_read_json(cfg.options["data"]))
    points = parse_points(_read_json(cfg.options["grid"]))
    s = build_series(spec, coefs, radius, root=cfg.options.get("root") or "plus")
    tol = cfg.options.get("tol") or SERIES_TOL
    rows, ok = _grid_rows(lambda t, x: eval_series(s, t, x, tol).value, points)
    _write_csv(cfg.options["out"], rows)
    return EXIT_OK if ok else EXIT_NUMERICAL


def cmd_monodromy(cfg: RunConfig) -> int:
    spec = load_spec(cfg.spec_path)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UniquenessWarning)
        u = build_monomial(spec, cfg.options["l"], cfg.options.get("root") or "plus")
    t, x = cfg.options["base"]
    loop = cfg.options["loop"]
    if loop == "k2":
        res = continuation.monodromy_K2(u, t, x)
    elif loop == "k1":
        res = continuation.monodromy_K1(u, t, x)
    else:
        z = u.z(t, x)
        before = complex(x) ** u.l * continuation.ghf_eval(u.params, z)
        after = complex(x) ** u.l * continuation.continue_ode(u.params, continuation.trivial_loop(z))
        res = continuation.MonodromyResult(z, before, after, {"U": before}, {"U": 1 + 0j}, after)
    mult = res.multiplier
    report = {
        "spec": spec_to_json(spec), "l": u.l, "loop": loop, "base": [_pair(t), _pair(x)],
        "z": _pair(res.z),
        "value_before": _pair(res.value_before),
        "value_after": _pair(res.value_after),
        "multiplier": None if mult is None else _pair(mult),
        "multiplier_abs": None if mult is None else abs(mult),
        "components": {k: _pair(v) for k, v in res.components.items()},
        "component_multipliers": {k: _pair(v) for k, v in res.multipliers.items()},
        "oracle_value": None if res.oracle_value is None else _pair(res.oracle_value),
        "oracle_discrepancy": res.oracle_discrepancy,
    }
    _write_json(cfg.options["out"], report)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    spec = load_spec(cfg.spec_path)
    points = parse_points(_read_json(cfg.options["points"]))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UniquenessWarning)
        u = build_monomial(spec, cfg.options["l"], cfg.options.get("root") or "plus")
    tol = cfg.options.get("tol") or 1e-6
    reports, worst = [], 0.0
    for t, x in points:
        try:
            r = residual(u, spec, t, x)
        except HyperCauchyError as exc:
            reports.append({"point": [_pair(t), _pair(x)], "error": type(exc).__name__, "message": str(exc)})
            continue
        worst = max(worst, r.relative)
        reports.append({"point": [_pair(t), _pair(x)], "residual": _pair(r.residual),
                        "scale": r.scale, "relative": r.relative,
                        "terms": [_pair(v) for v in r.terms]})
    ok = sum("relative" in r for r in reports)
    report = {"spec": spec_to_json(spec), "l": u.l, "points": reports,
              "max_relative": worst if ok else None, "tolerance": tol,
              "passed": bool(ok) and worst <= tol}
    _write_json(cfg.options["out"], report)
    return EXIT_OK if ok else EXIT_NUMERICAL


def cmd_fixtures(cfg: RunConfig) -> int:
    _write_json(cfg.options["out"], fixtures.fixture_report())
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "eval": cmd_eval,
    "series": cmd_series,
    "monodromy": cmd_monodromy,
    "verify": cmd_verify,
    "fixtures": cmd_fixtures,
}


def _positive(s: str) -> float:
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {s}")
    return v


def _nonneg_int(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be a non-negative integer, got {s}")
    return v


def _basepoint(s: str) -> tuple[complex, complex]:
    try:
        t_re, t_im, x_re, x_im = (float(v) for v in s.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected "t_re,t_im,x_re,x_im", got {s!r}') from None
    return complex(t_re, t_im), complex(x_re, x_im)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypercauchy", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, data=False, grid=False, points=False):
        p.add_argument("--spec", type=Path, required=True, help="problem spec (JSON)")
        if data:
            p.add_argument("--data", type=Path, required=True, help="series coefficients (JSON)")
        else:
            p.add_argument("--l", type=_nonneg_int, required=True, help="monomial degree")
        p.add_argument("--root", choices=[r.value for r in Root], default=None)
        if grid:
            p.add_argument("--grid", type=Path, required=True, help="grid or point list (JSON)")
        if points:
            p.add_argument("--points", type=Path, required=True, help="grid or point list (JSON)")
        p.add_argument("--out", type=Path, required=True)

    common(sub.add_parser("analyze", help="parameters and classification report"))
    common(sub.add_parser("eval", help="evaluate U_l on a grid (CSV)"), grid=True)
    p = sub.add_parser("series", help="evaluate sum a_l U_l on a grid (CSV)")
    common(p, data=True, grid=True)
    p.add_argument("--tol", type=_positive, default=None, help=f"tail tolerance (default {SERIES_TOL})")
    p = sub.add_parser("monodromy", help="continue U_l around K1 or K2")
    common(p)
    p.add_argument("--base", type=_basepoint, required=True, help='"t_re,t_im,x_re,x_im"')
    p.add_argument("--loop", choices=("k1", "k2", "trivial"), required=True)
    p = sub.add_parser("verify", help="residual of U_l at given points")
    common(p, points=True)
    p.add_argument("--tol", type=_positive, default=None, help="pass threshold for max relative residual")
    p = sub.add_parser("fixtures", help="adjudicate the published worked problems")
    p.add_argument("--out", type=Path, required=True)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    opts = {k: v for k, v in vars(ns).items() if k not in ("command", "spec")}
    cfg = RunConfig(ns.command, getattr(ns, "spec", None), opts)
    try:
        return COMMANDS[cfg.command](cfg)
    except (InputError, BasepointInvalid) as exc:
        print(f"hypercauchy: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DegenerateParams, PoleError) as exc:
        print(f"hypercauchy: degenerate parameters: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except HyperCauchyError as exc:
        print(f"hypercauchy: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"hypercauchy: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
