"""Command-line front end: build, verify, eval, transform, report.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 construction failure (an exact identity missed; the identity is named
on stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import mrabuild as mb
from . import refine as rf
from . import xform
from .errors import ConstructionError, InvalidParameterError
from .exactnum import scalar_str
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_CONSTRUCTION = 3

#: identity families certified on every successful build
VERIFIED_IDENTITIES = (
    "rhr", "rhatr", "fefo", "rep1", "rmra", "newint", "ortoramp",
    "smyphi", "orthogonality", "shift-orthogonality", "refl", "crefine",
    "zeroco", "wavelet-orthogonality", "wavelet-symmetry", "psi1",
    "window-gram",
)


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Validated invocation parameters shared by the artifact commands."""

    command: str
    n: int
    family: str = "generic"
    out: str | None = None
    fmt: str = "json"
    tolerance: float = 1e-9
    verbosity: int = 0

    def __post_init__(self):
        if self.tolerance <= 0:
            raise UsageError("tolerance must be positive")
        if self.family not in mb.FAMILIES:
            raise UsageError(f"unknown family {self.family!r}")
        try:
            mb._family_indices(self.n, self.family)
        except (InvalidParameterError, ValueError) as exc:
            raise UsageError(str(exc)) from exc


def _parse_range(text: str) -> tuple[int, int]:
    """Inclusive integer range 'a..b', or a single 'a'."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _parse_grid(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def artifact_json(rs: rf.RefinementSet) -> dict:
    phi = rs.phi
    return {
        "n": rs.n,
        "family": rs.family,
        "phi": {
            "entries": [e.to_json() for e in phi.entries],
            "norms_sq": [scalar_str(x) for x in phi.norms_sq],
            "symmetry": [
                {"axis": scalar_str(s.axis), "parity": s.parity} for s in phi.symmetry
            ],
        },
        "psi": {
            "entries": [e.to_json() for e in rs.psi],
            "norms_sq": [scalar_str(x) for x in rs.psi_norms_sq],
            "kinds": list(rs.psi_kinds),
        },
        "gram": [scalar_str(x) for x in rs.gram],
        "C": {str(i): rf.matrix_json(rs.c[i]) for i in rf.SHIFTS},
        "D": {str(i): rf.matrix_json(rs.d[i]) for i in rf.SHIFTS},
        "verification": {"passed": True, "identities": list(VERIFIED_IDENTITIES)},
    }


def _write_text(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_build(args) -> int:
    try:
        config = RunConfig(command="build", n=args.n, family=args.family,
                           out=args.out, fmt=args.format)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        rs = rf.build_refinement(config.n, config.family)
    except ConstructionError as exc:
        print(f"construction failure: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    _write_text(config.out, json.dumps(artifact_json(rs), indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r} (choose from {SUITES})",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        lo, hi = _parse_range(args.n)
        if args.tolerance <= 0:
            raise UsageError("tolerance must be positive")
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = run_suite(args.suite, lo, hi, tol=args.tolerance, seed=args.seed,
                       family=args.family)
    for c in report.checks:
        status = "pass" if c.passed else "FAIL"
        line = f"[{status}] {c.identity:24s} {c.params}"
        if c.detail and (args.verbose or not c.passed):
            line += f"  ({c.detail})"
        print(line)
    summary = {
        "suite": args.suite,
        "n": [lo, hi],
        "passed": report.passed,
        "checks": [c.as_dict() for c in report.checks],
    }
    if args.out:
        _write_text(args.out, json.dumps(summary, indent=2) + "\n")
    print(f"{'all passed' if report.passed else 'FAILURES'}: "
          f"{sum(c.passed for c in report.checks)}/{len(report.checks)} checks")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAIL


def _rows_to_output(rows: list[dict], fmt: str, out: str | None):
    if fmt == "json":
        _write_text(out, json.dumps(rows, indent=2) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()) if rows else [])
        writer.writeheader()
        writer.writerows(rows)
        _write_text(out, buf.getvalue())


def cmd_eval(args) -> int:
    try:
        if args.eps is not None and args.eps not in (0, 1):
            raise UsageError("eps must be 0 or 1")
        if args.tolerance <= 0:
            raise UsageError("tolerance must be positive")
        rows: list[dict] = []
        if args.transform == "mellin":
            if args.z is None:
                raise UsageError("mellin requires --z a..b (integers)")
            lo, hi = _parse_range(args.z)
            if lo < 1:
                raise UsageError("mellin moments need z >= 1")
            eps = args.eps or 0
            for z in range(lo, hi + 1):
                value = mb.mellin_f_closed(eps, args.m, args.n, z)
                oracle = mb.f_closed(eps, args.m, args.n).restrict(0, 1).mellin_integer_moment(z)
                rows.append({
                    "z": z,
                    "value": scalar_str(value),
                    "oracle": scalar_str(oracle),
                    "difference": scalar_str(value - oracle),
                })
        else:
            if args.w is None:
                raise UsageError("fourier transforms require --w w1,w2,...")
            grid = _parse_grid(args.w)
            for w in grid:
                if args.transform == "fourier-phi":
                    # --n is the basis-function degree 2k+eps
                    eps = args.eps if args.eps is not None else args.n % 2
                    if (args.n - eps) % 2 or (args.n - eps) // 2 < 1:
                        raise UsageError(
                            "fourier-phi needs --n >= 2 with matching --eps parity"
                        )
                    res = xform.fourier_phi((args.n - eps) // 2, eps, w, args.tolerance)
                    f = mb.interior_basis(args.n)[-1]
                elif args.transform == "fourier-l0":
                    res = xform.fourier_l0(args.n, w, args.tolerance)
                    f = mb.l0(args.n)
                elif args.transform == "fourier-u":
                    eps = args.eps or 0
                    res = xform.fourier_u(eps, args.m, args.n, w, args.tolerance)
                    f = mb.u_function(2 * args.n + 1 + eps, 2 * args.n - 2 * args.m).value
                else:
                    raise UsageError(f"unknown transform {args.transform!r}")
                oracle = xform.quadrature_oracle(f, w, args.tolerance)
                rows.append({
                    "w": w,
                    "value_re": res.value.real,
                    "value_im": res.value.imag,
                    "oracle_re": oracle.real,
                    "oracle_im": oracle.imag,
                    "abs_difference": abs(res.value - oracle),
                })
    except (UsageError, InvalidParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _rows_to_output(rows, args.format, args.out)
    return EXIT_OK


def cmd_transform(args) -> int:
    import numpy as np

    try:
        config = RunConfig(command="transform", n=args.n, family=args.family)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        rs = rf.build_refinement(config.n, config.family)
    except ConstructionError as exc:
        print(f"construction failure: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    with open(args.infile) as fh:
        payload = json.load(fh)
    try:
        if args.inverse:
            data = rf.transform(
                rs,
                {"approx": payload["approx"], "details": payload["details"]},
                "synthesize",
                args.levels,
            )
            out = {"coeffs": data.tolist()}
        else:
            coeffs = payload["coeffs"]
            result = rf.transform(rs, np.array(coeffs, dtype=float).reshape(len(coeffs), -1)
                                  if coeffs else np.zeros((0, config.n + 1)),
                                  "analyze", args.levels)
            out = {
                "approx": result["approx"].tolist(),
                "details": [d.tolist() for d in result["details"]],
            }
            if args.roundtrip:
                back = rf.transform(rs, result, "synthesize", args.levels)
                err = float(np.abs(back - np.asarray(coeffs, dtype=float).reshape(len(coeffs), -1)).max()) if coeffs else 0.0
                out["roundtrip_max_error"] = err
                print(f"round-trip max error: {err:.3e}")
    except (rf.ShapeError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write_text(args.out, json.dumps(out, indent=2) + "\n")
    return EXIT_OK


def cmd_report(args) -> int:
    try:
        config = RunConfig(command="report", n=args.n, family=args.family)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        rs = rf.build_refinement(config.n, config.family)
    except ConstructionError as exc:
        print(f"construction failure: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    from .report import write_report

    paths = write_report(rs, args.out_dir, samples=args.samples)
    for p in paths:
        print(p)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pwmra",
        description="Exact piecewise-polynomial orthogonal multiwavelet toolkit",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct and export a verified scaling/wavelet system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=mb.FAMILIES, default="generic")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="run identity suites over an n range")
    p.add_argument("--n", default="3..5", help="range a..b (inclusive) or single n")
    p.add_argument("--suite", default="all")
    p.add_argument("--family", choices=mb.FAMILIES, default=None,
                   help="restrict the mra suite to one coefficient family")
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="tabulate transform values against oracles")
    p.add_argument("--transform", required=True,
                   choices=("mellin", "fourier-phi", "fourier-l0", "fourier-u"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eps", type=int, default=None)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--z", default=None, help="integer range a..b for mellin")
    p.add_argument("--w", default=None, help="comma-separated frequencies")
    p.add_argument("--tolerance", type=float, default=1e-12)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("transform", help="analyze/synthesize coefficient streams")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=mb.FAMILIES, default="generic")
    p.add_argument("--levels", type=int, default=1)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--roundtrip", action="store_true")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("report", help="render figures and delimited samples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=mb.FAMILIES, default="generic")
    p.add_argument("--out-dir", default="report")
    p.add_argument("--samples", type=int, default=400)
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
