"""Command-line interface: ``pdmwave potential|density|figures|validate``.

Exit codes: 0 success, 1 validation failure, 2 bad arguments, 3 domain
error, 4 I/O failure.  CSV files are written to a temporary file and renamed,
so a failed run never leaves a partial file.
"""

import argparse
import datetime
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import __version__
from . import analytic_swave as aw
from .errors import DomainError, PdmError, UnsupportedDimensionError
from .mass_models import parse_mass_spec
from .potentials import centrifugal, classify_qep, qep
from .report import figure_curves, density_curve, run_validation

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def fmt(x):
    return format(float(x), ".17g")


def _atomic_write(path, text):
    if path == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _csv(header, rows):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(v if isinstance(v, str) else fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _json(obj):
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=True) + "\n"


def _now():
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


def _sidecar_path(path):
    root, _ = os.path.splitext(path)
    return root + ".json"


def cmd_potential(args):
    try:
        profile = parse_mass_spec(args.mass)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not 0 < args.rmin < args.rmax:
        raise DomainError("need 0 < rmin < rmax")
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    r = np.geomspace(args.rmin, args.rmax, args.points)
    vq = np.atleast_1d(qep(args.dim, profile, r))
    vc = np.atleast_1d(centrifugal(args.dim, args.l, profile, r))
    verdict = classify_qep(args.dim, profile, args.rmin, args.rmax, max(args.points, 16)).verdict
    rows = [(a, b, c, verdict) for a, b, c in zip(r, vq, vc)]
    _atomic_write(args.out, _csv(("r", "v_qep", "v_centrifugal", "verdict"), rows))
    return EXIT_OK


def _near_boundary(dim, nu, margin=1e-2):
    lower = -1.0 / 3.0 if dim == 2 else -0.5
    return (1.0 - nu) < margin or (nu - lower) < margin


def cmd_density(args):
    if args.dim not in (2, 3):
        raise UnsupportedDimensionError(f"--dim must be 2 or 3, got {args.dim}")
    if args.points < 2 or not args.rmax > 0:
        raise UsageError("--points must be >= 2 and --rmax positive")
    t = aw.transform_from_nu(args.dim, args.nu, args.energy)
    sol = aw.bound_state(t)
    r, w, u = density_curve(args.dim, args.nu, args.energy, args.rmax, args.points)
    warnings = []
    if _near_boundary(args.dim, args.nu):
        warnings.append("nu is within 1e-2 of the edge of the admissible range")
    try:
        r_max, w_max = aw.density_maximum(t, sol)
        r_max, w_max = float(r_max), float(w_max)
    except PdmError as exc:
        r_max = w_max = None
        warnings.append(f"maximum search failed: {exc}")
    try:
        norm = float(aw.normalization_integral(sol))
    except PdmError as exc:
        norm = None
        warnings.append(f"normalisation quadrature failed: {exc}")
    sidecar = {
        "dimension": args.dim,
        "nu": t.nu,
        "alpha": t.alpha,
        "abs_energy": t.abs_energy,
        "r_max_location": r_max,
        "w_max": w_max,
        "normalization_integral": norm,
        "near_boundary": _near_boundary(args.dim, args.nu),
        "warnings": warnings,
        "tool_version": __version__,
        "generated_at": _now(),
    }
    _atomic_write(args.out, _csv(("r", "w", "u"), zip(r, w, u)))
    if args.out != "-":
        _atomic_write(_sidecar_path(args.out), _json(sidecar))
    else:
        sys.stderr.write(_json(sidecar))
    return EXIT_OK


def cmd_figures(args):
    os.makedirs(args.out_dir, exist_ok=True)
    curves = figure_curves()
    for c in curves:
        name = f"fig1_nu{c['nu']:g}.csv"
        _atomic_write(os.path.join(args.out_dir, name), _csv(("r", "w"), zip(c["r"], c["w"])))
    stacked = [(c["nu"], r, w) for c in curves for r, w in zip(c["r"], c["w"])]
    _atomic_write(os.path.join(args.out_dir, "fig2_cuts.csv"), _csv(("nu", "r", "w"), stacked))
    _atomic_write(
        os.path.join(args.out_dir, "fig_rmax_vs_nu.csv"),
        _csv(("nu", "r_max", "w_max"), [(c["nu"], c["r_max"], c["w_max"]) for c in curves]),
    )
    summary = {
        "abs_energy": 0.5,
        "curves": [
            {k: c[k] for k in ("nu", "alpha", "r_max", "w_max", "normalization_integral")}
            for c in curves
        ],
        "tool_version": __version__,
        "generated_at": _now(),
    }
    _atomic_write(os.path.join(args.out_dir, "figures_summary.json"), _json(summary))
    return EXIT_OK


def cmd_validate(args):
    report = run_validation()
    data = report.to_dict()
    data["generated_at"] = _now()
    _atomic_write(args.out, _json(data))
    s = report.summary
    print(
        f"validate: {s['cases']} cases, {s['identities']} identities, "
        f"{s['failures']} failures -> {'PASS' if s['pass'] else 'FAIL'}",
        file=sys.stderr,
    )
    return EXIT_OK if s["pass"] else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="pdmwave", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("potential", help="QEP and centrifugal term on a geometric grid")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--mass", required=True, help="power:ALPHA or const:MU0")
    sp.add_argument("--rmin", type=float, default=0.1)
    sp.add_argument("--rmax", type=float, default=10.0)
    sp.add_argument("--points", type=int, default=100)
    sp.add_argument("--l", type=int, default=0)
    sp.add_argument("--out", default="-")
    sp.set_defaults(func=cmd_potential)

    sd = sub.add_parser("density", help="normalised s-wave density W and u")
    sd.add_argument("--dim", type=int, required=True)
    sd.add_argument("--nu", type=float, required=True)
    sd.add_argument("--energy", type=float, default=0.5, help="|E|")
    sd.add_argument("--rmax", type=float, default=5.0)
    sd.add_argument("--points", type=int, default=500)
    sd.add_argument("--out", default="-")
    sd.set_defaults(func=cmd_density)

    sf = sub.add_parser("figures", help="data behind the density figures")
    sf.add_argument("--out-dir", dest="out_dir", default="figures")
    sf.set_defaults(func=cmd_figures)

    sv = sub.add_parser("validate", help="run the analytic-vs-numeric cross-checks")
    sv.add_argument("--out", default="validation_report.json")
    sv.set_defaults(func=cmd_validate)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"pdmwave: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, UnsupportedDimensionError) as exc:
        print(f"pdmwave: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"pdmwave: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
