"""Command-line front end.

Subcommands::

    csdiscord validate STATE.json
    csdiscord transform STATE.json --to x|cs|cs-params|x-params --out OUT.json
    csdiscord state --family nanopore --N 20 --beta 1 --a 1 --t 0.3 --out OUT.json
    csdiscord discord (--state STATE.json | --family F ...) --method both
    csdiscord sweep --family nanopore --sweep at --from 0 --to 6 --points 241 --out fig1.csv

Failures exit with status 1 and print one JSON line prefixed ``error:`` on
stderr.
"""
import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import qmat
from .discord import analytic_discord
from .errors import CSDiscordError, ParseError
from .localops import cs_to_x_params, hadamard_transform
from .models import (
    NanoporeSettings,
    PseudopureSettings,
    XxzDmCouplings,
    gibbs_state,
    nanopore_correlations,
    nanopore_state,
    pseudopure_state,
    xxz_dm_hamiltonian,
)
from .oracle import OracleSettings, discord_numeric
from .states import (
    cs_violation,
    extract_cs,
    extract_x,
    load_matrix,
    params_to_json,
    save_state,
    state_to_json,
    validate_density,
    x_violation,
)

FAMILIES = ("nanopore", "xxz-dm", "pseudopure", "file")

# family -> parameters it accepts, with defaults
FAMILY_PARAMS = {
    "nanopore": {"N": 20, "beta": 1.0, "a": 1.0, "t": 0.0},
    "xxz-dm": {"J": 1.0, "Jz": 1.0, "Dx": 0.0, "beta": 1.0},
    "pseudopure": {"alpha": 1.0, "b": 0.0},
    "file": {"alpha": 1.0},
}
# derived sweep variables
SWEEP_ALIASES = {"nanopore": {"at"}}
PARAM_FLAGS = ("N", "beta", "a", "t", "at", "J", "Jz", "Dx", "alpha", "b")


class UsageError(CSDiscordError):
    pass


def _fail(exc, code=1):
    info = {"error": type(exc).__name__, "message": str(exc)}
    for attr in ("residual", "index", "eigenvalue"):
        if getattr(exc, attr, None) is not None:
            info[attr] = getattr(exc, attr)
    print("error: " + json.dumps(info), file=sys.stderr)
    return code


def _fmt(v):
    if isinstance(v, str):
        return v
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return "nan"
    return format(float(v), ".17g")


# ---- parameter handling ---------------------------------------------------

def _given_params(args):
    return {k: getattr(args, k) for k in PARAM_FLAGS if getattr(args, k, None) is not None}


def _check_params(family, given, sweep=None):
    allowed = set(FAMILY_PARAMS[family]) | SWEEP_ALIASES.get(family, set())
    bad = sorted(set(given) - allowed)
    if bad:
        flags = ", ".join("--" + b for b in bad)
        raise UsageError(f"{flags} not used by family '{family}' (allowed: {sorted(allowed)})")
    if sweep is not None:
        if sweep not in allowed:
            raise UsageError(f"cannot sweep '{sweep}' for family '{family}' (choose from {sorted(allowed)})")
        if sweep in given:
            raise UsageError(f"swept parameter '{sweep}' must not also be fixed")
    if family == "nanopore" and "at" in given and "t" in given:
        raise UsageError("give either --t or --at, not both")


def _family_state(family, params, state_path=None):
    """Build the density matrix for one parameter point."""
    p = dict(FAMILY_PARAMS[family])
    p.update(params)
    if family == "nanopore":
        a = float(p["a"])
        t = float(p["at"]) / a if "at" in p else float(p["t"])
        n = p["N"]
        if float(n) != int(float(n)):
            raise UsageError(f"--N must be an integer, got {n}")
        s = NanoporeSettings(int(float(n)), a, t, float(p["beta"]))
        return nanopore_state(*nanopore_correlations(s))
    if family == "xxz-dm":
        c = XxzDmCouplings(float(p["J"]), float(p["Jz"]), float(p["Dx"]), float(p["beta"]))
        return gibbs_state(xxz_dm_hamiltonian(c), c.beta)
    if family == "pseudopure":
        b = complex(p["b"])
        a2 = 0.5 - abs(b) ** 2
        if a2 < 0.0:
            raise UsageError(f"|b|^2 = {abs(b) ** 2} exceeds 1/2")
        return pseudopure_state(PseudopureSettings(float(p["alpha"]), math.sqrt(a2), b))
    if family == "file":
        if state_path is None:
            raise UsageError("family 'file' needs --state PATH")
        rho = np.asarray(validate_density(load_matrix(state_path)))
        alpha = float(p["alpha"])
        if not 0.0 <= alpha <= 1.0:
            raise UsageError(f"--alpha must lie in [0, 1], got {alpha}")
        return validate_density(alpha * rho + 0.25 * (1.0 - alpha) * np.eye(4))
    raise UsageError(f"unknown family {family!r}")


def _discord_record(rho, method, measured, settings):
    rec = {}
    if method in ("analytic", "both"):
        try:
            rec.update(analytic_discord(rho).as_dict())
        except CSDiscordError as exc:
            if method == "analytic":
                raise
            rec["analytic_error"] = f"{type(exc).__name__}: {exc}"
    if method in ("oracle", "both"):
        res = discord_numeric(rho, settings, measured)
        if method == "oracle":
            rec.update(res.as_dict())
        else:
            rec["Q_oracle"] = res.q
            if "Q" in rec:
                rec["gap"] = rec["Q"] - res.q
    return rec


# ---- subcommands ----------------------------------------------------------

def cmd_validate(args, out=None):
    out = out or sys.stdout
    m = load_matrix(args.path)
    herm, _ = qmat.hermiticity_residual(m)
    trace = complex(np.trace(m))
    print(f"hermiticity_residual: {herm:.3e}", file=out)
    print(f"trace_residual: {abs(trace - 1.0):.3e}", file=out)
    rho = validate_density(m)
    cs, _ = cs_violation(rho)
    xv, _ = x_violation(rho)
    print(f"min_eigenvalue: {rho.eigenvalues[0]:.6e}", file=out)
    print(f"cs_residual: {cs:.3e}", file=out)
    print(f"x_residual: {xv:.3e}", file=out)
    tol = args.tol
    print("valid; {}; {}".format("CS" if cs <= tol else "not CS", "X" if xv <= tol else "not X"), file=out)
    return 0


def cmd_transform(args, out=None):
    out = out or sys.stdout
    rho = validate_density(load_matrix(args.path))
    if args.to == "x":
        doc = state_to_json(hadamard_transform(rho))
    elif args.to == "cs":
        extract_x(rho, args.tol)
        doc = state_to_json(hadamard_transform(rho))
    elif args.to == "cs-params":
        doc = params_to_json(extract_cs(rho, args.tol))
    else:
        doc = params_to_json(cs_to_x_params(extract_cs(rho, args.tol)))
    text = json.dumps(doc, indent=1)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)
    return 0


def cmd_state(args, out=None):
    out = out or sys.stdout
    given = _given_params(args)
    _check_params(args.family, given)
    rho = _family_state(args.family, given, args.state)
    if args.out:
        save_state(rho, args.out)
    else:
        print(json.dumps(state_to_json(rho), indent=1), file=out)
    return 0


def cmd_discord(args, out=None):
    out = out or sys.stdout
    given = _given_params(args)
    if args.family is None:
        if args.state is None:
            raise UsageError("give --state PATH or --family")
        if given:
            raise UsageError("model parameters need --family")
        rho = validate_density(load_matrix(args.state))
    else:
        _check_params(args.family, given)
        rho = _family_state(args.family, given, args.state)
    rec = _discord_record(rho, args.method, args.measured, OracleSettings())
    print(json.dumps(rec), file=out)
    return 0


def sweep_rows(family, sweep, lo, hi, points, fixed, method="analytic", measured="second",
               state_path=None, settings=None, warn=None):
    """Compute sweep rows as lists of values, in grid order."""
    if not lo < hi:
        raise UsageError(f"--from must be below --to ({lo} >= {hi})")
    if points < 2:
        raise UsageError("--points must be at least 2")
    _check_params(family, fixed, sweep)
    settings = settings or OracleSettings()
    rows = []
    for x in np.linspace(lo, hi, points):
        x = float(x)
        params = dict(fixed)
        params[sweep] = x
        row = [x] + [math.nan] * 6 + ([math.nan] if method == "both" else [])
        try:
            rho = _family_state(family, params, state_path)
            rec = _discord_record(rho, method, measured, settings)
            if "Q" in rec:
                row[1:7] = [rec["Q"], rec["Q1"], rec["Q2"], rec["branch"], rec["S"], rec["Sr"]]
            if method == "both":
                row[7] = rec["Q_oracle"]
            if "analytic_error" in rec and warn:
                warn(f"{sweep}={x!r}: {rec['analytic_error']}")
        except CSDiscordError as exc:
            if warn:
                warn(f"{sweep}={x!r}: {type(exc).__name__}: {exc}")
        rows.append(row)
    return rows


def write_csv(rows, fh, with_oracle):
    header = ["param", "Q", "Q1", "Q2", "branch", "S", "Sr"] + (["Q_oracle"] if with_oracle else [])
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row])


def cmd_sweep(args, out=None):
    out = out or sys.stdout
    fixed = _given_params(args)
    rows = sweep_rows(
        args.family, args.sweep, args.lo, args.hi, args.points, fixed,
        method=args.method, measured=args.measured, state_path=args.state,
        settings=OracleSettings(),
        warn=lambda msg: print(f"note: {msg}", file=sys.stderr),
    )
    if args.out and args.out != "-":
        with open(args.out, "w", newline="") as fh:
            write_csv(rows, fh, args.method == "both")
    else:
        buf = io.StringIO()
        write_csv(rows, buf, args.method == "both")
        out.write(buf.getvalue())
    return 0


# ---- argument parsing -----------------------------------------------------

def _add_model_flags(p):
    g = p.add_argument_group("model parameters")
    g.add_argument("--N", type=float, help="nanopore particle count")
    g.add_argument("--beta", type=float, help="inverse temperature")
    g.add_argument("--a", type=float, help="nanopore coupling constant")
    g.add_argument("--t", type=float, help="nanopore time")
    g.add_argument("--at", type=float, help="nanopore dimensionless time a*t")
    g.add_argument("--J", type=float, help="XXZ-DM XY coupling")
    g.add_argument("--Jz", type=float, help="XXZ-DM Ising coupling")
    g.add_argument("--Dx", type=float, help="XXZ-DM Dzyaloshinsky component")
    g.add_argument("--alpha", type=float, help="pseudopure / file mixing weight")
    g.add_argument("--b", type=complex, help="pseudopure amplitude b (a = sqrt(1/2 - |b|^2))")


def _add_method_flags(p, default):
    p.add_argument("--method", choices=("analytic", "oracle", "both"), default=default)
    p.add_argument("--measured", choices=("first", "second"), default="second",
                   help="qubit measured by the oracle")


def build_parser():
    parser = argparse.ArgumentParser(prog="csdiscord", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a state file and classify its pattern")
    p.add_argument("path")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("transform", help="apply H(x)H or extract parameters")
    p.add_argument("path")
    p.add_argument("--to", choices=("x", "cs", "cs-params", "x-params"), required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("state", help="write a model state file")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--state", help="input state for --family file")
    p.add_argument("--out")
    _add_model_flags(p)
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("discord", help="discord of one state")
    p.add_argument("--state", help="JSON state file")
    p.add_argument("--family", choices=FAMILIES)
    _add_model_flags(p)
    _add_method_flags(p, "both")
    p.set_defaults(func=cmd_discord)

    p = sub.add_parser("sweep", help="discord along a parameter grid, as CSV")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--state", help="input state for --family file")
    p.add_argument("--sweep", required=True, help="name of the swept parameter")
    p.add_argument("--from", dest="lo", type=float, required=True)
    p.add_argument("--to", dest="hi", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--out", help="CSV path (default stdout)")
    _add_model_flags(p)
    _add_method_flags(p, "analytic")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CSDiscordError as exc:
        return _fail(exc)
    except OSError as exc:
        return _fail(ParseError(f"{exc.filename}: {exc.strerror}"))
    except json.JSONDecodeError as exc:
        return _fail(ParseError(str(exc)))


if __name__ == "__main__":
    sys.exit(main())
