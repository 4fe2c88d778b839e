"""Command-line frontend: evaluation, bound sweeps, Stokes profiles, terminants.

Every subcommand emits machine-readable rows (CSV with a header, or
JSON-lines) carrying the full input tuple, so any row can be re-run.
Numeric values are rendered with 17 significant digits, which round-trips
binary64 exactly.  Exit codes: 0 success, 2 domain/usage error, 3 accuracy
failure.
"""

from __future__ import annotations

import cmath
import json
import math
import sys
from typing import Optional

import click

from .bernoulli import series_coefficient
from .errors import AccuracyError, DomainError, RangeError
from .expansion import best_bound, bound_optimized, certified_eval, sector_factor
from .oracle import log_barnes_oracle, remainder_wide
from .terminant import (
    TerminantMethod,
    TruncationScheme,
    exp_improved_report,
    stokes_profile,
    terminant,
    terminant_erf_approx,
)

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_ACCURACY = 3


def _fmt(value: object) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _emit(rows: list[dict], fmt: str) -> None:
    if not rows:
        return
    if fmt == "csv":
        keys = list(rows[0].keys())
        click.echo(",".join(keys))
        for row in rows:
            click.echo(",".join(_fmt(row[k]) for k in keys))
    else:
        for row in rows:
            click.echo(json.dumps(row))


def _parse_z(
    z_re: Optional[float],
    z_im: Optional[float],
    z_abs: Optional[float],
    z_arg: Optional[float],
    z_arg_pi: Optional[float],
) -> complex:
    if z_re is not None:
        return complex(z_re, z_im or 0.0)
    if z_abs is not None:
        if z_arg_pi is not None:
            arg = z_arg_pi * math.pi
        else:
            arg = z_arg or 0.0
        return z_abs * cmath.exp(1j * arg)
    raise DomainError("specify z via --z-re/--z-im or --z-abs/--z-arg")


def _run(body) -> None:
    try:
        body()
    except (DomainError, RangeError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DOMAIN)
    except AccuracyError as exc:
        click.echo(f"accuracy failure: {exc}", err=True)
        sys.exit(EXIT_ACCURACY)


@click.group()
@click.version_option(version="0.1.0", prog_name="barnesg")
def main() -> None:
    """Barnes G-function asymptotics: certified evaluation and diagnostics."""


@main.command("eval")
@click.option("--z-re", type=float, default=None, help="Re z")
@click.option("--z-im", type=float, default=None, help="Im z")
@click.option("--z-abs", type=float, default=None, help="|z|")
@click.option("--z-arg", type=float, default=None, help="arg z in radians")
@click.option("--z-arg-pi", type=float, default=None, help="arg z in multiples of pi")
@click.option("--method", type=click.Choice(["asym", "oracle", "hyper"]), required=True)
@click.option("--n", "n_trunc", type=int, default=None, help="truncation index (asym)")
@click.option("--k-max", type=int, default=None, help="terminant sum cutoff (hyper)")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
def cmd_eval(z_re, z_im, z_abs, z_arg, z_arg_pi, method, n_trunc, k_max, fmt) -> None:
    """Evaluate log G(z+1) by the chosen route."""

    def body() -> None:
        z = _parse_z(z_re, z_im, z_abs, z_arg, z_arg_pi)
        if method == "asym":
            res = certified_eval(z, n_trunc)
            value, err, err_kind, n_used = (
                res.value,
                res.bound,
                res.bound_kind.value,
                res.n_trunc,
            )
        elif method == "oracle":
            out = log_barnes_oracle(z)
            value, err, err_kind, n_used = out.value, out.est_error, "est_error", 8
        else:
            scheme = TruncationScheme.optimal(k_max) if k_max else TruncationScheme.optimal()
            value, err = exp_improved_report(z, scheme)
            err_kind, n_used = "est_error", scheme.k_max
        _emit(
            [
                {
                    "z_re": z.real,
                    "z_im": z.imag,
                    "method": method,
                    "value_re": value.real,
                    "value_im": value.imag,
                    "err": err,
                    "err_kind": err_kind,
                    "n_used": n_used,
                }
            ],
            fmt,
        )

    _run(body)


def _parse_floats(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip() != ""]


@main.command("bounds")
@click.option("--z-abs", "z_abs_list", type=str, required=True,
              help="comma-separated |z| grid, e.g. 2,5,10")
@click.option("--theta", "theta_list", type=str, default=None,
              help="comma-separated arg z grid in radians")
@click.option("--theta-pi", "theta_pi_list", type=str, default=None,
              help="comma-separated arg z grid in multiples of pi")
@click.option("--n-min", type=int, default=1)
@click.option("--n-max", type=int, default=4)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
def cmd_bounds(z_abs_list, theta_list, theta_pi_list, n_min, n_max, fmt) -> None:
    """Sweep certified bounds against the remainder oracle; exit 3 on violation."""

    def body() -> None:
        radii = _parse_floats(z_abs_list)
        if theta_pi_list is not None:
            thetas = [t * math.pi for t in _parse_floats(theta_pi_list)]
        elif theta_list is not None:
            thetas = _parse_floats(theta_list)
        else:
            thetas = [0.0]
        if n_min < 1 or n_max < n_min:
            raise DomainError("need 1 <= n-min <= n-max")
        rows = []
        violated = False
        for r in radii:
            for theta in thetas:
                z = r * cmath.exp(1j * theta)
                for n in range(n_min, n_max + 1):
                    oracle = remainder_wide(z, n)
                    abs_rn = abs(oracle.value)
                    first = abs(series_coefficient(n)) / r ** (2 * n)
                    b_sector = math.nan
                    if abs(theta) <= 0.5 * math.pi:
                        if abs(theta) <= 0.25 * math.pi:
                            f_sector = 1.0
                        else:
                            f_sector = min(
                                sector_factor(theta),
                                0.5 * math.sqrt(math.e * (2 * n + 2.5)),
                            )
                        b_sector = f_sector * first
                    b_half = (1.0 / math.cos(0.5 * theta)) ** (2 * n + 1) * first
                    b_opt = phi = math.nan
                    if 0.25 * math.pi < abs(theta) < math.pi:
                        opt = bound_optimized(z, n)
                        b_opt, phi = opt.bound, opt.phi_star
                    best = best_bound(z, n).bound
                    ratio = best / abs_rn if abs_rn > 0 else math.inf
                    if abs_rn > best + 1e-10 + oracle.est_error:
                        violated = True
                    rows.append(
                        {
                            "z_abs": r,
                            "theta": theta,
                            "n": n,
                            "oracle_abs_rn": abs_rn,
                            "oracle_err": oracle.est_error,
                            "bound_sector": b_sector,
                            "bound_half_angle": b_half,
                            "bound_optimized": b_opt,
                            "phi_star": phi,
                            "best_bound": best,
                            "ratio": ratio,
                        }
                    )
        _emit(rows, fmt)
        if violated:
            raise AccuracyError("certified bound violated beyond oracle slack")

    _run(body)


@main.command("stokes")
@click.option("--z-abs", type=float, required=True)
@click.option("--k", type=int, default=1)
@click.option("--theta-min", type=float, required=True)
@click.option("--theta-max", type=float, required=True)
@click.option("--theta-steps", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
def cmd_stokes(z_abs, k, theta_min, theta_max, theta_steps, fmt) -> None:
    """Stokes-multiplier transition profile against the erf smoothing law."""

    def body() -> None:
        if theta_min > theta_max:
            raise DomainError("theta-min must not exceed theta-max")
        if theta_steps < 1:
            raise DomainError("theta-steps must be >= 1")
        if theta_steps == 1:
            thetas = [theta_min]
        else:
            step = (theta_max - theta_min) / (theta_steps - 1)
            thetas = [theta_min + i * step for i in range(theta_steps)]
        rows = []
        for s in stokes_profile(z_abs, k, thetas):
            rows.append(
                {
                    "theta": s.theta,
                    "k": s.k,
                    "z_abs": z_abs,
                    "multiplier_re": s.multiplier.real,
                    "multiplier_im": s.multiplier.imag,
                    "normalized_re": s.normalized_multiplier.real,
                    "normalized_im": s.normalized_multiplier.imag,
                    "erf_prediction": s.normalized_prediction.real,
                }
            )
        _emit(rows, fmt)

    _run(body)


@main.command("terminant")
@click.option("--p", type=int, required=True, help="terminant order (positive integer)")
@click.option("--w-re", type=float, default=None)
@click.option("--w-im", type=float, default=None)
@click.option("--w-abs", type=float, default=None)
@click.option("--w-arg", type=float, default=None,
              help="arg w in radians; may exceed pi to select the continued branch")
@click.option("--method", type=click.Choice(["recurrence", "quadrature", "erf", "auto"]),
              default="auto")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
def cmd_terminant(p, w_re, w_im, w_abs, w_arg, method, fmt) -> None:
    """Evaluate the scaled terminant by the chosen path."""

    def body() -> None:
        if w_abs is not None:
            arg = w_arg or 0.0
            w = w_abs * cmath.exp(1j * arg)
            arg_w: Optional[float] = arg
        elif w_re is not None:
            w = complex(w_re, w_im or 0.0)
            arg_w = w_arg
        else:
            raise DomainError("specify w via --w-re/--w-im or --w-abs/--w-arg")
        if method == "erf":
            ev = terminant_erf_approx(p, w, arg_w)
        elif method == "auto":
            ev = terminant(p, w, arg_w)
        else:
            chosen = (
                TerminantMethod.GAMMA_RECURRENCE
                if method == "recurrence"
                else TerminantMethod.DIRECT_QUADRATURE
            )
            ev = terminant(p, w, arg_w, method=chosen)
        _emit(
            [
                {
                    "p": p,
                    "w_re": w.real,
                    "w_im": w.imag,
                    "arg_w": arg_w if arg_w is not None else cmath.phase(w),
                    "method": ev.method.value,
                    "value_re": ev.value.real,
                    "value_im": ev.value.imag,
                    "est_error": ev.est_error,
                }
            ],
            fmt,
        )

    _run(body)


if __name__ == "__main__":
    main()
