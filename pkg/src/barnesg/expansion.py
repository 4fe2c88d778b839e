"""Truncated expansion of log G(z+1) and certified bounds on its remainder.

The central object is

    log G(z+1) = z^2/4 + z log Gamma(z+1) - (z(z+1)/2 + 1/12) log z - log A
                 + sum_{n=1}^{N-1} c_n z^{-2n} + R_N(z),

with c_n = B_{2n+2} / (2n (2n+1) (2n+2)).  Three certified bounds on |R_N|
are provided, all of the form (first omitted term magnitude) x factor(theta, N):

  * sector bound      -- factor 1 for |theta| <= pi/4, else
                         min(|csc 2 theta|, sqrt(e (2N + 5/2)) / 2),
                         valid for |theta| <= pi/2;
  * half-angle bound  -- factor sec^{2N+1}(theta/2), valid for |theta| < pi;
  * optimized bound   -- factor csc(2(theta - phi*)) sec^{2N+1}(phi*) with
                         phi* the unique minimizing rotation angle, valid for
                         pi/4 < |theta| < pi.

On the positive real axis R_N additionally has the sign of the first omitted
term and is strictly smaller in magnitude.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Optional

from .bernoulli import (
    CONSTANTS,
    barnes_series_coefficient,
    series_coefficient,
)
from .errors import AccuracyError, DomainError
from .special import log_gamma

__all__ = [
    "BoundKind",
    "BoundReport",
    "ExpansionResult",
    "expansion_prefix",
    "truncated_log_barnes",
    "barnes_style_series",
    "sector_factor",
    "solve_optimal_angle",
    "bound_closed_form",
    "bound_optimized",
    "best_bound",
    "certified_eval",
]

MAX_TRUNCATION = 20
_WEAK_FACTOR = 1e6


class BoundKind(enum.Enum):
    """Which bound family produced a certified remainder bound."""

    SECTOR = "sector_csc"
    HALF_ANGLE = "half_angle_sec"
    OPTIMIZED = "optimized_angle"
    POSITIVE_AXIS = "positive_axis_sign"


@dataclass(frozen=True)
class BoundReport:
    """A certified bound |R_N| <= bound = factor * first-omitted-term magnitude."""

    bound: float
    factor: float
    kind: BoundKind
    phi_star: Optional[float] = None


@dataclass(frozen=True)
class ExpansionResult:
    """Truncated expansion value together with its certified remainder bound."""

    value: complex
    n_trunc: int
    bound: float
    bound_kind: BoundKind
    weak_bound: bool = False


def _check_sector(z: complex) -> complex:
    z = complex(z)
    if z == 0:
        raise DomainError("z = 0 is outside the expansion domain")
    if z.imag == 0.0 and z.real < 0.0:
        raise DomainError("z on the branch cut arg z = pi")
    return z


def expansion_prefix(z: complex) -> complex:
    """The N-independent part: z^2/4 + z log Gamma(z+1) - (z(z+1)/2 + 1/12) log z - log A."""
    z = _check_sector(z)
    return (
        0.25 * z * z
        + z * log_gamma(z + 1.0)
        - (0.5 * z * (z + 1.0) + 1.0 / 12.0) * cmath.log(z)
        - CONSTANTS.log_a
    )


def truncated_log_barnes(z: complex, n_trunc: int) -> complex:
    """Expansion of log G(z+1) truncated before the z^{-2 n_trunc} term.

    The remainder it omits is exactly R_{n_trunc}(z); see the remainder
    oracle module for its quadrature evaluation and this module's bound_*
    functions for certified bounds.
    """
    z = _check_sector(z)
    if not 1 <= n_trunc <= MAX_TRUNCATION:
        raise DomainError(f"n_trunc must lie in [1, {MAX_TRUNCATION}]")
    total = expansion_prefix(z)
    zinv2 = 1.0 / (z * z)
    zpow = zinv2
    for n in range(1, n_trunc):
        total += series_coefficient(n) * zpow
        zpow *= zinv2
    return total


def barnes_style_series(z: complex, n_trunc: int) -> complex:
    """Barnes' composed form of the truncated expansion.

    Equivalent to substituting the standard log-Gamma series into
    truncated_log_barnes; the series coefficients become B_{2n+2}/(2n(2n+2)).
    Evaluated but not certified (no bound family is implemented for it).
    """
    z = _check_sector(z)
    if not 1 <= n_trunc <= MAX_TRUNCATION:
        raise DomainError(f"n_trunc must lie in [1, {MAX_TRUNCATION}]")
    total = (
        -0.75 * z * z
        + 0.5 * z * math.log(2.0 * math.pi)
        + (0.5 * z * z - 1.0 / 12.0) * cmath.log(z)
        + 1.0 / 12.0
        - CONSTANTS.log_a
    )
    zinv2 = 1.0 / (z * z)
    zpow = zinv2
    for n in range(1, n_trunc):
        total += barnes_series_coefficient(n) * zpow
        zpow *= zinv2
    return total


def sector_factor(theta: float) -> float:
    """Piecewise factor: 1 on |theta| <= pi/4, |csc 2 theta| up to pi/2.

    Returns +inf at exactly |theta| = pi/2 (csc is singular there); callers
    take the min with the closed-form alternative.
    """
    a = abs(theta)
    if a > 0.5 * math.pi:
        raise DomainError("sector_factor: |theta| must be <= pi/2")
    if a <= 0.25 * math.pi:
        return 1.0
    if a == 0.5 * math.pi:
        return math.inf
    return abs(1.0 / math.sin(2.0 * theta))


def _first_term_magnitude(z: complex, n_trunc: int) -> float:
    return abs(series_coefficient(n_trunc)) / abs(z) ** (2 * n_trunc)


def bound_closed_form(z: complex, n_trunc: int) -> BoundReport:
    """Smaller of the sector and half-angle closed-form bounds on |R_N|."""
    z = _check_sector(z)
    if n_trunc < 1:
        raise DomainError("n_trunc must be >= 1")
    theta = cmath.phase(z)
    candidates: list[tuple[float, BoundKind]] = []
    if abs(theta) <= 0.5 * math.pi:
        if abs(theta) <= 0.25 * math.pi:
            f = 1.0
        else:
            f = min(
                sector_factor(theta),
                0.5 * math.sqrt(math.e * (2 * n_trunc + 2.5)),
            )
        candidates.append((f, BoundKind.SECTOR))
    candidates.append(
        ((1.0 / math.cos(0.5 * theta)) ** (2 * n_trunc + 1), BoundKind.HALF_ANGLE)
    )
    factor, kind = min(candidates, key=lambda item: item[0])
    return BoundReport(
        bound=factor * _first_term_magnitude(z, n_trunc),
        factor=factor,
        kind=kind,
    )


def _bracket(theta: float) -> tuple[float, float]:
    """Root bracket for the optimal rotation angle in the upper half-plane."""
    if theta < 0.5 * math.pi:
        return 0.0, theta - 0.25 * math.pi
    if theta < 0.75 * math.pi:
        return theta - 0.5 * math.pi, theta - 0.25 * math.pi
    return theta - 0.5 * math.pi, 0.5 * math.pi


def solve_optimal_angle(theta: float, n_trunc: int) -> float:
    """Minimizing rotation angle phi* for the optimized bound.

    Solves (2N+3) cos(3 phi - 2 theta) = (2N-1) cos(phi - 2 theta) inside the
    bracket that contains the unique minimizer; bisection then two Newton
    polishing steps bring the residual below 1e-12.  Odd in theta.
    """
    if n_trunc < 1:
        raise DomainError("n_trunc must be >= 1")
    a_th = abs(theta)
    if not 0.25 * math.pi < a_th < math.pi:
        raise DomainError("solve_optimal_angle: need pi/4 < |theta| < pi")
    sign = 1.0 if theta >= 0 else -1.0
    m = 2 * n_trunc

    def h(phi: float) -> float:
        return (m + 3) * math.cos(3 * phi - 2 * a_th) - (m - 1) * math.cos(phi - 2 * a_th)

    lo, hi = _bracket(a_th)
    h_lo = h(lo)
    if h_lo * h(hi) > 0.0:
        # should not happen (uniqueness inside the bracket); fall back to a scan
        grid = [lo + (hi - lo) * i / 256 for i in range(257)]
        for g0, g1 in zip(grid[:-1], grid[1:]):
            if h(g0) * h(g1) <= 0.0:
                lo, hi, h_lo = g0, g1, h(g0)
                break
        else:
            raise AccuracyError("no sign change inside the optimal-angle bracket")
    while hi - lo > 1e-13:
        mid = 0.5 * (lo + hi)
        if h_lo * h(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
            h_lo = h(lo)
    phi = 0.5 * (lo + hi)
    for _ in range(2):
        slope = -3 * (m + 3) * math.sin(3 * phi - 2 * a_th) + (m - 1) * math.sin(phi - 2 * a_th)
        if slope != 0.0:
            phi -= h(phi) / slope
    return sign * phi


def bound_optimized(z: complex, n_trunc: int) -> BoundReport:
    """Bound with the factor minimized over the integration-path rotation angle."""
    z = _check_sector(z)
    theta = cmath.phase(z)
    if not 0.25 * math.pi < abs(theta) < math.pi:
        raise DomainError("bound_optimized: need pi/4 < |arg z| < pi")
    phi = solve_optimal_angle(theta, n_trunc)
    a_th, a_phi = abs(theta), abs(phi)
    factor = 1.0 / (math.sin(2.0 * (a_th - a_phi)) * math.cos(a_phi) ** (2 * n_trunc + 1))
    return BoundReport(
        bound=factor * _first_term_magnitude(z, n_trunc),
        factor=factor,
        kind=BoundKind.OPTIMIZED,
        phi_star=phi,
    )


def best_bound(z: complex, n_trunc: int) -> BoundReport:
    """Smallest certified bound applicable at (z, n_trunc)."""
    z = _check_sector(z)
    theta = cmath.phase(z)
    if theta == 0.0:
        return BoundReport(
            bound=_first_term_magnitude(z, n_trunc),
            factor=1.0,
            kind=BoundKind.POSITIVE_AXIS,
        )
    report = bound_closed_form(z, n_trunc)
    if 0.25 * math.pi < abs(theta) < math.pi:
        alt = bound_optimized(z, n_trunc)
        if alt.bound < report.bound:
            report = alt
    return report


def certified_eval(z: complex, n_trunc: Optional[int] = None) -> ExpansionResult:
    """Evaluate the truncated expansion with the best certified bound.

    When n_trunc is omitted the truncation index minimizing the bound over
    1..20 is chosen (ties toward smaller N).  Bounds with factor above 1e6
    (possible only near the cut) are flagged weak rather than suppressed.
    """
    z = _check_sector(z)
    if n_trunc is None:
        chosen, chosen_report = 1, best_bound(z, 1)
        for n in range(2, MAX_TRUNCATION + 1):
            report = best_bound(z, n)
            if report.bound < chosen_report.bound:
                chosen, chosen_report = n, report
    else:
        if not 1 <= n_trunc <= MAX_TRUNCATION:
            raise DomainError(f"n_trunc must lie in [1, {MAX_TRUNCATION}]")
        chosen, chosen_report = n_trunc, best_bound(z, n_trunc)
    return ExpansionResult(
        value=truncated_log_barnes(z, chosen),
        n_trunc=chosen,
        bound=chosen_report.bound,
        bound_kind=chosen_report.kind,
        weak_bound=chosen_report.factor > _WEAK_FACTOR,
    )
