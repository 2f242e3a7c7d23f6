"""Growth rate (spectral shape) of check-hybrid GLDPC ensembles.

Everything here is expressed through the increasing map

    weight_fraction(z) = int_rho * sum_t gamma_t * z A_t'(z) / A_t(z),

which sends ``(0, inf)`` onto ``(0, M)``. Its inverse at ``alpha`` is the
saddle point ``z0`` at which the growth rate

    G(alpha) = (1 - q) h(alpha) - q alpha log z0 + q int_rho sum_t gamma_t log A_t(z0)

is evaluated. Logarithms are natural throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

from gldpc_spectrum.ensemble import CNType, Ensemble, max_weight_fraction
from gldpc_spectrum.enumerators import Enumerator
from gldpc_spectrum.errors import DomainError, NoCrossingError, NumericalAssertionError

#: Relative guard band below M; alpha must stay under M * (1 - EDGE_GUARD).
EDGE_GUARD = 1e-9
ROOT_TOL = 1e-12
#: Probe point for bad spectral shape behavior.
ALPHA_PROBE = 1e-6
ALPHA_TOL = 1e-7
FIXED_POINT_TOL = 1e-6

VERDICT_SYMMETRIC = "symmetric"
VERDICT_NECESSARY_FAILS = "necessary-condition-fails"
VERDICT_INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SpectrumPoint:
    alpha: float
    g: float
    z0: float


@dataclass(frozen=True)
class SymmetryReport:
    all_wefs_symmetric: bool
    m_value: float
    gamma_at_m: float
    gamma_fixed_points: list[float] = field(default_factory=list)
    m_is_fixed_point: bool = False
    verdict: str = VERDICT_INCONCLUSIVE


def binary_entropy(alpha: float) -> float:
    """Binary entropy in nats."""
    if alpha <= 0.0 or alpha >= 1.0:
        return 0.0
    return -alpha * math.log(alpha) - (1.0 - alpha) * math.log1p(-alpha)


# -- the weight-fraction map and its inverse ---------------------------------


def weight_fraction(e: Ensemble, z: float) -> float:
    """Normalized expected edge weight under the tilt ``z``; increasing from 0 to M."""
    if z < 0:
        raise DomainError(f"z must be nonnegative, got {z}")
    return math.fsum(w * a.weighted_ratio(z) for w, a in e.edge_weights)


def weight_fraction_prime(e: Ensemble, z: float) -> float:
    """Derivative of :func:`weight_fraction` in ``z``."""
    if z < 0:
        raise DomainError(f"z must be nonnegative, got {z}")
    return math.fsum(w * a.weighted_ratio_prime(z) for w, a in e.edge_weights)


def invert_increasing(
    func: Callable[[float], float],
    target: float,
    deriv: Callable[[float], float] | None = None,
    tol: float = ROOT_TOL,
) -> float:
    """Solve ``func(z) = target`` for an increasing ``func`` on ``(0, inf)``.

    The bracket is grown geometrically from ``z = 1`` (doubling or halving)
    and then bisected in ``log z``. An optional derivative drives a final
    Newton polish that is only kept when it reduces the residual.
    """
    lo = hi = 1.0
    if func(hi) < target:
        while func(hi) < target:
            lo, hi = hi, hi * 2.0
            if hi > 1e300:
                raise DomainError(f"no bracket found for target {target!r}")
    else:
        while func(lo) > target:
            lo, hi = lo / 2.0, lo
            if lo < 1e-300:
                raise DomainError(f"no bracket found for target {target!r}")

    for _ in range(200):
        mid = math.sqrt(lo * hi)
        val = func(mid)
        if val < target:
            lo = mid
        else:
            hi = mid
        if hi / lo - 1.0 <= 4e-16:
            break
    z = math.sqrt(lo * hi)
    resid = abs(func(z) - target)

    if deriv is not None and resid > 0.0:
        for _ in range(3):
            d = deriv(z)
            if d <= 0.0:
                break
            cand = z - (func(z) - target) / d
            if not lo <= cand <= hi:
                break
            cand_resid = abs(func(cand) - target)
            if cand_resid >= resid:
                break
            z, resid = cand, cand_resid

    if resid > tol * max(1.0, abs(target)):
        raise NumericalAssertionError(f"root residual {resid:.3g} above tolerance at target {target!r}")
    return z


def _check_alpha(alpha: float, m: float) -> None:
    if not 0.0 < alpha < m * (1.0 - EDGE_GUARD):
        raise DomainError(f"alpha = {alpha!r} outside (0, M) with M = {m:.12g}; G is defined only on [0, M]")


def weight_fraction_inverse(e: Ensemble, alpha: float) -> float:
    """The unique ``z > 0`` with ``weight_fraction(e, z) == alpha``."""
    _check_alpha(alpha, max_weight_fraction(e))
    return invert_increasing(
        lambda z: weight_fraction(e, z),
        alpha,
        deriv=lambda z: weight_fraction_prime(e, z),
    )


# -- growth rate -------------------------------------------------------------


def growth_rate(e: Ensemble, alpha: float) -> SpectrumPoint:
    """Growth rate ``G(alpha)`` of the ensemble for its active local enumerators."""
    z0 = weight_fraction_inverse(e, alpha)
    q = e.q
    local = math.fsum(w * a.log_evaluate(z0) for w, a in e.edge_weights)
    g = (1 - q) * binary_entropy(alpha) - q * alpha * math.log(z0) + q * local
    return SpectrumPoint(alpha, g, z0)


def growth_rate_tanner(q: int, a: Enumerator, alpha: float) -> SpectrumPoint:
    """Growth rate of a Tanner ensemble: length-``q`` repetition VNs, one CN code.

    Uses ``G = (1 - q) h(alpha) - q alpha log z0 + (q / s) log A(z0)`` with
    ``z0`` solving ``z A'(z) / (s A(z)) = alpha``.
    """
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    s = a.length
    m = 1.0 if a.max_weight == s else a.max_weight / s
    _check_alpha(alpha, m)
    z0 = invert_increasing(
        lambda z: a.weighted_ratio(z) / s,
        alpha,
        deriv=lambda z: a.weighted_ratio_prime(z) / s,
    )
    g = (1 - q) * binary_entropy(alpha) - q * alpha * math.log(z0) + q / s * a.log_evaluate(z0)
    return SpectrumPoint(alpha, g, z0)


def sweep(e: Ensemble, alphas: Iterable[float]) -> tuple[list[SpectrumPoint], list[tuple[float, str]]]:
    """Evaluate ``G`` on ``alphas``; returns points and ``(alpha, reason)`` for skipped ones."""
    points: list[SpectrumPoint] = []
    skipped: list[tuple[float, str]] = []
    for alpha in alphas:
        try:
            points.append(growth_rate(e, alpha))
        except DomainError as exc:
            skipped.append((alpha, str(exc)))
    return points, skipped


def alpha_grid(m: float, n: int) -> list[float]:
    """``n`` equally spaced points strictly inside ``(0, m)``."""
    return [m * i / (n + 1) for i in range(1, n + 1)]


# -- relative minimum distance ----------------------------------------------


def _bisect(func: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    """Root of ``func`` on ``[lo, hi]`` given ``func(lo) < 0 <= func(hi)``."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if func(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _scan_points(m: float, eps: float) -> list[float]:
    pts = []
    a = eps
    while a < 0.01 * m:
        pts.append(a)
        a *= 2.0
    for k in range(10, 1000):
        pts.append(m * k / 1000.0)
    pts.append(m - eps)
    return pts


def relative_min_distance(e: Ensemble, eps: float = ALPHA_PROBE, tol: float = ALPHA_TOL) -> float:
    """``alpha* = inf {alpha > 0 : G(alpha) >= 0}``.

    Returns 0 (bad spectral shape behavior) when ``G(eps) > 0``. Otherwise
    the first sign change is bracketed by a geometric scan up to ``0.01 M``
    followed by a linear scan, and then bisected to ``tol``.
    """
    m = max_weight_fraction(e)

    def g(alpha: float) -> float:
        return growth_rate(e, alpha).g

    if g(eps) > 0.0:
        return 0.0
    prev = eps
    for a in _scan_points(m, eps):
        if g(a) >= 0.0:
            return _bisect(g, prev, a, tol)
        prev = a
    raise NoCrossingError(f"G negative on scanned range ({eps:g}, {m - eps:.9g})")


def asymptotic_growth(e: Ensemble, alpha: float, entropy_linear_term: bool = True) -> float:
    """Small-``alpha`` expansion of ``G``.

    With ``r`` the smallest minimum distance over the active enumerators and
    ``K = int_rho * sum_{t: r_t = r} gamma_t A_r^(t)``::

        G ~ (q - q/r - 1) alpha log alpha + (q alpha / r) log(e r K) - (q - 1) alpha

    The last term comes from ``h(alpha) = -alpha log alpha + alpha + O(alpha**2)``
    and is of the same order as the middle one; ``entropy_linear_term=False``
    drops it, leaving the two-term form that keeps only ``-alpha log alpha``.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")
    r = min(a.min_weight for _, a in e.edge_weights)
    lead = math.fsum(w * a[r] for w, a in e.edge_weights if a.min_weight == r)
    q = e.q
    g = (q - q / r - 1) * alpha * math.log(alpha) + q * alpha / r * math.log(math.e * r * lead)
    if entropy_linear_term:
        g -= (q - 1) * alpha
    return g


# -- symmetry ----------------------------------------------------------------


def symmetry_map(e: Ensemble, x: float) -> float:
    """``2 * weight_fraction((x / (2 - x)) ** ((q - 1) / q))`` on ``(0, 2)``.

    If ``G(M - alpha) == G(alpha)`` then ``M`` is a fixed point of this map.
    """
    if not 0.0 < x < 2.0:
        raise DomainError(f"x must lie in (0, 2), got {x!r}")
    q = e.q
    return 2.0 * weight_fraction(e, (x / (2.0 - x)) ** ((q - 1) / q))


def symmetry_fixed_points(e: Ensemble, n: int = 1000, tol: float = ALPHA_TOL) -> list[float]:
    """Fixed points of :func:`symmetry_map` in ``(0, 1]``.

    Located by sign changes of ``map(x) - x`` on the grid ``i / n`` and
    refined by bisection; a grid point where the residual vanishes to
    rounding is reported directly.
    """

    def resid(x: float) -> float:
        return symmetry_map(e, x) - x

    roots: list[float] = []
    prev_x, prev_v = None, None
    for i in range(1, n + 1):
        x = i / n
        v = resid(x)
        if abs(v) <= 1e-13:
            roots.append(x)
            prev_x, prev_v = x, None
            continue
        if prev_v is not None and (prev_v < 0.0) != (v < 0.0):
            sign = 1.0 if v > 0.0 else -1.0
            roots.append(_bisect(lambda t: sign * resid(t), prev_x, x, tol))
        prev_x, prev_v = x, v
    return roots


def symmetry_report(e: Ensemble) -> SymmetryReport:
    m = max_weight_fraction(e)
    all_sym = all(t.enum.is_symmetric() for t in e.normalized.types)
    gm = symmetry_map(e, m)
    m_fixed = abs(gm - m) <= FIXED_POINT_TOL
    if all_sym:
        verdict = VERDICT_SYMMETRIC
    elif not m_fixed:
        verdict = VERDICT_NECESSARY_FAILS
    else:
        verdict = VERDICT_INCONCLUSIVE
    return SymmetryReport(
        all_wefs_symmetric=all_sym,
        m_value=m,
        gamma_at_m=gm,
        gamma_fixed_points=symmetry_fixed_points(e),
        m_is_fixed_point=m_fixed,
        verdict=verdict,
    )


# -- closed form for the (3,6) regular LDPC ensemble --------------------------


def _ldpc36_cubic(alpha: float) -> tuple[float, float, float, float]:
    """``(a, b, p, mu)`` for the (3,6) cubic in ``x = z**2`` at ``alpha``."""
    a, b, c, d = alpha - 1.0, 15.0 * alpha - 10.0, 15.0 * alpha - 5.0, alpha
    p = (3.0 * a * c - b * b) / (9.0 * a * a)
    mu = (9.0 * a * b * c - 27.0 * a * a * d - 2.0 * b**3) / (54.0 * a**3)
    return a, b, p, mu


def ldpc36_discriminant(alpha: float) -> float:
    """Discriminant ``p**3 + mu**2`` of the depressed (3,6) cubic; negative on (0, 1)."""
    _, _, p, mu = _ldpc36_cubic(alpha)
    return p**3 + mu**2


def cardano_ldpc36_inverse(alpha: float) -> float:
    """Closed-form inverse weight fraction of the (3,6) regular LDPC ensemble.

    With ``x = z**2`` the equation ``weight_fraction(z) = alpha`` becomes the
    cubic ``(alpha-1) x^3 + (15 alpha-10) x^2 + (15 alpha-5) x + alpha = 0``,
    which has three real roots; the positive one is taken from the
    trigonometric form of Cardano's formula.
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")
    a, b, p, mu = _ldpc36_cubic(alpha)
    disc = p**3 + mu**2
    if disc >= 0.0:
        raise NumericalAssertionError(f"cubic discriminant {disc!r} >= 0 at alpha = {alpha!r}")
    # atan2 keeps theta in the right branch when mu <= 0
    theta = math.atan2(math.sqrt(-disc), mu)
    x = 2.0 * math.sqrt(-p) * math.cos(theta / 3.0) - b / (3.0 * a)
    if x <= 0.0:
        raise NumericalAssertionError(f"cubic root x = {x!r} is not positive at alpha = {alpha!r}")
    return math.sqrt(x)


def tanner_ensemble(q: int, a: Enumerator, label: str = "1", **kwargs) -> Ensemble:
    """Single-CN-type ensemble built around enumerator ``a``."""
    return Ensemble.build(q, [CNType(label, a, gamma=1.0, **kwargs)])
