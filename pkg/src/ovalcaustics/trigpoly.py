"""Finite Fourier series with exact coefficient bookkeeping.

A ``TrigPoly`` is ``a0 + sum_n (a_n cos(n t) + b_n sin(n t))`` with a finite
set of harmonics.  It is the carrier for Minkowski support functions and for
every quantity derived from them, so the operations here are deliberately
closed-form wherever the coefficients allow it: differentiation, parity
splits, squared L2 norms and integrals of ``|f|`` never fall back to generic
numerics.  Root isolation is the one part that is genuinely numerical; it
uses an oversampled uniform grid followed by bisection, which is reliable
because a trig polynomial of degree d has at most 2d zeros per period.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TAU = 2.0 * math.pi

# Hard limits and tolerances shared by all coefficient-level operations.
DEGREE_CAP = 64
ROOT_TOL = 1e-12        # bisection target for sign-change angles
MERGE_TOL = 1e-9        # zeros closer than this are a single event
ZERO_COEFF_TOL = 1e-15  # below this every coefficient counts as zero


class IdenticallyZero(ValueError):
    """Raised when an operation needs a function that is not the zero function."""


@dataclass(frozen=True)
class RootList:
    """Zeros of a periodic function split by how the function meets zero.

    ``angles`` are transversal sign changes, ``tangential`` are touch points
    without a sign change.  Both are sorted, live in the scanned domain, and
    are separated by at least ``MERGE_TOL``.
    """

    angles: tuple[float, ...] = ()
    tangential: tuple[float, ...] = ()

    def to_json_dict(self) -> dict:
        return {"angles": list(self.angles), "tangential": list(self.tangential)}


@dataclass(frozen=True)
class TrigPoly:
    """Immutable finite Fourier series ``a0 + sum (a_n cos nt + b_n sin nt)``.

    ``terms`` holds ``(n, a_n, b_n)`` triples with strictly increasing
    harmonic indices; pairs that are exactly ``(0.0, 0.0)`` are dropped at
    construction so equality of coefficients is equality of values.
    """

    a0: float = 0.0
    terms: tuple[tuple[int, float, float], ...] = ()

    def __post_init__(self):
        cleaned = []
        seen = set()
        for item in self.terms:
            n, a, b = item
            n = int(n)
            a = float(a)
            b = float(b)
            if n < 1:
                raise ValueError(f"harmonic index must be >= 1, got {n}")
            if n in seen:
                raise ValueError(f"duplicate harmonic index {n}")
            if n > DEGREE_CAP:
                raise ValueError(f"degree {n} exceeds cap {DEGREE_CAP}")
            seen.add(n)
            if a == 0.0 and b == 0.0:
                continue
            cleaned.append((n, a, b))
        cleaned.sort(key=lambda t: t[0])
        object.__setattr__(self, "a0", float(self.a0))
        object.__setattr__(self, "terms", tuple(cleaned))
        object.__setattr__(self, "_ns", np.array([t[0] for t in cleaned], dtype=float))
        object.__setattr__(self, "_as", np.array([t[1] for t in cleaned], dtype=float))
        object.__setattr__(self, "_bs", np.array([t[2] for t in cleaned], dtype=float))

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        return int(self._ns[-1]) if self.terms else 0

    @property
    def scale(self) -> float:
        """1 + sum of coefficient magnitudes; the natural size for tolerances."""
        return 1.0 + abs(self.a0) + float(np.abs(self._as).sum() + np.abs(self._bs).sum())

    def coeff(self, n: int) -> tuple[float, float]:
        """Return ``(a_n, b_n)``; ``(a0, 0)`` for ``n == 0``."""
        if n == 0:
            return (self.a0, 0.0)
        for m, a, b in self.terms:
            if m == n:
                return (a, b)
        return (0.0, 0.0)

    def is_zero(self, tol: float = ZERO_COEFF_TOL) -> bool:
        if abs(self.a0) > tol:
            return False
        return all(abs(a) <= tol and abs(b) <= tol for _, a, b in self.terms)

    # -- evaluation ----------------------------------------------------

    def eval(self, theta, order: int = 0):
        """Evaluate the ``order``-th derivative at ``theta`` (scalar or array).

        Term n picks up the factor ``n**order`` and a quarter-turn phase
        rotation per derivative; orders above 4 are never needed and are
        rejected to catch call-site mistakes.
        """
        if not 0 <= order <= 4:
            raise ValueError(f"derivative order must be in 0..4, got {order}")
        th = np.asarray(theta, dtype=float)
        scalar = th.ndim == 0
        if self._ns.size:
            ang = th[..., None] * self._ns
            c = np.cos(ang)
            s = np.sin(ang)
            k = order % 4
            if k == 0:
                ba, bb = c, s
            elif k == 1:
                ba, bb = -s, c
            elif k == 2:
                ba, bb = -c, -s
            else:
                ba, bb = s, -c
            nk = self._ns ** order
            out = ba @ (self._as * nk) + bb @ (self._bs * nk)
        else:
            out = np.zeros(th.shape)
        if order == 0:
            out = out + self.a0
        return float(out) if scalar else out

    __call__ = eval

    # -- coefficient-level calculus -------------------------------------

    def derivative(self, order: int = 1) -> "TrigPoly":
        """Exact derivative as a new series: ``(a, b) -> (n b, -n a)`` per step."""
        a0 = self.a0
        terms = list(self.terms)
        for _ in range(order):
            a0 = 0.0
            terms = [(n, n * b, -n * a) for n, a, b in terms]
        return TrigPoly(a0, terms)

    def map_coeffs(self, factor) -> "TrigPoly":
        """New series with ``(a_n, b_n)`` scaled by ``factor(n)``; ``a0`` kept."""
        return TrigPoly(self.a0, [(n, factor(n) * a, factor(n) * b) for n, a, b in self.terms])

    def to_json_dict(self) -> dict:
        return {"a0": self.a0, "terms": [[n, a, b] for n, a, b in self.terms]}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "TrigPoly":
        return cls(float(obj.get("a0", 0.0)), [tuple(t) for t in obj.get("terms", [])])


def combine(alpha: float, f: TrigPoly, beta: float, g: TrigPoly) -> TrigPoly:
    """Return ``alpha*f + beta*g`` in canonical form."""
    coeffs: dict[int, list[float]] = {}
    for n, a, b in f.terms:
        coeffs[n] = [alpha * a, alpha * b]
    for n, a, b in g.terms:
        if n in coeffs:
            coeffs[n][0] += beta * a
            coeffs[n][1] += beta * b
        else:
            coeffs[n] = [beta * a, beta * b]
    terms = [(n, ab[0], ab[1]) for n, ab in coeffs.items()]
    return TrigPoly(alpha * f.a0 + beta * g.a0, terms)


def antipodal_shift(f: TrigPoly) -> TrigPoly:
    """Return ``g(t) = f(t + pi)``: odd harmonics flip sign, the rest stay."""
    return TrigPoly(f.a0, [(n, -a if n % 2 else a, -b if n % 2 else b) for n, a, b in f.terms])


def parity_parts(f: TrigPoly) -> tuple[TrigPoly, TrigPoly]:
    """Split into (even, odd): even keeps ``a0`` and even harmonics."""
    even = TrigPoly(f.a0, [t for t in f.terms if t[0] % 2 == 0])
    odd = TrigPoly(0.0, [t for t in f.terms if t[0] % 2 == 1])
    return even, odd


def l2_norm_sq(f: TrigPoly) -> float:
    """``int_0^2pi f^2 dt`` by the Parseval identity."""
    acc = TAU * f.a0 * f.a0
    for _, a, b in f.terms:
        acc += math.pi * (a * a + b * b)
    return acc


# -- root isolation ----------------------------------------------------


def _grid_size(degree: int) -> int:
    return max(1024, 256 * max(degree, 1))


def _bisect_many(func, lo, hi, sign_lo):
    """Vectorized bisection on brackets with opposite-sign endpoints."""
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    sign_lo = np.array(sign_lo, dtype=float)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        sm = np.sign(func(mid))
        hit = sm == 0.0
        right = (sm == sign_lo) & ~hit
        lo = np.where(right | hit, mid, lo)
        hi = np.where(~right | hit, mid, hi)
        if np.max(hi - lo) <= ROOT_TOL / 4:
            break
    return 0.5 * (lo + hi)


def _bisect_scalar(func, lo, hi):
    flo = func(lo)
    if flo == 0.0:
        return lo
    slo = math.copysign(1.0, flo)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        fm = func(mid)
        if fm == 0.0:
            return mid
        if math.copysign(1.0, fm) == slo:
            lo = mid
        else:
            hi = mid
        if hi - lo <= ROOT_TOL / 4:
            break
    return 0.5 * (lo + hi)


def _merge_sorted(values: list[float], period: float) -> list[float]:
    """Collapse values closer than MERGE_TOL, also across the period wrap."""
    if not values:
        return []
    vals = sorted(v % period for v in values)
    out = [vals[0]]
    for v in vals[1:]:
        if v - out[-1] >= MERGE_TOL:
            out.append(v)
    if len(out) > 1 and (out[0] + period) - out[-1] < MERGE_TOL:
        out.pop()
    return out


def scan_sign_changes(func, n_grid: int, eps_val: float,
                      dip_bound: float | None = None,
                      derivative=None) -> tuple[list[float], list[float]]:
    """Locate zeros of a vectorized 2pi-periodic callable on [0, 2pi).

    Returns (sign-change angles, tangential-touch angles).  ``eps_val`` is
    the magnitude below which a sample counts as zero; ``dip_bound`` (when
    given) flags local minima of ``|f|`` that may hide a touch point between
    samples, which are then resolved through ``derivative``.
    """
    theta = np.linspace(0.0, TAU, n_grid, endpoint=False)
    vals = np.asarray(func(theta), dtype=float)
    sgn = np.where(np.abs(vals) <= eps_val, 0.0, np.sign(vals))

    nonzero = np.flatnonzero(sgn)
    if nonzero.size == 0:
        raise IdenticallyZero("function is zero at every sample point")

    # Rotate so the walk starts on a nonzero sign; zero runs then never
    # straddle the array boundary.
    start = int(nonzero[0])
    sgn_r = np.roll(sgn, -start)
    theta_r = np.concatenate([theta[start:], theta[:start] + TAU])

    angles: list[float] = []
    tangential_cand: list[tuple[float, float]] = []  # (lo, hi) run bounds

    idx_nz = np.flatnonzero(sgn_r)
    # consecutive nonzero samples around the circle, wrapping once
    pairs_i = idx_nz
    pairs_j = np.roll(idx_nz, -1)
    bracket_lo = []
    bracket_hi = []
    bracket_sign = []
    for i, j in zip(pairs_i, pairs_j):
        lo = theta_r[i]
        hi = theta_r[j] if j > i else theta_r[j] + TAU
        if sgn_r[i] != sgn_r[j]:
            bracket_lo.append(lo)
            bracket_hi.append(hi)
            bracket_sign.append(sgn_r[i])
        elif j != (i + 1) % n_grid:
            # same sign with a zero run between: touch candidate
            tangential_cand.append((lo, hi))
    if bracket_lo:
        roots = _bisect_many(func, bracket_lo, bracket_hi, bracket_sign)
        angles.extend(float(r) % TAU for r in roots)

    # Dips that stay above eps_val at the samples can still hide a touch
    # point between them; the second-derivative bound says how low a sample
    # near such a point must be.
    if dip_bound is not None and dip_bound > eps_val:
        absv = np.abs(vals)
        local_min = (absv <= np.roll(absv, 1)) & (absv <= np.roll(absv, -1))
        cand = np.flatnonzero(local_min & (absv <= dip_bound) & (sgn != 0)
                              & (sgn == np.roll(sgn, 1)) & (sgn == np.roll(sgn, -1)))
        h = TAU / n_grid
        for i in cand:
            tangential_cand.append((theta[i] - h, theta[i] + h))

    tangential: list[float] = []
    if tangential_cand and derivative is not None:
        for lo, hi in tangential_cand:
            dlo = float(derivative(lo))
            dhi = float(derivative(hi))
            if dlo == 0.0 and dhi == 0.0:
                tc = 0.5 * (lo + hi)
            elif dlo * dhi < 0.0:
                tc = _bisect_scalar(derivative, lo, hi)
            else:
                continue
            if abs(float(np.atleast_1d(func(np.full(1, tc)))[0])) <= eps_val:
                tangential.append(tc % TAU)
    elif tangential_cand:
        tangential.extend(0.5 * (lo + hi) % TAU for lo, hi in tangential_cand)

    angles = _merge_sorted(angles, TAU)
    tangential = _merge_sorted(tangential, TAU)
    tangential = [t for t in tangential
                  if all(min(abs(t - a), TAU - abs(t - a)) >= MERGE_TOL for a in angles)]
    return angles, tangential


def sign_changes(f: TrigPoly, half_period: bool = False) -> RootList:
    """Zeros of ``f`` on [0, 2pi), or restricted to [0, pi) when asked.

    Sign-change angles are located to within ``ROOT_TOL``; zeros where the
    function only touches are reported separately as tangential.
    """
    if f.is_zero():
        raise IdenticallyZero("all coefficients vanish")
    eps_val = 1e-10 * f.scale
    # |f''| <= sum n^2 (|a|+|b|) bounds how far |f| can dip between samples
    curv_bound = float(sum(n * n * (abs(a) + abs(b)) for n, a, b in f.terms))
    n_grid = _grid_size(f.degree)
    h = TAU / n_grid
    dip_bound = max(2.0 * curv_bound * (0.5 * h) ** 2, eps_val * 4)
    fp = f.derivative()
    angles, tangential = scan_sign_changes(
        f.eval, n_grid, eps_val, dip_bound=dip_bound,
        derivative=lambda t: fp.eval(t))
    if half_period:
        angles = [a for a in angles if a < math.pi - MERGE_TOL]
        tangential = [t for t in tangential if t < math.pi - MERGE_TOL]
    return RootList(tuple(angles), tuple(tangential))


# -- extrema and integrals ----------------------------------------------


def value_range(f: TrigPoly) -> tuple[float, float]:
    """Global (min, max) of ``f`` over a period.

    Critical points come from the sign changes of ``f'`` and are accurate to
    bisection precision; the dense grid backstops pathological cases.
    """
    if not f.terms:
        return (f.a0, f.a0)
    theta = np.linspace(0.0, TAU, _grid_size(f.degree), endpoint=False)
    vals = f.eval(theta)
    lo = float(vals.min())
    hi = float(vals.max())
    try:
        crit = sign_changes(f.derivative())
    except IdenticallyZero:
        return (lo, hi)
    pts = crit.angles + crit.tangential
    if pts:
        cv = f.eval(np.array(pts))
        lo = min(lo, float(cv.min()))
        hi = max(hi, float(cv.max()))
    return (lo, hi)


def sup_abs(f: TrigPoly) -> float:
    """max over a period of ``|f|``."""
    lo, hi = value_range(f)
    return max(abs(lo), abs(hi))


def _antiderivative_at(f: TrigPoly, theta: float) -> float:
    acc = f.a0 * theta
    for n, a, b in f.terms:
        acc += (a * math.sin(n * theta) - b * math.cos(n * theta)) / n
    return acc


def abs_integral_from_roots(f: TrigPoly, angles) -> float:
    """``int |f|`` over a period given the (already isolated) sign changes."""
    if not angles:
        return abs(TAU * f.a0)
    total = 0.0
    angles = list(angles)
    for k, a in enumerate(angles):
        b = angles[k + 1] if k + 1 < len(angles) else angles[0] + TAU
        total += abs(_antiderivative_at(f, b) - _antiderivative_at(f, a))
    return total


def abs_integral(f: TrigPoly) -> float:
    """``int_0^2pi |f| dt`` computed exactly from the antiderivative.

    The period splits at the sign changes of ``f``; on each piece the sign is
    constant so the piece integral is just an antiderivative difference.
    """
    if f.is_zero():
        return 0.0
    try:
        roots = sign_changes(f).angles
    except IdenticallyZero:
        return 0.0
    return abs_integral_from_roots(f, roots)
