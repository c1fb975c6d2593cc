"""Closed parametric curves with trig-polynomial coordinates.

This is the route for curves that need not be convex: regularity is
certified at construction, Frenet data and arc length come from quadrature,
and the spherical measure set is built directly as the offset at level
``L / 2pi``.  The offset's oriented area is computed by Green's theorem with
the exact derivative of the offset map, so the identity
``area(offset) = A - L^2 / 4pi`` can be checked without any convexity
assumption.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .oval import OvalSpec
from .quadrature import adaptive_periodic_integral
from .trigpoly import TAU, RootList, TrigPoly, scan_sign_changes

EPS_REG_FACTOR = 1e-8


class NotRegular(ValueError):
    """The velocity of the curve vanishes somewhere."""


def _flip_parameter(f: TrigPoly) -> TrigPoly:
    # t -> -t: cosines stay, sines flip
    return TrigPoly(f.a0, [(n, a, -b) for n, a, b in f.terms])


@dataclass(frozen=True)
class ParametricCurve:
    """Closed curve ``t -> (x(t), y(t))`` on [0, 2pi), stored positively oriented.

    Negatively oriented input is reparameterized ``t -> -t`` up front so the
    signed-area and normal conventions downstream are uniform.
    """

    x: TrigPoly
    y: TrigPoly
    orientation: int = 1

    def __post_init__(self):
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")
        if self.orientation == -1:
            object.__setattr__(self, "x", _flip_parameter(self.x))
            object.__setattr__(self, "y", _flip_parameter(self.y))
            object.__setattr__(self, "orientation", 1)
        max_coeff = max(
            [abs(self.x.a0), abs(self.y.a0)]
            + [max(abs(a), abs(b)) for _, a, b in self.x.terms + self.y.terms] or [0.0])
        eps_reg = EPS_REG_FACTOR * (1.0 + max_coeff)
        ms = _min_speed(self.x, self.y)
        if ms < eps_reg:
            raise NotRegular(f"minimum speed {ms:.3e} below {eps_reg:.3e}")
        object.__setattr__(self, "_min_speed", ms)
        object.__setattr__(self, "_eps_reg", eps_reg)

    @property
    def degree(self) -> int:
        return max(self.x.degree, self.y.degree)

    @property
    def min_speed(self) -> float:
        return self._min_speed

    def point(self, t):
        return (self.x.eval(t), self.y.eval(t))

    def velocity(self, t):
        return (self.x.eval(t, 1), self.y.eval(t, 1))

    def speed(self, t):
        vx, vy = self.velocity(t)
        return np.hypot(vx, vy)

    def curvature(self, t):
        """Signed curvature ``(x' y'' - y' x'') / speed^3``; vectorizes."""
        vx, vy = self.velocity(t)
        ax, ay = self.x.eval(t, 2), self.y.eval(t, 2)
        sp = np.hypot(vx, vy)
        return (vx * ay - vy * ax) / sp ** 3

    def to_json_dict(self) -> dict:
        return {"kind": "parametric", "x": self.x.to_json_dict(),
                "y": self.y.to_json_dict(), "orientation": self.orientation}


def _min_speed(x: TrigPoly, y: TrigPoly) -> float:
    deg = max(x.degree, y.degree, 1)
    t = np.linspace(0.0, TAU, max(1024, 256 * deg), endpoint=False)
    sp2 = x.eval(t, 1) ** 2 + y.eval(t, 1) ** 2
    i = int(np.argmin(sp2))
    # refine around the grid argmin: zero of d(speed^2)/dt
    h = TAU / t.size
    g = lambda u: 2.0 * (x.eval(u, 1) * x.eval(u, 2) + y.eval(u, 1) * y.eval(u, 2))
    lo, hi = t[i] - h, t[i] + h
    if g(lo) < 0.0 < g(hi):
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if g(mid) < 0.0:
                lo = mid
            else:
                hi = mid
        tmin = 0.5 * (lo + hi)
        best = x.eval(tmin, 1) ** 2 + y.eval(tmin, 1) ** 2
        return math.sqrt(min(float(sp2[i]), best))
    return math.sqrt(float(sp2[i]))


def frenet(c: ParametricCurve, t: float):
    """(tangent, normal, curvature, speed) at t.

    The normal is the tangent rotated a quarter turn counterclockwise; on a
    positively oriented circle it points at the center, matching the offset
    convention used for the SMS.
    """
    vx, vy = c.velocity(t)
    sp = math.hypot(float(vx), float(vy))
    tx, ty = float(vx) / sp, float(vy) / sp
    return ((tx, ty), (-ty, tx), float(c.curvature(t)), sp)


def arc_length(c: ParametricCurve) -> float:
    return adaptive_periodic_integral(c.speed, 64 * (c.degree + 1))


def green_area(c: ParametricCurve) -> float:
    """Oriented enclosed area ``(1/2) oint (x y' - y x') dt``."""
    def integrand(t):
        vx, vy = c.velocity(t)
        return 0.5 * (c.x.eval(t) * vy - c.y.eval(t) * vx)
    return adaptive_periodic_integral(integrand, 64 * (c.degree + 1))


def sms_point(c: ParametricCurve, t, radius: float | None = None):
    """Offset point ``gamma(t) + (L/2pi) n(t)``; vectorizes over t."""
    if radius is None:
        radius = arc_length(c) / TAU
    vx, vy = c.velocity(t)
    sp = np.hypot(vx, vy)
    nx, ny = -vy / sp, vx / sp
    return (c.x.eval(t) + radius * nx, c.y.eval(t) + radius * ny)


@dataclass(frozen=True)
class SmsParametricReport:
    length: float
    area: float
    sms_area: float
    singular_params: RootList
    singular_count: int
    equality_residual: float
    constant_width_case: bool
    sms_degenerate: bool
    sample_points: tuple[tuple[float, tuple[float, float], tuple[float, float]], ...]

    def to_json_dict(self) -> dict:
        return {
            "length": self.length,
            "area": self.area,
            "sms_area": self.sms_area,
            "singular_params": self.singular_params.to_json_dict(),
            "singular_count": self.singular_count,
            "equality_residual": self.equality_residual,
            "constant_width_case": self.constant_width_case,
            "sms_degenerate": self.sms_degenerate,
            "sample_points": [[t, list(p), list(q)] for t, p, q in self.sample_points],
        }


def _width_spread(c: ParametricCurve, n_dirs: int = 256, n_pts: int = 2048):
    t = np.linspace(0.0, TAU, n_pts, endpoint=False)
    pts = np.stack([c.x.eval(t), c.y.eval(t)], axis=1)
    phi = np.linspace(0.0, math.pi, n_dirs, endpoint=False)
    dirs = np.stack([np.cos(phi), np.sin(phi)], axis=1)
    proj = pts @ dirs.T
    widths = proj.max(axis=0) - proj.min(axis=0)
    return float(widths.min()), float(widths.max())


def sms_parametric(c: ParametricCurve, samples: int = 64) -> SmsParametricReport:
    """Build the SMS of a regular simple closed curve and verify its area law.

    Singular parameters solve ``L kappa(t) = 2pi``.  The offset area uses
    Green's theorem with the offset's exact derivative
    ``(1 - (L/2pi) kappa) speed tangent``, and the residual reported is
    ``|L^2 - 4 pi A - 4 pi |sms area|| / L^2``.
    """
    L = arc_length(c)
    A = green_area(c)
    R = L / TAU

    t_chk = np.linspace(0.0, TAU, max(4096, 256 * c.degree), endpoint=False)
    kap = c.curvature(t_chk)
    g_scale = TAU + L * float(np.abs(kap).max())
    g = lambda t: TAU - L * c.curvature(t)

    degenerate = bool(np.abs(g(t_chk)).max() <= 1e-9 * g_scale)
    if degenerate:
        singular = RootList()
    else:
        angles, tang = scan_sign_changes(
            g, max(2048, 256 * c.degree), 1e-10 * g_scale,
            derivative=lambda u: -L * _dkappa(c, u))
        singular = RootList(tuple(angles), tuple(tang))

    def sms_area_integrand(t):
        vx, vy = c.velocity(t)
        sp = np.hypot(vx, vy)
        tx, ty = vx / sp, vy / sp
        sx = c.x.eval(t) - R * ty
        sy = c.y.eval(t) + R * tx
        factor = (1.0 - R * c.curvature(t)) * sp
        return 0.5 * (sx * factor * ty - sy * factor * tx)

    sms_area = adaptive_periodic_integral(sms_area_integrand, 64 * (c.degree + 1))

    residual = abs(L ** 2 - 4 * math.pi * A - 4 * math.pi * abs(sms_area)) / L ** 2

    convex = bool(kap.min() > 0.0) or bool(kap.max() < 0.0)
    cw_case = False
    if convex and not degenerate:
        wmin, wmax = _width_spread(c)
        cw_case = (wmax - wmin) <= 1e-6 * (0.5 * (wmax + wmin))

    ts = np.linspace(0.0, TAU, samples, endpoint=False)
    px, py = c.point(ts)
    sx, sy = sms_point(c, ts, R)
    sample_points = tuple(
        (float(ts[i]), (float(px[i]), float(py[i])), (float(sx[i]), float(sy[i])))
        for i in range(samples))

    return SmsParametricReport(
        length=L, area=A, sms_area=sms_area,
        singular_params=singular, singular_count=len(singular.angles),
        equality_residual=residual,
        constant_width_case=cw_case, sms_degenerate=degenerate,
        sample_points=sample_points)


def _dkappa(c: ParametricCurve, t: float, h: float = 1e-6) -> float:
    return (float(c.curvature(t + h)) - float(c.curvature(t - h))) / (2 * h)


def is_simple_polyline(c: ParametricCurve, n: int = 2048) -> bool:
    """Spot-check simplicity with a segment-intersection test on an n-gon."""
    t = np.linspace(0.0, TAU, n, endpoint=False)
    P = np.stack([c.x.eval(t), c.y.eval(t)], axis=1)
    Q = np.roll(P, -1, axis=0)
    D = Q - P
    for i in range(n - 2):
        j0 = i + 2
        j1 = n if i > 0 else n - 1  # skip the closing segment's shared endpoint
        if j0 >= j1:
            continue
        p, r = P[i], D[i]
        q = P[j0:j1]
        s = D[j0:j1]
        denom = r[0] * s[:, 1] - r[1] * s[:, 0]
        dq = q - p
        with np.errstate(divide="ignore", invalid="ignore"):
            tt = (dq[:, 0] * s[:, 1] - dq[:, 1] * s[:, 0]) / denom
            uu = (dq[:, 0] * r[1] - dq[:, 1] * r[0]) / denom
        hit = (np.abs(denom) > 1e-15) & (tt > 1e-9) & (tt < 1 - 1e-9) \
            & (uu > 1e-9) & (uu < 1 - 1e-9)
        if bool(hit.any()):
            return False
    return True


def support_to_parametric(o: OvalSpec) -> ParametricCurve:
    """Exact parametric form of an oval given by its support function.

    ``(p cos - p' sin, p sin + p' cos)`` expands to trig polynomials one
    degree higher via the product-to-sum identities.
    """
    p = o.p
    xc: dict[int, list[float]] = {}
    x_a0 = 0.0
    y_a0 = 0.0
    yc: dict[int, list[float]] = {}

    def add(store, n, da, db):
        if n == 0:
            return
        e = store.setdefault(n, [0.0, 0.0])
        e[0] += da
        e[1] += db

    add(xc, 1, p.a0, 0.0)
    add(yc, 1, 0.0, p.a0)
    for n, a, b in p.terms:
        add(xc, n + 1, a * (1 - n) / 2.0, b * (1 - n) / 2.0)
        add(yc, n + 1, b * (n - 1) / 2.0, a * (1 - n) / 2.0)
        if n == 1:
            x_a0 += a * (1 + n) / 2.0
            y_a0 += b * (1 + n) / 2.0
        else:
            add(xc, n - 1, a * (1 + n) / 2.0, b * (1 + n) / 2.0)
            add(yc, n - 1, b * (1 + n) / 2.0, -a * (1 + n) / 2.0)
    x = TrigPoly(x_a0, [(n, ab[0], ab[1]) for n, ab in xc.items()])
    y = TrigPoly(y_a0, [(n, ab[0], ab[1]) for n, ab in yc.items()])
    return ParametricCurve(x, y, 1)
