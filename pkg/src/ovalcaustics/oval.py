"""Ovals described by Minkowski support functions.

A support function p certifies an oval exactly when the radius of curvature
``rho = p + p''`` stays positive; the curve itself, its length, area, width
profile, vertices and Steiner point all come from p in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import adaptive_periodic_integral
from .trigpoly import (TAU, IdenticallyZero, RootList, TrigPoly, sign_changes,
                       value_range)


class NotAnOval(ValueError):
    """The support function fails convexity: min(p + p'') <= 0."""

    def __init__(self, rho_min: float):
        super().__init__(f"not an oval: min radius of curvature {rho_min:.6g} <= 0")
        self.rho_min = rho_min


@dataclass(frozen=True)
class OvalSpec:
    """A support function together with its certified minimum curvature radius."""

    p: TrigPoly
    rho_min: float

    @property
    def length(self) -> float:
        return TAU * self.p.a0

    @property
    def area(self) -> float:
        return support_area(self.p)

    @property
    def avg_width(self) -> float:
        return 2.0 * self.p.a0

    @property
    def steiner(self) -> tuple[float, float]:
        a1, b1 = self.p.coeff(1)
        return (a1, b1)


@dataclass(frozen=True)
class OvalSummary:
    length: float
    area: float
    avg_width: float
    width_min: float
    width_max: float
    is_constant_width: bool
    is_centrally_symmetric: bool
    vertex_angles: RootList
    vertices_degenerate: bool
    steiner: tuple[float, float]

    def to_json_dict(self) -> dict:
        return {
            "length": self.length,
            "area": self.area,
            "avg_width": self.avg_width,
            "width_min": self.width_min,
            "width_max": self.width_max,
            "is_constant_width": self.is_constant_width,
            "is_centrally_symmetric": self.is_centrally_symmetric,
            "vertex_angles": self.vertex_angles.to_json_dict(),
            "vertices_degenerate": self.vertices_degenerate,
            "steiner": list(self.steiner),
        }


def radius_poly(p: TrigPoly) -> TrigPoly:
    """``p + p''`` as exact coefficients: harmonic n scales by ``1 - n^2``."""
    return TrigPoly(p.a0, [(n, (1 - n * n) * a, (1 - n * n) * b) for n, a, b in p.terms])


def support_area(p: TrigPoly) -> float:
    """Oriented enclosed area ``(1/2) int (p^2 - p'^2)`` via coefficients.

    Equals ``pi a0^2 - (pi/2) sum (n^2 - 1)(a_n^2 + b_n^2)``; first harmonics
    drop out because they only translate the curve.
    """
    acc = math.pi * p.a0 * p.a0
    for n, a, b in p.terms:
        acc -= (math.pi / 2.0) * (n * n - 1) * (a * a + b * b)
    return acc


def validate_oval(p: TrigPoly) -> OvalSpec:
    """Certify p as an oval support function or raise ``NotAnOval``."""
    rho = radius_poly(p)
    rho_min, _ = value_range(rho)
    if rho_min <= 0.0:
        raise NotAnOval(rho_min)
    return OvalSpec(p, rho_min)


def curve_point(o: OvalSpec, theta):
    """Point of the oval whose outward co-orientation angle is theta.

    ``(p cos - p' sin, p sin + p' cos)``; vectorizes over theta.
    """
    p = o.p.eval(theta)
    dp = o.p.eval(theta, 1)
    c = np.cos(theta)
    s = np.sin(theta)
    return (p * c - dp * s, p * s + dp * c)


def unit_normal(theta):
    """Orientation-compatible unit normal of a positively oriented oval.

    Points inward: for the circle the offset at half the average width must
    land on the center.
    """
    return (-np.cos(theta), -np.sin(theta))


def width_poly(p: TrigPoly) -> TrigPoly:
    """Width in direction theta as a series: ``p(t) + p(t + pi)``."""
    from .trigpoly import antipodal_shift, combine
    return combine(1.0, p, 1.0, antipodal_shift(p))


def constant_width_tol(p: TrigPoly) -> float:
    return 1e-9 * (1.0 + abs(p.a0))


def is_constant_width(p: TrigPoly) -> bool:
    """True when every even harmonic of index >= 2 is negligible."""
    tol = constant_width_tol(p)
    return all(abs(a) <= tol and abs(b) <= tol
               for n, a, b in p.terms if n >= 2 and n % 2 == 0)


def is_centrally_symmetric(p: TrigPoly) -> bool:
    """True when every odd harmonic of index >= 3 is negligible."""
    tol = constant_width_tol(p)
    return all(abs(a) <= tol and abs(b) <= tol
               for n, a, b in p.terms if n >= 3 and n % 2 == 1)


def geometry_summary(o: OvalSpec) -> OvalSummary:
    """Full geometric profile of the oval, cross-checked two ways.

    Length and area are computed both from the coefficients and by
    quadrature of the defining integrals; disagreement indicates a corrupted
    input and raises rather than returning silently wrong numbers.
    """
    p = o.p
    rho = radius_poly(p)

    length = TAU * p.a0
    length_quad = adaptive_periodic_integral(rho.eval, 4 * (p.degree + 4))
    if abs(length - length_quad) > 1e-10 * (abs(length) + 1.0):
        raise ArithmeticError("length cross-check failed")

    area = support_area(p)
    area_quad = adaptive_periodic_integral(
        lambda t: 0.5 * (p.eval(t) ** 2 - p.eval(t, 1) ** 2), 8 * (p.degree + 4))
    if abs(area - area_quad) > 1e-10 * (abs(area) + 1.0):
        raise ArithmeticError("area cross-check failed")

    w = width_poly(p)
    w_min, w_max = value_range(w)

    rho_prime = rho.derivative()
    try:
        vertex_angles = sign_changes(rho_prime)
        degenerate = False
    except IdenticallyZero:
        vertex_angles = RootList()
        degenerate = True

    return OvalSummary(
        length=length,
        area=area,
        avg_width=length / math.pi,
        width_min=w_min,
        width_max=w_max,
        is_constant_width=is_constant_width(p),
        is_centrally_symmetric=is_centrally_symmetric(p),
        vertex_angles=vertex_angles,
        vertices_degenerate=degenerate,
        steiner=o.steiner,
    )


def random_oval(rng: np.random.Generator, degree: int = 8,
                min_degree: int | None = None) -> OvalSpec:
    """Seeded random oval with every harmonic up to the drawn degree.

    Coefficients are uniform in [-1, 1] and the constant term is lifted
    above ``1.05 * sum n^2 (|a_n| + |b_n|)``, which dominates ``|p''|`` and
    so guarantees a positive curvature radius.
    """
    if min_degree is None:
        min_degree = degree
    deg = int(rng.integers(min_degree, degree + 1))
    terms = []
    bound = 0.0
    for n in range(1, deg + 1):
        a, b = rng.uniform(-1.0, 1.0, size=2)
        terms.append((n, a, b))
        bound += n * n * (abs(a) + abs(b))
    a0 = 1.05 * bound + 1.0
    return validate_oval(TrigPoly(a0, terms))
