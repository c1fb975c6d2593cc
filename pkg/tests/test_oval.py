"""Oval certification and base-curve geometry."""

import math

import numpy as np
import pytest

from ovalcaustics.oval import (NotAnOval, curve_point, geometry_summary,
                               radius_poly, random_oval, validate_oval)
from ovalcaustics.trigpoly import TAU, TrigPoly


class TestValidateOval:
    def test_constant_width_example(self):
        o = validate_oval(TrigPoly(10.0, [(3, 1.0, 0.0)]))
        assert o.rho_min == pytest.approx(2.0, abs=1e-10)

    def test_symmetric_example(self):
        o = validate_oval(TrigPoly(20.0, [(2, 2.0, 0.0)]))
        assert o.rho_min == pytest.approx(14.0, abs=1e-10)

    def test_rejects_nonconvex(self):
        with pytest.raises(NotAnOval) as exc:
            validate_oval(TrigPoly(1.0, [(2, 1.0, 0.0)]))
        assert exc.value.rho_min == pytest.approx(-2.0, abs=1e-10)

    def test_radius_poly_coefficients(self):
        rho = radius_poly(TrigPoly(10.0, [(3, 1.0, 0.0)]))
        assert rho == TrigPoly(10.0, [(3, -8.0, 0.0)])


class TestCurvePoint:
    def test_circle(self):
        o = validate_oval(TrigPoly(5.0))
        assert curve_point(o, 0.0) == pytest.approx((5.0, 0.0))
        th = np.linspace(0, TAU, 17)
        x, y = curve_point(o, th)
        assert np.hypot(x, y) == pytest.approx([5.0] * 17)

    def test_support_example(self):
        o = validate_oval(TrigPoly(10.0, [(3, 1.0, 0.0)]))
        assert curve_point(o, 0.0) == pytest.approx((11.0, 0.0))

    def test_tangent_direction(self, rng):
        # numerical tangent must be parallel to (-sin t, cos t)
        for _ in range(5):
            o = random_oval(rng, 6)
            th = rng.uniform(0, TAU, 20)
            h = 1e-6
            xp = np.array(curve_point(o, th + h)) - np.array(curve_point(o, th - h))
            xp /= 2 * h
            direction = np.stack([-np.sin(th), np.cos(th)])
            cross = xp[0] * direction[1] - xp[1] * direction[0]
            dot = xp[0] * direction[0] + xp[1] * direction[1]
            assert np.abs(cross / np.hypot(xp[0], xp[1])).max() < 1e-6
            assert dot.min() > 0  # same direction, not just parallel


class TestGeometrySummary:
    def test_constant_width_oval(self):
        o = validate_oval(TrigPoly(10.0, [(3, 1.0, 0.0)]))
        s = geometry_summary(o)
        assert s.length == pytest.approx(20 * math.pi, rel=1e-12)
        assert s.area == pytest.approx(96 * math.pi, rel=1e-12)
        assert s.avg_width == pytest.approx(20.0, rel=1e-12)
        assert s.is_constant_width
        assert not s.is_centrally_symmetric
        assert len(s.vertex_angles.angles) == 6
        # Barbier: width equals the average width everywhere
        assert s.width_max - s.width_min <= 1e-9 * s.avg_width
        assert s.width_min == pytest.approx(s.length / math.pi, rel=1e-12)

    def test_circle(self):
        s = geometry_summary(validate_oval(TrigPoly(3.0)))
        assert s.length == pytest.approx(6 * math.pi)
        assert s.area == pytest.approx(9 * math.pi)
        assert s.vertices_degenerate
        assert s.vertex_angles.angles == ()

    def test_centrally_symmetric_oval(self):
        o = validate_oval(TrigPoly(20.0, [(2, 2.0, 0.0)]))
        s = geometry_summary(o)
        assert s.length == pytest.approx(40 * math.pi, rel=1e-12)
        assert s.area == pytest.approx(394 * math.pi, rel=1e-12)
        assert (s.width_min, s.width_max) == pytest.approx((36.0, 44.0), rel=1e-10)
        assert not s.is_constant_width
        assert s.is_centrally_symmetric

    def test_steiner_point_is_first_harmonics(self):
        o = validate_oval(TrigPoly(10.0, [(1, 2.0, -1.5), (3, 1.0, 0.0)]))
        assert o.steiner == (2.0, -1.5)
        assert geometry_summary(o).steiner == (2.0, -1.5)


class TestRandomSweep:
    def test_cross_checks_on_500_ovals(self, rng):
        # geometry_summary cross-checks the closed forms against quadrature
        # internally and raises on disagreement
        for _ in range(500):
            o = random_oval(rng, 8, min_degree=1)
            s = geometry_summary(o)
            assert s.length ** 2 >= 4 * math.pi * s.area - 1e-9 * s.length ** 2
            assert s.width_min <= s.avg_width <= s.width_max or \
                abs(s.width_min - s.avg_width) <= 1e-9 * s.avg_width

    def test_four_vertices_on_generic_ovals(self, rng):
        skipped = 0
        for _ in range(100):
            o = random_oval(rng, 8, min_degree=2)
            s = geometry_summary(o)
            if s.vertex_angles.tangential or s.vertices_degenerate:
                skipped += 1
                continue
            assert len(s.vertex_angles.angles) >= 4
        assert skipped <= 1

    def test_isoperimetric_equality_only_for_circles(self):
        s = geometry_summary(validate_oval(TrigPoly(4.0)))
        assert s.length ** 2 == pytest.approx(4 * math.pi * s.area, rel=1e-12)
        o = validate_oval(TrigPoly(10.0, [(3, 1.0, 0.0)]))
        s = geometry_summary(o)
        assert s.length ** 2 > 4 * math.pi * s.area + 1.0

    def test_generator_respects_degree(self, rng):
        for d in (1, 3, 8):
            o = random_oval(rng, d)
            assert o.p.degree == d
