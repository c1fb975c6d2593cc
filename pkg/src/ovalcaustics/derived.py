"""Sets derived from an oval: equidistants, Wigner caustic, CWMS and SMS.

Every derived set is handled through its generalized support function q,
built from the oval's support function by a coefficient-level map.  The
signed radius ``q + q''`` drives everything else: its zeros are the cusp
singularities, its absolute integral is the length, and the oriented area
comes from the same Parseval-style sum as for the base curve.

Two of the sets are traced twice by the parameter: the Wigner caustic
always, and the SMS exactly when the oval has constant width (its support
function is then antiperiodic).  Reported counts, lengths and areas refer to
the geometric set; parameter-domain counts are kept alongside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .oval import (OvalSpec, is_centrally_symmetric, is_constant_width,
                   radius_poly, support_area)
from .trigpoly import (TAU, RootList, TrigPoly, abs_integral_from_roots,
                       antipodal_shift, combine, sign_changes, sup_abs)

EQUIDISTANT = "equidistant"
WIGNER_NAME = "wigner"
CWMS_NAME = "cwms"
SMS_NAME = "sms"


@dataclass(frozen=True)
class DerivedKind:
    """Which derived set: one of the named sets or an equidistant with ratio lam."""

    name: str
    lam: float | None = None

    def __post_init__(self):
        if self.name not in (EQUIDISTANT, WIGNER_NAME, CWMS_NAME, SMS_NAME):
            raise ValueError(f"unknown derived set kind {self.name!r}")
        if (self.name == EQUIDISTANT) != (self.lam is not None):
            raise ValueError("ratio lam is required exactly for equidistants")

    def to_json_dict(self) -> dict:
        d = {"name": self.name}
        if self.lam is not None:
            d["lambda"] = self.lam
        return d


WIGNER = DerivedKind(WIGNER_NAME)
CWMS = DerivedKind(CWMS_NAME)
SMS = DerivedKind(SMS_NAME)


def equidistant(lam: float) -> DerivedKind:
    return DerivedKind(EQUIDISTANT, float(lam))


class PointSet(ValueError):
    """The derived set degenerates to a single point (its location is carried)."""

    def __init__(self, point: tuple[float, float]):
        super().__init__(f"derived set degenerates to the point {point}")
        self.point = point


class SingularPoint(ValueError):
    """Curvature requested at a cusp of the derived set."""


@dataclass(frozen=True)
class DerivedSetReport:
    kind: DerivedKind
    support: TrigPoly
    signed_radius: TrigPoly
    oriented_area: float
    length: float
    cusp_angles: RootList
    cusp_count: int
    raw_cusp_count: int
    rotation_number_abs: float
    double_cover: bool

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.to_json_dict(),
            "support": self.support.to_json_dict(),
            "signed_radius": self.signed_radius.to_json_dict(),
            "oriented_area": self.oriented_area,
            "length": self.length,
            "cusp_angles": self.cusp_angles.to_json_dict(),
            "cusp_count": self.cusp_count,
            "raw_cusp_count": self.raw_cusp_count,
            "rotation_number_abs": self.rotation_number_abs,
            "double_cover": self.double_cover,
        }


def derived_support(o: OvalSpec, kind: DerivedKind) -> TrigPoly:
    """Generalized support function of the requested derived set.

    equidistant(lam): ``lam p(t) - (1-lam) p(t+pi)``
    wigner:           ``(p(t) - p(t+pi)) / 2``       (odd harmonics)
    cwms:             ``p(t) + p(t+pi) - 2 a0``      (even harmonics, doubled)
    sms:              ``p(t) - a0``                  (every harmonic)
    """
    p = o.p
    if kind.name == EQUIDISTANT:
        return combine(kind.lam, p, -(1.0 - kind.lam), antipodal_shift(p))
    if kind.name == WIGNER_NAME:
        return combine(0.5, p, -0.5, antipodal_shift(p))
    if kind.name == CWMS_NAME:
        q = combine(1.0, p, 1.0, antipodal_shift(p))
        return TrigPoly(0.0, q.terms)
    return TrigPoly(0.0, p.terms)  # sms


def oriented_area(q: TrigPoly) -> float:
    """Signed area enclosed by the parameter traversal of the support q."""
    return support_area(q)


def _covering(o: OvalSpec, kind: DerivedKind) -> bool:
    if kind.name == WIGNER_NAME:
        return True
    if kind.name == SMS_NAME:
        return is_constant_width(o.p)
    return False


def derived_report(o: OvalSpec, kind: DerivedKind) -> DerivedSetReport:
    """Construct the derived set and measure it.

    Cusps are the transversal zeros of the signed radius; tangential zeros
    are reported but not counted.  Degenerate sets raise ``PointSet``.  For
    the SMS the coefficient-level oriented area is cross-checked against the
    closed form ``A - L^2 / 4pi``.
    """
    q = derived_support(o, kind)
    sr = radius_poly(q)
    if sr.is_zero():
        a1, b1 = q.coeff(1)
        raise PointSet((a1, b1))

    double = _covering(o, kind)
    full = sign_changes(sr)
    if double:
        angles = tuple(a for a in full.angles if a < math.pi - 1e-9)
        tang = tuple(t for t in full.tangential if t < math.pi - 1e-9)
        cusp_angles = RootList(angles, tang)
    else:
        cusp_angles = full
    cover = 2.0 if double else 1.0

    length = abs_integral_from_roots(sr, full.angles) / cover
    area_param = support_area(q)
    area = area_param / cover

    if kind.name == SMS_NAME:
        closed = o.area - o.length ** 2 / (4.0 * math.pi)
        if abs(area_param - closed) > 1e-10 * (abs(closed) + o.length ** 2):
            raise ArithmeticError("sms oriented-area closed form disagrees")

    rotation = 0.5 if (kind.name == SMS_NAME and double) else 1.0
    return DerivedSetReport(
        kind=kind,
        support=q,
        signed_radius=sr,
        oriented_area=area,
        length=length,
        cusp_angles=cusp_angles,
        cusp_count=len(cusp_angles.angles),
        raw_cusp_count=len(full.angles),
        rotation_number_abs=rotation,
        double_cover=double,
    )


def derived_curvature(o: OvalSpec, kind: DerivedKind, theta: float) -> float:
    """Curvature of the derived set at a regular parameter value.

    Returns ``1 / |q + q''|`` and, for the CWMS and SMS, cross-checks the
    equivalent quotient written in terms of the base curvature.
    """
    q = derived_support(o, kind)
    sr = radius_poly(q)
    v = sr.eval(theta)
    eps = 1e-10 * sr.scale
    if abs(v) <= eps:
        raise SingularPoint(f"signed radius vanishes at theta={theta}")
    kappa_set = 1.0 / abs(v)

    rho = radius_poly(o.p)
    if kind.name == CWMS_NAME:
        ka = 1.0 / rho.eval(theta)
        kb = 1.0 / rho.eval(theta + math.pi)
        wbar = o.avg_width
        alt = ka * kb / abs(ka + kb - wbar * ka * kb)
    elif kind.name == SMS_NAME:
        k = 1.0 / rho.eval(theta)
        alt = TAU * k / abs(TAU - o.length * k)
    else:
        return kappa_set
    if abs(alt - kappa_set) > 1e-9 * kappa_set:
        raise ArithmeticError("curvature quotient form disagrees with 1/|signed radius|")
    return kappa_set


# -- isoperimetric identity verification ---------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    label: str
    lhs: float
    rhs: float

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)

    def to_json_dict(self) -> dict:
        return {"label": self.label, "lhs": self.lhs, "rhs": self.rhs,
                "residual": self.residual}


@dataclass(frozen=True)
class IdentityReport:
    length: float
    area: float
    wigner_area: float
    cwms_area: float
    sms_area: float
    sms_area_param: float
    constant_width: bool
    centrally_symmetric: bool
    equalities: tuple[IdentityCheck, ...]
    length_slacks: dict[str, float]
    sign_checks: dict[str, bool]

    def passes(self, rel_tol: float = 1e-9) -> bool:
        budget = rel_tol * self.length ** 2
        if any(e.residual > budget for e in self.equalities):
            return False
        if any(s < -budget for s in self.length_slacks.values()):
            return False
        return all(self.sign_checks.values())

    def to_json_dict(self) -> dict:
        return {
            "length": self.length,
            "area": self.area,
            "wigner_area": self.wigner_area,
            "cwms_area": self.cwms_area,
            "sms_area": self.sms_area,
            "sms_area_param": self.sms_area_param,
            "constant_width": self.constant_width,
            "centrally_symmetric": self.centrally_symmetric,
            "equalities": [e.to_json_dict() for e in self.equalities],
            "length_slacks": self.length_slacks,
            "sign_checks": self.sign_checks,
        }


def build_reports(o: OvalSpec) -> dict[str, DerivedSetReport | None]:
    """Reports for the three named sets; None where the set is a point."""
    out: dict[str, DerivedSetReport | None] = {}
    for kind in (WIGNER, CWMS, SMS):
        try:
            out[kind.name] = derived_report(o, kind)
        except PointSet:
            out[kind.name] = None
    return out


def _set_measures(rep: DerivedSetReport | None):
    """(geometric area, parameter-domain area, geometric length); zeros if a point."""
    if rep is None:
        return 0.0, 0.0, 0.0
    cover = 2.0 if rep.double_cover else 1.0
    return rep.oriented_area, rep.oriented_area * cover, rep.length


def verify_identities(o: OvalSpec,
                      reports: dict[str, DerivedSetReport | None] | None = None
                      ) -> IdentityReport:
    """Evaluate the area identities and length bounds tying the derived sets.

    The master identity ``L^2 = 4 pi A + 8 pi |wigner area| + pi |cwms area|``
    holds for every oval; the SMS variant uses coefficient 4 pi, or 8 pi with
    the halved area when the double covering kicks in.  Lengths obey
    ``L_cwms <= 4L``, ``L_sms <= 2L`` (``<= L`` for constant width),
    ``2 L_wigner <= L`` and ``L_sms <= L_cwms/2 + 2 L_wigner``.

    Pass prebuilt ``reports`` (from :func:`build_reports`) to avoid repeating
    the cusp isolation when the caller already has them.
    """
    L = o.length
    A = o.area
    cw = is_constant_width(o.p)
    cs = is_centrally_symmetric(o.p)

    if reports is None:
        reports = build_reports(o)
    aw, _, lw = _set_measures(reports[WIGNER_NAME])
    ac, _, lc = _set_measures(reports[CWMS_NAME])
    asms, asms_param, ls = _set_measures(reports[SMS_NAME])

    checks = [IdentityCheck("length_area_wigner_cwms",
                            L ** 2, 4 * math.pi * A + 8 * math.pi * abs(aw) + math.pi * abs(ac))]
    if cw:
        checks.append(IdentityCheck("length_area_sms_double",
                                    L ** 2, 4 * math.pi * A + 8 * math.pi * abs(asms)))
        qs = derived_support(o, SMS)
        qw = derived_support(o, WIGNER)
        checks.append(IdentityCheck("sms_is_wigner", sup_abs(combine(1, qs, -1, qw)), 0.0))
        checks.append(IdentityCheck("cwms_degenerate", abs(ac), 0.0))
    else:
        checks.append(IdentityCheck("length_area_sms",
                                    L ** 2, 4 * math.pi * A + 4 * math.pi * abs(asms)))
        checks.append(IdentityCheck("set_area_sum",
                                    4 * abs(asms), 8 * abs(aw) + abs(ac)))
    checks.append(IdentityCheck("sms_area_closed_form",
                                asms_param, A - L ** 2 / (4 * math.pi)))

    slacks = {
        "cwms_length_4x": 4 * L - lc,
        "sms_length_2x": 2 * L - ls,
        "wigner_length_2x": L - 2 * lw,
        "sms_length_combo": 0.5 * lc + 2 * lw - ls,
    }
    if cw:
        slacks["sms_length_1x_constant_width"] = L - ls

    signs = {
        "cwms_area_nonpositive": ac <= 1e-9 * L ** 2,
        "sms_area_nonpositive": asms <= 1e-9 * L ** 2,
    }

    return IdentityReport(
        length=L, area=A,
        wigner_area=aw, cwms_area=ac, sms_area=asms, sms_area_param=asms_param,
        constant_width=cw, centrally_symmetric=cs,
        equalities=tuple(checks), length_slacks=slacks, sign_checks=signs)
