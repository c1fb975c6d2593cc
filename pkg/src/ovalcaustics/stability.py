"""Stability of the improved isoperimetric inequalities.

How far an oval is from the equality class of each inequality is controlled
by its distance to a canonical member of that class: the constant-width
curve sharing its Wigner caustic, and the central symmetrization placed at
the Steiner point.  Both canonical bodies live one coefficient projection
away from the input, so the residual functionals and all the bounds reduce
to weighted sums over the spectrum, which this module evaluates along both
the geometric and the spectral route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .derived import CWMS, SMS, WIGNER, _covering, derived_support
from .oval import (OvalSpec, is_constant_width, radius_poly, support_area,
                   validate_oval)
from .trigpoly import TrigPoly, combine, l2_norm_sq, parity_parts, sup_abs


@dataclass(frozen=True)
class StabilityReport:
    steiner: tuple[float, float]
    phi_wigner: float
    phi_cwms: float
    phi_wigner_spectral: float
    phi_cwms_spectral: float
    d_inf_W: float
    d_2_W: float
    d_inf_S: float
    d_2_S: float
    bound_slacks: dict[str, float]

    def min_slack(self) -> float:
        return min(self.bound_slacks.values())

    def to_json_dict(self) -> dict:
        return {
            "steiner": list(self.steiner),
            "phi_wigner": self.phi_wigner,
            "phi_cwms": self.phi_cwms,
            "phi_wigner_spectral": self.phi_wigner_spectral,
            "phi_cwms_spectral": self.phi_cwms_spectral,
            "d_inf_W": self.d_inf_W,
            "d_2_W": self.d_2_W,
            "d_inf_S": self.d_inf_S,
            "d_2_S": self.d_2_S,
            "bound_slacks": self.bound_slacks,
        }


def steiner_symmetral(o: OvalSpec) -> TrigPoly:
    """Support function of the central symmetrization placed at the Steiner point.

    Keeps the constant term, the first harmonics (the Steiner translation)
    and all even harmonics; odd harmonics of index >= 3 vanish.
    """
    p = o.p
    keep = [(n, a, b) for n, a, b in p.terms if n == 1 or n % 2 == 0]
    return TrigPoly(p.a0, keep)


def wigner_type_support(o: OvalSpec) -> TrigPoly:
    """Constant-width support sharing the input's Wigner caustic: a0 + odd part."""
    _, odd = parity_parts(o.p)
    return TrigPoly(o.p.a0, odd.terms)


def wigner_type_curve(o: OvalSpec) -> OvalSpec:
    """Validated constant-width companion oval; raises NotAnOval outside the
    regime where the companion stays convex."""
    return validate_oval(wigner_type_support(o))


def deviation(p_k: TrigPoly, p_n: TrigPoly, metric: str) -> float:
    """Distance between support functions: 'sup' or 'l2'."""
    diff = combine(1.0, p_k, -1.0, p_n)
    if metric == "sup":
        return sup_abs(diff)
    if metric == "l2":
        return math.sqrt(l2_norm_sq(diff))
    raise ValueError(f"unknown metric {metric!r}")


def _abs_area(o: OvalSpec, kind) -> float:
    """|oriented area| of a derived set, straight from the coefficients."""
    q = derived_support(o, kind)
    if radius_poly(q).is_zero():
        return 0.0
    cover = 2.0 if _covering(o, kind) else 1.0
    return abs(support_area(q)) / cover


def stability_report(o: OvalSpec) -> StabilityReport:
    """Residual functionals, deviations, and slack of every stability bound.

    phi_wigner = L^2 - 4 pi A - 8 pi |wigner area|  (zero iff constant width)
    phi_cwms   = L^2 - 4 pi A -   pi |cwms area|    (zero iff centrally symmetric)

    Spectrally, phi_wigner = 2 pi^2 sum over even n >= 2 of (n^2-1)(a_n^2+b_n^2)
    and phi_cwms is the same sum over odd n >= 3.  Slack keys follow the
    serialized report format: "6.6", "6.7" (wigner-companion bounds),
    "6.8" (cwms area lower bound), "6.14", "6.16" (symmetral bounds),
    "6.17" (wigner area lower bound), "6.18" (sms area lower bound, absent
    for constant-width input).
    """
    p = o.p
    L = o.length
    A = o.area

    area_w = _abs_area(o, WIGNER)
    area_c = _abs_area(o, CWMS)
    area_s = _abs_area(o, SMS)

    phi_wigner = L ** 2 - 4 * math.pi * A - 8 * math.pi * area_w
    phi_cwms = L ** 2 - 4 * math.pi * A - math.pi * area_c

    phi_w_spec = 0.0
    phi_c_spec = 0.0
    for n, a, b in p.terms:
        if n >= 2 and n % 2 == 0:
            phi_w_spec += 2 * math.pi ** 2 * (n * n - 1) * (a * a + b * b)
        elif n >= 3:
            phi_c_spec += 2 * math.pi ** 2 * (n * n - 1) * (a * a + b * b)

    p_w = wigner_type_support(o)
    p_s = steiner_symmetral(o)
    d_inf_w = deviation(p, p_w, "sup")
    d_2_w = deviation(p, p_w, "l2")
    d_inf_s = deviation(p, p_s, "sup")
    d_2_s = deviation(p, p_s, "l2")

    slacks = {
        "6.6": phi_wigner - 4 * math.pi ** 2 * d_inf_w ** 2,
        "6.7": phi_wigner - 6 * math.pi * d_2_w ** 2,
        "6.8": area_c - max(4 * math.pi * d_inf_w ** 2, 6 * d_2_w ** 2),
        "6.14": phi_cwms - 8 * math.pi ** 2 * d_inf_s ** 2,
        "6.16": phi_cwms - 16 * math.pi * d_2_s ** 2,
        "6.17": area_w - max(math.pi * d_inf_s ** 2, 2 * d_2_s ** 2),
    }
    if not is_constant_width(p):
        slacks["6.18"] = area_s - max(
            2 * math.pi * d_inf_s ** 2 + math.pi * d_inf_w ** 2,
            2 * math.pi * d_inf_s ** 2 + 1.5 * d_2_w ** 2,
            4 * d_2_s ** 2 + math.pi * d_inf_w ** 2,
            4 * d_2_s ** 2 + 1.5 * d_2_w ** 2,
        )

    return StabilityReport(
        steiner=o.steiner,
        phi_wigner=phi_wigner, phi_cwms=phi_cwms,
        phi_wigner_spectral=phi_w_spec, phi_cwms_spectral=phi_c_spec,
        d_inf_W=d_inf_w, d_2_W=d_2_w, d_inf_S=d_inf_s, d_2_S=d_2_s,
        bound_slacks=slacks)
