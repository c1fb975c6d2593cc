"""Cross-module invariant battery for randomized sweeps.

Each check is a named pass/fail with a short diagnostic; the battery runs
them all on one oval so seeded sweeps (the ``fuzz`` command and the test
suite) share a single definition of "everything holds".
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .derived import build_reports, verify_identities
from .oval import OvalSpec, geometry_summary
from .quadrature import adaptive_periodic_integral
from .stability import stability_report

REL_TOL = 1e-9


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _areas_agree(q, coeff_area: float, budget: float) -> bool:
    quad = adaptive_periodic_integral(
        lambda t: 0.5 * (q.eval(t) ** 2 - q.eval(t, 1) ** 2), 8 * (q.degree + 4))
    return abs(quad - coeff_area) <= budget


def invariant_battery(o: OvalSpec) -> list[CheckResult]:
    """Run every cross-module invariant on one oval."""
    out: list[CheckResult] = []
    L = o.length
    budget = REL_TOL * L ** 2

    summary = geometry_summary(o)
    reports = build_reports(o)
    ident = verify_identities(o, reports)
    stab = stability_report(o)

    generic = not (summary.vertex_angles.tangential or summary.vertices_degenerate)
    for rep in reports.values():
        if rep is not None and rep.cusp_angles.tangential:
            generic = False

    out.append(CheckResult(
        "isoperimetric", L ** 2 - 4 * math.pi * summary.area >= -budget,
        f"L^2-4piA={L ** 2 - 4 * math.pi * summary.area:.3e}"))

    for chk in ident.equalities:
        out.append(CheckResult(f"identity_{chk.label}", chk.residual <= budget,
                               f"residual={chk.residual:.3e}"))
    for key, slack in ident.length_slacks.items():
        out.append(CheckResult(f"slack_{key}", slack >= -REL_TOL * L,
                               f"slack={slack:.3e}"))
    for key, ok in ident.sign_checks.items():
        out.append(CheckResult(f"sign_{key}", ok))

    # coefficient-formula areas against direct quadrature
    ok_areas = _areas_agree(o.p, summary.area, budget)
    for name, rep in reports.items():
        if rep is not None:
            cover = 2.0 if rep.double_cover else 1.0
            ok_areas = ok_areas and _areas_agree(
                rep.support, rep.oriented_area * cover, budget)
    out.append(CheckResult("area_quadrature_agreement", ok_areas))

    # classifier ties: degenerate area iff the matching symmetry class
    cwms_zero = abs(ident.cwms_area) <= budget
    wig_zero = abs(ident.wigner_area) <= budget
    out.append(CheckResult("classifier_constant_width",
                           cwms_zero == summary.is_constant_width,
                           f"area={ident.cwms_area:.3e}"))
    out.append(CheckResult("classifier_centrally_symmetric",
                           wig_zero == summary.is_centrally_symmetric,
                           f"area={ident.wigner_area:.3e}"))
    out.append(CheckResult("phi_wigner_zero_iff_constant_width",
                           (abs(stab.phi_wigner) <= budget) == summary.is_constant_width))
    out.append(CheckResult("phi_cwms_zero_iff_centrally_symmetric",
                           (abs(stab.phi_cwms) <= budget) == summary.is_centrally_symmetric))

    # stability: nonnegative residuals, spectral agreement, bound slacks
    out.append(CheckResult("phi_nonnegative",
                           stab.phi_wigner >= -budget and stab.phi_cwms >= -budget))
    spec_ok = (abs(stab.phi_wigner - stab.phi_wigner_spectral)
               <= REL_TOL * (abs(stab.phi_wigner) + L ** 2 * 1e-6))
    spec_ok = spec_ok and (abs(stab.phi_cwms - stab.phi_cwms_spectral)
                           <= REL_TOL * (abs(stab.phi_cwms) + L ** 2 * 1e-6))
    out.append(CheckResult("phi_spectral_agreement", spec_ok))
    worst = min(stab.bound_slacks.values())
    out.append(CheckResult("stability_slacks", worst >= -budget,
                           f"min slack={worst:.3e}"))

    # cusp parity and vertex count, meaningful on generic draws only
    if generic:
        w = reports["wigner"]
        c = reports["cwms"]
        s = reports["sms"]
        if w is not None:
            out.append(CheckResult("wigner_cusps_odd_ge3",
                                   w.cusp_count % 2 == 1 and w.cusp_count >= 3,
                                   f"count={w.cusp_count}"))
        if c is not None:
            out.append(CheckResult("cwms_cusps_multiple_of_4",
                                   c.cusp_count % 4 == 0 and c.cusp_count >= 4,
                                   f"count={c.cusp_count}"))
        if s is not None:
            if s.double_cover:
                ok = s.raw_cusp_count % 2 == 0 and s.raw_cusp_count >= 4
            else:
                ok = s.cusp_count % 2 == 0 and s.cusp_count >= 4
            out.append(CheckResult("sms_cusps_even_ge4", ok,
                                   f"count={s.cusp_count}"))
        out.append(CheckResult("four_vertices",
                               len(summary.vertex_angles.angles) >= 4,
                               f"count={len(summary.vertex_angles.angles)}"))
    else:
        out.append(CheckResult("generic", True, "non-generic draw, parity skipped"))

    return out
