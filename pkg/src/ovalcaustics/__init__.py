"""Support-function geometry of planar ovals and their derived sets.

The package models smooth convex plane curves through finite Fourier series
of their Minkowski support functions, builds the Wigner caustic, the
constant width measure set (CWMS) and the spherical measure set (SMS),
counts their cusps, and verifies the exact area identities and the
stability bounds that tie all of these together.  A separate parametric
route handles non-convex simple closed curves.
"""

__version__ = "0.1.0"

from .derived import (CWMS, SMS, WIGNER, DerivedKind, DerivedSetReport,
                      IdentityCheck, IdentityReport, PointSet, SingularPoint,
                      build_reports, derived_curvature, derived_report,
                      derived_support, equidistant, oriented_area,
                      verify_identities)
from .oval import (NotAnOval, OvalSpec, OvalSummary, curve_point,
                   geometry_summary, is_centrally_symmetric,
                   is_constant_width, radius_poly, random_oval, support_area,
                   validate_oval)
from .parametric import (NotRegular, ParametricCurve, SmsParametricReport,
                         arc_length, frenet, green_area, is_simple_polyline,
                         sms_parametric, sms_point, support_to_parametric)
from .stability import (StabilityReport, deviation, stability_report,
                        steiner_symmetral, wigner_type_curve,
                        wigner_type_support)
from .trigpoly import (IdenticallyZero, RootList, TrigPoly, abs_integral,
                       antipodal_shift, combine, l2_norm_sq, parity_parts,
                       sign_changes, sup_abs, value_range)

__all__ = [
    "TrigPoly", "RootList", "IdenticallyZero",
    "abs_integral", "antipodal_shift", "combine", "l2_norm_sq",
    "parity_parts", "sign_changes", "sup_abs", "value_range",
    "OvalSpec", "OvalSummary", "NotAnOval", "validate_oval", "curve_point",
    "geometry_summary", "random_oval", "radius_poly", "support_area",
    "is_constant_width", "is_centrally_symmetric",
    "DerivedKind", "WIGNER", "CWMS", "SMS", "equidistant",
    "DerivedSetReport", "PointSet", "SingularPoint", "build_reports",
    "derived_support", "derived_report", "derived_curvature",
    "oriented_area", "IdentityReport", "IdentityCheck", "verify_identities",
    "ParametricCurve", "NotRegular", "SmsParametricReport",
    "frenet", "arc_length", "green_area", "sms_parametric", "sms_point",
    "is_simple_polyline", "support_to_parametric",
    "StabilityReport", "steiner_symmetral", "wigner_type_curve",
    "wigner_type_support", "deviation", "stability_report",
]
