"""Numerics for the class BS(alpha) of Booth-lemniscate starlike functions."""
from .booth import BoothRegion, check_re_bounds, curvature_min, eval_F_alpha
from .bsclass import (
    BigF,
    FAlphaForm,
    GnForm,
    SchwarzGenerator,
    SeriesBacked,
    SmallP,
    TildeF,
    build_member,
    convexity_check_p,
    evaluate_tilde_f,
    gn_nonmembership,
    membership_test,
    starlike_strip_check,
)
from .grid import GridSpec, Verdict
from .radii import alpha_for_radius, h_function, radius_starlike, sharpness_check
from .series import PowerSeries
from .subord import JordanCurve, check_subordination, re_f_over_z_bounds, verify_bounds_on_members, winding_number

__version__ = "0.1.0"
