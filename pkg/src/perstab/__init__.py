"""Exact-arithmetic stability and wall-crossing calculator for extremal contractions.

Core layers (all exact, no floating point):

  lattice       contraction models, Chern vectors, intersection pairing
  chern         divisor twists, pushforward oracle, surface Euler pairing
  charges       central charges and exact phase comparison
  slopes        slope / tilt-slope functions and the heart trichotomy
  inequalities  discriminant-type inequality margins, support norm
  surd          quadratic surds and unions of open intervals
  catalog       simple-object catalogs and the admissible twist range
  sequiv        S-equivalence decompositions
  walls         one-parameter wall crossing on the surface

The FastAPI service in `perstab.service` wraps every operation as a JSON
endpoint, and `perstab.cli` is a thin client over it.
"""

from .catalog import BRangeReport, QuadPoly, SimpleClass, simples, solve_b_range, twisted_ch3_poly
from .charges import ChargeValue, Order, PhaseKey, compare_phase, z_surface, z_threefold
from .chern import (
    DivisorSheafData,
    euler_pairing_surface,
    grr_push_divisor,
    grr_push_fiber_line,
    twist,
)
from .inequalities import (
    BGReport,
    bg_discriminant,
    bg_strong_margin,
    bg_threefold_margin,
    bg_weak_surface,
    support_norm,
    support_ratio_sq,
)
from .lattice import (
    CanonicalData,
    ChernVector,
    ContractionKind,
    ContractionModel,
    cv_shift,
    make_model,
    pair_curve_divisor,
)
from .rationals import InputError
from .sequiv import DecomposeResult, decompose, s_equivalent
from .slopes import ExtendedSlope, HeartCase, mu, nu, trichotomy
from .surd import BRange, Interval, QuadExtNumber, positivity_range
from .walls import (
    EpsPoly,
    ModuliObject,
    Verdict,
    WallParamResult,
    family_charge,
    moduli_objects,
    phase_order_family,
    solve_wall_param,
    stability_verdict,
)

__version__ = "0.1.0"
