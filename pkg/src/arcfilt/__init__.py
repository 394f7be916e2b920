"""Poincare series of the arc filtration on surface singularities.

Stabilizations z^2 = f(x, y) of plane curves are handled through the dual
graph of an embedded resolution of f = 0; hypersurfaces with a reduced
tangent cone and the Arnold families have closed forms.
"""

from .resolution import (
    BlowFree,
    BlowOrigin,
    BlowSatellite,
    BlowUpProgram,
    DualGraph,
    InvalidGraphError,
    brieskorn_program,
    euler_char_smooth_part,
    from_program,
    multiplicities,
    normalize_parity,
    ordinary_point_program,
    tangential_program,
)
from .series import (
    ClosedForm,
    FactoredSeries,
    MinTruncatedPolynomial,
    OneVarSeries,
    expand,
    match_closed_form,
    poincare_pi,
    prune_dominated,
    reduce,
    stabilization_factor,
    substitute_sigma,
)
from .pipeline import (
    StabilizationResult,
    UnknownFamilyError,
    classify_arnold,
    corollary_even,
    corollary_odd_tangent,
    stabilization_poincare,
    tangent_cone_poincare,
)

__version__ = "0.1.0"
