"""Continued-fraction colorings of Eisenstein sphere triangulations."""

from .eisenstein import (
    ALPHA,
    DomainError,
    EisensteinInt,
    canonicalize,
    comparison_exponent,
    continued_fraction,
    g_sequence,
    is_primitive,
    mul,
    slow_gauss,
    tree_children,
)
from .surface import PlaneTriangleId, QuotientComplex, build_complex, degree_sequence
from .flower import (
    BLACK,
    WHITE,
    CappedFlower,
    Necklace,
    Trapezoid,
    capped_flower,
    cf_eta,
    cf_face_count,
    cf_fold_count,
    color_at,
    empty_flower,
    fill_and_cap,
    necklace,
    necklace_gamma,
    stripe_counts,
)
from .coloring import (
    FaceColoring,
    GoodnessError,
    MonochromeRegion,
    alternating_coloring,
    color_balance,
    continued_fraction_coloring,
    eta,
    fold_count,
    is_good,
    monochrome_regions,
    vertex_four_coloring,
)
from .isoperimetric import (
    SpecialHexagon,
    region_isoperimetric_check,
    special_hexagon_area,
)
from .surd import CFExpansion, QuadraticSurd, periodic_cf_of_surd, surd_from_periodic_cf
from .limits import (
    UndeterminedError,
    eta_limit_numeric,
    fib_face_count,
    fib_fold_count,
    golden_zeta,
    ratio_scan,
    sqrt_zeta,
)
from .search import (
    SearchBudget,
    SearchReport,
    enumerate_good_colorings,
    ie_sweep,
    min_fold_search,
    vertex_swap,
)
from .render import RenderSpec, render_flower_svg, render_svg
from .cli import cli_main

__version__ = "0.1.0"
