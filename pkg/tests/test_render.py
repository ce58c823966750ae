from fractions import Fraction

import pytest

from eisenfold.eisenstein import DomainError, EisensteinInt
from eisenfold.render import RenderSpec, render_flower_svg, render_svg


def test_render_byte_determinism():
    spec = RenderSpec(beta=EisensteinInt(2, 3))
    assert render_svg(spec) == render_svg(spec)


def test_fold_stroke_count_is_three_times_fold_count():
    # one fundamental domain carries each quotient edge three times
    svg = render_svg(RenderSpec(beta=EisensteinInt(2, 3)))
    assert svg.count('class="fold"') == 3 * 23
    svg = render_svg(RenderSpec(beta=EisensteinInt(1, 2)))
    assert svg.count('class="fold"') == 3 * 13


def test_triangle_counts_per_domain():
    svg = render_svg(RenderSpec(beta=EisensteinInt(1, 1), domains=1, show_folds=False))
    assert svg.count("<polygon") == 18 + 1  # triangles + rhombus
    svg = render_svg(RenderSpec(beta=EisensteinInt(1, 1), domains=2,
                                show_rhombus=False, show_folds=False))
    assert svg.count("<polygon") == 18 * 4


def test_rhombus_toggle():
    spec = RenderSpec(beta=EisensteinInt(1, 2), show_rhombus=False)
    assert 'class="rhombus"' not in render_svg(spec)
    spec = RenderSpec(beta=EisensteinInt(1, 2), show_rhombus=True)
    assert 'class="rhombus"' in render_svg(spec)


def test_colored_render_rejects_degenerate_beta():
    with pytest.raises(DomainError):
        render_svg(RenderSpec(beta=EisensteinInt(1, 0)))
    with pytest.raises(DomainError):
        render_svg(RenderSpec(beta=EisensteinInt(2, 4)))


def test_bare_render_allows_any_beta():
    svg = render_svg(RenderSpec(beta=EisensteinInt(1, 0), colored=False))
    assert svg.count("<polygon") == 6 + 1


def test_flower_render_stripes_3_7():
    svg = render_flower_svg(Fraction(3, 7))
    # five necklace levels of six trapezoids each
    assert svg.count("<polygon points") == 5 * 6
    # two maximal-trapezoid runs, outlined once per rotation slot
    assert svg.count('class="maximal-trapezoid"') == 2 * 6
    assert render_flower_svg(Fraction(3, 7)) == svg


def test_flower_render_validates_aspect():
    with pytest.raises(DomainError):
        render_flower_svg(Fraction(3, 2))
