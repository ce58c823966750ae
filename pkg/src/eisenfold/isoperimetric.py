"""Isoperimetric bounds for lattice polygons and good colorings.

Convex hexagons with all interior angles 120 degrees satisfy
perimeter^2/area >= 8*sqrt(3), i.e. perimeter^2 >= 6 * (unit triangle
count) in lattice units, with equality exactly at regular hexagons.  Every
monochrome region of a good coloring is such a polygon (possibly
degenerated to a pentagon, rhombus, or triangle), and summing the per
region bounds through a Farey-sum aggregation yields the global bound
eta >= 3 on the squared-fold-to-face ratio.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

from .eisenstein import DomainError
from .coloring import FaceColoring, GoodnessError, fold_count, is_good, monochrome_regions
from .flower import WHITE

# unit hexagon-walk directions in the (1, alpha) basis, 60 degrees apart
_DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


@dataclass(frozen=True, slots=True)
class SpecialHexagon:
    """Convex hexagon with all interior angles 2*pi/3, given by side lengths.

    Sides are listed in walk order; closure demands l1+l2 = l4+l5 and
    l2+l3 = l5+l6.  Zero lengths give the degenerate pentagons, rhombi,
    and triangles.
    """

    lengths: tuple

    def __post_init__(self):
        ls = self.lengths
        if len(ls) != 6 or any(x < 0 for x in ls):
            raise DomainError("need six non-negative side lengths")
        if ls[0] + ls[1] != ls[3] + ls[4] or ls[1] + ls[2] != ls[4] + ls[5]:
            raise DomainError("side lengths do not close up")

    def perimeter(self):
        return sum(self.lengths)

    def triangle_units(self):
        """Area divided by the unit-triangle area sqrt(3)/4.

        Corner-cutting: extending sides 1, 3, 5 forms an equilateral
        triangle of side l6+l1+l2 from which corner triangles of sides
        l2, l4, l6 are removed.
        """
        l1, l2, l3, l4, l5, l6 = self.lengths
        t = l6 + l1 + l2
        return t * t - l2 * l2 - l4 * l4 - l6 * l6

    def vertices(self):
        """Developed corner chain (may repeat points at zero-length sides)."""
        x, y = 0, 0
        pts = []
        for ln, (dx, dy) in zip(self.lengths, _DIRS):
            pts.append((x, y))
            x, y = x + ln * dx, y + ln * dy
        if (x, y) != (0, 0):
            raise AssertionError("developed hexagon does not close")
        return pts

    def shoelace_triangle_units(self):
        """Independent area computation from the developed vertex chain."""
        pts = self.vertices()
        total = 0
        for i in range(6):
            px, py = pts[i]
            qx, qy = pts[(i + 1) % 6]
            total += px * qy - py * qx
        return total


def special_hexagon_area(h: SpecialHexagon) -> float:
    """Euclidean area; exact rational multiples of sqrt(3) stay exact upstream."""
    return h.triangle_units() * sqrt(3) / 4


def enumerate_lattice_special_hexagons(perimeter_max: int):
    """Every integer-sided special hexagon with perimeter <= perimeter_max.

    Includes the degenerate shapes with some zero sides; excludes only the
    empty shape of zero area.
    """
    out = []
    for l1 in range(perimeter_max + 1):
        for l2 in range(perimeter_max + 1):
            for l3 in range(perimeter_max + 1):
                for l4 in range(perimeter_max + 1):
                    l5 = l1 + l2 - l4
                    l6 = l3 + l4 - l1
                    if l5 < 0 or l6 < 0:
                        continue
                    ls = (l1, l2, l3, l4, l5, l6)
                    if sum(ls) > perimeter_max or sum(ls) == 0:
                        continue
                    h = SpecialHexagon(ls)
                    if h.triangle_units() > 0:
                        out.append(h)
    return out


@dataclass(frozen=True)
class RegionIsoperimetricReport:
    region_ratios: tuple[Fraction, ...]
    min_ratio: Fraction
    min_region_index: int
    per_region_bound_holds: bool
    fold_total: int
    white_face_total: int
    farey_aggregate: Fraction
    eta: Fraction
    eta_lower_bound_holds: bool


def region_isoperimetric_check(col: FaceColoring) -> RegionIsoperimetricReport:
    """Per-white-region ratios f_j^2/F_j and the aggregated eta >= 3 chain.

    The white regions tile half the faces and their boundaries carry every
    fold once, so 2*eta = (sum f_j)^2 / (F/2) >= Farey sum of f_j^2/F_j
    >= min >= 6.
    """
    if not is_good(col).good:
        raise GoodnessError("isoperimetric check needs a good coloring")
    regions = monochrome_regions(col)
    whites = [(i, r) for i, r in enumerate(regions) if r.color == WHITE]
    ratios = tuple(
        Fraction(r.boundary_length ** 2, len(r.faces)) for _, r in whites
    )
    f = fold_count(col)
    F = col.complex.face_count
    white_faces = sum(len(r.faces) for _, r in whites)
    fold_sum = sum(r.boundary_length for _, r in whites)
    if fold_sum != f or white_faces * 2 != F:
        raise AssertionError("white regions must carry all folds and half the faces")
    sq_sum = sum(r.boundary_length ** 2 for _, r in whites)
    farey = Fraction(sq_sum, white_faces)
    min_i = min(range(len(ratios)), key=lambda i: ratios[i])
    the_eta = Fraction(f * f, F)
    # chain: 2 eta = f^2/(F/2) >= sum f_j^2 / (F/2) = farey >= min >= 6
    chain_ok = (
        2 * the_eta == Fraction(fold_sum ** 2, white_faces)
        and fold_sum ** 2 >= sq_sum
        and farey >= min(ratios)
        and min(ratios) >= 6
        and the_eta >= 3
    )
    return RegionIsoperimetricReport(
        region_ratios=ratios,
        min_ratio=ratios[min_i],
        min_region_index=whites[min_i][0],
        per_region_bound_holds=all(r >= 6 for r in ratios),
        fold_total=f,
        white_face_total=white_faces,
        farey_aggregate=farey,
        eta=the_eta,
        eta_lower_bound_holds=chain_ok,
    )
