"""Trapezoid necklaces, capped flowers, and the periodic planar coloring.

A necklace of aspect a/b is six congruent lattice trapezoids arranged with
six-fold rotational symmetry around a center, consecutive ones meeting at
single vertices.  Iterating the slow Gauss map on the aspect ratio nests
necklaces inward until aspect 1/1; alternating their colors, filling the
six central triangles, and capping the convex hull produces a hexagonal
tile whose translates color the whole plane.  That coloring is invariant
under the rotation group used by the quotient surface, so it descends to a
face coloring of the sphere triangulation.

Two exactness rules hold everywhere: all region tests use integer
half-plane arithmetic in the (1, alpha) basis, and triangles are classified
by their tripled centroids, which never land on region boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .eisenstein import DomainError, EisensteinInt, slow_gauss
from .surface import PlaneTriangleId

BLACK, WHITE = 1, 0


class ClassificationError(RuntimeError):
    """A plane triangle escaped the region partition; the partition must be exact."""


def _rot_pair(p: tuple[int, int]) -> tuple[int, int]:
    """Multiply a + b*alpha by alpha."""
    a, b = p
    return (-b, a + b)


def _rot_poly(poly, k):
    for _ in range(k % 6):
        poly = [_rot_pair(p) for p in poly]
    return poly


def _cross(ux, uy, vx, vy):
    return ux * vy - uy * vx


def _point_in_convex(poly, px, py) -> bool:
    n = len(poly)
    for i in range(n):
        ax, ay = poly[i]
        bx, by = poly[(i + 1) % n]
        ex, ey = bx - ax, by - ay
        if ex == 0 and ey == 0:
            continue
        if _cross(ex, ey, px - ax, py - ay) < 0:
            return False
    return True


@dataclass(frozen=True, slots=True)
class Trapezoid:
    """One necklace trapezoid: diagonal sides of length a, top of length b.

    slot is the rotation position (0..5) around the center; mirrored picks
    the reflected placement of the model trapezoid.  The slot-0 unmirrored
    model has vertices a+b*alpha, (a-b)+b*alpha, (2a-b)+(b-a)*alpha,
    a+(b-a)*alpha; the bottom degenerates to a point when a = b.
    """

    a: int
    b: int
    center: EisensteinInt
    slot: int
    mirrored: bool

    def corners(self) -> tuple[EisensteinInt, ...]:
        """Labeled corners (bottom-left, bottom-right, top-right, top-left).

        The bottom pair coincides when a = b.  Mirrored trapezoids are the
        complex conjugates of the model, so their labels keep their roles
        while the cyclic orientation reverses.
        """
        a, b = self.a, self.b
        quad = [(2 * a - b, b - a), (a, b - a), (a, b), (a - b, b)]
        if self.mirrored:
            quad = [(x + y, -y) for (x, y) in quad]
        quad = _rot_poly(quad, self.slot)
        c = self.center
        return tuple(EisensteinInt(x + c.a, y + c.b) for (x, y) in quad)

    def vertices(self) -> tuple[EisensteinInt, ...]:
        """Corners in ccw cyclic order (for half-plane containment tests)."""
        p3, p4, p1, p2 = self.corners()
        return (p3, p4, p1, p2) if not self.mirrored else (p2, p1, p4, p3)

    def sides(self) -> list[tuple[str, frozenset[EisensteinInt]]]:
        """Nondegenerate sides as (kind, endpoint set) with kinds bottom/leg/top."""
        p3, p4, p1, p2 = self.corners()
        out = []
        if p3 != p4:
            out.append(("bottom", frozenset((p3, p4))))
        out.append(("leg", frozenset((p4, p1))))
        out.append(("top", frozenset((p1, p2))))
        out.append(("leg", frozenset((p2, p3))))
        return out

    def quad_tripled(self) -> list[tuple[int, int]]:
        return [(3 * v.a, 3 * v.b) for v in self.vertices()]

    def triangle_capacity(self) -> int:
        """Unit triangles covered: b^2 - (b - a)^2."""
        return self.b * self.b - (self.b - self.a) ** 2


@dataclass(frozen=True, slots=True)
class Necklace:
    """Six rotation-equivalent trapezoids meeting consecutively at points."""

    center: EisensteinInt
    aspect: Fraction
    mirrored: bool
    trapezoids: tuple[Trapezoid, ...]

    def triangle_capacity(self) -> int:
        return 6 * self.trapezoids[0].triangle_capacity()

    def all_sides(self):
        for slot, t in enumerate(self.trapezoids):
            for kind, seg in t.sides():
                yield slot, kind, seg


def necklace(aspect: Fraction, center: EisensteinInt, mirrored: bool = False) -> Necklace:
    """The unique necklace of the given aspect about center (per chirality)."""
    if not (0 < aspect <= 1):
        raise DomainError(f"aspect {aspect} outside (0, 1]")
    a, b = aspect.numerator, aspect.denominator
    traps = tuple(
        Trapezoid(a, b, center, slot, mirrored) for slot in range(6)
    )
    n = Necklace(center, aspect, mirrored, traps)
    _check_necklace(n)
    return n


def _check_necklace(n: Necklace) -> None:
    # consecutive trapezoids share exactly one vertex
    for i in range(6):
        vi = set(n.trapezoids[i].vertices())
        vj = set(n.trapezoids[(i + 1) % 6].vertices())
        common = vi & vj
        if len(common) != 1:
            raise AssertionError(f"X{i} and X{i+1} share {len(common)} vertices")


def necklace_gamma(x: Necklace) -> Necklace:
    """The nested child necklace; aspect advances by the slow Gauss map.

    The child keeps the center; its chirality flips exactly when the parent
    aspect exceeds 1/2.  The defining incidences are verified explicitly:
    each child trapezoid's top is a side of a parent trapezoid, and one of
    its diagonal sides is a side of an adjacent parent trapezoid.
    """
    if x.aspect == 1:
        raise DomainError("aspect 1/1 is the orbit floor")
    child_aspect = slow_gauss(x.aspect)
    child_mirrored = (not x.mirrored) if x.aspect > Fraction(1, 2) else x.mirrored
    y = necklace(child_aspect, x.center, child_mirrored)

    parent_sides = list(x.all_sides())
    for t in y.trapezoids:
        sides = t.sides()
        top = next(seg for kind, seg in sides if kind == "top")
        legs = [seg for kind, seg in sides if kind == "leg"]
        host = [slot for slot, _, seg in parent_sides if seg == top]
        if not host:
            raise AssertionError(f"child top {sorted(map(str, top))} lies on no parent side")
        ok = any(
            seg in legs
            for slot, _, seg in parent_sides
            if any((slot - h) % 6 in (1, 5) for h in host)
        )
        if not ok:
            raise AssertionError("child diagonal side misses the adjacent parent trapezoid")
    return y


def empty_flower(aspect: Fraction) -> list[tuple[Necklace, int]]:
    """Necklaces of the whole slow-Gauss orbit, alternately colored.

    Outermost first; the innermost 1/1 necklace is white.
    """
    if not (0 < aspect <= 1):
        raise DomainError(f"aspect {aspect} outside (0, 1]")
    chain = [necklace(aspect, EisensteinInt(0, 0))]
    while chain[-1].aspect != 1:
        chain.append(necklace_gamma(chain[-1]))
    L = len(chain)
    return [(n, WHITE if (L - 1 - i) % 2 == 0 else BLACK) for i, n in enumerate(chain)]


# Tripled centroids of the six central triangles around the origin.
_FILL_UP = ((1, 1), (-2, 1), (1, -2))
_FILL_DOWN = ((-1, 2), (2, -1), (-1, -1))


@dataclass(frozen=True)
class CappedFlower:
    """Hexagonal coloring template: necklaces plus center fill plus corner caps.

    The tile is the regular hexagon with corners alpha^k * beta; corner cap
    regions merge with their neighbors' mirror images into monochrome
    lattice parallelograms, so the induced plane coloring is total.
    """

    beta: EisensteinInt
    necklaces: tuple[Necklace, ...]
    necklace_colors: tuple[int, ...]
    fill_colors: dict
    cap_color: int
    swap: bool
    fill_phase: int
    _levels: tuple        # (quads_tripled per slot, color, out_norm_tripled)
    _caps: tuple          # six cap quads, tripled
    _delta: EisensteinInt

    def color_at(self, tri: PlaneTriangleId) -> int:
        """Color of any plane triangle under the tiled coloring (total map)."""
        cx, cy = tri.centroid_tripled()
        return self._classify(cx, cy)

    def _classify(self, cx: int, cy: int) -> int:
        d3a, d3b = 3 * self._delta.a, 3 * self._delta.b
        n9 = 9 * self._delta.norm()
        # reduce into the fundamental cell of the tripled tile lattice
        m = cx * (d3a + d3b) + cy * d3b
        k = cy * d3a - cx * d3b
        fu, fv = m // n9, k // n9
        rx = cx - fu * d3a + fv * d3b
        ry = cy - fu * d3b - fv * (d3a + d3b)
        # the nearest tile center is one of the cell's four corners
        for tx, ty in ((0, 0), (d3a, d3b), (-d3b, d3a + d3b), (d3a - d3b, d3a + 2 * d3b)):
            c = self._classify_local(rx - tx, ry - ty)
            if c is not None:
                return c
        raise ClassificationError(f"no region claims centroid ({cx}, {cy})")

    def _classify_local(self, px: int, py: int):
        hit = self.fill_colors.get((px, py))
        if hit is not None:
            return hit
        np_ = px * px + px * py + py * py
        for quads, color, out_norm in self._levels:
            if np_ > out_norm:
                break
            for q in quads:
                if _point_in_convex(q, px, py):
                    return color
        for q in self._caps:
            if _point_in_convex(q, px, py):
                return self.cap_color
        return None

    def regions(self):
        """All paint regions of one fundamental cell.

        Yields ("quad", quad_tripled, color) for necklace trapezoids and the
        three cap parallelogram classes, plus ("fill", centroid, color) for
        the six central triangles.  Painting these covers every translation
        class of the plane exactly once.
        """
        for quads, color, _ in self._levels:
            for q in quads:
                yield ("quad", q, color)
        for k in range(3):
            yield ("quad", self._caps[k], self.cap_color)
        for c3, color in sorted(self.fill_colors.items()):
            yield ("fill", c3, color)

    def triangle_count(self) -> int:
        return 6 * self.beta.norm()


def fill_and_cap(
    flower: list[tuple[Necklace, int]],
    beta: EisensteinInt,
    swap: bool = False,
    fill_phase: int = 0,
) -> CappedFlower:
    """Fill the six central triangles and cap the convex hull of the flower.

    The fill alternates around the center (phase picks which of the two
    alternations); cap triangles take the color opposite the outermost
    necklace.  swap inverts every color, which changes nothing measurable.
    """
    a, b = beta.a, beta.b
    if gcd(a, b) != 1 or not (1 <= a <= b):
        raise DomainError(f"flower needs canonical primitive beta, got ({a}, {b})")
    if flower[0][0].aspect != Fraction(a, b):
        raise DomainError("flower aspect does not match beta")

    def col(c: int) -> int:
        return c if not swap else 1 - c

    necklaces = tuple(n for n, _ in flower)
    necklace_colors = tuple(col(c) for _, c in flower)
    up_color = col(BLACK if fill_phase == 0 else WHITE)
    fill_colors = {p: up_color for p in _FILL_UP}
    fill_colors.update({p: 1 - up_color for p in _FILL_DOWN})
    cap_color = 1 - necklace_colors[0]

    levels = []
    for n, c in zip(necklaces, necklace_colors):
        quads = [t.quad_tripled() for t in n.trapezoids]
        aa, bb = n.aspect.numerator, n.aspect.denominator
        out_norm = 9 * (aa * aa + aa * bb + bb * bb)
        levels.append((quads, c, out_norm))

    # cap parallelogram at hull edge [beta, alpha*beta], then its rotates
    p2 = (a - b, b)
    albeta = _rot_pair((a, b))
    c2 = (a + albeta[0], b + albeta[1])
    par = [p2, (a, b), (c2[0] - p2[0], c2[1] - p2[1]), albeta]
    caps = tuple(
        [(3 * x, 3 * y) for (x, y) in _rot_poly(par, k)] for k in range(6)
    )

    cf = CappedFlower(
        beta=EisensteinInt(a, b),
        necklaces=necklaces,
        necklace_colors=necklace_colors,
        fill_colors=fill_colors,
        cap_color=cap_color,
        swap=swap,
        fill_phase=fill_phase,
        _levels=tuple(levels),
        _caps=caps,
        _delta=EisensteinInt(2, -1) * EisensteinInt(a, b),
    )
    # area audit: necklaces + fill + caps account for the whole tile
    total = sum(n.triangle_capacity() for n in necklaces) + 6 + 6 * a * b
    if total != cf.triangle_count():
        raise AssertionError(f"area audit failed: {total} != {cf.triangle_count()}")
    return cf


def capped_flower(beta: EisensteinInt, swap: bool = False, fill_phase: int = 0) -> CappedFlower:
    """Build the full template for a canonical primitive beta with 1 <= a <= b."""
    a, b = beta.a, beta.b
    if gcd(a, b) != 1 or not (1 <= a <= b):
        raise DomainError(f"need canonical primitive beta with 1 <= a <= b, got ({a}, {b})")
    return fill_and_cap(empty_flower(Fraction(a, b)), beta, swap, fill_phase)


def color_at(cf: CappedFlower, tri: PlaneTriangleId) -> int:
    return cf.color_at(tri)


def stripe_counts(cf: CappedFlower) -> list[int]:
    """Stripe counts of the maximal trapezoids, outermost run first.

    A run of nested trapezoids breaks exactly after a level whose aspect
    exceeds 1/2 (where the nesting direction turns); the run lengths equal
    the continued-fraction partial quotients of the flower's aspect.
    """
    runs, current = [], 0
    for n in cf.necklaces:
        current += 1
        if n.aspect > Fraction(1, 2):
            runs.append(current)
            current = 0
    if current:
        runs.append(current)
    return runs


def gamma_orbit_pairs(a: int, b: int) -> list[tuple[int, int]]:
    """Slow-Gauss orbit of a/b down to (1, 1) as integer pairs."""
    if gcd(a, b) != 1 or not (1 <= a <= b):
        raise DomainError(f"need reduced 1 <= a <= b, got ({a}, {b})")
    out = [(a, b)]
    while (a, b) != (1, 1):
        if 2 * a > b:
            a, b = b - a, a
        else:
            b = b - a
        out.append((a, b))
    return out


def cf_fold_count(a: int, b: int) -> int:
    """Fold count of the continued-fraction coloring, from necklace layers.

    Every interface between consecutive colored regions of the tile is a
    fold; summing layer boundary lengths gives 3 + 2 * sum of (a_i + b_i)
    over the slow-Gauss orbit.  Validated against the built coloring for
    every small beta in the test suite.
    """
    return 3 + 2 * sum(x + y for (x, y) in gamma_orbit_pairs(a, b))


def cf_face_count(a: int, b: int) -> int:
    """Face count 2 * norm of the triangulation the coloring lives on."""
    return 2 * (a * a + a * b + b * b)


def cf_eta(a: int, b: int) -> Fraction:
    f = cf_fold_count(a, b)
    return Fraction(f * f, cf_face_count(a, b))
