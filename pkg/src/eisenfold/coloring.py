"""Face two-colorings of quotient triangulations and their measurements.

A coloring is good when, around every vertex, the black and white incident
face counts agree mod 3; on these all-even-degree surfaces goodness
automatically strengthens to mod 6 and forces an equal global split of
black and white faces.  Good colorings are exactly the face shadows of
proper vertex 4-colorings, recovered here by deterministic propagation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .eisenstein import DomainError, EisensteinInt, canonicalize, is_primitive
from .flower import BLACK, WHITE, CappedFlower, capped_flower
from .surface import DOWN, UP, PlaneTriangleId, QuotientComplex, plane_neighbor


class GoodnessError(ValueError):
    """An operation that needs a good coloring received a bad one."""


class DevelopmentError(RuntimeError):
    """A monochrome region failed to develop into an embedded lattice polygon."""


@dataclass(frozen=True)
class FaceColoring:
    complex: QuotientComplex
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.complex.face_count:
            raise DomainError("color array length must equal face count")

    def flipped(self, faces) -> FaceColoring:
        cols = list(self.colors)
        for f in faces:
            cols[f] = 1 - cols[f]
        return FaceColoring(self.complex, tuple(cols))

    def swapped(self) -> FaceColoring:
        return FaceColoring(self.complex, tuple(1 - c for c in self.colors))

    def bitstring(self) -> str:
        return "".join("1" if c == BLACK else "0" for c in self.colors)


@dataclass(frozen=True)
class GoodnessReport:
    good: bool
    violations: tuple[int, ...]
    mod6: bool


def alternating_coloring(c: QuotientComplex) -> FaceColoring:
    """Checkerboard coloring by triangle orientation class; always good."""
    colors = tuple(
        BLACK if t.orientation == UP else WHITE for t in c.faces
    )
    for f, row in enumerate(c.pairing):
        for f2, _ in row:
            if colors[f] == colors[f2]:
                raise AssertionError("dual graph is not bipartite by orientation")
    return FaceColoring(c, colors)


def paint_from_flower(cf: CappedFlower, c: QuotientComplex) -> FaceColoring:
    """Project the flower's plane coloring onto the quotient faces.

    Every region of one fundamental cell is painted onto its member
    triangles; each quotient face must be claimed exactly three times (its
    three rotation copies) with a consistent color, which simultaneously
    audits the tile partition and the rotation invariance.
    """
    F = c.face_count
    colors = [-1] * F
    counts = [0] * F

    def assign(face: int, color: int) -> None:
        if colors[face] not in (-1, color):
            raise AssertionError(f"inconsistent paint on face {face}")
        colors[face] = color
        counts[face] += 1

    for kind, data, color in cf.regions():
        if kind == "fill":
            x, y = data
            if x % 3 == 1:
                tri = PlaneTriangleId(EisensteinInt((x - 1) // 3, (y - 1) // 3), UP)
            else:
                tri = PlaneTriangleId(EisensteinInt((x - 2) // 3, (y - 2) // 3), DOWN)
            assign(c.project(tri), color)
            continue
        quad = data
        xs = [p[0] for p in quad]
        ys = [p[1] for p in quad]
        for a in range(min(xs) // 3 - 1, max(xs) // 3 + 2):
            for b in range(min(ys) // 3 - 1, max(ys) // 3 + 2):
                for o, (ox, oy) in ((UP, (1, 1)), (DOWN, (2, 2))):
                    px, py = 3 * a + ox, 3 * b + oy
                    if _in_quad(quad, px, py):
                        assign(c.project(PlaneTriangleId(EisensteinInt(a, b), o)), color)
    if any(n != 3 for n in counts):
        raise AssertionError("tile partition did not cover each face exactly 3 times")
    return FaceColoring(c, tuple(colors))


def _in_quad(quad, px, py) -> bool:
    m = len(quad)
    for i in range(m):
        ax, ay = quad[i]
        bx, by = quad[(i + 1) % m]
        ex, ey = bx - ax, by - ay
        if ex == 0 and ey == 0:
            continue
        if ex * (py - ay) - ey * (px - ax) < 0:
            return False
    return True


def continued_fraction_coloring(
    beta: EisensteinInt,
    c: QuotientComplex | None = None,
    swap: bool = False,
    fill_phase: int = 0,
) -> FaceColoring:
    """The quotient of the capped-flower plane coloring; good by construction."""
    if beta.is_zero() or not is_primitive(beta):
        raise DomainError("continued-fraction coloring needs primitive beta")
    if c is None:
        c = QuotientComplex(beta)
    elif (c.beta.a, c.beta.b) != canonicalize(beta):
        raise DomainError("complex does not belong to beta")
    if c.beta.a < 1:
        raise DomainError(f"degenerate beta {c.beta}: the flower needs 1 <= a <= b")
    cf = capped_flower(c.beta, swap=swap, fill_phase=fill_phase)
    return paint_from_flower(cf, c)


def _vertex_splits(col: FaceColoring) -> list[tuple[int, int]]:
    c = col.complex
    acc = [[0, 0] for _ in range(c.vertex_count)]
    for f, ids in enumerate(c.face_vertices):
        side = 0 if col.colors[f] == BLACK else 1
        for v in ids:
            acc[v][side] += 1
    return [(b, w) for b, w in acc]


def is_good(col: FaceColoring) -> GoodnessReport:
    """Mod-3 balance of black and white around every vertex, with mod-6 flag."""
    splits = _vertex_splits(col)
    violations = tuple(v for v, (b, w) in enumerate(splits) if (b - w) % 3 != 0)
    mod6 = all((b - w) % 6 == 0 for b, w in splits)
    return GoodnessReport(not violations, violations, mod6)


def fold_count(col: FaceColoring) -> int:
    """Number of edges whose two glued faces differ in color."""
    colors = col.colors
    total = 0
    for f, row in enumerate(col.complex.pairing):
        for f2, _ in row:
            if colors[f] != colors[f2]:
                total += 1
    return total // 2


def color_balance(col: FaceColoring) -> tuple[int, int]:
    black = sum(1 for c in col.colors if c == BLACK)
    return black, len(col.colors) - black


def eta(col: FaceColoring) -> Fraction:
    """Squared fold count per face, exactly."""
    f = fold_count(col)
    return Fraction(f * f, col.complex.face_count)


# ---------------------------------------------------------------------------
# Proper vertex 4-colorings


def _perm_sign(seq) -> int:
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return 1 if inv % 2 == 0 else -1


def _parity(x: int, y: int, z: int) -> int:
    return _perm_sign((x, y, z, 6 - x - y - z))


def vertex_four_coloring(col: FaceColoring, base: int = 0, base_color: int = 0) -> list[int]:
    """Proper vertex 4-coloring whose orientation classes reproduce col.

    Walking ccw around a black face reads an even permutation of its three
    colors, around a white face an odd one.  Propagation is deterministic
    BFS from `base`; a contradiction means the input was not good.
    """
    report = is_good(col)
    if not report.good:
        raise GoodnessError(f"coloring is not good at vertices {report.violations[:6]}")
    if not 0 <= base_color <= 3:
        raise DomainError("base_color must be in 0..3")
    c = col.complex
    target = [1 if x == BLACK else -1 for x in col.colors]
    vcolor = [-1] * c.vertex_count

    f0 = min(f for f, ids in enumerate(c.face_vertices) if base in ids)
    ids = c.face_vertices[f0]
    k = ids.index(base)
    v0, v1, v2 = ids[k], ids[(k + 1) % 3], ids[(k + 2) % 3]
    vcolor[v0] = base_color
    vcolor[v1] = (base_color + 1) % 4

    def force_third(f: int) -> bool:
        """Fill the single missing corner of f; returns False if untouched."""
        a, b, cc = c.face_vertices[f]
        known = [vcolor[a], vcolor[b], vcolor[cc]]
        missing = [i for i, x in enumerate(known) if x < 0]
        if len(missing) != 1:
            if not missing:
                if _parity(*known) != target[f]:
                    raise GoodnessError(f"orientation parity clash at face {f}")
            return False
        i = missing[0]
        used = {x for x in known if x >= 0}
        if len(used) != 2:
            raise GoodnessError(f"repeated vertex colors on face {f}")
        cands = [x for x in range(4) if x not in used]
        trial = list(known)
        picked = None
        for cand in cands:
            trial[i] = cand
            if _parity(*trial) == target[f]:
                picked = cand
                break
        if picked is None:
            raise GoodnessError(f"no consistent color at face {f}")
        vcolor[c.face_vertices[f][i]] = picked
        return True

    force_third(f0)
    seen = {f0}
    queue = [f0]
    while queue:
        f = queue.pop(0)
        for f2, _ in c.pairing[f]:
            if f2 not in seen:
                seen.add(f2)
                force_third(f2)
                queue.append(f2)
    if len(seen) != c.face_count or any(x < 0 for x in vcolor):
        raise AssertionError("propagation did not reach the whole surface")

    for f, (a, b, cc) in enumerate(c.face_vertices):
        tri = (vcolor[a], vcolor[b], vcolor[cc])
        if len(set(tri)) != 3 or _parity(*tri) != target[f]:
            raise GoodnessError(f"verification failed at face {f}")
    return vcolor


def induced_face_coloring(c: QuotientComplex, vcolor: list[int]) -> FaceColoring:
    """Face coloring read back from a proper vertex 4-coloring."""
    colors = []
    for a, b, cc in c.face_vertices:
        tri = (vcolor[a], vcolor[b], vcolor[cc])
        if len(set(tri)) != 3:
            raise DomainError("vertex coloring is not proper on some face")
        colors.append(BLACK if _parity(*tri) > 0 else WHITE)
    return FaceColoring(c, tuple(colors))


# ---------------------------------------------------------------------------
# Monochrome regions


@dataclass(frozen=True)
class MonochromeRegion:
    color: int
    faces: frozenset[int]
    boundary_length: int
    lifted_polygon: tuple[EisensteinInt, ...]


def monochrome_regions(col: FaceColoring) -> list[MonochromeRegion]:
    """Edge-connected components of one color, developed into the plane.

    Each region of a good coloring develops isometrically onto a convex
    lattice polygon with interior angles 60 or 120 degrees; failure to
    embed signals a bad input.
    """
    c = col.complex
    colors = col.colors
    comp = [-1] * c.face_count
    comps: list[list[int]] = []
    for f in range(c.face_count):
        if comp[f] >= 0:
            continue
        comp[f] = len(comps)
        stack = [f]
        members = [f]
        while stack:
            g = stack.pop()
            for g2, _ in c.pairing[g]:
                if colors[g2] == colors[f] and comp[g2] < 0:
                    comp[g2] = comp[f]
                    stack.append(g2)
                    members.append(g2)
        comps.append(members)

    out = []
    for members in comps:
        region = frozenset(members)
        color = colors[members[0]]
        boundary = 0
        for f in members:
            for f2, _ in c.pairing[f]:
                if colors[f2] != color:
                    boundary += 1
        polygon = _develop(c, colors, region)
        out.append(MonochromeRegion(color, region, boundary, polygon))
    out.sort(key=lambda r: min(r.faces))
    return out


def _tri_sides(anchor: tuple[int, int], o: int):
    """Directed ccw sides of a plane triangle, as ((start), (end)) pairs."""
    a, b = anchor
    if o == UP:
        return (
            ((a, b), (a + 1, b)),
            ((a + 1, b), (a, b + 1)),
            ((a, b + 1), (a, b)),
        )
    return (
        ((a + 1, b), (a + 1, b + 1)),
        ((a + 1, b + 1), (a, b + 1)),
        ((a, b + 1), (a + 1, b)),
    )


def _develop(c: QuotientComplex, colors, region: frozenset[int]):
    seed = min(region)
    t0 = c.lift(seed)
    placed: dict[int, tuple[tuple[int, int], int]] = {
        seed: ((t0.anchor.a, t0.anchor.b), t0.orientation)
    }
    queue = [seed]
    while queue:
        f = queue.pop(0)
        anchor, o = placed[f]
        for s in range(3):
            (na, nb), no, _ = plane_neighbor(anchor, o, s)
            f2 = c.project(PlaneTriangleId(EisensteinInt(na, nb), no))
            if f2 not in region:
                continue
            spot = ((na, nb), no)
            if f2 in placed:
                if placed[f2] != spot:
                    raise DevelopmentError("region does not embed in the plane")
            else:
                placed[f2] = spot
                queue.append(f2)
    if len(placed) != len(region):
        raise DevelopmentError("region development did not cover the region")
    spots = set(placed.values())
    if len(spots) != len(region):
        raise DevelopmentError("region development is not injective")

    # boundary = directed sides not shared with another placed triangle
    directed = {}
    for anchor, o in spots:
        for i, (u, v) in enumerate(_tri_sides(anchor, o)):
            (na, nb), no, _ = plane_neighbor(anchor, o, i)
            if ((na, nb), no) in spots:
                continue
            if u in directed:
                raise DevelopmentError("region boundary is pinched")
            directed[u] = v
    start = min(directed)
    chain = [start]
    cur = directed[start]
    while cur != start:
        chain.append(cur)
        cur = directed[cur]
    if len(chain) != len(directed):
        raise DevelopmentError("region boundary is disconnected")

    # corner extraction + convexity: every turn must be to the left
    corners = []
    n = len(chain)
    area2 = 0
    for i in range(n):
        p, q, r = chain[i - 1], chain[i], chain[(i + 1) % n]
        d1 = (q[0] - p[0], q[1] - p[1])
        d2 = (r[0] - q[0], r[1] - q[1])
        cross = d1[0] * d2[1] - d1[1] * d2[0]
        if cross < 0:
            raise DevelopmentError("region polygon is not convex")
        if cross > 0:
            corners.append(EisensteinInt(*q))
        area2 += q[0] * r[1] - q[1] * r[0]
    if area2 != len(region):
        raise DevelopmentError("polygon area disagrees with face count")
    return tuple(corners)


def to_json_dict(col: FaceColoring) -> dict:
    from .jsonio import jint

    report = is_good(col)
    e = eta(col)
    return {
        "schema": "coloring.v1",
        "complex_ref": {"beta": [jint(col.complex.beta.a), jint(col.complex.beta.b)]},
        "colors": col.bitstring(),
        "fold_count": jint(fold_count(col)),
        "eta": [jint(e.numerator), jint(e.denominator)],
        "good": report.good,
    }


def from_json_dict(doc: dict) -> FaceColoring:
    if doc.get("schema") != "coloring.v1":
        raise DomainError("expected a coloring.v1 document")
    ba, bb = (int(x) for x in doc["complex_ref"]["beta"])
    c = QuotientComplex(EisensteinInt(ba, bb))
    bits = doc["colors"]
    if len(bits) != c.face_count:
        raise DomainError("color bitstring length disagrees with face count")
    colors = tuple(BLACK if ch == "1" else WHITE for ch in bits)
    return FaceColoring(c, colors)
