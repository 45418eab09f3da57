"""Planar Coxeter complexes as exact tessellations.

A group context realizes one supported type as a triangulation of the
plane (or a subdivision of the line for the infinite dihedral group).
Chambers are identified with group elements; every wall belongs to a
family of parallel lines with a fixed spacing, so a wall is a pair
(family index, integer offset) and the side of a chamber with respect
to a wall is an integer comparison against precomputed floor values.

Wall families are not hard coded.  The three (or two) walls of the base
chamber are closed under the action of the group generators; grouping
the resulting lines by direction and measuring the minimal gap between
parallel ones yields the family table.  Correctness of the table is
pinned by the metric tests (wall-separation count equals graph
distance), not by trusting the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coxeter import CoxeterMatrix, TypeTag, matrix_for
from .group import (GroupElement, Line, MixedContext, Vec, element_order,
                    reflection_across, vec)
from .ring import HALF, ONE, ZERO, RingScalar, SQRT3


class UnsupportedType(ValueError):
    """Raised when a context is requested for a type outside the four models."""


@dataclass(frozen=True)
class Wall:
    """The wall at `offset` spacings from the family's reference line."""

    family: int
    offset: int


@dataclass(frozen=True)
class WallFamily:
    index: int
    normal: tuple[RingScalar, RingScalar]  # canonical: first nonzero component is 1
    ref: RingScalar                        # canonical-scale offset of wall 0
    spacing: RingScalar                    # positive gap between adjacent walls

    def projection(self, point: Vec) -> RingScalar:
        """Walls of this family sit exactly at the integers of this coordinate."""
        raw = self.normal[0] * point[0] + self.normal[1] * point[1] - self.ref
        return raw / self.spacing

    def wall_line(self, offset: int) -> Line:
        return Line(self.normal[0], self.normal[1],
                    self.ref + self.spacing * RingScalar(offset))


class Chamber:
    """A chamber of the complex, identified with the element mapping the
    base chamber onto it.  `floors` holds, per wall family, the floor of
    the barycenter's family coordinate; all metric predicates reduce to
    integer arithmetic on these vectors."""

    __slots__ = ("ctx", "element", "barycenter", "floors", "sort_key",
                 "_neighbors", "_panel_walls")

    def __init__(self, ctx: "GroupContext", element: GroupElement) -> None:
        self.ctx = ctx
        self.element = element
        self.barycenter = element.apply(ctx.base_barycenter)
        self.floors = tuple(f.projection(self.barycenter).floor()
                            for f in ctx.families)
        self.sort_key = (self.barycenter[0].key(), self.barycenter[1].key())
        self._neighbors = None
        self._panel_walls = None

    def __repr__(self) -> str:
        bx, by = self.barycenter
        return f"Chamber({self.ctx.tag.code}, word={self.ctx.word_of(self)!r}, at=({bx}, {by}))"

    def __hash__(self) -> int:
        return hash(self.element)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chamber):
            return NotImplemented
        return self.ctx is other.ctx and self.element == other.element

    def neighbors(self):
        """List of (generator index, adjacent chamber), one per generator."""
        if self._neighbors is None:
            self._neighbors = [
                (i, self.ctx.chamber_of(self.element.compose(s)))
                for i, s in enumerate(self.ctx.gens)
            ]
        return self._neighbors

    def neighbor(self, i: int) -> "Chamber":
        return self.neighbors()[i][1]

    def panel_walls(self):
        """Wall containing the i-th panel, for each generator index i."""
        if self._panel_walls is None:
            self._panel_walls = tuple(
                self.ctx.wall_of_line(self.element.apply_line(w))
                for w in self.ctx.base_walls
            )
        return self._panel_walls

    def vertices(self):
        return [self.element.apply(v) for v in self.ctx.base_vertices]


@dataclass(frozen=True)
class Gallery:
    """A sequence of pairwise-adjacent chambers."""

    chambers: tuple

    def __len__(self) -> int:
        return len(self.chambers) - 1

    def crossed_walls(self):
        """Panel walls crossed along the gallery, in order."""
        walls = []
        for a, b in zip(self.chambers, self.chambers[1:]):
            for i, nb in a.neighbors():
                if nb == b:
                    walls.append(a.panel_walls()[i])
                    break
            else:
                raise ValueError("gallery steps must be adjacent chambers")
        return walls


def _base_data(tag: TypeTag):
    """Base chamber vertices and the wall line of each generator's panel."""
    if tag is TypeTag.A2Tilde:
        verts = [vec(0, 0), vec(1, 0), (HALF, SQRT3 * HALF)]
        walls = [
            Line(ZERO, ONE, ZERO),            # y = 0
            Line(SQRT3, -ONE, ZERO),          # edge from (0,0) at 60 degrees
            Line(SQRT3, ONE, SQRT3),          # edge from (1,0) at 120 degrees
        ]
    elif tag is TypeTag.C2Tilde:
        verts = [vec(0, 0), vec(1, 0), vec(1, 1)]
        walls = [
            Line(ZERO, ONE, ZERO),            # y = 0
            Line(ONE, ZERO, ONE),             # x = 1
            Line(ONE, -ONE, ZERO),            # y = x
        ]
    elif tag is TypeTag.G2Tilde:
        verts = [vec(0, 0), vec(1, 0),
                 (RingScalar.rational(3, 4), SQRT3 * RingScalar.rational(1, 4))]
        walls = [
            Line(ZERO, ONE, ZERO),            # y = 0
            Line(ONE, -SQRT3, ZERO),          # edge from (0,0) at 30 degrees
            Line(SQRT3, ONE, SQRT3),          # edge from (1,0) at 120 degrees
        ]
    elif tag is TypeTag.I2Infinity:
        # One-dimensional model embedded in the plane; cells are unit strips.
        verts = [vec(0, 0), vec(1, 0), vec(1, 1), vec(0, 1)]
        walls = [
            Line(ONE, ZERO, ZERO),            # x = 0
            Line(ONE, ZERO, ONE),             # x = 1
        ]
    else:
        raise UnsupportedType(f"cannot build a group of type {tag}")
    return verts, walls


def _derive_families(gens, base_walls, max_rounds: int = 12):
    """Close the base walls under the generators, then group parallel lines
    and extract each family's spacing.  Runs until every direction has seen
    at least two parallel walls, plus two confirmation rounds."""
    seen = {}
    for w in base_walls:
        cw = w.canonical()
        seen[cw.key()] = cw
    frontier = list(seen.values())
    confirm = 0
    for _ in range(max_rounds):
        new = []
        for g in gens:
            for ln in frontier:
                img = g.apply_line(ln).canonical()
                if img.key() not in seen:
                    seen[img.key()] = img
                    new.append(img)
        frontier = new
        groups = {}
        for ln in seen.values():
            groups.setdefault(ln.direction_key(), []).append(ln)
        if all(len(g) >= 2 for g in groups.values()):
            confirm += 1
            if confirm >= 2:
                break
    else:
        raise RuntimeError("wall family derivation did not stabilize")

    families = []
    for dir_key in sorted(groups):
        lines = groups[dir_key]
        offsets = sorted(ln.c for ln in lines)
        gaps = sorted(b - a for a, b in zip(offsets, offsets[1:]))
        spacing = gaps[0]
        for c in offsets:
            step = (c - offsets[0]) / spacing
            if step != RingScalar(step.floor()):
                raise RuntimeError("parallel walls are not evenly spaced")
        ref = offsets[0] - spacing * RingScalar((offsets[0] / spacing).floor())
        normal = (lines[0].n1, lines[0].n2)
        families.append((normal, ref, spacing))
    return [WallFamily(i, n, r, s) for i, (n, r, s) in enumerate(families)]


class GroupContext:
    """Generators, base chamber and wall-family table for one supported type.

    Immutable after construction apart from internal memo tables; safe to
    share across threads, and cheap enough to rebuild per worker process.
    """

    def __init__(self, tag: TypeTag) -> None:
        if tag in (TypeTag.Unsupported,):
            raise UnsupportedType("cannot build a group for an unsupported matrix")
        self.tag = tag
        self.matrix: CoxeterMatrix = matrix_for(tag)
        verts, walls = _base_data(tag)
        self.base_vertices = verts
        self.base_walls = walls
        self.rank = len(walls)
        self.gens = [reflection_across(tag.code, w) for w in walls]
        n = len(verts)
        self.base_barycenter = (
            sum((v[0] for v in verts), ZERO) / RingScalar(n),
            sum((v[1] for v in verts), ZERO) / RingScalar(n),
        )
        self.families = _derive_families(self.gens, walls)
        self._family_by_dir = {
            (f.normal[0].key(), f.normal[1].key()): f for f in self.families
        }
        self._chambers: dict = {}
        self._balls: dict = {}
        self.base_chamber = self.chamber_of(GroupElement.identity(tag.code))
        self._companion = None

    def __repr__(self) -> str:
        return f"GroupContext({self.tag.code}, rank={self.rank}, families={len(self.families)})"

    # -- chambers ---------------------------------------------------------

    def chamber_of(self, element: GroupElement) -> Chamber:
        if element.tag != self.tag.code:
            raise MixedContext(f"element of {element.tag} used in {self.tag.code}")
        ch = self._chambers.get(element.key())
        if ch is None:
            ch = Chamber(self, element)
            self._chambers[element.key()] = ch
        return ch

    def chamber_of_identity(self) -> Chamber:
        return self.base_chamber

    def chamber_from_word(self, word) -> Chamber:
        """Word is an iterable of generator indices (0-based)."""
        e = GroupElement.identity(self.tag.code)
        for i in word:
            e = e.compose(self.gens[i])
        return self.chamber_of(e)

    # -- walls ------------------------------------------------------------

    def wall_of_line(self, line: Line) -> Wall:
        canon = line.canonical()
        fam = self._family_by_dir.get(canon.direction_key())
        if fam is None:
            raise ValueError("line direction matches no wall family")
        step = (canon.c - fam.ref) / fam.spacing
        k = step.floor()
        if step != RingScalar(k):
            raise ValueError("line offset is not on the family's wall lattice")
        return Wall(fam.index, k)

    def side_of_wall(self, wall: Wall, chamber: Chamber) -> int:
        self._check(chamber)
        return 1 if chamber.floors[wall.family] >= wall.offset else -1

    def separates(self, wall: Wall, c1: Chamber, c2: Chamber) -> bool:
        return self.side_of_wall(wall, c1) != self.side_of_wall(wall, c2)

    def separating_walls(self, c1: Chamber, c2: Chamber):
        """All walls with c1 and c2 strictly on opposite sides."""
        self._check(c1, c2)
        walls = set()
        for f in range(len(self.families)):
            lo, hi = sorted((c1.floors[f], c2.floors[f]))
            for k in range(lo + 1, hi + 1):
                walls.add(Wall(f, k))
        return walls

    def wall_distance(self, c1: Chamber, c2: Chamber) -> int:
        """Number of separating walls; equals the Cayley-graph distance."""
        self._check(c1, c2)
        return sum(abs(a - b) for a, b in zip(c1.floors, c2.floors))

    # -- point location ---------------------------------------------------

    def point_floors(self, point: Vec):
        return tuple(f.projection(point).floor() for f in self.families)

    def chamber_containing(self, point: Vec) -> Chamber:
        """Chamber whose interior holds `point`; the point must avoid walls.

        Walks from the base chamber, always crossing a panel wall that
        separates the current chamber from the target, so the walk length
        equals the wall-separation count and the result is exact.
        """
        target = self.point_floors(point)
        c = self.base_chamber
        while c.floors != target:
            for i in range(self.rank):
                w = c.panel_walls()[i]
                here = c.floors[w.family] >= w.offset
                there = target[w.family] >= w.offset
                if here != there:
                    c = c.neighbor(i)
                    break
            else:
                raise ValueError("point lies on a wall or outside the complex")
        return c

    # -- canonical geodesics ----------------------------------------------

    def geodesic(self, u: Chamber, v: Chamber) -> Gallery:
        """Minimal gallery from u to v, lowest generator index first."""
        self._check(u, v)
        steps = [u]
        c = u
        while c != v:
            for i in range(self.rank):
                w = c.panel_walls()[i]
                if (c.floors[w.family] >= w.offset) != (v.floors[w.family] >= w.offset):
                    c = c.neighbor(i)
                    steps.append(c)
                    break
            else:
                raise RuntimeError("no separating panel found on a geodesic walk")
        return Gallery(tuple(steps))

    def word_of(self, c: Chamber) -> str:
        """Canonical geodesic word from the base, 1-based generator digits."""
        gallery = self.geodesic(self.base_chamber, c)
        digits = []
        for a, b in zip(gallery.chambers, gallery.chambers[1:]):
            for i, nb in a.neighbors():
                if nb == b:
                    digits.append(str(i + 1))
                    break
        return "".join(digits)

    def serialize_chamber(self, c: Chamber) -> dict:
        """Wire form: canonical word plus the exact barycenter triples."""
        self._check(c)
        bx, by = c.barycenter
        return {"word": self.word_of(c),
                "barycenter": [list(bx.key()), list(by.key())]}

    # -- balls -------------------------------------------------------------

    def ball(self, radius: int):
        """Chambers at distance <= radius from the base, in a deterministic
        order (by distance, then barycenter)."""
        if radius in self._balls:
            return self._balls[radius]
        layers = [[self.base_chamber]]
        seen = {self.base_chamber}
        for _ in range(radius):
            nxt = []
            for c in layers[-1]:
                for _, nb in c.neighbors():
                    if nb not in seen:
                        seen.add(nb)
                        nxt.append(nb)
            nxt.sort(key=lambda ch: ch.sort_key)
            layers.append(nxt)
        out = [c for layer in layers for c in layer]
        self._balls[radius] = out
        return out

    # -- companion coarse complex -----------------------------------------

    @property
    def companion(self) -> "GroupContext":
        """The coarse triangulation sharing this context's hexagonal wall
        families (only available for the finest hexagonal type)."""
        if self.tag is not TypeTag.G2Tilde:
            raise UnsupportedType("coarsening companion exists only for g2t")
        if self._companion is None:
            comp = build_group(TypeTag.A2Tilde)
            for fam in comp.families:
                key = (fam.normal[0].key(), fam.normal[1].key())
                mine = self._family_by_dir.get(key)
                if mine is None or mine.ref != fam.ref or mine.spacing != fam.spacing:
                    raise RuntimeError("companion wall families do not align")
            self._companion = comp
        return self._companion

    def coarsen(self, chamber: Chamber) -> Chamber:
        """Coarse chamber whose triangle contains this chamber's barycenter."""
        self._check(chamber)
        return self.companion.chamber_containing(chamber.barycenter)

    # -- misc ---------------------------------------------------------------

    def _check(self, *chambers: Chamber) -> None:
        for c in chambers:
            if c.ctx is not self:
                raise MixedContext("chamber belongs to a different group context")

    def generator_orders_ok(self) -> bool:
        """Pairwise generator products have exactly the matrix orders."""
        for i in range(self.rank):
            for j in range(self.rank):
                if i == j:
                    continue
                m = self.matrix.order(i, j)
                if m == float("inf"):
                    continue
                if element_order(self.gens[i].compose(self.gens[j])) != m:
                    return False
        return True


@lru_cache(maxsize=None)
def build_group(tag: TypeTag) -> GroupContext:
    """Build (and memoize) the canonical context for a supported type."""
    return GroupContext(tag)


def element_to_chamber(ctx: GroupContext, element: GroupElement) -> Chamber:
    return ctx.chamber_of(element)


def wall_families(tag: TypeTag):
    return build_group(tag).families


def g2_coarsen(chamber: Chamber) -> Chamber:
    return chamber.ctx.coarsen(chamber)
