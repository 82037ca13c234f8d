"""Symmetry analysis of weave designs.

``find_symmetries`` computes the full symmetry group of a design: every
grid isometry that maps the weave to itself, each carrying a side flag.
A direction-swapping map (quarter turn or oblique mirror) that leaves the
raised values *equal* necessarily turns the fabric over - it exchanges
warps and wefts, so the strand on top can only match if we also look at
the far face.  Concretely, for a point part that swaps directions, equal
values mean a side-reversing symmetry and complemented values a
side-preserving one; for a direction-preserving point part it is the other
way round.

The group is stored as a translation lattice plus finitely many coset
representatives.  ``axis_inventory`` expands that into the geometric
inventory: one entry per translation-class of mirror axes, glide axes and
rotation centres.  A single representative's axis class does not tell the
whole story - composing a representative with lattice translations moves
its axis by *half* lattice steps, so one coset always splits into two axis
families, and a family of pure mirrors can sit next to a family of glides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from isoweave.design import Design, Direction, Strand
from isoweave.isometry import (
    Isometry,
    PointPart,
    Side,
    act_on_strand,
    classify,
    translation,
)

# -- integer lattices ----------------------------------------------------


@dataclass(frozen=True)
class Lattice:
    """Full-rank sublattice of the integer plane, in Hermite form.

    Basis: ``v1 = (a, 0)``, ``v2 = (b, d)`` with a, d > 0 and 0 <= b < a.
    """

    a: int
    b: int
    d: int

    @classmethod
    def from_vectors(cls, vectors) -> "Lattice":
        """Lattice generated by ``vectors``; raises if the rank is < 2."""
        v2 = (0, 0)  # running generator with least positive y
        xs: list[int] = []
        for v in vectors:
            x, y = int(v[0]), int(v[1])
            while y != 0:
                if v2[1] == 0:
                    v2, x, y = ((x, y) if y > 0 else (-x, -y)), v2[0], 0
                else:
                    q = y // v2[1]
                    x, y = x - q * v2[0], y - q * v2[1]
                    if y != 0:
                        v2, x, y = (x, y), v2[0], v2[1]
            xs.append(x)
        a = 0
        for x in xs:
            a = math.gcd(a, abs(x))
        if a == 0 or v2[1] == 0:
            raise ValueError("vectors do not span a full-rank lattice")
        return cls(a, v2[0] % a, v2[1])

    @property
    def v1(self) -> tuple[int, int]:
        return (self.a, 0)

    @property
    def v2(self) -> tuple[int, int]:
        return (self.b, self.d)

    @property
    def det(self) -> int:
        return self.a * self.d

    def reduce(self, v: tuple[int, int]) -> tuple[int, int]:
        """Canonical residue of ``v`` modulo the lattice."""
        x, y = v
        r = y % self.d
        k = (y - r) // self.d
        return ((x - k * self.b) % self.a, r)

    def contains(self, v: tuple[int, int]) -> bool:
        return self.reduce(v) == (0, 0)

    def scaled(self, factor: int) -> "Lattice":
        return Lattice(self.a * factor, self.b * factor, self.d * factor)

    def diagonal_step(self) -> int:
        """Least t > 0 with (t, t) in the lattice."""
        t = 1
        while not self.contains((t, t)):
            t += 1
        return t

    def antidiagonal_step(self) -> int:
        """Least t > 0 with (t, -t) in the lattice."""
        t = 1
        while not self.contains((t, -t)):
            t += 1
        return t

    def solve_functional(self, cx: int, cy: int):
        """For the map f(v) = cx*vx + cy*vy on the lattice, return
        ``(g, v0, vk)``: the positive generator g of the image, a lattice
        vector v0 with f(v0) = g, and a generator vk of the kernel."""
        a1 = cx * self.v1[0] + cy * self.v1[1]
        a2 = cx * self.v2[0] + cy * self.v2[1]
        g, x, y = _egcd(a1, a2)
        if g == 0:
            raise ValueError("functional vanishes on the lattice")
        v0 = (x * self.v1[0] + y * self.v2[0], x * self.v1[1] + y * self.v2[1])
        m, n = a2 // g, -(a1 // g)
        vk = (m * self.v1[0] + n * self.v2[0], m * self.v1[1] + n * self.v2[1])
        return g, v0, vk


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


# -- the symmetry group --------------------------------------------------


@dataclass(frozen=True)
class SymmetryGroup:
    """Symmetry group of a design: a translation lattice and coset reps.

    ``translations`` is the lattice of side-preserving translations, in
    cell units.  ``extended_translations`` additionally includes the
    side-reversing translations (those mapping the design to its
    complement), when any exist.  ``reps`` holds one representative per
    coset of ``translations``, with canonically reduced (doubled) shifts,
    always including the identity.
    """

    period: int
    translations: Lattice
    extended_translations: Lattice
    reps: tuple[Isometry, ...]

    def generators(self) -> tuple[Isometry, ...]:
        """Coset representatives plus the two lattice basis translations."""
        return self.reps + (
            translation(*self.translations.v1),
            translation(*self.translations.v2),
        )

    def contains(self, iso: Isometry) -> bool:
        """Full membership test, side included."""
        if not iso.preserves_cells:
            return False
        t = (iso.shift[0] // 2, iso.shift[1] // 2)
        for rep in self.reps:
            if rep.point != iso.point:
                continue
            r = (rep.shift[0] // 2, rep.shift[1] // 2)
            if self.translations.contains((t[0] - r[0], t[1] - r[1])):
                return rep.side == iso.side
        return False

    def contains_ignoring_side(self, point: PointPart, cell_shift: tuple[int, int]) -> bool:
        for rep in self.reps:
            if rep.point != point:
                continue
            r = (rep.shift[0] // 2, rep.shift[1] // 2)
            if self.translations.contains((cell_shift[0] - r[0], cell_shift[1] - r[1])):
                return True
        return False

    def side_reversing_translation(self) -> tuple[int, int] | None:
        """A cell shift mapping the design to its complement, if one exists."""
        for rep in self.reps:
            if rep.point == PointPart.IDENTITY and rep.side == Side.REVERSING:
                return (rep.shift[0] // 2, rep.shift[1] // 2)
        return None


_POINT_ORDER = {p: i for i, p in enumerate(PointPart)}

#: Image cell of (x, y) under each point part (before any shift), as
#: functions of index grids: derived from the doubled-coordinate matrices.
_CELL_MAPS = {
    PointPart.IDENTITY: lambda xs, ys: (xs, ys),
    PointPart.ROT90: lambda xs, ys: (-ys - 1, xs),
    PointPart.ROT180: lambda xs, ys: (-xs - 1, -ys - 1),
    PointPart.ROT270: lambda xs, ys: (ys, -xs - 1),
    PointPart.MIRROR_H: lambda xs, ys: (xs, -ys - 1),
    PointPart.MIRROR_V: lambda xs, ys: (-xs - 1, ys),
    PointPart.MIRROR_D: lambda xs, ys: (ys, xs),
    PointPart.MIRROR_A: lambda xs, ys: (-ys - 1, -xs - 1),
}


@lru_cache(maxsize=None)
def find_symmetries(design: Design) -> SymmetryGroup:
    """All isometries mapping the design to itself, with side flags."""
    L = math.lcm(design.width, design.height)
    tile = np.tile(design.to_array(), (L // design.height, L // design.width))
    ys, xs = np.indices((L, L))
    preserving: list[tuple[int, int]] = [(L, 0), (0, L)]
    found: dict[tuple[PointPart, Side], list[tuple[int, int]]] = {}
    for point, cell_map in _CELL_MAPS.items():
        gx, gy = cell_map(xs, ys)
        gx %= L
        gy %= L
        swaps = point.swaps_directions
        for ty in range(L):
            iy = (gy + ty) % L
            for tx in range(L):
                image = tile[iy, (gx + tx) % L]
                if (image == tile).all():
                    side = Side.REVERSING if swaps else Side.PRESERVING
                elif (image != tile).all():
                    side = Side.PRESERVING if swaps else Side.REVERSING
                else:
                    continue
                if point == PointPart.IDENTITY and side == Side.PRESERVING:
                    preserving.append((tx, ty))
                else:
                    found.setdefault((point, side), []).append((tx, ty))
    lattice = Lattice.from_vectors(preserving)
    reps = [Isometry(PointPart.IDENTITY, (0, 0), Side.PRESERVING)]
    extended = preserving
    for (point, side), shifts in found.items():
        for t in sorted({lattice.reduce(t) for t in shifts}):
            reps.append(Isometry(point, (2 * t[0], 2 * t[1]), side))
            if point == PointPart.IDENTITY:
                extended = extended + [t]
    reps.sort(key=lambda g: (_POINT_ORDER[g.point], g.side.value, g.shift[1], g.shift[0]))
    return SymmetryGroup(
        period=L,
        translations=lattice,
        extended_translations=Lattice.from_vectors(extended),
        reps=tuple(reps),
    )


def has_quarter_turn(design: Design) -> bool:
    """True iff some symmetry of the design is a quarter turn."""
    return any(
        rep.point in (PointPart.ROT90, PointPart.ROT270)
        for rep in find_symmetries(design).reps
    )


# -- structural predicates ----------------------------------------------


def hangs_together(design: Design) -> bool:
    """True iff no proper set of strands can be lifted off the rest.

    At each crossing, draw an arc from the strand underneath to the strand
    on top.  A nonempty proper strand set can be lifted off exactly when no
    arc leaves it, and such a set exists exactly when the digraph is not
    strongly connected.
    """
    w, h = design.width, design.height
    n = w + h
    out_arcs: list[list[int]] = [[] for _ in range(n)]
    in_arcs: list[list[int]] = [[] for _ in range(n)]
    for y in range(h):
        for x in range(w):
            if design.warp_up(x, y):
                under, over = w + y, x
            else:
                under, over = x, w + y
            out_arcs[under].append(over)
            in_arcs[over].append(under)
    return _reaches_all(out_arcs) and _reaches_all(in_arcs)


def _reaches_all(adjacency: list[list[int]]) -> bool:
    n = len(adjacency)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        for nxt in adjacency[stack.pop()]:
            if not seen[nxt]:
                seen[nxt] = True
                count += 1
                stack.append(nxt)
    return count == n


def is_isonemal(design: Design) -> bool:
    """True iff the symmetry group is transitive on the strands."""
    group = find_symmetries(design)
    L = group.period
    gens = group.generators()
    seen = {0}  # strand classes modulo L: warps are 0..L-1, wefts L..2L-1
    stack = [0]
    while stack:
        cls = stack.pop()
        strand = Strand(Direction.WARP, cls) if cls < L else Strand(Direction.WEFT, cls - L)
        for g in gens:
            image = act_on_strand(g, strand)
            key = image.index % L + (0 if image.direction == Direction.WARP else L)
            if key not in seen:
                seen.add(key)
                stack.append(key)
    return len(seen) == 2 * L


def subgroup_check(sub: SymmetryGroup, sup: SymmetryGroup) -> bool:
    """True iff every symmetry in ``sub`` is one in ``sup``, sides ignored."""
    for g in sub.generators():
        if not sup.contains_ignoring_side(g.point, (g.shift[0] // 2, g.shift[1] // 2)):
            return False
    return True


# -- translation lattice report -----------------------------------------


@dataclass(frozen=True)
class LatticeUnits:
    """Shape summary of a translation lattice, in diagonal units.

    ``diag_step`` (p) and ``anti_step`` (q) are the least strictly positive
    t with (t, t), respectively (t, -t), in the lattice - the lattice's
    periods along the two diagonal directions, each measured in diagonal
    cell steps.  ``index`` is how many lattice points the rectangle spanned
    by those two periods contains (1: the lattice is exactly that diagonal
    rectangle; 2: centred/rhombic).
    """

    v1: tuple[int, int]
    v2: tuple[int, int]
    det: int
    diag_step: int
    anti_step: int
    index: int


@dataclass(frozen=True)
class LatticeUnitsReport:
    preserving: LatticeUnits
    extended: LatticeUnits


def _units(lattice: Lattice) -> LatticeUnits:
    p = lattice.diagonal_step()
    q = lattice.antidiagonal_step()
    return LatticeUnits(
        v1=lattice.v1,
        v2=lattice.v2,
        det=lattice.det,
        diag_step=p,
        anti_step=q,
        index=2 * p * q // lattice.det,
    )


def lattice_units(design: Design) -> LatticeUnitsReport:
    """Diagonal-unit summaries of the side-preserving translation lattice
    and of the extended one including side-reversing translations."""
    group = find_symmetries(design)
    return LatticeUnitsReport(
        preserving=_units(group.translations),
        extended=_units(group.extended_translations),
    )


# -- geometric inventory -------------------------------------------------


@dataclass(frozen=True)
class AxisEntry:
    """One translation-class of parallel mirror or glide axes.

    ``offset`` locates a representative axis (the constant y, x, x - y or
    x + y along it, cell units), reduced into [0, spacing); ``spacing`` is
    the offset difference between consecutive axes of this class.
    ``glide`` is the least glide magnitude on the axis (0 for a mirror
    axis), in cell units for horizontal/vertical axes and in diagonal cell
    steps for oblique ones.  ``mirror_position`` (oblique axes only) says
    the axis runs through cell centres and corners.
    """

    axis: str
    offset: Fraction
    kind: str  # mirror | glide
    glide: Fraction
    mirror_position: bool | None
    side: Side
    spacing: int


@dataclass(frozen=True)
class CentreEntry:
    """One translation-class of rotation centres (fold 2 or 4).

    A 4-fold centre also appears among the 2-fold entries, via the square
    of the quarter turn.
    """

    fold: int
    centre: tuple[Fraction, Fraction]
    centre_kind: str
    side: Side


@dataclass(frozen=True)
class AxisInventory:
    axes: tuple[AxisEntry, ...]
    centres: tuple[CentreEntry, ...]


_AXIS_NAME = {
    PointPart.MIRROR_H: "horizontal",
    PointPart.MIRROR_V: "vertical",
    PointPart.MIRROR_D: "diagonal",
    PointPart.MIRROR_A: "antidiagonal",
}

#: Geometric shift of the axis offset under translation by (vx, vy).
_OFFSET_COEFF = {
    PointPart.MIRROR_H: (0, 1),
    PointPart.MIRROR_V: (1, 0),
    PointPart.MIRROR_D: (1, -1),
    PointPart.MIRROR_A: (1, 1),
}

#: Shift of the glide length when composing with translation by (vx, vy).
_GLIDE_COEFF = {
    PointPart.MIRROR_H: (Fraction(1), Fraction(0)),
    PointPart.MIRROR_V: (Fraction(0), Fraction(1)),
    PointPart.MIRROR_D: (Fraction(1, 2), Fraction(1, 2)),
    PointPart.MIRROR_A: (Fraction(1, 2), Fraction(-1, 2)),
}

_AXIS_SORT = {"horizontal": 0, "vertical": 1, "diagonal": 2, "antidiagonal": 3}


def _mirror_axis_entries(rep: Isometry, lattice: Lattice) -> list[AxisEntry]:
    point = rep.point
    cls = classify(rep)
    ox, oy = _OFFSET_COEFF[point]
    gx, gy = _GLIDE_COEFF[point]
    period, v0, vk = lattice.solve_functional(ox, oy)
    step = abs(gx * vk[0] + gy * vk[1])  # on-axis glide period
    entries = []
    for half in (0, 1):
        offset = (cls.offset + Fraction(half * period, 2)) % period
        shift_vec = v0 if half else (0, 0)
        glide = (cls.glide + gx * shift_vec[0] + gy * shift_vec[1]) % step
        glide = min(glide, step - glide)
        oblique = point in (PointPart.MIRROR_D, PointPart.MIRROR_A)
        entries.append(
            AxisEntry(
                axis=_AXIS_NAME[point],
                offset=offset,
                kind="mirror" if glide == 0 else "glide",
                glide=glide,
                mirror_position=(offset.denominator == 1) if oblique else None,
                side=rep.side,
                spacing=period,
            )
        )
    return entries


def _centre_entries(rep: Isometry, lattice: Lattice) -> list[CentreEntry]:
    cls = classify(rep)
    base = (2 * cls.centre[0], 2 * cls.centre[1])
    base = (int(base[0]), int(base[1]))
    v1, v2 = lattice.v1, lattice.v2
    if rep.point == PointPart.ROT180:
        fold = 2
        shifts = [(0, 0), v1, v2, (v1[0] + v2[0], v1[1] + v2[1])]
    else:
        fold = 4
        shifts = [
            (v[0] - v[1], v[0] + v[1])
            for v in [(0, 0), v1, v2, (v1[0] + v2[0], v1[1] + v2[1])]
        ]
    doubled = lattice.scaled(2)
    entries = {}
    for s in shifts:
        cx, cy = doubled.reduce((base[0] + s[0], base[1] + s[1]))
        kind = "cell_centre" if cx % 2 and cy % 2 else ("cell_corner" if not cx % 2 and not cy % 2 else "edge_midpoint")
        entries[(cx, cy)] = CentreEntry(
            fold=fold,
            centre=(Fraction(cx, 2), Fraction(cy, 2)),
            centre_kind=kind,
            side=rep.side,
        )
    return list(entries.values())


def axis_inventory(design: Design) -> AxisInventory:
    """The design's mirror axes, glide axes and rotation centres, one entry
    per translation-class."""
    group = find_symmetries(design)
    axes: list[AxisEntry] = []
    centres: list[CentreEntry] = []
    for rep in group.reps:
        if rep.point in _AXIS_NAME:
            axes.extend(_mirror_axis_entries(rep, group.translations))
        elif rep.point in (PointPart.ROT180, PointPart.ROT90):
            centres.extend(_centre_entries(rep, group.translations))
        # quarter turns come in inverse pairs about the same centres, so
        # the ROT270 cosets duplicate the ROT90 ones and are skipped
    axes.sort(key=lambda e: (_AXIS_SORT[e.axis], e.offset, e.kind, e.glide, e.side.value))
    centres.sort(key=lambda e: (e.fold, e.centre, e.side.value))
    return AxisInventory(axes=tuple(axes), centres=tuple(centres))


def glides_all_mirror_position(design: Design) -> bool:
    """True iff every oblique glide axis of the design is in mirror position."""
    return all(
        entry.mirror_position
        for entry in axis_inventory(design).axes
        if entry.kind == "glide" and entry.axis in ("diagonal", "antidiagonal")
    )
