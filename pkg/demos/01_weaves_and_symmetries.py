"""Build a handful of weave designs and read off their symmetry structure.

Run with ``python3 demos/01_weaves_and_symmetries.py``.  The script prints
each design's grid ('#' = warp up, '.' = weft up, top row first), then asks
the library the basic structural questions: what is the order, does the
fabric hang together, is every strand equivalent to every other under the
symmetry group, and which reflection axes and rotation centres does the
group contain.
"""

from isoweave import (
    classify,
    axis_inventory,
    find_symmetries,
    hangs_together,
    has_quarter_turn,
    is_isonemal,
    lattice_units,
    parse_design,
    permutation_design,
    plain_weave,
    serialise,
    twill,
)


def banner(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


def describe(name: str, design) -> None:
    banner(name)
    print(serialise(design).rstrip())
    print(f"order {design.order}"
          f" | hangs together: {hangs_together(design)}"
          f" | isonemal: {is_isonemal(design)}"
          f" | quarter turn: {has_quarter_turn(design)}")


# -- the classics --------------------------------------------------------

describe("plain weave", plain_weave())
describe("2/1 twill", twill("2/1"))
describe("2/2 twill", twill("2/2"))

# A satin spreads its single warp-up cell per row so that no two adjacent
# rows interlace in adjacent columns; the five-end satin uses the step-2
# offsets 0, 2, 4, 1, 3.
describe("five-end satin", permutation_design((0, 2, 4, 1, 3)))

# -- a fabric that falls apart -------------------------------------------

# Strands only cohere if the interlacement digraph is strongly connected.
# Stack plain weave beside a column of floats and the floats lift off.
loose = parse_design("design 4 2\n#.##\n.###\n")
describe("plain weave beside floats (not a fabric)", loose)
assert not hangs_together(loose)
print("the two right-hand warps never pass under a weft, so they slide out")

# -- symmetry groups, axes and rotation centres --------------------------

banner("symmetry group of the 2/1 twill")
group = find_symmetries(twill("2/1"))
print(f"translation lattice: a={group.translations.a},"
      f" b={group.translations.b}, d={group.translations.d}"
      f"  (basis (a, 0) and (b, d))")
print("coset representatives modulo translations:")
for rep in group.reps:
    cls = classify(rep)
    print(f"  {rep}  ->  {cls.kind} ({cls.side.name.lower()})")

banner("axis inventory of the 2/1 twill")
inv = axis_inventory(twill("2/1"))
for entry in inv.axes:
    print(f"  {entry.axis:12s} {entry.kind:6s} offset={entry.offset!s:4s}"
          f" glide={entry.glide!s:4s} mirror position={entry.mirror_position}"
          f" spacing={entry.spacing}")
for entry in inv.centres:
    cx, cy = entry.centre
    kind = entry.centre_kind.replace("_", " ")
    print(f"  {entry.fold}-fold centre at ({cx}, {cy}) [{kind}]")

banner("axis inventory of the five-end satin")
inv = axis_inventory(permutation_design((0, 2, 4, 1, 3)))
for entry in inv.axes:
    print(f"  {entry.axis:12s} {entry.kind:6s} offset={entry.offset!s:4s}"
          f" glide={entry.glide!s:4s} mirror position={entry.mirror_position}"
          f" spacing={entry.spacing}")
for entry in inv.centres:
    cx, cy = entry.centre
    kind = entry.centre_kind.replace("_", " ")
    print(f"  {entry.fold}-fold centre at ({cx}, {cy}) [{kind}]")

banner("lattice units")
for name, d in (("plain weave", plain_weave()), ("2/1 twill", twill("2/1"))):
    units = lattice_units(d)
    p, e = units.preserving, units.extended
    print(f"  {name}: side-preserving unit covers {p.det} cells"
          f" (diagonal step {p.diag_step}, antidiagonal step {p.anti_step});"
          f" extended unit covers {e.det}")
