"""Search for perfect striped colourings and inspect what makes them tick.

Run with ``python3 demos/02_perfect_stripings.py``.  A striping assigns a
repeating colour sequence to the warps and another to the wefts; it is
perfect when every symmetry of the design permutes the colours instead of
scrambling them.  The script walks through the chequered two-colouring of
plain weave, exhaustive searches on twills, redundancy patterns, colour
placement by necessary conditions, and the obstruction that stops
quarter-turn fabrics from being perfectly coloured.
"""

from isoweave import (
    ColourSetsRelation,
    Striping,
    colour_sets_relation,
    constructive_placement,
    cycle_notation,
    is_perfect,
    is_twilly,
    permutation_design,
    plain_weave,
    redundancy,
    search_stripings,
    serialise,
    standard_colouring,
    twill,
)

EQUAL = ColourSetsRelation.EQUAL
DISJOINT = ColourSetsRelation.DISJOINT


def banner(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


# -- the chequered colouring of plain weave ------------------------------

banner("plain weave, two colours")
report = is_perfect(plain_weave(), standard_colouring())
print(f"standard colouring {standard_colouring()} perfect: {report.perfect}")
print("how the group's coset representatives move the palette:")
for iso, perm in report.permutations:
    print(f"  {iso}  ->  {cycle_notation(perm)}")

# -- exhaustive searches on twills ---------------------------------------

banner("2/1 twill, three colours, equal palettes on both directions")
found = search_stripings(twill("2/1"), 3, EQUAL, thin=True)
for s in found:
    print(f"found {s}  twilly: {is_twilly(s)}")
    print("redundant crossings (warp and weft share a colour):")
    print(serialise(redundancy(s).as_design()).rstrip())

banner("4/1 twill, five colours")
for s in search_stripings(twill("4/1"), 5, EQUAL, thin=True):
    print(f"found {s}  twilly: {is_twilly(s)}")

# A disjoint-palette striping colours warps and wefts from separate colour
# pools, so no crossing can ever be redundant.
banner("2/1 twill, four colours split across the directions")
for s in search_stripings(twill("2/1"), 4, DISJOINT, thin=True):
    print(f"found {s}  relation: {colour_sets_relation(s).name}"
          f"  redundancy empty: {redundancy(s).is_empty}")

# -- placement by necessary conditions -----------------------------------

banner("constructive placement vs. exhaustive search")
placed = set(constructive_placement(twill("2/1"), 3))
searched = set(search_stripings(twill("2/1"), 3, EQUAL, thin=True))
print(f"placement finds {len(placed)} striping(s), search finds {len(searched)};"
      f" agree: {placed == searched}")

# -- the quarter-turn obstruction ----------------------------------------

# A quarter turn swaps warps with wefts, which forces the two colour
# sequences to match up strand for strand.  For three or four colours that
# requirement is unsatisfiable on these fabrics; the five-end satin only
# succeeds once every strand in the period wears its own colour.
banner("five-end satin (has quarter turns)")
satin = permutation_design((0, 2, 4, 1, 3))
for colours in (2, 3, 4, 5, 6):
    found = search_stripings(satin, colours, EQUAL, thin=True)
    extra = f"  e.g. {found[0]}" if found else ""
    print(f"  {colours} colours: {len(found)} perfect striping(s){extra}")

# The one escape hatch at small order: an order-4 fabric whose glide axes
# run along the strands rather than obliquely.  It genuinely takes four
# colours, and its redundancy pattern is not a twill's.
banner("the order-4 exception")
exceptional = permutation_design((0, 1, 3, 2))
print(serialise(exceptional).rstrip())
for s in search_stripings(exceptional, 4, EQUAL, thin=True):
    print(f"found {s}  twilly: {is_twilly(s)}")

# -- a conflict, witnessed ----------------------------------------------

banner("why an arbitrary striping fails")
bad = Striping(3, (0, 1), (2,))
report = is_perfect(twill("2/1"), bad)
print(f"{bad} perfect: {report.perfect}")
c = report.conflict
a = f"{c.strand_a.direction.value} {c.strand_a.index}"
b = f"{c.strand_b.direction.value} {c.strand_b.index}"
print(f"witness: {c.isometry} forces {a} and {b},"
      f" which wear different colours, onto a single colour")
