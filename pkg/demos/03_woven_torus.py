"""Close a striped weave up into a torus and count what survives.

Run with ``python3 demos/03_woven_torus.py``.  Identifying opposite sides
of a rectangle of fabric turns the infinite weave into a finite one on a
torus; strands become closed bands that wind around it.  The script counts
bands on the two kinds of rectangle the library supports, checks the
closed-form counts against a brute-force trace, repairs a rectangle that
is too small for its palette, and reads off the permutation a band
undergoes each time it comes back around.
"""

from isoweave import (
    Striping,
    axis_square,
    band_count,
    crossing_permutation,
    cycle_notation,
    diagonal_rect,
    inflate,
    trace_strands,
    twill,
    validate_torus,
)


def banner(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))


# -- band counts on reference rectangles ---------------------------------

# diagonal_rect(p, q) closes the weave over the rectangle spanned by the
# diagonal vector (p, p) and the antidiagonal vector (q, -q); axis_square(n)
# uses the axis-aligned square of side n.  Counts depend only on the
# rectangle and the palette size.
banner("band counts, three colours")
cases = [
    ("diagonal 3 x 15", diagonal_rect(3, 15)),
    ("diagonal 15 x 15", diagonal_rect(15, 15)),
    ("diagonal 21 x 15", diagonal_rect(21, 15)),
    ("axis square 30", axis_square(30)),
]
print(f"{'rectangle':18s} {'bands/dir':>9s} {'per colour':>10s} {'crossings':>9s}"
      f"   trace agrees")
for name, basis in cases:
    closed = band_count(basis, 3)
    traced = trace_strands(basis, 3)
    print(f"{name:18s} {closed.bands_per_direction:9d}"
          f" {closed.strands_per_colour_per_direction:10d}"
          f" {closed.crossings_per_strand:9d}   {closed == traced}")

# -- validating and inflating a rectangle --------------------------------

# The rectangle must be a sublattice of the design's symmetry translations
# and must bring the colour sequences back into phase.  When it is too
# small, inflate() grows each side minimally until both conditions hold.
banner("fitting a rectangle to a striped 3/7 twill")
design = twill("3/7")
striping = Striping(3, (0, 1, 2), (1, 2, 0))
for basis in (diagonal_rect(3, 5), axis_square(10), diagonal_rect(3, 15)):
    ok = validate_torus(design, striping, basis)
    fixed = inflate(design, striping, basis)
    note = "already valid" if ok else f"inflated to {fixed}"
    print(f"  {basis}: valid={ok}  ({note})")

# -- the crossing permutation --------------------------------------------

# Follow one band all the way around the torus and record which band sits
# on top at successive crossings: the result is a permutation whose cycle
# structure says how the bands are braided through each other.
banner("crossing permutations on diagonal rectangles")
for p, q in ((3, 15), (15, 15), (21, 15)):
    perm = crossing_permutation(diagonal_rect(p, q), 3)
    print(f"  diagonal {p} x {q}: {cycle_notation(perm)}")
