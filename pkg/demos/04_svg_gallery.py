"""Render a small gallery of weaves and colourings to SVG files.

Run with ``python3 demos/04_svg_gallery.py``; the pictures land in
``demos/output/``.  Drawings show interlacement directly: at each crossing
the upper strand's full shade covers the lower one's pale shade.  Axis and
lattice overlays come from the symmetry analysis, and the reverse face
shows what the back of the cloth looks like.
"""

from pathlib import Path

from isoweave import (
    ColourSetsRelation,
    Face,
    RenderOptions,
    Striping,
    permutation_design,
    plain_weave,
    render_colouring,
    render_design,
    search_stripings,
    twill,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def save(name: str, markup: str) -> None:
    path = OUT / name
    path.write_text(markup)
    print(f"wrote {path}")


# Plain designs: dark cells are warp up, pale cells weft up.
save("plain_weave.svg", render_design(plain_weave()))
save("twill_2_1.svg", render_design(twill("2/1")))
save("satin_5.svg", render_design(permutation_design((0, 2, 4, 1, 3))))

# Overlays: reflection/glide axes and a fundamental lattice unit.
decorated = RenderOptions(cell_px=28, show_axes=True, show_lattice_unit=True,
                          window=(9, 9))
save("twill_2_1_axes.svg", render_design(twill("2/1"), decorated))

# The reverse face swaps which strand shows at every crossing and is seen
# mirror-reversed, as if the cloth were turned over left to right.
save("twill_2_1_reverse.svg",
     render_design(twill("2/1"), RenderOptions(side=Face.REVERSE)))

# Colourings: each strand wears its sequence colour, dark when on top.
three = search_stripings(twill("2/1"), 3, ColourSetsRelation.EQUAL, thin=True)[0]
save("twill_2_1_three_colours.svg",
     render_colouring(twill("2/1"), three, RenderOptions(window=(9, 9))))

split = Striping(4, (0, 1), (2, 3))
save("twill_2_1_split_palette.svg",
     render_colouring(twill("2/1"), split, RenderOptions(window=(8, 8))))

exceptional = permutation_design((0, 1, 3, 2))
four = search_stripings(exceptional, 4, ColourSetsRelation.EQUAL, thin=True)[0]
save("exception_four_colours.svg",
     render_colouring(exceptional, four, RenderOptions(window=(8, 8))))
