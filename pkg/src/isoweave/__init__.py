"""isoweave: symmetry analysis and perfect striped colourings of two-fold weaves."""

from isoweave.colouring import (
    ColourSetsRelation,
    ColouringReport,
    Conflict,
    RedundancyPattern,
    Striping,
    colour_sets_relation,
    constructive_placement,
    induced_permutation,
    is_perfect,
    is_thin,
    is_twilly,
    redundancy,
    search_stripings,
    standard_colouring,
    stripes_preserved,
    twilly_stripings,
    visible,
)
from isoweave.design import (
    Cell,
    Design,
    Direction,
    ParseError,
    Strand,
    TwillSpec,
    parse_design,
    permutation_design,
    plain_weave,
    reverse,
    serialise,
    twill,
)
from isoweave.isometry import (
    IsoClass,
    Isometry,
    PointPart,
    Side,
    act_on_cell,
    act_on_doubled,
    act_on_strand,
    classify,
    compose,
    identity,
    invert,
    translation,
)
from isoweave.svg import (
    DEFAULT_PALETTE,
    Face,
    RenderOptions,
    render_colouring,
    render_design,
)
from isoweave.symmetry import (
    AxisEntry,
    AxisInventory,
    CentreEntry,
    Lattice,
    LatticeUnits,
    LatticeUnitsReport,
    SymmetryGroup,
    axis_inventory,
    find_symmetries,
    glides_all_mirror_position,
    hangs_together,
    has_quarter_turn,
    is_isonemal,
    lattice_units,
    subgroup_check,
)
from isoweave.torus import (
    BandReport,
    BasisKind,
    TorusBasis,
    axis_square,
    band_count,
    crossing_permutation,
    cycle_notation,
    diagonal_rect,
    inflate,
    trace_strands,
    validate_torus,
)

__all__ = [
    "AxisEntry",
    "AxisInventory",
    "BandReport",
    "BasisKind",
    "Cell",
    "CentreEntry",
    "ColourSetsRelation",
    "ColouringReport",
    "Conflict",
    "DEFAULT_PALETTE",
    "Design",
    "Direction",
    "Face",
    "IsoClass",
    "Isometry",
    "Lattice",
    "LatticeUnits",
    "LatticeUnitsReport",
    "ParseError",
    "PointPart",
    "RedundancyPattern",
    "RenderOptions",
    "Side",
    "Strand",
    "Striping",
    "SymmetryGroup",
    "TorusBasis",
    "TwillSpec",
    "act_on_cell",
    "act_on_doubled",
    "act_on_strand",
    "axis_inventory",
    "axis_square",
    "band_count",
    "classify",
    "colour_sets_relation",
    "compose",
    "constructive_placement",
    "crossing_permutation",
    "cycle_notation",
    "diagonal_rect",
    "find_symmetries",
    "glides_all_mirror_position",
    "hangs_together",
    "has_quarter_turn",
    "identity",
    "induced_permutation",
    "inflate",
    "invert",
    "is_isonemal",
    "is_perfect",
    "is_thin",
    "is_twilly",
    "lattice_units",
    "parse_design",
    "permutation_design",
    "plain_weave",
    "redundancy",
    "render_colouring",
    "render_design",
    "reverse",
    "search_stripings",
    "serialise",
    "standard_colouring",
    "stripes_preserved",
    "subgroup_check",
    "translation",
    "trace_strands",
    "twill",
    "twilly_stripings",
    "validate_torus",
    "visible",
]
