"""Shared test oracles, independent of the library's own group machinery."""

import random

import numpy as np

from isoweave.design import Cell, Design
from isoweave.isometry import Isometry, Side, act_on_cell


def pointwise_symmetry_check(design: Design, iso: Isometry) -> bool:
    """Direct check that ``iso`` is a symmetry of ``design`` with the right
    side flag: raised values transported cell by cell must match exactly
    when the point part's direction swap and the side flag cancel, and be
    complemented otherwise."""
    swap = -1 if iso.point.swaps_directions else 1
    flip = -1 if iso.side == Side.REVERSING else 1
    expect_equal = swap * flip == 1
    w = design.width * 2
    h = design.height * 2
    for y in range(h):
        for x in range(w):
            image = act_on_cell(iso, Cell(x, y))
            same = design.warp_up(image.x, image.y) == design.warp_up(x, y)
            if same != expect_equal:
                return False
    return True


def random_design(rng: random.Random, max_side: int = 6) -> Design:
    w = rng.randrange(1, max_side + 1)
    h = rng.randrange(1, max_side + 1)
    rows = tuple("".join(rng.choice("#.") for _ in range(w)) for _ in range(h))
    return Design(w, h, rows)


_SUBSET_MASKS: dict[int, np.ndarray] = {}


def lifts_off_by_subsets(design: Design) -> bool:
    """True iff some nonempty proper set of strand classes lifts off the
    rest, found by testing the closure of every candidate subset outright
    (no reachability shortcut): a set can be lifted exactly when every
    strand passing over one of its members is itself a member."""
    w, h = design.width, design.height
    n = w + h
    over = np.zeros((n, n), dtype=np.uint8)  # over[s, t]: t crosses over s
    for y in range(h):
        for x in range(w):
            if design.warp_up(x, y):
                over[w + y, x] = 1
            else:
                over[x, w + y] = 1
    if n not in _SUBSET_MASKS:
        m = np.arange(1, 2**n - 1, dtype=np.uint32)
        _SUBSET_MASKS[n] = ((m[:, None] >> np.arange(n, dtype=np.uint32)) & 1).astype(
            np.uint8
        )
    subsets = _SUBSET_MASKS[n]
    required = subsets @ over
    closed = ~((required > 0) & (subsets == 0)).any(axis=1)
    return bool(closed.any())
