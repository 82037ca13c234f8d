"""Command-line front end.

Subcommands cover the library surface: construct twills, report a
weave's symmetry structure, test hanging together, check a striping for
perfection, search for and place perfect stripings, count strands on a
torus closure, and draw SVG figures.

Designs are read from ``--design FILE``, with ``-`` (the default)
meaning standard input, so commands compose in pipes::

    isoweave twill 2/1 | isoweave analyze

Exit status is 0 on success, 1 on domain errors (unreadable files,
malformed designs or stripings, impossible requests), and 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import sys

from isoweave.colouring import (
    ColourSetsRelation,
    Striping,
    colour_sets_relation,
    constructive_placement,
    is_perfect,
    is_thin,
    redundancy,
    search_stripings,
    stripes_preserved,
)
from isoweave.design import Design, ParseError, Strand, parse_design, serialise, twill
from isoweave.svg import Face, RenderOptions, render_colouring, render_design
from isoweave.symmetry import (
    axis_inventory,
    find_symmetries,
    hangs_together,
    has_quarter_turn,
    is_isonemal,
    lattice_units,
)
from isoweave.torus import (
    axis_square,
    band_count,
    crossing_permutation,
    cycle_notation,
    diagonal_rect,
    inflate,
    validate_torus,
)

__all__ = ["main"]


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


# -- shared plumbing -----------------------------------------------------


def _read_design(path: str) -> Design:
    if path == "-":
        return parse_design(sys.stdin.read())
    with open(path, encoding="ascii") as handle:
        return parse_design(handle.read())


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _strand(strand: Strand) -> str:
    return f"{strand.direction.name.lower()} {strand.index}"


def _parse_basis(text: str, mult: int):
    kind, _, dims = text.partition(":")
    try:
        if kind == "diag":
            p, q = (int(part) for part in dims.split(","))
            basis = diagonal_rect(p, q)
        elif kind == "square":
            basis = axis_square(int(dims))
        else:
            raise ValueError
    except ValueError:
        raise ValueError(
            f"bad basis {text!r}: expected diag:P,Q or square:N"
        ) from None
    return basis.scaled(mult, mult)


# -- subcommand handlers -------------------------------------------------


def _cmd_twill(args: argparse.Namespace) -> int:
    _emit(serialise(twill(args.spec)), args.out)
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    design = _read_design(args.design)
    group = find_symmetries(design)
    units = lattice_units(design)
    inventory = axis_inventory(design)
    lines = [
        f"design {design.width} {design.height}",
        f"order: {design.order}",
        f"isonemal: {_yes(is_isonemal(design))}",
        f"hangs together: {_yes(hangs_together(design))}",
        f"quarter turns: {_yes(has_quarter_turn(design))}",
    ]
    flip = group.side_reversing_translation()
    lines.append(
        "side-reversing translation: "
        + ("none" if flip is None else f"({flip[0]}, {flip[1]})")
    )
    for label, unit in (("pattern", units.preserving), ("extended", units.extended)):
        lines.append(
            f"lattice unit ({label}): v1={unit.v1} v2={unit.v2} "
            f"det={unit.det} p={unit.diag_step} q={unit.anti_step} "
            f"index={unit.index}"
        )
    lines.append("axes:")
    if not inventory.axes:
        lines.append("  none")
    for axis in inventory.axes:
        parts = [
            f"  {axis.axis} {axis.kind}",
            f"offset={axis.offset}",
            f"spacing={axis.spacing}",
        ]
        if axis.kind == "glide":
            parts.append(f"glide={axis.glide}")
        if axis.mirror_position is not None:
            parts.append(f"mirror-position={_yes(axis.mirror_position)}")
        parts.append(f"side={axis.side.value}")
        lines.append(" ".join(parts))
    lines.append("centres:")
    if not inventory.centres:
        lines.append("  none")
    for centre in inventory.centres:
        lines.append(
            f"  fold={centre.fold} centre=({centre.centre[0]}, {centre.centre[1]}) "
            f"kind={centre.centre_kind} side={centre.side.value}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_hang(args: argparse.Namespace) -> int:
    design = _read_design(args.design)
    print(f"hangs together: {_yes(hangs_together(design))}")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    design = _read_design(args.design)
    striping = Striping.parse(args.striping)
    report = is_perfect(design, striping)
    lines = [
        f"striping: {striping}",
        f"thin: {_yes(is_thin(striping))}",
        f"colour sets: {colour_sets_relation(striping).value}",
    ]
    cells = redundancy(striping).cells
    lines.append(
        "redundancy: " + ("empty" if not cells else f"{len(cells)} cells per period")
    )
    lines.append(f"stripes preserved: {_yes(stripes_preserved(design, striping))}")
    lines.append(f"perfect: {_yes(report.perfect)}")
    if report.conflict is not None:
        conflict = report.conflict
        lines.append(
            f"conflict: {conflict.isometry} sends like-coloured "
            f"{_strand(conflict.strand_a)} and {_strand(conflict.strand_b)} "
            "to different colours"
        )
    else:
        lines.append("colour permutations:")
        for isometry, perm in report.permutations:
            lines.append(f"  {isometry}: {perm}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    design = _read_design(args.design)
    relation = ColourSetsRelation(args.mode)
    found = search_stripings(
        design,
        args.colours,
        relation,
        thin=not args.thick,
        max_len=args.max_len,
    )
    _emit("".join(f"{striping}\n" for striping in found), args.out)
    return 0


def _cmd_place(args: argparse.Namespace) -> int:
    design = _read_design(args.design)
    found = constructive_placement(design, args.colours)
    _emit("".join(f"{striping}\n" for striping in found), args.out)
    return 0


def _cmd_torus(args: argparse.Namespace) -> int:
    basis = _parse_basis(args.basis, args.mult)
    colours = args.colours
    lines = [f"basis: {basis}", f"colours: {colours}"]
    if args.design is not None:
        design = _read_design(args.design)
        striping = (
            Striping.parse(args.striping)
            if args.striping is not None
            else Striping(colours, tuple(range(colours)), tuple(range(colours)))
        )
        valid = validate_torus(design, striping, basis)
        lines.append(f"period parallelogram of the coloured pattern: {_yes(valid)}")
        if not valid:
            lines.append(f"inflated: {inflate(design, striping, basis)}")
    try:
        report = band_count(basis, colours)
    except ValueError as exc:
        lines.append(f"colour phase: no ({exc})")
        _emit("\n".join(lines) + "\n", args.out)
        return 1
    lines += [
        f"bands per direction: {report.bands_per_direction}",
        f"strands per colour per direction: {report.strands_per_colour_per_direction}",
        f"crossings per strand: {report.crossings_per_strand}",
        f"crossing permutation: {cycle_notation(crossing_permutation(basis, colours))}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    design = _read_design(args.design)
    window = None
    if args.window is not None:
        try:
            w, h = (int(part) for part in args.window.split("x"))
        except ValueError:
            raise ValueError(f"bad window {args.window!r}: expected WxH") from None
        window = (w, h)
    options = RenderOptions(
        cell_px=args.cell_px,
        show_axes=args.axes,
        show_lattice_unit=args.lattice_unit,
        side=Face(args.side),
        window=window,
    )
    if args.striping is not None:
        svg = render_colouring(design, Striping.parse(args.striping), options)
    else:
        svg = render_design(design, options)
    _emit(svg, args.out)
    return 0


# -- parser --------------------------------------------------------------


def _add_design_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--design",
        default="-",
        metavar="FILE",
        help="design file to read ('-' for standard input, the default)",
    )


def _add_out_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", metavar="FILE", help="write output here instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoweave",
        description="analyse doubly periodic weaves, their symmetries, and stripings",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    twill_cmd = commands.add_parser("twill", help="write a twill design file")
    twill_cmd.add_argument("spec", help="run lengths over/under, e.g. 2/1 or 2/1/1/2")
    _add_out_arg(twill_cmd)
    twill_cmd.set_defaults(handler=_cmd_twill)

    analyze_cmd = commands.add_parser("analyze", help="full symmetry report")
    _add_design_arg(analyze_cmd)
    _add_out_arg(analyze_cmd)
    analyze_cmd.set_defaults(handler=_cmd_analyze)

    hang_cmd = commands.add_parser("hang", help="does the fabric hang together?")
    _add_design_arg(hang_cmd)
    hang_cmd.set_defaults(handler=_cmd_hang)

    check_cmd = commands.add_parser("check", help="check a striping for perfection")
    _add_design_arg(check_cmd)
    check_cmd.add_argument(
        "--striping", required=True, help="e.g. 'c=3 warp=0,1,2 weft=1,2,0'"
    )
    _add_out_arg(check_cmd)
    check_cmd.set_defaults(handler=_cmd_check)

    search_cmd = commands.add_parser("search", help="list perfect stripings")
    _add_design_arg(search_cmd)
    search_cmd.add_argument("--colours", type=int, required=True)
    search_cmd.add_argument(
        "--mode",
        choices=[ColourSetsRelation.EQUAL.value, ColourSetsRelation.DISJOINT.value],
        default=ColourSetsRelation.EQUAL.value,
        help="warp/weft palettes equal or disjoint (default equal)",
    )
    thinness = search_cmd.add_mutually_exclusive_group()
    thinness.add_argument(
        "--thin", action="store_true", default=True, help="thin stripes (default)"
    )
    thinness.add_argument(
        "--thick", action="store_true", help="allow repeated colours in a direction"
    )
    search_cmd.add_argument(
        "--max-len", type=int, default=None, help="stripe sequence length cap (thick)"
    )
    _add_out_arg(search_cmd)
    search_cmd.set_defaults(handler=_cmd_search)

    place_cmd = commands.add_parser(
        "place", help="place stripings constructively, then verify"
    )
    _add_design_arg(place_cmd)
    place_cmd.add_argument("--colours", type=int, required=True)
    _add_out_arg(place_cmd)
    place_cmd.set_defaults(handler=_cmd_place)

    torus_cmd = commands.add_parser("torus", help="strand counts on a torus closure")
    torus_cmd.add_argument(
        "--basis", required=True, help="diag:P,Q (diagonal units) or square:N"
    )
    torus_cmd.add_argument("--mult", type=int, default=1, help="scale both vectors")
    torus_cmd.add_argument("--colours", type=int, required=True)
    torus_cmd.add_argument(
        "--design", default=None, metavar="FILE", help="also validate against a design"
    )
    torus_cmd.add_argument(
        "--striping", default=None, help="striping for validation (default: thin identity)"
    )
    _add_out_arg(torus_cmd)
    torus_cmd.set_defaults(handler=_cmd_torus)

    render_cmd = commands.add_parser("render", help="draw an SVG figure")
    _add_design_arg(render_cmd)
    render_cmd.add_argument("--striping", default=None, help="colour the figure")
    render_cmd.add_argument("--axes", action="store_true", help="overlay symmetry axes")
    render_cmd.add_argument(
        "--lattice-unit", action="store_true", help="outline one lattice unit"
    )
    render_cmd.add_argument(
        "--side",
        choices=[face.value for face in Face],
        default=Face.OBVERSE.value,
    )
    render_cmd.add_argument("--cell-px", type=int, default=20)
    render_cmd.add_argument("--window", default=None, help="window in cells, e.g. 9x6")
    _add_out_arg(render_cmd)
    render_cmd.set_defaults(handler=_cmd_render)

    return parser


if __name__ == "__main__":
    sys.exit(main())
