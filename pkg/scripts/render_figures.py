#!/usr/bin/env python3
"""Render the classic disc tilings with their ball borders highlighted.

Writes pentagrid.svg ({5,4}) and heptagrid.svg ({7,3}) into the output
directory, one highlighted border ring each.
"""

import argparse
from pathlib import Path

from itpda.disc import RenderOptions, generate_tiles, to_svg


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--depth", type=int, default=4)
    parser.add_argument("--highlight", type=int, default=None,
                        help="ring to fill (defaults to the outermost)")
    parser.add_argument("--out", type=Path, default=Path("out"))
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    ring = args.highlight if args.highlight is not None else args.depth
    for name, p, q in (("pentagrid", 5, 4), ("heptagrid", 7, 3)):
        tiles = generate_tiles(p, q, args.depth)
        svg = to_svg(tiles, RenderOptions(highlight=ring))
        target = args.out / f"{name}.svg"
        target.write_text(svg)
        print(f"{target}: {{{p},{q}}} depth {args.depth}, {len(tiles)} tiles")


if __name__ == "__main__":
    main()
