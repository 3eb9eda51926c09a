"""Write SVG tilings for the reference signatures into a directory.

    python scripts/render_tilings.py out/ --depth 6
"""

import argparse
from pathlib import Path

from trimap.tiling import render_svg, tiling
from trimap.triangle import TriangleSignature

REFERENCE = [(2, 3, 7), (2, 4, 5), (3, 3, 4), (5, 5, 5)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", type=Path)
    ap.add_argument("--depth", type=int, default=6)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for t in REFERENCE:
        sig = TriangleSignature(*t)
        tiles = tiling(sig, args.depth)
        path = args.outdir / f"tiling_{t[0]}_{t[1]}_{t[2]}_d{args.depth}.svg"
        path.write_text(render_svg(sig, tiles))
        print(f"{path}: {len(tiles)} tiles")


if __name__ == "__main__":
    main()
