"""Print exact psi coefficients about each vertex for a few signatures.

    python scripts/coefficient_table.py --order 6 2,3,7 2,4,5
"""

import argparse

from trimap.inverse import psi_series
from trimap.triangle import VERTICES, TriangleSignature

REFERENCE = ["2,3,7", "2,4,5", "3,3,4", "5,5,5"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("signatures", nargs="*", default=REFERENCE)
    ap.add_argument("--order", type=int, default=6)
    args = ap.parse_args()
    for text in args.signatures:
        sig = TriangleSignature.parse(text)
        for vertex in VERTICES:
            ps = psi_series(sig, vertex, args.order)
            print(f"{sig} vertex {vertex}: series in w^{ps.branch_order}, cycled {ps.cycled_signature}")
            for k, c in enumerate(ps.coefficients, start=1):
                print(f"  c_{k:<3d} = {c}")
        print()


if __name__ == "__main__":
    main()
