"""How the vertex-recentring discrepancy falls as the series order grows.

    python scripts/consistency_vs_order.py 2,3,7
"""

import sys

from trimap.triangle import TriangleSignature
from trimap.verify import roundtrip_check, vertex_consistency_check

ORDERS = [5, 10, 20, 30, 40, 60, 80]


def main(argv):
    sig = TriangleSignature.parse(argv[0] if argv else "2,3,7")
    print(f"signature {sig}")
    print(f"{'order':>6} {'roundtrip':>12} {'vertex B':>12} {'vertex C':>12}")
    for n in ORDERS:
        rt = roundtrip_check(sig, n)
        b = vertex_consistency_check(sig, "B", n)
        c = vertex_consistency_check(sig, "C", n)
        print(f"{n:>6} {rt:>12.3e} {b:>12.3e} {c:>12.3e}")


if __name__ == "__main__":
    main(sys.argv[1:])
