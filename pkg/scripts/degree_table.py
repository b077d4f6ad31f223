"""Print the invariant table for a range of degrees, with each value's derivation routes.

Usage: python3 scripts/degree_table.py [d_min] [d_max]
"""

import sys

from pencilcontact import invariants as I


def main(argv):
    d_min = int(argv[1]) if len(argv) > 1 else 3
    d_max = int(argv[2]) if len(argv) > 2 else 8
    rows = I.invariant_table(d_min, d_max)
    width = max(len(r.invariant_id) for r in rows)
    print(f"{'invariant':<{width}}  {'route':<14}" + "".join(f"d={k}".rjust(9) for k in range(d_min, d_max + 1)) + "  routes")
    for r in rows:
        vals = "".join(str(v).rjust(9) for _, v in r.values)
        print(f"{r.invariant_id:<{width}}  {r.derivation:<14}{vals}  {'agree' if r.routes_agree else 'DISAGREE'}")


if __name__ == "__main__":
    main(sys.argv)
