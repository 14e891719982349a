#!/usr/bin/env python3
"""Frame growth on antipodal polygon configurations.

The 2n planar vectors in n antipodal pairs have exactly 2n maximal
pointed frames (runs of n consecutive points), so the frame count is
unbounded even in the plane.  The low-overlap family bound 2^d = 4 still
holds: the greedy family stays small because consecutive frames overlap
in a full-rank set.

Usage: python scripts/polygon_frames.py [max_pairs]
"""

import sys

from psskit import enumerate_mns, max_disjoint_family, polygon_example


def main() -> None:
    max_pairs = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    print(f"{'n':>3} {'|X|':>4} {'frames':>7} {'low-overlap family':>19}")
    for n in range(1, max_pairs + 1):
        X = polygon_example(n)
        frames = enumerate_mns(X)
        if X.rank() == X.dim:
            family = str(len(max_disjoint_family(X)))
        else:
            family = "-"  # a single pair spans only a line
        print(f"{n:>3} {len(X):>4} {len(frames):>7} {family:>19}")
    print("\nframes grow linearly; the family never exceeds 2^2 = 4")


if __name__ == "__main__":
    main()
