"""The alternating subset count for a cyclic plane configuration."""

from itertools import combinations

from posetval.cones import in_cone, is_cyclic
from posetval.fixtures import PLANAR_POINT, PLANAR_W


def main():
    print("W =", PLANAR_W, "cyclic:", is_cyclic(PLANAR_W, []))
    total = 0
    for k in range(len(PLANAR_W) + 1):
        for B in combinations(range(1, len(PLANAR_W) + 1), k):
            if in_cone(PLANAR_POINT, [PLANAR_W[i - 1] for i in B]):
                print(f"  p = {PLANAR_POINT} lies in the cone of {B}")
                total += (-1) ** k
    print("signed count:", total)


if __name__ == "__main__":
    main()
