"""Close the notches P3 -> P2 -> P1 and factor P3 over its blocks."""

from posetval.fixtures import NOTCH_P2, NOTCH_P3, P1, P3
from posetval.poset import close_notch
from posetval.valuations import factor_biconnected, notch_comparison, psi_direct


def main():
    P = P3
    for notch in (NOTCH_P3, NOTCH_P2):
        cmp = notch_comparison(P, notch)
        print(f"closing notch ({notch.a},{notch.b},{notch.c}): identity holds = {cmp.holds}")
        P, _ = close_notch(P, notch)
    print("reached P1:", P == P1)
    print("Psi(P1) =", psi_direct(P1).render())
    for f in factor_biconnected(P3):
        print(f"block on {f.labels}: {f.psi.render()}")


if __name__ == "__main__":
    main()
