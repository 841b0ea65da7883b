"""A short tour: valuations, Hilbert series and the residue that links them."""

from posetval.fixtures import DIAMOND, VEE_POSET
from posetval.symalg.residue import total_residue
from posetval.valuations import hilb_root, hilb_wt, phi_direct, psi_direct


def main():
    print("vee poset 1<2, 1<3")
    print("  Phi      =", phi_direct(VEE_POSET).render())
    H = hilb_wt(VEE_POSET)
    print("  H(K^wt)  =", H.render())
    print("  residue  =", total_residue(H, 3).render())

    print("diamond 1<2<4, 1<3<4")
    print("  Psi      =", psi_direct(DIAMOND).render())
    H = hilb_root(DIAMOND)
    print("  H(K^root)=", H.render())
    print("  residue  =", total_residue(H, 3).render())


if __name__ == "__main__":
    main()
