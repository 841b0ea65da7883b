"""Small named posets used in examples, tests and the command line.

Primed labels from the usual drawings are renumbered: in P2 the element
5' is 7, and in P3 the elements 3' and 5' are 7 and 8.  The blocks P4 and
P5 of P3 are stored with their labels compacted to 1..k in increasing order.
"""

from __future__ import annotations

from .poset import VEE, Notch, PlanarEmbedding, Poset, SkewDiagram, poset_from_covers
from .symalg import LinDenRat

VEE_POSET = poset_from_covers(3, [(1, 2), (1, 3)])
DIAMOND = poset_from_covers(4, [(1, 2), (1, 3), (2, 4), (3, 4)])
DOUBLE_DIAMOND = poset_from_covers(7, [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 7), (6, 7)])

P1 = poset_from_covers(6, [(1, 2), (2, 5), (1, 3), (3, 5), (1, 6), (4, 5), (4, 6)])
P2 = poset_from_covers(7, [(1, 2), (2, 5), (1, 3), (3, 5), (1, 6), (3, 7), (4, 7), (4, 6)])
P3 = poset_from_covers(8, [(1, 2), (2, 5), (1, 3), (3, 5), (1, 7), (1, 6), (7, 8), (4, 8), (4, 6)])
P4 = poset_from_covers(4, [(1, 2), (2, 4), (1, 3), (3, 4)])
P5 = poset_from_covers(5, [(1, 2), (2, 4), (1, 5), (3, 4), (3, 5)])

# Notches closed along P3 -> P2 -> P1.
NOTCH_P3 = Notch(1, 3, 7, VEE)
NOTCH_P2 = Notch(3, 5, 7, VEE)

SKEW_EXAMPLE = SkewDiagram((4, 4, 2), (1, 1, 0))

# Clockwise neighbour cycles with bottom 0 and top n+1 adjoined.
DIAMOND_EMBEDDING = PlanarEmbedding({
    0: (1,), 1: (0, 2, 3), 2: (1, 4), 3: (1, 4), 4: (2, 5, 3), 5: (4,),
})
DOUBLE_DIAMOND_EMBEDDING = PlanarEmbedding({
    0: (1,), 1: (0, 2, 3), 2: (1, 4), 3: (1, 4), 4: (2, 5, 6, 3),
    5: (4, 7), 6: (4, 7), 7: (5, 8, 6), 8: (7,),
})

NAMED = {
    "vee": VEE_POSET,
    "diamond": DIAMOND,
    "double-diamond": DOUBLE_DIAMOND,
    "p1": P1,
    "p2": P2,
    "p3": P3,
    "p4": P4,
    "p5": P5,
}


def psi_p1_figure_regression() -> LinDenRat:
    """Psi of P1 by the definitional sum."""
    from .valuations import psi_direct

    return psi_direct(P1)


# A configuration of four plane vectors, cyclic with respect to V = {}, and a
# point p whose containing subcones {B : p in R_+ B} are
# {w1,w4}, {w3,w4}, {w1,w2,w4}, {w1,w3,w4}, {w2,w3,w4} and {w1,w2,w3,w4}.
PLANAR_W = ((0, 1), (-3, -1), (1, 2), (1, 0))
PLANAR_POINT = (2, 1)
PLANAR_SUBSETS = ((1, 4), (3, 4), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 3, 4))
