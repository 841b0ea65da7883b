"""Brute-force search for strongly planar embeddings (test helper only).

Around each vertex of P with bottom and top adjoined, an upward drawing
lists the upper neighbours consecutively and then the lower ones, so it
suffices to try every ordering of each of the two groups.
"""

from itertools import permutations, product

from posetval.errors import EmbeddingError, NotStronglyPlanarError
from posetval.poset import PlanarEmbedding, bounded_regions, extended_hasse_neighbors


def _rotations(P, v, nbrs):
    top = P.n + 1

    def height(u):
        if u == 0:
            return -1
        if u == top:
            return P.n + 2
        return 0

    def is_upper(u):
        if v == 0:
            return True
        if v == top:
            return False
        if u == top:
            return True
        if u == 0:
            return False
        return P.lt(v, u)

    ups = sorted(u for u in nbrs if is_upper(u))
    downs = sorted(u for u in nbrs if not is_upper(u))
    seen = set()
    for a in permutations(ups):
        for b in permutations(downs):
            rot = a + b
            # rotations of the same cyclic order are equivalent
            k = rot.index(min(rot))
            canon = rot[k:] + rot[:k]
            if canon not in seen:
                seen.add(canon)
                yield canon


def find_strong_embedding(P, limit=200000):
    """First rotation system that validates and has two-chain regions, or None."""
    nbrs = extended_hasse_neighbors(P)
    verts = sorted(nbrs)
    choices = [list(_rotations(P, v, nbrs[v])) for v in verts]
    count = 0
    for combo in product(*choices):
        count += 1
        if count > limit:
            return None
        emb = PlanarEmbedding(dict(zip(verts, combo)))
        try:
            bounded_regions(P, emb)
        except (EmbeddingError, NotStronglyPlanarError):
            continue
        return emb
    return None
