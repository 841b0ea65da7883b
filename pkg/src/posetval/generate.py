"""Enumeration and seeded random generation of posets."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations
from typing import Iterator, List, Optional, Tuple

from .poset import Notch, Poset, find_notches, linear_extensions, order_ideals, poset_from_covers, elements_of


def naturally_labeled_posets(n: int) -> Iterator[Poset]:
    """Every poset on 1..n in which i < j in P implies i < j as integers.

    Built by placing element k above an order ideal of the poset on 1..k-1,
    which reaches each naturally labeled poset exactly once.
    """
    def grow(k: int, rels: Tuple[Tuple[int, int], ...]) -> Iterator[Poset]:
        P = poset_from_covers(k, rels)
        if k == n:
            yield P
            return
        new = k + 1
        for ideal in order_ideals(P):
            extra = tuple((i, new) for i in P.maximal_elements(ideal)) if ideal else ()
            yield from grow(new, P.covers + extra)

    if n == 0:
        yield poset_from_covers(0, [])
        return
    yield from grow(1, ())


def canonical_form(P: Poset) -> Tuple[Tuple[int, int], ...]:
    """Smallest cover list over all relabelings along linear extensions.

    Two posets are isomorphic exactly when their canonical forms agree.
    """
    best = None
    for w in linear_extensions(P):
        pos = {v: k for k, v in enumerate(w, start=1)}
        key = tuple(sorted((pos[i], pos[j]) for i, j in P.covers))
        if best is None or key < best:
            best = key
    return best if best is not None else ()


@lru_cache(maxsize=None)
def _iso_classes(n: int) -> Tuple[Poset, ...]:
    seen = {}
    for P in naturally_labeled_posets(n):
        key = canonical_form(P)
        if key not in seen:
            seen[key] = poset_from_covers(n, key)
    return tuple(seen[k] for k in sorted(seen))


def posets_up_to_isomorphism(n: int, connected: Optional[bool] = None) -> List[Poset]:
    """One representative per isomorphism class, naturally labeled.

    ``connected`` restricts to connected (True) or disconnected (False) posets.
    """
    out = list(_iso_classes(n))
    if connected is not None:
        out = [P for P in out if P.is_connected() == connected]
    return out


def all_permutations(n: int) -> Iterator[Tuple[int, ...]]:
    return permutations(range(1, n + 1))


def random_relabel(P: Poset, rng: random.Random) -> Poset:
    labels = list(P.elements)
    rng.shuffle(labels)
    return P.relabel({old: new for old, new in zip(P.elements, labels)})


def random_poset(n: int, rng: random.Random, density: float = 0.3, relabel: bool = True) -> Poset:
    """Random relations i < j (each with probability ``density``), then a random relabeling."""
    rels = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < density]
    P = poset_from_covers(n, rels)
    return random_relabel(P, rng) if relabel else P


def random_forest(n: int, rng: random.Random) -> Poset:
    """Random forest poset: each element gets at most one upper cover; labels shuffled."""
    rels = []
    for k in range(2, n + 1):
        parent = rng.randrange(0, k)
        if parent:
            rels.append((k, parent))
    return random_relabel(poset_from_covers(n, rels), rng)


def random_connected_poset(n: int, rng: random.Random, density: float = 0.35) -> Poset:
    while True:
        P = random_poset(n, rng, density)
        if P.is_connected():
            return P


def random_notched_poset(n: int, rng: random.Random, density: float = 0.35) -> Tuple[Poset, Notch]:
    """A random poset that has a notch, together with one of its notches."""
    while True:
        P = random_poset(n, rng, density)
        notches = find_notches(P)
        if notches:
            return P, rng.choice(notches)


def order_ideal_sets(P: Poset) -> List[Tuple[int, ...]]:
    return [tuple(elements_of(m)) for m in order_ideals(P)]
