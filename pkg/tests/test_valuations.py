import random
from fractions import Fraction

import networkx as nx
import pytest
import sympy

from oracles import (
    brute_extensions,
    count_root_points,
    count_strict_points,
    count_wt_points,
    geom_to_sympy,
    linden_to_sympy,
    same_rational,
    series_coefficients,
    sympy_phi,
    sympy_psi,
)
from planar_search import find_strong_embedding
from posetval.cones import in_cone
from posetval.errors import InputError, ShapeError
from posetval.fixtures import (
    DIAMOND,
    DIAMOND_EMBEDDING,
    DOUBLE_DIAMOND,
    DOUBLE_DIAMOND_EMBEDDING,
    NOTCH_P2,
    NOTCH_P3,
    P1,
    P2,
    P3,
    P4,
    P5,
    SKEW_EXAMPLE,
    VEE_POSET,
    psi_p1_figure_regression,
)
from posetval.generate import posets_up_to_isomorphism, random_forest, random_notched_poset, random_poset
from posetval.poset import (
    VEE,
    Notch,
    PlanarEmbedding,
    SkewDiagram,
    antichain,
    chain,
    circuits,
    is_forest,
    poset_from_covers,
    skew_poset,
)
from posetval.symalg import GeomRat, LinDenRat, Polynomial
from posetval.valuations import (
    EXTENSIONS,
    circuit_binomials,
    factor_biconnected,
    hilb_complete_intersection,
    hilb_notch_comparison,
    hilb_root,
    hilb_strict,
    hilb_strict_forest,
    hilb_wt,
    hook_data,
    main_transformation,
    main_transformation_check,
    maj_generating_function,
    notch_identity_check,
    phi_direct,
    phi_forest,
    planar_relation_degrees,
    psi_direct,
    psi_from_blocks,
    psi_planar,
    psi_skew,
    psi_skew_terms,
    psi_tree,
    psi_unicyclic,
    qhook_check,
    skew_names,
    total_residue_check,
    unicyclic_relation_degrees,
)

FORK_UP = poset_from_covers(3, [(1, 3), (2, 3)])


def covers_product(P):
    forms = []
    for i, j in P.covers:
        v = [0] * P.n
        v[i - 1], v[j - 1] = 1, -1
        forms.append(tuple(v))
    return forms


def over_covers(P, numerator):
    return LinDenRat.from_factors(numerator, covers_product(P))


def lin(*coeffs):
    return Polynomial.linear(coeffs)


# -- Psi and Phi by the definitional sum ----------------------------------------------


def test_psi_examples():
    assert psi_direct(chain(3)).render() == "1/((x1-x2)*(x2-x3))"
    assert psi_direct(antichain(2)).is_zero()
    assert psi_direct(DIAMOND) == over_covers(DIAMOND, lin(1, 0, 0, -1))


def test_phi_examples():
    assert phi_direct(antichain(3)).render() == "1/(x1*x2*x3)"
    assert phi_direct(VEE_POSET).render() == "(2*x1+x2+x3)/(x1*(x1+x2)*(x1+x3)*(x1+x2+x3))"
    assert phi_direct(FORK_UP).render() == "1/(x1*x2*(x1+x2+x3))"


def test_psi_and_phi_match_sympy_oracle():
    rng = random.Random(41)
    for _ in range(15):
        P = random_poset(rng.randint(2, 4), rng)
        assert same_rational(linden_to_sympy(psi_direct(P)), sympy_psi(P))
        assert same_rational(linden_to_sympy(phi_direct(P)), sympy_phi(P))


def test_grouped_and_literal_sums_agree():
    rng = random.Random(43)
    for _ in range(25):
        P = random_poset(rng.randint(1, 6), rng)
        assert psi_direct(P) == psi_direct(P, method=EXTENSIONS)
        assert phi_direct(P) == phi_direct(P, method=EXTENSIONS)


def test_homogeneity():
    for P in posets_up_to_isomorphism(4):
        psi = psi_direct(P)
        assert psi.is_zero() or psi.degree() == -(P.n - 1)
        assert phi_direct(P).degree() == -P.n


def test_unknown_method_rejected():
    with pytest.raises(InputError):
        psi_direct(chain(2), method="bogus")


# -- closed forms ---------------------------------------------------------------------


def test_phi_forest_examples():
    assert phi_forest(antichain(3)) == phi_direct(antichain(3))
    assert phi_forest(FORK_UP).render() == "1/(x1*x2*(x1+x2+x3))"
    assert phi_forest(chain(3)).render() == "1/(x1*(x1+x2)*(x1+x2+x3))"
    with pytest.raises(ShapeError):
        phi_forest(VEE_POSET)


def test_phi_forest_on_random_forests():
    rng = random.Random(47)
    for _ in range(30):
        P = random_forest(rng.randint(1, 7), rng)
        assert phi_forest(P) == phi_direct(P)


def test_psi_tree_examples():
    assert psi_tree(chain(3)) == psi_direct(chain(3))
    assert psi_tree(VEE_POSET).render() == "1/((x1-x2)*(x1-x3))"
    with pytest.raises(ShapeError):
        psi_tree(DIAMOND)


def test_psi_unicyclic_examples():
    assert psi_unicyclic(DIAMOND) == over_covers(DIAMOND, lin(1, 0, 0, -1))
    # P5 with labels 1,3',4,5',6 compacted to 1..5: min {1,3}, max {4,5}
    assert psi_unicyclic(P5) == over_covers(P5, lin(1, 0, 1, -1, -1))
    assert psi_unicyclic(P5) == psi_direct(P5)
    with pytest.raises(ShapeError):
        psi_unicyclic(chain(3))


def test_psi_skew_examples():
    assert psi_skew(SkewDiagram((1,))).render(["x1", "y1"]) == "1/(x1-y1)"
    row = SkewDiagram((2,))
    assert psi_skew(row).render(skew_names(row)) == "1/((x1-y1)*(x1-y2))"
    assert psi_skew(row) == psi_direct(VEE_POSET)


def test_skew_example_three_terms():
    D = SKEW_EXAMPLE
    names = skew_names(D)
    assert names == ["x1", "x2", "x3", "y1", "y2", "y3", "y4"]
    terms = psi_skew_terms(D)
    assert [t.render(names) for t in terms] == [
        "1/((x1-y1)*(x1-y2)*(x1-y3)*(x2-y3)*(x3-y3)*(x3-y4))",
        "1/((x1-y1)*(x1-y2)*(x2-y2)*(x2-y3)*(x3-y3)*(x3-y4))",
        "1/((x1-y1)*(x2-y1)*(x2-y2)*(x2-y3)*(x3-y3)*(x3-y4))",
    ]
    assert psi_skew(D) == psi_direct(skew_poset(D))


def test_psi_skew_random_diagrams():
    rng = random.Random(53)
    checked = 0
    while checked < 15:
        r = rng.randint(1, 3)
        lam = sorted((rng.randint(1, 4) for _ in range(r)), reverse=True)
        mu = sorted((rng.randint(0, l - 1) for l in lam), reverse=True)
        mu = [min(m, l - 1) for m, l in zip(mu, lam)]
        try:
            D = SkewDiagram(lam, mu)
            value = psi_skew(D)
        except (ShapeError, InputError):
            continue
        assert value == psi_direct(skew_poset(D))
        checked += 1


def test_psi_planar_examples():
    chain_emb = PlanarEmbedding({0: (1,), 1: (0, 2), 2: (1, 3), 3: (2, 4), 4: (3,)})
    assert psi_planar(chain(3), chain_emb) == psi_direct(chain(3))
    assert psi_planar(DIAMOND, DIAMOND_EMBEDDING) == psi_direct(DIAMOND)
    want = over_covers(DOUBLE_DIAMOND, lin(1, 0, 0, -1, 0, 0, 0) * lin(0, 0, 0, 1, 0, 0, -1))
    assert psi_planar(DOUBLE_DIAMOND, DOUBLE_DIAMOND_EMBEDDING) == want == psi_direct(DOUBLE_DIAMOND)


def test_psi_planar_on_searched_embeddings():
    for P in posets_up_to_isomorphism(5, connected=True):
        emb = find_strong_embedding(P)
        if emb is not None:
            assert psi_planar(P, emb) == psi_direct(P)


# -- blocks and notches -----------------------------------------------------------------


def test_biconnected_factorization_examples():
    tree = poset_from_covers(4, [(1, 2), (1, 3), (4, 3)])
    factors = factor_biconnected(tree)
    assert len(factors) == 3
    assert all(len(f.poset.covers) == 1 for f in factors)
    assert len(factor_biconnected(DIAMOND)) == 1
    f4, f5 = sorted(factor_biconnected(P3), key=lambda f: f.labels)
    assert f4.labels == (1, 2, 3, 5) and f4.poset == P4
    assert f5.labels == (1, 4, 6, 7, 8)
    assert nx.is_isomorphic(nx.DiGraph(f5.poset.covers), nx.DiGraph(P5.covers))
    assert psi_from_blocks(P3) == psi_direct(P3)


def test_biconnected_factorization_small_posets():
    for P in posets_up_to_isomorphism(5, connected=True):
        assert psi_from_blocks(P) == psi_direct(P)


def test_notch_examples():
    assert notch_identity_check(VEE_POSET, Notch(1, 2, 3, VEE))
    assert notch_identity_check(P2, NOTCH_P2)
    assert notch_identity_check(P3, NOTCH_P3)


def test_hilbert_notch_examples():
    assert hilb_notch_comparison(VEE_POSET, Notch(1, 2, 3, VEE)).holds
    assert hilb_notch_comparison(P2, NOTCH_P2).holds


def test_notch_identity_random():
    rng = random.Random(59)
    for _ in range(30):
        P, notch = random_notched_poset(rng.randint(3, 6), rng)
        assert notch_identity_check(P, notch)


def test_p1_regression():
    value = psi_p1_figure_regression()
    want = over_covers(P1, lin(1, 0, 0, 0, -1, 0) * lin(1, 0, 0, 1, -1, -1))
    assert value == want
    assert value.numerator.degree() == 2
    assert len(value.numerator.terms) == 7
    assert len(value.denominator) == 7


# -- Hilbert series ---------------------------------------------------------------------


def test_hilb_root_examples():
    assert hilb_root(chain(3)).render() == "1/((1-X1*X2^-1)*(1-X2*X3^-1))"
    cover_vecs = covers_product(DIAMOND)
    want = GeomRat(Polynomial(4, {(0, 0, 0, 0): 1, (1, 0, 0, -1): -1}), {tuple(v): 1 for v in cover_vecs})
    assert hilb_root(DIAMOND) == want
    assert hilb_root(antichain(2)) == GeomRat.one(2)


def test_hilb_wt_examples():
    assert hilb_wt(VEE_POSET).render() == "(1-X1^2*X2*X3)/((1-X1)*(1-X1*X2)*(1-X1*X3)*(1-X1*X2*X3))"
    assert hilb_wt(chain(2)).render() == "1/((1-X1)*(1-X1*X2))"
    assert hilb_wt(FORK_UP).render() == "1/((1-X1)*(1-X2)*(1-X1*X2*X3))"


def test_hilb_strict_examples():
    assert hilb_strict(chain(3)).render() == "1/((1-X1)*(1-X1*X2)*(1-X1*X2*X3))"
    assert hilb_strict(FORK_UP) == hilb_strict_forest(FORK_UP)
    down = poset_from_covers(2, [(2, 1)])
    assert hilb_strict(down).render() == "X2/((1-X2)*(1-X1*X2))"


def test_hilb_strict_forest_closed_form():
    rng = random.Random(61)
    for _ in range(25):
        P = random_forest(rng.randint(1, 6), rng)
        assert hilb_strict(P) == hilb_strict_forest(P)


def test_hilb_wt_counts_lattice_points():
    rng = random.Random(67)
    for _ in range(10):
        P = random_poset(rng.randint(1, 4), rng)
        order = 5
        assert series_coefficients(hilb_wt(P), [1] * P.n, order) == count_wt_points(P, order)


def test_hilb_strict_counts_p_partitions():
    rng = random.Random(71)
    for _ in range(10):
        P = random_poset(rng.randint(1, 4), rng)
        order = 5
        assert series_coefficients(hilb_strict(P), [1] * P.n, order) == count_strict_points(P, order)


def test_hilb_root_counts_lattice_points():
    rng = random.Random(73)
    for _ in range(6):
        P = random_poset(rng.randint(2, 4), rng, density=0.5)
        w = next(iter(brute_extensions(P)))
        weights = [0] * P.n
        for k, v in enumerate(w):
            weights[v - 1] = P.n - k  # strictly decreasing along an extension
        order = 4
        got = series_coefficients(hilb_root(P), weights, order)
        assert got == count_root_points(P, weights, order, in_cone)


def test_hilb_root_of_disjoint_union_is_product():
    P = poset_from_covers(5, [(1, 2), (3, 4), (3, 5)])
    A, amap = P.induced([1, 2])
    B, bmap = P.induced([3, 4, 5])
    ha = hilb_root(A).remap({new - 1: old - 1 for old, new in amap.items()}, 5)
    hb = hilb_root(B).remap({new - 1: old - 1 for old, new in bmap.items()}, 5)
    assert hilb_root(P) == ha * hb


def test_hilbert_series_match_sympy_sums():
    X = sympy.symbols("X1:5")
    for P in [VEE_POSET, DIAMOND, FORK_UP]:
        total = 0
        for w in brute_extensions(P):
            term = sympy.Integer(1)
            for k in range(P.n - 1):
                term /= 1 - X[w[k] - 1] / X[w[k + 1] - 1]
            total += term
        assert same_rational(geom_to_sympy(hilb_root(P)), total)


# -- q-hook -------------------------------------------------------------------------------


def test_qhook_examples():
    res = qhook_check(FORK_UP)
    assert res.direct == {0: 1, 1: 1} and res.holds
    res = qhook_check(chain(4))
    assert res.direct == {0: 1} and res.holds
    down = poset_from_covers(2, [(2, 1)])
    data = hook_data(down)
    assert data.maj == 1 and data.hooks == {1: 2, 2: 1}
    res = qhook_check(down)
    assert res.direct == {1: 1} and res.product == {1: 1}
    with pytest.raises(ShapeError):
        qhook_check(VEE_POSET)


def test_maj_generating_function_counts_extensions():
    rng = random.Random(79)
    for _ in range(20):
        P = random_poset(rng.randint(1, 6), rng)
        g = maj_generating_function(P)
        assert g == maj_generating_function(P, method=EXTENSIONS)
        assert sum(g.values()) == len(brute_extensions(P))


# -- binomials, complete intersections, main transformation -------------------------------------


def test_circuit_binomials():
    assert circuit_binomials(chain(3)) == []
    assert [b.render() for b in circuit_binomials(DIAMOND)] == ["U12*U24-U13*U34"]
    assert [b.render() for b in circuit_binomials(P4)] == ["U12*U24-U13*U34"]
    assert [b.render() for b in circuit_binomials(poset_from_covers(5, [(1, 2), (2, 5), (1, 3), (3, 5)]))] == [
        "U12*U25-U13*U35"
    ]


def test_complete_intersection_examples():
    diamond = hilb_complete_intersection(DIAMOND, [(1, 0, 0, -1)])
    assert diamond == hilb_root(DIAMOND)
    degrees = [(1, 0, 0, -1, 0, 0, 0), (0, 0, 0, 1, 0, 0, -1)]
    assert planar_relation_degrees(DOUBLE_DIAMOND, DOUBLE_DIAMOND_EMBEDDING) == degrees
    assert hilb_complete_intersection(DOUBLE_DIAMOND, degrees) == hilb_root(DOUBLE_DIAMOND)
    tree = poset_from_covers(3, [(1, 2), (1, 3)])
    assert hilb_complete_intersection(tree, []) == GeomRat.reciprocal(covers_product(tree), 3)
    with pytest.raises(ShapeError):
        hilb_complete_intersection(DIAMOND, [])


def test_unicyclic_complete_intersection_small():
    for P in posets_up_to_isomorphism(5, connected=True):
        if len(circuits(P)) == 1:
            assert hilb_complete_intersection(P, unicyclic_relation_degrees(P)) == hilb_root(P)


def test_main_transformation_examples():
    (C,) = circuits(DIAMOND)
    res = main_transformation(DIAMOND, C)
    assert len(res.terms) == 4 and res.holds
    with pytest.raises(InputError):
        main_transformation_check(chain(3))
    for C in circuits(P1):
        assert main_transformation_check(P1, C)
        assert main_transformation_check(P1, C.reversed())


# -- total residue -----------------------------------------------------------------------


def test_total_residue_checks():
    assert total_residue_check(VEE_POSET, "wt")
    assert total_residue_check(chain(3), "root")
    assert total_residue_check(DIAMOND, "root")
    for P in posets_up_to_isomorphism(4):
        assert total_residue_check(P, "wt")
        if P.is_connected():
            assert total_residue_check(P, "root")
