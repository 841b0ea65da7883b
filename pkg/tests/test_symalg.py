import random
from collections import Counter
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import geom_to_sympy, linden_to_sympy, poly_to_sympy, same_rational, xs
from posetval.errors import PoleError
from posetval.symalg import (
    GeomRat,
    LinDenRat,
    LinearForm,
    Polynomial,
    QRat,
    bernoulli,
    divide_by_linear,
    divide_one_minus_monomial,
    geom_add,
    linden_add,
    linden_sum,
    q_specialize,
    substitute_equal,
    total_residue,
)


def lin(*coeffs):
    return Polynomial.linear(coeffs)


def recip(n, *forms):
    return LinDenRat.reciprocal_product(forms, n)


# -- polynomials ---------------------------------------------------------------


def test_polynomial_drops_zero_coefficients():
    p = Polynomial(2, {(1, 0): 1, (0, 1): 0})
    assert p.terms == {(1, 0): 1}
    assert (p - p).is_zero()


@given(
    st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2)), st.integers(-5, 5), max_size=6),
    st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2)), st.integers(-5, 5), max_size=6),
)
@settings(max_examples=80, deadline=None)
def test_polynomial_ring_operations_match_sympy(a, b):
    p, q = Polynomial(3, a), Polynomial(3, b)
    x = xs(3)
    P, Q = poly_to_sympy(p, x), poly_to_sympy(q, x)
    assert sympy.expand(poly_to_sympy(p + q, x) - (P + Q)) == 0
    assert sympy.expand(poly_to_sympy(p * q, x) - P * Q) == 0
    assert sympy.expand(poly_to_sympy(p - q, x) - (P - Q)) == 0


def test_divide_by_linear_examples():
    x1sq_minus_x2sq = Polynomial(2, {(2, 0): 1, (0, 2): -1})
    assert divide_by_linear(x1sq_minus_x2sq, (1, -1)) == lin(1, 1)
    assert divide_by_linear(lin(1, 1), (1, -1)) is None
    p = lin(0, 1, -1, 0) * lin(1, 0, 0, -1)
    assert divide_by_linear(p, (0, 1, -1, 0)) == lin(1, 0, 0, -1)


@given(
    st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), st.integers(-4, 4), min_size=1, max_size=5),
    st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)).filter(any),
)
@settings(max_examples=80, deadline=None)
def test_divide_linear_recovers_factor(a, form):
    q = Polynomial(3, a)
    p = q * Polynomial.linear(form)
    assert divide_by_linear(p, form) == q


def test_linear_form_normalization():
    g, f = LinearForm.normalize((-2, 4, 0))
    assert g == -2 and f.coeffs == (1, -2, 0)
    with pytest.raises(ValueError):
        LinearForm((2, 4))


# -- LinDenRat -----------------------------------------------------------------


def test_linden_add_vee_example():
    f = recip(3, (1, -1, 0), (0, 1, -1))
    g = recip(3, (1, 0, -1), (0, -1, 1))
    assert linden_add(f, g) == recip(3, (1, -1, 0), (1, 0, -1))
    assert linden_add(f, g).render() == "1/((x1-x2)*(x1-x3))"


def test_linden_identity_and_inverse():
    f = recip(3, (1, -1, 0), (0, 1, -1))
    assert linden_add(f, LinDenRat.zero(3)) == f
    assert linden_add(f, -f).is_zero()
    assert linden_add(f, -f).render() == "0"


def test_substitute_equal_examples():
    f = recip(3, (1, -1, 0), (1, 0, -1))
    g = substitute_equal(f, 1, 2)  # x3 := x2
    assert g == LinDenRat.reciprocal_product([(1, -1, 0), (1, -1, 0)], 3)
    assert g.render() == "1/(x1-x2)^2"
    with pytest.raises(PoleError):
        substitute_equal(recip(2, (1, -1)), 1, 0)
    one = LinDenRat.one(3)
    assert substitute_equal(one, 0, 2) == one


def test_sign_is_carried_by_numerator():
    f = recip(2, (-1, 1))
    assert f.render() == "-1/(x1-x2)"
    assert f == -recip(2, (1, -1))


def random_linden(rng, n, k):
    forms = []
    while len(forms) < k:
        v = tuple(rng.randint(-1, 1) for _ in range(n))
        if any(v):
            forms.append(v)
    num = Polynomial(n, {tuple(rng.randint(0, 2) for _ in range(n)): rng.randint(-3, 3) for _ in range(3)})
    return LinDenRat.from_factors(num, forms)


def test_linden_sums_match_sympy_and_evaluation():
    rng = random.Random(5)
    for _ in range(40):
        fs = [random_linden(rng, 3, rng.randint(1, 3)) for _ in range(3)]
        total = linden_sum(fs, 3)
        want = sum(linden_to_sympy(f) for f in fs)
        assert same_rational(linden_to_sympy(total), want)
        for _ in range(3):
            pt = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3)]
            try:
                parts = sum(f.evaluate(pt) for f in fs)
            except (PoleError, ZeroDivisionError):
                continue
            assert total.evaluate(pt) == parts


def test_linden_add_is_associative_and_commutative():
    rng = random.Random(9)
    for _ in range(25):
        a, b, c = (random_linden(rng, 3, rng.randint(1, 3)) for _ in range(3))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)


def test_reduction_is_idempotent_and_complete():
    rng = random.Random(13)
    for _ in range(30):
        f = random_linden(rng, 3, 3) + random_linden(rng, 3, 2)
        again = LinDenRat(f.numerator, f.denominator)
        assert again.numerator == f.numerator and again.denominator == f.denominator
        for form in f.denominator:
            assert divide_by_linear(f.numerator, form.coeffs) is None


def test_homogeneous_degree():
    f = recip(3, (1, -1, 0), (0, 1, -1))
    assert f.degree() == -2
    assert (f * lin(1, 0, -1)).degree() == -1


# -- GeomRat -------------------------------------------------------------------


def test_geom_add_common_denominator():
    f = GeomRat.reciprocal([(1,)], 1)
    g = GeomRat(Polynomial(1, {(1,): 1}), Counter({(1,): 1}))
    s = geom_add(f, g)
    assert s.render() == "(1+X1)/(1-X1)"
    assert geom_add(f, GeomRat.zero(1)) == f


def test_geom_add_vee_summands():
    # the two extensions (1,2,3) and (1,3,2) of the vee poset
    f = GeomRat.reciprocal([(1, 0, 0), (1, 1, 0), (1, 1, 1)], 3)
    g = GeomRat.reciprocal([(1, 0, 0), (1, 0, 1), (1, 1, 1)], 3, monomial=(1, 0, 1))
    s = geom_add(f, g)
    assert s.render() == "(1-X1^2*X2*X3)/((1-X1)*(1-X1*X2)*(1-X1*X3)*(1-X1*X2*X3))"


def test_geom_flipped_factor_is_reoriented():
    f = GeomRat.reciprocal([(-1, 1)], 2)
    # 1/(1 - X2/X1) = -X1 X2^-1 / (1 - X1 X2^-1)
    g = GeomRat(Polynomial(2, {(1, -1): -1}), Counter({(1, -1): 1}))
    assert f == g
    assert same_rational(geom_to_sympy(f), geom_to_sympy(g))


def test_divide_one_minus_monomial():
    X = Polynomial(2, {(0, 0): 1, (2, 2): -1})  # 1 - X1^2 X2^2
    q = divide_one_minus_monomial(X, (1, 1))
    assert q == Polynomial(2, {(0, 0): 1, (1, 1): 1})
    assert divide_one_minus_monomial(Polynomial(2, {(0, 0): 1, (1, 0): 1}), (1, 1)) is None


def random_geom(rng, n):
    vecs = []
    while len(vecs) < rng.randint(1, 3):
        v = tuple(rng.randint(-1, 1) for _ in range(n))
        if any(v):
            vecs.append(v)
    num = {tuple(rng.randint(-1, 2) for _ in range(n)): rng.randint(-2, 2) for _ in range(2)}
    return GeomRat.from_parts(num, vecs, n)


def test_geom_sums_match_sympy():
    rng = random.Random(21)
    for _ in range(30):
        f, g = random_geom(rng, 3), random_geom(rng, 3)
        assert same_rational(geom_to_sympy(f + g), geom_to_sympy(f) + geom_to_sympy(g))
        assert same_rational(geom_to_sympy(f * g), geom_to_sympy(f) * geom_to_sympy(g))


def test_geom_substitute_equal_matches_sympy():
    rng = random.Random(23)
    X = xs(3, "X")
    checked = 0
    for _ in range(60):
        f = random_geom(rng, 3)
        try:
            g = f.substitute_equal(1, 2)
        except PoleError:
            continue
        want = geom_to_sympy(f).subs(X[2], X[1])
        assert same_rational(geom_to_sympy(g), want)
        checked += 1
    assert checked > 20


# -- total residue and Bernoulli numbers ------------------------------------------------


def test_bernoulli_values():
    assert [bernoulli(m) for m in range(5)] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]
    # sympy uses B_1 = +1/2; all other values agree
    for m in range(2, 15):
        assert bernoulli(m) == sympy.Rational(sympy.bernoulli(m))


def test_total_residue_examples():
    assert total_residue(GeomRat.reciprocal([(1,)], 1), 1).render() == "1/x1"
    vee = GeomRat(Polynomial(3, {(0, 0, 0): 1, (2, 1, 1): -1}),
                  Counter({(1, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): 1, (1, 1, 1): 1}))
    assert total_residue(vee, 3).render() == "(2*x1+x2+x3)/(x1*(x1+x2)*(x1+x3)*(x1+x2+x3))"
    chain = GeomRat.reciprocal([(1, -1, 0), (0, 1, -1)], 3)
    assert total_residue(chain, 2).render() == "1/((x1-x2)*(x2-x3))"


def test_total_residue_of_low_dimensional_cone_is_zero():
    assert total_residue(GeomRat.reciprocal([(1, 0)], 2), 2).is_zero()


def test_total_residue_of_unimodular_chain_cones():
    for n in range(2, 6):
        rays = [tuple(1 if k < i else 0 for k in range(n)) for i in range(1, n + 1)]
        s = total_residue(GeomRat.reciprocal(rays, n), n)
        assert s == LinDenRat.reciprocal_product(rays, n)
        roots = [tuple((1 if k == i else -1 if k == i + 1 else 0) for k in range(n)) for i in range(n - 1)]
        s = total_residue(GeomRat.reciprocal(roots, n), n - 1)
        assert s == LinDenRat.reciprocal_product(roots, n)


def test_total_residue_matches_series_oracle():
    # Expand F(e^{t v}) in t with sympy and compare the t^{-d} coefficient.
    rng = random.Random(31)
    x = xs(2)
    t = sympy.Symbol("t")
    for _ in range(5):
        rays = [(1, 0), (rng.randint(1, 3), 1), (1, rng.randint(1, 2))]
        F = GeomRat.reciprocal(rays, 2)
        s = total_residue(F, 2)
        v = (sympy.Rational(rng.randint(1, 5)), sympy.Rational(rng.randint(1, 5)))
        expr = sympy.Integer(1)
        for u in rays:
            expr /= 1 - sympy.exp(t * (u[0] * v[0] + u[1] * v[1]))
        coeff = sympy.series(expr, t, 0, 1).removeO().coeff(t, -2)
        val = linden_to_sympy(s).subs({x[0]: v[0], x[1]: v[1]})
        assert sympy.simplify(coeff - val) == 0


# -- q specialization ----------------------------------------------------------------


def test_q_specialize_examples():
    assert q_specialize(GeomRat.reciprocal([(1, 1, 1)], 3)).render() == "1/(1-q^3)"
    chain2 = GeomRat.reciprocal([(1, 0), (1, 1)], 2)
    assert q_specialize(chain2) == QRat({0: 1}, {1: 1, 2: 1})


def test_qrat_clear():
    f = QRat({0: 1, 1: 1}, {2: 1})  # (1+q)/(1-q^2) = 1/(1-q)
    assert f == QRat({0: 1}, {1: 1})
    assert f.clear([1]) == {0: 1}
    assert QRat({0: 1}, {3: 1}).clear([1]) is None
