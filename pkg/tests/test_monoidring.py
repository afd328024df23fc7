from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gradedrings.coeffring import QQ, ZZ, Zmod
from gradedrings.errors import MonoidMismatch, MorphismMismatch, RingMismatch, ZeroElement
from gradedrings.monoid import AbelianGroup, FreeMonoid, MonoidMorphism, free_abelian_group
from gradedrings.monoidring import (
    GradedProductRing,
    MonoidRing,
    content_ideal,
    leading_degree,
    pushforward,
    regrade,
    trailing_degree,
)

Z1 = free_abelian_group(1)
Z2 = free_abelian_group(2)
C3 = AbelianGroup(0, (3,))
L6 = MonoidRing(Zmod(6), Z1)
L6xC3 = MonoidRing(Zmod(6), AbelianGroup(1, (3,)))


def elements(ring, lo=-3, hi=3, max_terms=4):
    M = ring.monoid
    if M.rank == 1:
        degs = st.tuples(st.integers(lo, hi))
    else:
        degs = st.tuples(st.integers(lo, hi), st.integers(0, 2))
    coeff = st.integers(0, 5)
    return st.lists(st.tuples(degs, coeff), max_size=max_terms).map(ring.element)


def test_printing_and_json():
    f = L6.element({(1,): 2, (-1,): 3})
    assert str(f) == "2*e[1] + 3*e[-1]"
    assert f.to_json() == {"-1": "3", "1": "2"}
    assert str(MonoidRing(QQ, Z1).epsilon((0,), Fraction(1, 2))) == "1/2*e[0]"
    assert str(MonoidRing(ZZ, Z1).element({(2,): -1, (0,): -4})) == "-e[2] - 4*e[0]"
    assert str(L6.zero()) == "0"


def test_repeated_degrees_add_up():
    f = L6.element([((1,), 4), ((1,), 3)])
    assert f == L6.epsilon((1,), 1)


def test_mismatches():
    with pytest.raises(RingMismatch):
        L6.one() + MonoidRing(Zmod(4), Z1).one()
    with pytest.raises(MonoidMismatch):
        L6.one() * MonoidRing(Zmod(6), Z2).one()


@settings(max_examples=60, deadline=None)
@given(elements(L6xC3), elements(L6xC3), elements(L6xC3))
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert f * L6xC3.one() == f
    assert f - f == L6xC3.zero()


@given(elements(L6), st.integers(0, 5))
def test_powers_agree_with_repeated_products(f, k):
    p = L6.one()
    for _ in range(k):
        p = p * f
    assert f**k == p


def test_negative_power_uses_the_inverse():
    u = L6.element({(1,): 2, (-1,): 3})  # unit: coefficients comaximal, product nilpotent
    assert u * u**-1 == L6.one()
    assert str(u**-1) == "3*e[1] + 2*e[-1]"


def test_components_and_degrees():
    f = L6.element({(2,): 1, (-1,): 5, (0,): 3})
    assert [m for m in f.support()] == [(-1,), (0,), (2,)]
    assert leading_degree(f) == (2,)
    assert trailing_degree(f) == (-1,)
    assert sum(f.components().values(), L6.zero()) == f
    assert not f.is_homogeneous()
    assert f.component((2,)).degree() == (2,)
    with pytest.raises(ZeroElement):
        leading_degree(L6.zero())
    with pytest.raises(ZeroElement):
        L6.zero().degree()


@settings(max_examples=60, deadline=None)
@given(elements(MonoidRing(QQ, Z1)), elements(MonoidRing(QQ, Z1)))
def test_degree_law_over_a_domain(f, g):
    # over a domain with torsion-free grading, leading degrees add
    if f.is_zero() or g.is_zero():
        return
    assert leading_degree(f * g) == (leading_degree(f)[0] + leading_degree(g)[0],)
    assert trailing_degree(f * g) == (trailing_degree(f)[0] + trailing_degree(g)[0],)


def test_regrade_and_pushforward():
    R = MonoidRing(Zmod(6), Z2)
    phi = MonoidMorphism(Z2, Z1, matrix=[[1, 1]])
    f = R.element({(1, 0): 1, (0, 1): 2, (2, 2): 3})
    view = regrade(f, phi)
    assert view.degrees() == [(1,), (4,)]
    assert view.total() == f
    assert str(view.component((1,))) == "e[1,0] + 2*e[0,1]"
    assert view.component((7,)).is_zero()
    assert str(pushforward(f, phi)) == "3*e[4] + 3*e[1]"
    with pytest.raises(MorphismMismatch):
        regrade(L6.one(), phi)


@settings(max_examples=40, deadline=None)
@given(elements(L6xC3), elements(L6xC3))
def test_pushforward_is_a_ring_map(f, g):
    G = L6xC3.monoid
    phi = MonoidMorphism(G, Z1, matrix=[[1, 0]])
    assert pushforward(f * g, phi) == pushforward(f, phi) * pushforward(g, phi)
    assert pushforward(f + g, phi) == pushforward(f, phi) + pushforward(g, phi)


def test_content_ideal():
    f = L6.element({(0,): 2, (3,): 4})
    assert [c.value for c in content_ideal(f)] == [2]
    assert [c.value for c in content_ideal(MonoidRing(ZZ, Z1).element({(0,): 6, (1,): 10}))] == [2]
    assert content_ideal(L6.zero()) == []


def test_free_monoid_ring():
    R = MonoidRing(ZZ, FreeMonoid(2))
    x, y = R.epsilon((1, 0)), R.epsilon((0, 1))
    assert (x + y) ** 2 == R.element({(2, 0): 1, (1, 1): 2, (0, 2): 1})


@pytest.mark.parametrize("kind", ["direct", "idealization"])
def test_graded_product_ring(kind):
    A = GradedProductRing(kind)
    assert A.check_grading()
    x, y = (2, 5), (-1, 3)
    assert A.mul(A.one, x) == x
    assert A.mul(x, y) == A.mul(y, x)


def test_graded_product_identity_homogeneity():
    assert not GradedProductRing("direct").is_homogeneous((1, 1))
    ideal = GradedProductRing("idealization")
    assert ideal.is_homogeneous(ideal.one)
    assert ideal.components(ideal.one) == {"3": (1, 0)}
