from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from gradedrings.coeffring import QQ, ZZ, Zmod
from gradedrings.errors import (
    HypothesisViolation,
    NotAnAnnihilator,
    NotAUnit,
    NotTorsionFree,
    WindowTooSmall,
    ZeroElement,
)
from gradedrings.grobner import PolynomialQuotient, PolynomialRing, buchberger
from gradedrings.monoid import AbelianGroup, FreeMonoid, MonoidMorphism, Submonoid, free_abelian_group
from gradedrings.monoidring import ONE_THREE_ZERO, MonoidRing
from gradedrings.structure import (
    FiniteRing,
    annihilator_in_window,
    annihilator_is_graded_in_window,
    check_unit_characterization,
    componentwise_nilpotent_product,
    enumerate_window,
    evaluate_unit_conditions,
    finite_instance_jacobson_equals_nilradical,
    idempotent_support_in_torsion,
    inverse,
    invert_group_ring,
    is_idempotent,
    is_nilpotent,
    is_nilpotent_bruteforce,
    is_unit_monoid_ring,
    is_zero_divisor,
    nilpotency_search_bound,
    nilradical_graded_check,
    shrink_to_homogeneous_annihilator,
    shrink_trace,
    windowed_inverse,
)

Z1 = free_abelian_group(1)
L4 = MonoidRing(Zmod(4), Z1)
L6 = MonoidRing(Zmod(6), Z1)
L8 = MonoidRing(Zmod(8), Z1)


def laurent(ring, lo=-2, hi=2, max_terms=3):
    n = ring.coeffs.n
    return st.lists(st.tuples(st.integers(lo, hi), st.integers(0, n - 1)), max_size=max_terms).map(
        lambda ps: ring.element(((d,), c) for d, c in ps)
    )


def brute_annihilated(f, window):
    """Is some nonzero element supported in ``window`` killing f?"""
    return any(not g.is_zero() and (g * f).is_zero() for g in enumerate_window(f.parent, window))


def brute_unit(f, window):
    return any(f * g == 1 for g in enumerate_window(f.parent, window))


# --- zero-divisors -----------------------------------------------------------


def test_zero_divisor_examples():
    assert str(is_zero_divisor(L6.element({(1,): 2, (0,): 4}))) == "Yes(3)"
    assert str(is_zero_divisor(L6.element({(1,): 3, (0,): 3}))) == "Yes(2)"
    assert str(is_zero_divisor(L6.element({(1,): 2, (0,): 3}))) == "No"
    assert is_zero_divisor(L6.zero())
    assert not is_zero_divisor(MonoidRing(ZZ, Z1).element({(0,): 2, (1,): 4}))


@pytest.mark.parametrize("ring", [L4, L6])
def test_zero_divisors_agree_with_brute_force(ring):
    window = [(0,), (1,), (2,)]
    for f in enumerate_window(ring, [(0,), (1,)]):
        if f.is_zero():
            continue
        verdict = is_zero_divisor(f)
        # a constant annihilator lies in the window, and conversely any
        # annihilator found by brute force forces a constant one
        assert bool(verdict) == brute_annihilated(f, window), str(f)
        if verdict:
            assert f.scale(verdict.witness).is_zero()


def test_zero_divisor_needs_torsion_free_grading():
    R = MonoidRing(Zmod(6), AbelianGroup(0, (2,)))
    with pytest.raises(NotTorsionFree):
        is_zero_divisor(R.epsilon((1,)))


# --- annihilators in a window ------------------------------------------------


def test_annihilator_window_mod_n():
    f = L6.element({(1,): 2, (0,): 4})
    ann = annihilator_in_window(f, [(0,), (1,)])
    assert ann and all((h * f).is_zero() for h in ann)
    assert annihilator_is_graded_in_window(f, [(0,), (1,)])


def test_window_too_small():
    # over Z/n a constant times any e_w kills a zero-divisor, so only an
    # empty window can miss every annihilator
    with pytest.raises(WindowTooSmall):
        annihilator_in_window(L6.element({(0,): 2, (1,): 4}), [])
    assert annihilator_in_window(L6.element({(0,): 1, (1,): 1}), [(0,), (1,)]) == []
    R = MonoidRing(Zmod(4), AbelianGroup(0, (2,)))
    assert annihilator_in_window(R.one(), [(0,)]) == []


def test_annihilator_over_a_field_in_torsion_grading():
    R = MonoidRing(QQ, AbelianGroup(0, (2,)))
    f = R.element({(0,): Fraction(1, 2), (1,): Fraction(1, 2)})
    (h,) = annihilator_in_window(f, [(0,), (1,)])
    assert (h * f).is_zero()
    check = annihilator_is_graded_in_window(f, [(0,), (1,)])
    assert not check.graded


def deligne():
    K = PolynomialRing(QQ, ("x1", "x2", "x3", "x4"))
    x1, x2, x3, x4 = K.gens()
    Q = PolynomialQuotient(buchberger([x1 * x3, x2 * x4, x1 * x4 + x2 * x3]))
    S = MonoidRing(Q, FreeMonoid(1))
    g = S.element({(1,): Q.canon(x1), (0,): Q.canon(x2)})
    f = S.element({(1,): Q.canon(x3), (0,): Q.canon(x4)})
    return S, Q, g, f


def test_deligne_annihilator_is_not_graded():
    S, Q, g, f = deligne()
    assert (g * f).is_zero()
    assert not (g.component((1,)) * f).is_zero()
    assert not (g.component((0,)) * f).is_zero()
    check = annihilator_is_graded_in_window(f, [(0,), (1,)])
    assert not check.graded
    h, m = check.witness
    assert (h * f).is_zero() and not (h.component(m) * f).is_zero()


def test_deligne_shrink():
    S, Q, g, f = deligne()
    trace = shrink_trace(g, [f])
    assert len(trace) >= 2
    sizes = [len(step.element.terms) for step in trace[:-1]]
    assert sizes == sorted(sizes, reverse=True)
    h = shrink_to_homogeneous_annihilator(g, [f])
    assert str(h) == "(x2*x3)*e[1]"
    assert (h * f).is_zero()


def test_shrink_errors():
    f = L6.element({(0,): 1, (1,): 1})
    with pytest.raises(NotAnAnnihilator):
        shrink_trace(L6.one(), [f])
    with pytest.raises(ZeroElement):
        shrink_trace(L6.zero(), [f])


@settings(max_examples=80, deadline=None)
@given(laurent(L6), laurent(L6), laurent(L6))
def test_shrink_produces_homogeneous_annihilator(a, b, f):
    # build an annihilator g of f: any multiple of a constant annihilator
    verdict = is_zero_divisor(f) if not f.is_zero() else None
    if not verdict:
        return
    g = (a + b + 1) * L6(verdict.witness)
    if g.is_zero():
        g = L6(verdict.witness)
    h = shrink_to_homogeneous_annihilator(g, [f])
    assert h.is_homogeneous() and not h.is_zero() and (h * f).is_zero()


# --- nilpotents ---------------------------------------------------------------


@settings(max_examples=100, deadline=None)
@given(laurent(MonoidRing(Zmod(12), Z1)))
def test_nilpotence_matches_repeated_multiplication(f):
    bound = nilpotency_search_bound(f)
    assert is_nilpotent(f) == is_nilpotent_bruteforce(f, bound).found


def test_frobenius_nilpotent_in_torsion_grading():
    F3C3 = MonoidRing(Zmod(3), AbelianGroup(0, (3,)))
    h = F3C3.element({(1,): 1, (0,): -1})
    assert str(is_nilpotent_bruteforce(h, 10)) == "Yes(3)"
    with pytest.raises(NotTorsionFree):
        is_nilpotent(h)
    check = nilradical_graded_check([h])
    assert not check.graded
    _, d, c = check.witness
    assert d == (1,) and str(c) == "e[1]"


def test_nilradical_graded_under_torsion_free_regrading():
    R = MonoidRing(Zmod(4), FreeMonoid(1))
    n = R.element({(0,): 2, (1,): 2})
    assert nilradical_graded_check([n]).graded
    phi = MonoidMorphism(FreeMonoid(1), FreeMonoid(1), matrix=[[1]])
    assert nilradical_graded_check([n], phi).graded
    with pytest.raises(ValueError):
        nilradical_graded_check([R.one()], bound=5)


# --- units -------------------------------------------------------------------


def test_unit_example():
    u = L6.element({(1,): 2, (-1,): 3})
    cert = check_unit_characterization(u)
    assert cert.is_unit
    assert str(cert) == "Unit(3*e[1] + 2*e[-1])"
    assert u * cert.inverse == 1


def test_non_unit_reasons():
    assert evaluate_unit_conditions(L6.element({(0,): 2, (1,): 4})).reason == "CoefficientsNotComaximal"
    cert = evaluate_unit_conditions(L6.element({(0,): 1, (1,): 1}))
    assert cert.reason == "ProductNotNilpotent" and cert.witness == ((0,), (1,))
    assert str(cert) == "NotUnit(ProductNotNilpotent(0; 1))"


@pytest.mark.parametrize("ring", [L4, L6, L8])
def test_units_agree_with_linear_oracle(ring):
    window = [(d,) for d in range(-8, 9)]
    for f in enumerate_window(ring, [(-1,), (0,), (1,)]):
        cert = evaluate_unit_conditions(f) if not f.is_zero() else None
        found = windowed_inverse(f, window) if not f.is_zero() else None
        assert bool(cert) == (found is not None), str(f)
        if cert:
            assert f * invert_group_ring(f) == 1


def test_units_agree_with_exhaustive_search():
    # inverses of binomials in degrees 0..1 over Z/4 live in degrees -2..0
    window = [(-2,), (-1,), (0,), (1,)]
    for f in enumerate_window(L4, [(0,), (1,)]):
        if f.is_zero():
            continue
        assert bool(evaluate_unit_conditions(f)) == brute_unit(f, window), str(f)


def test_units_over_fields_and_integers():
    Q = MonoidRing(QQ, Z1)
    assert invert_group_ring(Q.epsilon((2,), 4)) == Q.epsilon((-2,), Fraction(1, 4))
    with pytest.raises(NotAUnit):
        invert_group_ring(Q.element({(0,): 1, (1,): 1}))
    with pytest.raises(NotAUnit):
        invert_group_ring(MonoidRing(ZZ, Z1).epsilon((0,), 2))


def test_unit_test_requires_a_torsion_free_group():
    with pytest.raises(HypothesisViolation):
        check_unit_characterization(MonoidRing(Zmod(6), FreeMonoid(1)).one())
    with pytest.raises(NotTorsionFree):
        check_unit_characterization(MonoidRing(Zmod(6), AbelianGroup(0, (2,))).one())


def test_units_of_monoid_rings_with_minimal_identity():
    P = MonoidRing(Zmod(8), FreeMonoid(1))
    f = P.element({(0,): 3, (1,): 2, (2,): 4})
    cert = is_unit_monoid_ring(f)
    assert cert and f * cert.inverse == 1
    assert f * inverse(f) == 1
    assert is_unit_monoid_ring(P.element({(0,): 2})).reason == "ConstantNotUnit"
    bad = is_unit_monoid_ring(P.element({(0,): 1, (1,): 1}))
    assert bad.reason == "Other" and bad.witness == ((1,),)
    with pytest.raises(NotAUnit):
        inverse(P.element({(0,): 1, (1,): 1}))


def test_minimal_identity_is_checked():
    M = Submonoid(Z1, ((1,), (-1,)))
    with pytest.raises(HypothesisViolation):
        is_unit_monoid_ring(MonoidRing(Zmod(4), M).one())
    with pytest.raises(HypothesisViolation):
        is_unit_monoid_ring(MonoidRing(Zmod(4), ONE_THREE_ZERO).one())


# --- idempotents -------------------------------------------------------------


def test_idempotents_of_laurent_ring_are_constants():
    found = [f for f in enumerate_window(L6, [(-1,), (0,), (1,)]) if is_idempotent(f)]
    assert sorted(str(f) for f in found) == ["0", "3*e[0]", "4*e[0]", "e[0]"]


def test_idempotents_live_on_torsion():
    G = AbelianGroup(1, (2,))
    R = MonoidRing(Zmod(6), G)
    window = [(0, 0), (0, 1), (1, 0)]
    found = [f for f in enumerate_window(R, window) if is_idempotent(f)]
    assert any(not f.is_homogeneous() for f in found)
    assert all(idempotent_support_in_torsion(f) for f in found)


def test_nonhomogeneous_idempotent_over_qq():
    R = MonoidRing(QQ, AbelianGroup(0, (2,)))
    f = R.element({(0,): Fraction(1, 2), (1,): Fraction(1, 2)})
    assert is_idempotent(f) and not f.is_homogeneous()
    u = 1 - 2 * f
    assert u * u == 1


def test_quasi_torsion_support_in_table_monoid():
    R = MonoidRing(ZZ, ONE_THREE_ZERO)
    f = R.epsilon((1,))
    assert is_idempotent(f)
    assert idempotent_support_in_torsion(f)


@settings(max_examples=80, deadline=None)
@given(laurent(MonoidRing(Zmod(12), Z1)), laurent(MonoidRing(Zmod(12), Z1)))
def test_componentwise_nilpotent_product(f, g):
    res = componentwise_nilpotent_product(f, g)
    assert res.nilpotent == is_nilpotent(f * g) or not (f * g).terms


# --- finite rings ----------------------------------------------------------------


def test_finite_ring_radicals():
    A = FiniteRing.truncated_polynomial(4, 3)
    assert len(A) == 64
    rep = finite_instance_jacobson_equals_nilradical(A)
    assert rep.equal and rep.nilradical_graded and bool(rep)
    assert len(rep.nilradical) == 32  # 2a + b x + c x^2


def test_finite_ring_product():
    F2 = FiniteRing.truncated_polynomial(2, 1)
    P = FiniteRing.product(F2, F2)
    assert len(P.maximal_ideals()) == 2
    rep = finite_instance_jacobson_equals_nilradical(P)
    assert rep.jacobson == {P.zero} and rep.equal
