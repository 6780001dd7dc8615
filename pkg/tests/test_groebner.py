from __future__ import annotations

import random

import pytest

from lefschetz.errors import ValidationError
from lefschetz.groebner import (
    Ideal,
    buchberger,
    ideal_contains,
    ideal_intersect,
    normal_form,
    primitive,
    sample_locus_comparison,
)
from lefschetz.poly import Poly, parse_poly

AB = ("x", "y")
A3 = ("a1", "a2", "a3")


def P(text, names=AB):
    return parse_poly(text, names)


def gens_as_text(ideal, names):
    return [g.format(names) for g in ideal.canonical_generators()]


# ----- groebner_basis -----


def test_basis_of_variables_is_itself():
    gb = buchberger([P("x"), P("y")])
    assert sorted(g.format(AB) for g in gb) == ["x", "y"]


def test_basis_spair_chain_produces_y_cubed():
    # hand S-polynomial run: S(x^2, xy+y^2) = -xy^2 -> reduces to y^3
    gb = buchberger([P("x^2"), P("x*y + y^2")])
    assert P("y^3") in gb
    assert sorted(g.format(AB) for g in gb) == ["x*y + y^2", "x^2", "y^3"]


def test_basis_of_empty_input():
    assert buchberger([]) == []


def test_basis_order_independence():
    g1 = buchberger([P("x^2"), P("x*y + y^2")])
    g2 = buchberger([P("x*y + y^2"), P("x^2")])
    assert set(g1) == set(g2)


def test_unit_shortcut():
    gb = buchberger([P("x"), P("x + 1")])
    assert len(gb) == 1 and gb[0].is_constant()


# ----- normal form -----


def test_normal_form_membership():
    I = Ideal(AB, [P("x")])
    assert I.normal_form(P("x^2")).is_zero()
    assert I.normal_form(P("y")) == P("y")


def test_normal_form_degree_one_generators():
    I = Ideal(A3, [P("a1", A3), P("a2", A3), P("a3", A3)])
    assert I.normal_form(P("a1*a2*a3", A3)).is_zero()


def test_membership_of_random_combinations():
    gens = [P("x^2"), P("x*y + y^2")]
    I = Ideal(AB, gens)
    rng = random.Random(3)
    monos = ["1", "x", "y", "x*y", "y^2", "x^2"]
    for _ in range(20):
        combo = Poly.zero(2)
        for g in gens:
            c = rng.randint(-4, 4)
            m = P(rng.choice(monos))
            combo = combo + g * m.scale(c)
        assert I.normal_form(combo).is_zero()


# ----- intersection -----


def test_intersect_principal_ideals():
    I = Ideal(A3, [P("a1", A3)])
    J = Ideal(A3, [P("a2", A3)])
    K = ideal_intersect(I, J)
    # both inclusions checked through the membership oracle
    assert I.contains(K) and J.contains(K)
    assert gens_as_text(K, A3) == ["a1*a2"]


def test_intersect_with_containment():
    I = Ideal(A3, [P("a1", A3), P("a2", A3), P("a3", A3)])
    J = Ideal(A3, [P("a1*a2*a3", A3)])
    K = ideal_intersect(I, J)
    assert gens_as_text(K, A3) == ["a1*a2*a3"]
    assert I.contains(K) and J.contains(K)


def test_intersect_with_unit_is_identity():
    I = Ideal(A3, [P("a1^2", A3), P("a2", A3)])
    K = ideal_intersect(I, Ideal.unit(A3))
    assert K.equals(I)


def test_intersect_with_zero_is_zero():
    I = Ideal(A3, [P("a1", A3)])
    assert ideal_intersect(I, Ideal.zero(A3)).is_zero()


def test_intersect_commutative_and_contained():
    rng = random.Random(9)
    texts = ["a1^2", "a1*a2", "a2^2 + a1*a3", "a3^2", "a1*a2*a3"]
    for _ in range(6):
        gi = [P(t, A3) for t in rng.sample(texts, 2)]
        gj = [P(t, A3) for t in rng.sample(texts, 2)]
        I, J = Ideal(A3, gi), Ideal(A3, gj)
        K1 = ideal_intersect(I, J)
        K2 = ideal_intersect(J, I)
        assert K1.equals(K2)
        assert ideal_contains(I, K1)
        assert ideal_contains(J, K1)


def test_intersect_nontrivial_elimination_path():
    # neither ideal contains the other, so the auxiliary variable is used
    I = Ideal(AB, [P("x^2")])
    J = Ideal(AB, [P("y^2")])
    K = ideal_intersect(I, J)
    assert gens_as_text(K, AB) == ["x^2*y^2"]


# ----- containment -----


def test_contains_examples():
    assert ideal_contains(Ideal(A3, [P("a1", A3)]), Ideal(A3, [P("a1^2", A3)]))
    assert not ideal_contains(Ideal(A3, [P("a1", A3)]), Ideal(A3, [P("a2", A3)]))
    small = Ideal(A3, [P("a1*a2*a3", A3)])
    big = Ideal(A3, [P("a1", A3), P("a2", A3), P("a3", A3)])
    assert ideal_contains(big, small)
    assert not ideal_contains(small, big)


def test_mismatched_rings_rejected():
    with pytest.raises(ValidationError):
        ideal_contains(Ideal(AB, [P("x")]), Ideal(A3, [P("a1", A3)]))


def test_inhomogeneous_generator_rejected():
    with pytest.raises(ValidationError):
        Ideal(AB, [P("x + y^2")])


# ----- normalization and sampling -----


def test_primitive_normalization():
    p = P("2/3*x^2 - 4/3*x*y")
    q = primitive(p)
    assert q == P("x^2 - 2*x*y")
    assert primitive(P("-x^2 + x*y")) == P("x^2 - x*y")


def test_canonical_generators_sorted_and_stable():
    I = Ideal(A3, [P("a2", A3), P("a1", A3)])
    first = gens_as_text(I, A3)
    assert first == gens_as_text(I, A3)
    assert set(first) == {"a1", "a2"}


def test_sampling_comparison_flags_set_difference():
    same1 = Ideal(A3, [P("a1", A3)])
    same2 = Ideal(A3, [P("a1^2", A3)])  # same vanishing set, different scheme
    report = sample_locus_comparison(same1, same2, points=100, seed=1)
    assert report["disagreements"] == 0
    different = Ideal(A3, [P("a2", A3)])
    report = sample_locus_comparison(same1, different, points=100, seed=1)
    assert report["disagreements"] > 0
    assert report["examples"]
