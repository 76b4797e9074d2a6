"""Binomials, term orders, Groebner bases, saturation and elimination."""

import pytest

from semiglue import (
    Binomial,
    BinomialIdeal,
    Monomial,
    MonomialOrder,
    VariableBlock,
    binomial_from_vector,
    buchberger,
    eliminate,
    embed,
    ideal_equal,
    normal_form,
    saturate,
)

X4 = VariableBlock.prefixed("x", 4)
ORDER = MonomialOrder.degrevlex((1, 1, 1, 1))


def b4(plus, minus):
    return Binomial(Monomial(X4, plus), Monomial(X4, minus))


# the toric ideal of the degree-three plane monomial curve
G_SQ2 = b4((0, 2, 0, 0), (1, 0, 1, 0))
G_SQ3 = b4((0, 0, 2, 0), (0, 1, 0, 1))
G_MIX = b4((0, 1, 1, 0), (1, 0, 0, 1))
CURVE = BinomialIdeal(X4, (G_SQ2, G_SQ3, G_MIX))
# the two squares alone: a strictly smaller complete intersection
CURVE_CI = BinomialIdeal(X4, (G_SQ2, G_SQ3))


def test_block_names_and_index():
    assert X4.names == ("x1", "x2", "x3", "x4")
    assert X4.size == 4
    assert X4.index("x3") == 2
    y = VariableBlock.prefixed("y", 2)
    assert X4.concat(y).names == ("x1", "x2", "x3", "x4", "y1", "y2")
    with pytest.raises(AssertionError):
        VariableBlock(("x1", "x1"))


def test_monomial_degree_and_str():
    m = Monomial(X4, (2, 0, 1, 0))
    assert m.degree == 3
    assert str(m) == "x1^2*x3"
    assert str(Monomial(X4, (0, 0, 0, 0))) == "1"


def test_make_cancels_common_factors():
    f = Binomial.make(X4, (2, 1, 0, 0), (1, 0, 1, 0))
    assert f.plus.exponents == (1, 1, 0, 0)
    assert f.minus.exponents == (0, 0, 1, 0)
    with pytest.raises(ValueError):
        Binomial.make(X4, (1, 1, 0, 0), (1, 1, 0, 0))


def test_direct_constructor_keeps_raw_exponents():
    f = b4((2, 1, 0, 0), (1, 0, 1, 0))
    assert f.as_pair() == ((2, 1, 0, 0), (1, 0, 1, 0))
    assert f.negated().as_pair() == ((1, 0, 1, 0), (2, 1, 0, 0))
    with pytest.raises(AssertionError):
        b4((1, 0, 0, 0), (1, 0, 0, 0))


def test_binomial_from_vector():
    f = binomial_from_vector(X4, (1, -2, 1, 0))
    assert f.as_pair() == ((1, 0, 1, 0), (0, 2, 0, 0))
    with pytest.raises(ValueError):
        binomial_from_vector(X4, (0, 0, 0, 0))


def test_order_key_is_injective_and_graded():
    key = ORDER.key_function()
    seen = {}
    for a in range(3):
        for b in range(3):
            for c in range(3):
                m = (a, b, c, 0)
                k = key(m)
                assert k[0] == a + b + c
                assert k not in seen
                seen[k] = m


def test_normal_form_of_monomial():
    gb = CURVE.groebner(ORDER)
    nf = normal_form(Monomial(X4, (0, 2, 0, 0)), gb, ORDER)
    assert nf == Monomial(X4, (1, 0, 1, 0))
    again = normal_form(nf, gb, ORDER)
    assert again == nf


def test_membership_separates_curve_from_complete_intersection():
    assert CURVE.contains(G_MIX)
    assert not CURVE_CI.contains(G_MIX)
    for g in CURVE.generators:
        assert CURVE.contains(g)
        assert CURVE.contains(g.negated())
    assert not CURVE.contains(b4((1, 0, 0, 0), (0, 1, 0, 0)))


def test_normal_form_zero_exactly_on_members():
    gb = CURVE.groebner(ORDER)
    assert normal_form(G_MIX, gb, ORDER) is None
    stranger = b4((1, 0, 0, 0), (0, 0, 0, 1))
    reduced = normal_form(stranger, gb, ORDER)
    assert reduced is not None
    assert normal_form(reduced, gb, ORDER) == reduced


def test_reduced_groebner_basis_is_generator_order_independent():
    direct = buchberger(CURVE.generators, ORDER)
    permuted = buchberger(tuple(reversed(CURVE.generators)), ORDER)
    negated = buchberger(tuple(g.negated() for g in CURVE.generators), ORDER)
    assert direct == permuted == negated
    assert set(direct) == set(CURVE.generators)


def test_ideal_equal_ignores_presentation():
    shuffled = BinomialIdeal(X4, tuple(reversed(CURVE.generators)))
    negated = BinomialIdeal(X4, tuple(g.negated() for g in CURVE.generators))
    assert ideal_equal(CURVE, shuffled)
    assert ideal_equal(CURVE, negated)
    assert not ideal_equal(CURVE, CURVE_CI)


def test_saturate_strips_a_monomial_factor():
    ideal = BinomialIdeal(X4, (b4((1, 1, 0, 0), (1, 0, 1, 0)),))
    sat = saturate(ideal)
    want = BinomialIdeal(X4, (b4((0, 1, 0, 0), (0, 0, 1, 0)),))
    assert ideal_equal(sat, want)
    assert ideal_equal(saturate(sat), sat)


def test_saturate_by_a_single_variable():
    ideal = BinomialIdeal(X4, (b4((1, 1, 0, 0), (1, 0, 1, 0)),))
    by_x1 = saturate(ideal, ("x1",))
    assert ideal_equal(by_x1, BinomialIdeal(X4, (b4((0, 1, 0, 0),
                                                    (0, 0, 1, 0)),)))
    by_x2 = saturate(ideal, ("x2",))
    assert ideal_equal(by_x2, ideal)


def test_saturate_requires_homogeneous_generators():
    ideal = BinomialIdeal(X4, (b4((1, 0, 0, 0), (0, 1, 1, 0)),))
    with pytest.raises(ValueError):
        saturate(ideal)
    sat = saturate(ideal, weights=(2, 1, 1, 1))
    assert ideal_equal(sat, ideal, weights=(2, 1, 1, 1))


def test_eliminate_projects_onto_kept_variables():
    names = VariableBlock(("x1", "y1", "y2"))
    ideal = BinomialIdeal(names, (
        Binomial(Monomial(names, (1, 0, 0)), Monomial(names, (0, 1, 0))),
        Binomial(Monomial(names, (0, 1, 0)), Monomial(names, (0, 0, 1))),
    ))
    kept = eliminate(ideal, ("y1", "y2"))
    sub = VariableBlock(("y1", "y2"))
    want = BinomialIdeal(sub, (
        Binomial(Monomial(sub, (1, 0)), Monomial(sub, (0, 1))),))
    assert ideal_equal(kept, want)


def test_eliminate_nothing_returns_the_same_ideal():
    kept = eliminate(CURVE, X4.names)
    assert kept.block == X4
    assert ideal_equal(kept, CURVE)


def test_eliminate_to_a_free_subring():
    kept = eliminate(CURVE, ("x1", "x4"))
    assert kept.generators == ()


def test_embed_pads_with_zeros():
    small = VariableBlock.prefixed("y", 2)
    target = VariableBlock(("x1", "y1", "y2", "z1"))
    f = Binomial(Monomial(small, (1, 0)), Monomial(small, (0, 2)))
    g = embed(f, target, 1)
    assert g.as_pair() == ((0, 1, 0, 0), (0, 0, 2, 0))
    with pytest.raises(AssertionError):
        embed(f, target, 0)
