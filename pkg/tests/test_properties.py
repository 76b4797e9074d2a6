"""Randomized invariants, with hypothesis shrinking the counterexamples."""

from math import gcd

from hypothesis import assume, given, settings, strategies as st

from semiglue import (
    BettiSequence,
    Binomial,
    BinomialIdeal,
    BoundTooLarge,
    IntegerMatrix,
    Monomial,
    MonomialOrder,
    SemigroupGens,
    VariableBlock,
    buchberger,
    enumerate_oracle,
    glued_betti,
    ideal_equal,
    kernel_lattice_basis,
    normal_form,
    primitive,
    rank,
    saturate,
    toric_ideal,
)
from semiglue.gluing import is_member
from support import fraction_rank, integer_combination

X3 = VariableBlock.prefixed("x", 3)
ORDER3 = MonomialOrder.degrevlex((1, 1, 1))

vectors = st.lists(st.integers(-9, 9), min_size=1, max_size=5).filter(any)


@st.composite
def matrices(draw, max_rows=4, max_cols=5, lo=-5, hi=5):
    nrows = draw(st.integers(1, max_rows))
    ncols = draw(st.integers(1, max_cols))
    rows = draw(st.lists(
        st.lists(st.integers(lo, hi), min_size=ncols, max_size=ncols),
        min_size=nrows, max_size=nrows))
    return IntegerMatrix.from_rows(rows)


exponents3 = st.tuples(st.integers(0, 3), st.integers(0, 3),
                       st.integers(0, 3))
binomials3 = st.tuples(exponents3, exponents3).filter(
    lambda p: p[0] != p[1]).map(
    lambda p: Binomial(Monomial(X3, p[0]), Monomial(X3, p[1])))


@st.composite
def semigroups(draw, ambient=2, max_count=4, hi=4):
    count = draw(st.integers(1, max_count))
    cols = draw(st.lists(
        st.tuples(*[st.integers(0, hi)] * ambient).filter(any),
        min_size=count, max_size=count, unique=True))
    return SemigroupGens.from_columns(cols)


@given(vectors)
def test_primitive_is_a_fixed_point_and_parallel(v):
    p = primitive(v)
    assert primitive(p) == p
    g = 0
    for x in p:
        g = gcd(g, x)
    assert g == 1
    first = next(x for x in p if x)
    assert first > 0
    for i in range(len(v)):
        for j in range(len(v)):
            assert v[i] * p[j] == v[j] * p[i]


@given(matrices())
def test_rank_agrees_with_fractions(m):
    r = rank(m)
    assert r == fraction_rank(m.entries)
    assert r == rank(m.transpose())
    assert 0 <= r <= min(m.rows, m.cols)


@given(matrices())
def test_kernel_basis_is_exact(m):
    basis = kernel_lattice_basis(m)
    assert len(basis) == m.cols - rank(m)
    for v in basis:
        assert m.matvec(v) == (0,) * m.rows
    if len(basis) > 1:
        for v in basis:
            rest = [w for w in basis if w is not v]
            assert integer_combination(rest, v) is None


@given(matrices(max_rows=2, max_cols=4, lo=0, hi=4))
def test_kernel_lattice_catches_small_vectors(m):
    basis = kernel_lattice_basis(m)
    span = range(-2, 3)
    for v in ((a, b, c, d) for a in span for b in span
              for c in span for d in span):
        v = v[:m.cols]
        if any(v) and m.matvec(v) == (0,) * m.rows:
            assert integer_combination(basis, v) is not None


@settings(deadline=None)
@given(st.lists(binomials3, min_size=1, max_size=4), st.randoms())
def test_reduced_basis_ignores_generator_order(gens, rng):
    direct = buchberger(gens, ORDER3)
    shuffled = list(gens)
    rng.shuffle(shuffled)
    assert buchberger(shuffled, ORDER3) == direct


@settings(deadline=None)
@given(st.lists(binomials3, min_size=1, max_size=3), binomials3)
def test_normal_form_is_idempotent(gens, f):
    gb = buchberger(gens, ORDER3)
    r = normal_form(f, gb, ORDER3)
    if r is not None:
        assert normal_form(r, gb, ORDER3) == r


@settings(deadline=None)
@given(st.lists(binomials3, min_size=1, max_size=3))
def test_groebner_elements_stay_in_the_ideal(gens):
    ideal = BinomialIdeal(X3, tuple(gens))
    for g in ideal.groebner(ORDER3):
        assert ideal.contains(g)
        assert ideal.contains(g.negated())


@st.composite
def homogeneous_binomials(draw):
    d = draw(st.integers(1, 4))

    def split(total):
        a = draw(st.integers(0, total))
        b = draw(st.integers(0, total - a))
        return (a, b, total - a - b)

    plus, minus = split(d), split(d)
    assume(plus != minus)
    return Binomial(Monomial(X3, plus), Monomial(X3, minus))


@settings(deadline=None)
@given(st.lists(homogeneous_binomials(), min_size=1, max_size=3))
def test_saturation_grows_and_stabilizes(gens):
    ideal = BinomialIdeal(X3, tuple(gens))
    sat = saturate(ideal)
    for g in ideal.generators:
        assert sat.contains(g)
    assert ideal_equal(saturate(sat), sat)


@settings(deadline=None)
@given(semigroups())
def test_toric_generators_are_homogeneous_and_saturated(gens):
    t = toric_ideal(gens)
    for g in t.ideal.generators:
        plus, minus = g.as_pair()
        assert gens.adegree(plus) == gens.adegree(minus)
        assert all(p == 0 or m == 0 for p, m in zip(plus, minus))
    assert ideal_equal(saturate(t.ideal, weights=gens.weights()), t.ideal,
                       gens.weights())


@settings(deadline=None, max_examples=25)
@given(semigroups(hi=3))
def test_toric_ideal_matches_the_oracle(gens):
    t = toric_ideal(gens)
    bound = tuple(sum(row) for row in gens.matrix.entries)
    try:
        oracle = enumerate_oracle(gens, bound, work_limit=200000)
    except BoundTooLarge:
        assume(False)
    weights = gens.weights()
    for f in oracle:
        assert t.ideal.contains(f, weights)
    for g in t.ideal.generators:
        if all(x <= b for x, b in zip(t.adegrees[g], bound)):
            assert g in oracle or g.negated() in oracle


@settings(deadline=None, max_examples=40)
@given(semigroups(), st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_membership_agrees_with_direct_combination(gens, coeffs):
    coeffs = coeffs[:gens.count]
    target = gens.adegree(tuple(coeffs))
    found = is_member(target, gens)
    assert found is not None
    assert gens.adegree(found) == target


@settings(max_examples=50)
@given(semigroups(), st.tuples(st.integers(0, 6), st.integers(0, 6)))
def test_membership_refusals_are_real(gens, v):
    found = is_member(v, gens)
    if found is not None:
        assert gens.adegree(found) == v
        return
    total = sum(v)
    combos = [(0,) * gens.count]
    for j, col in enumerate(gens.matrix.columns()):
        cap = total // sum(col)
        combos = [c[:j] + (e,) + c[j + 1:]
                  for c in combos for e in range(cap + 1)]
    assert all(gens.adegree(c) != v for c in combos)


betti_values = st.lists(st.integers(0, 9), min_size=0, max_size=4).map(
    lambda tail: BettiSequence((1,) + tuple(tail)))


@given(betti_values, betti_values)
def test_glued_betti_is_symmetric(a, b):
    left = glued_betti(a, b)
    right = glued_betti(b, a)
    assert left.values == right.values
    assert left.pd == a.pd + b.pd + 1
    total_left = sum(left.values)
    assert total_left == sum(a.values) * sum(b.values) * 2
