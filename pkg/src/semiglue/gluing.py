"""Deciding and certifying gluings of affine semigroups.

Two semigroups in the same ambient space, scaled by positive integers
k1 and k2, glue when the toric ideal of the combined generators equals
the two smaller toric ideals plus one extra binomial rho = x^c - y^d
mixing the two variable blocks.  This module computes the lattice point
that any such rho must live over, checks the necessary rank and
membership conditions, searches for certifying data, and decides the
question exactly: a positive answer comes with rho and the verified
ideal identity, a negative answer with the invariant that rules it out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import NamedTuple

from .binomial import (
    Binomial,
    BinomialIdeal,
    Monomial,
    embed,
    ideal_equal,
)
from .exactlin import (
    IntegerMatrix,
    dependent_column_relation,
    kernel_lattice_basis,
    primitive,
    rank,
)
from .homology import HomologySummary
from .toric import (
    GradedBinomialSet,
    SemigroupGens,
    fiber_monomials,
    toric_ideal,
    toric_ideal_of_matrix,
)

Vector = tuple[int, ...]


class DimensionMismatch(ValueError):
    """Raised when the two semigroups live in different ambient spaces."""


class RankConditionsFail(ValueError):
    """Raised when the column spaces do not meet in a line."""


class NotCoprime(ValueError):
    """Raised when an operation requires coprime scalings."""


class NotInIdeal(ValueError):
    """Raised when a binomial does not belong to the glued toric ideal."""


@dataclass(frozen=True)
class GluingCandidate:
    """The data of a possible gluing: two semigroups and their scalings."""

    a: SemigroupGens
    b: SemigroupGens
    k1: int = 1
    k2: int = 1

    def __post_init__(self) -> None:
        if self.a.ambient != self.b.ambient:
            raise DimensionMismatch(
                f"ambient dimensions differ: {self.a.ambient} vs "
                f"{self.b.ambient}")
        assert isinstance(self.k1, int) and self.k1 >= 1
        assert isinstance(self.k2, int) and self.k2 >= 1
        assert not set(self.a.block.names) & set(self.b.block.names), \
            "the two variable blocks must not share names"

    @property
    def ambient(self) -> int:
        return self.a.ambient

    @property
    def c_block(self):
        return self.a.block.concat(self.b.block)

    @property
    def c_matrix(self) -> IntegerMatrix:
        return self.a.matrix.scaled(self.k1).hstack(
            self.b.matrix.scaled(self.k2))

    @property
    def shared_columns(self) -> tuple:
        """Return index pairs (i, j) with k1 * a_i == k2 * b_j."""
        ca = self.a.matrix.scaled(self.k1).columns()
        cb = self.b.matrix.scaled(self.k2).columns()
        return tuple((i, j) for i, x in enumerate(ca)
                     for j, y in enumerate(cb) if x == y)


@dataclass(frozen=True)
class RankConditions:
    """Ranks of the two generator matrices and of their union."""

    rank_a: int
    rank_b: int
    rank_joint: int
    ambient: int

    @property
    def ok(self) -> bool:
        """Return whether the two column spaces meet in a line."""
        return self.rank_a + self.rank_b == self.rank_joint + 1

    @property
    def full_dimensional(self) -> bool:
        return self.rank_joint == self.ambient


def check_rank_conditions(a: SemigroupGens, b: SemigroupGens) -> RankConditions:
    """Return the rank data of the pair."""
    if a.ambient != b.ambient:
        raise DimensionMismatch(
            f"ambient dimensions differ: {a.ambient} vs {b.ambient}")
    return RankConditions(rank(a.matrix), rank(b.matrix),
                          rank(a.matrix.hstack(b.matrix)), a.ambient)


def _independent_columns(matrix: IntegerMatrix, target: int) -> tuple:
    """Return the first column indices forming an independent set of size target."""
    chosen: list[int] = []
    for j in range(matrix.cols):
        trial = chosen + [j]
        sub = IntegerMatrix.from_columns([matrix.column(t) for t in trial])
        if rank(sub) == len(trial):
            chosen = trial
            if len(chosen) == target:
                break
    assert len(chosen) == target
    return tuple(chosen)


def gluable_lattice_point(a: SemigroupGens, b: SemigroupGens,
                          cols_a=None, cols_b=None) -> Vector:
    """Return the primitive lattice point spanning the meeting line.

    Requires rank A + rank B = rank [A|B] + 1, so that the two column
    spaces meet in a line; otherwise RankConditionsFail.  The point is
    built from the unique relation among independent columns drawn from
    both sides - in the full-rank case the relation of an n x (n+1)
    matrix, given by its signed maximal minors - and normalized to be
    primitive with positive first nonzero coordinate.
    """
    rc = check_rank_conditions(a, b)
    if not rc.ok:
        raise RankConditionsFail(
            f"rank {rc.rank_a} + rank {rc.rank_b} != "
            f"rank {rc.rank_joint} + 1: the column spaces do not meet "
            "in a line")
    if cols_a is None:
        cols_a = _independent_columns(a.matrix, rc.rank_a)
    else:
        cols_a = tuple(cols_a)
        assert len(cols_a) == rc.rank_a
    if cols_b is None:
        cols_b = _independent_columns(b.matrix, rc.rank_b)
    else:
        cols_b = tuple(cols_b)
        assert len(cols_b) == rc.rank_b
    sel_a = [a.matrix.column(j) for j in cols_a]
    sel_b = [b.matrix.column(j) for j in cols_b]
    m = IntegerMatrix.from_columns(sel_a + sel_b)
    if m.rows == m.cols - 1:
        d = dependent_column_relation(m)
    else:
        basis = kernel_lattice_basis(m)
        assert len(basis) == 1, "chosen columns must be independent"
        d = basis[0]
    u = tuple(sum(d[i] * col[r] for i, col in enumerate(sel_a))
              for r in range(a.ambient))
    assert any(x != 0 for x in u)
    return primitive(u)


def is_member(v, gens: SemigroupGens):
    """Return exponents e with gens.matrix * e == v, or None.

    Exact: tries coefficients for each generator in decreasing order
    with memoization on the remaining target.
    """
    v = tuple(int(x) for x in v)
    assert len(v) == gens.ambient
    if any(x < 0 for x in v):
        return None
    cols = gens.matrix.columns()
    p = len(cols)
    memo: dict = {}

    def solve(j: int, rem: Vector):
        if j == p:
            return () if all(x == 0 for x in rem) else None
        state = (j, rem)
        if state in memo:
            return memo[state]
        col = cols[j]
        cmax = min(r // c for r, c in zip(rem, col) if c > 0)
        found = None
        for c in range(cmax, -1, -1):
            tail = solve(j + 1, tuple(r - c * x for r, x in zip(rem, col)))
            if tail is not None:
                found = (c,) + tail
                break
        memo[state] = found
        return found

    return solve(0, v)


def multiples_in_semigroup(u, gens: SemigroupGens, kmax: int = 50) -> dict:
    """Return {k: exponents} for every k <= kmax with k*u in the semigroup."""
    u = tuple(int(x) for x in u)
    assert kmax >= 1
    if any(x < 0 for x in u):
        return {}
    out = {}
    for k in range(1, kmax + 1):
        sol = is_member(tuple(k * x for x in u), gens)
        if sol is not None:
            out[k] = sol
    return out


def no_multiple_possible(u, gens: SemigroupGens) -> bool:
    """Return True when provably no positive multiple of u lies in the semigroup.

    Two cheap obstructions: a negative coordinate of u, or a coordinate
    where u is positive that no generator vanishing on the zero set of u
    can reach.  False means no obstruction found, not membership.
    """
    u = tuple(int(x) for x in u)
    if any(x < 0 for x in u):
        return True
    zero = [i for i, x in enumerate(u) if x == 0]
    allowed = [c for c in gens.matrix.columns()
               if all(c[i] == 0 for i in zero)]
    for i, x in enumerate(u):
        if x > 0 and all(c[i] == 0 for c in allowed):
            return True
    return False


@dataclass(frozen=True)
class NecessaryReport:
    """Outcome of the necessary conditions for some gluing of the pair."""

    rank: RankConditions
    u: Vector | None
    ok: bool
    definitive: bool
    witnesses_a: tuple
    witnesses_b: tuple
    detail: str


def necessary_conditions(a: SemigroupGens, b: SemigroupGens,
                         kmax: int = 50) -> NecessaryReport:
    """Check the conditions that every gluing of the pair must satisfy.

    The ranks must put the column spaces in a line, and some positive
    multiple of the lattice point must lie in each semigroup.  ``ok``
    False with ``definitive`` False only means no witness was found
    below the bound; with ``definitive`` True there is a proof that
    none exists.
    """
    rc = check_rank_conditions(a, b)
    if not rc.ok:
        return NecessaryReport(rc, None, False, True, (), (),
                               "the column spaces do not meet in a line")
    u = gluable_lattice_point(a, b)
    wa = tuple(sorted(multiples_in_semigroup(u, a, kmax).items()))
    wb = tuple(sorted(multiples_in_semigroup(u, b, kmax).items()))
    if wa and wb:
        return NecessaryReport(rc, u, True, True, wa, wb,
                               "multiples of the lattice point lie in "
                               "both semigroups")
    empty = [(nm, gens) for nm, got, gens in
             (("first", wa, a), ("second", wb, b)) if not got]
    proven = [nm for nm, gens in empty if no_multiple_possible(u, gens)]
    if proven:
        detail = (f"no positive multiple of {u} can ever lie in the "
                  f"{' or '.join(proven)} semigroup")
        return NecessaryReport(rc, u, False, True, wa, wb, detail)
    names = " or ".join(nm for nm, _ in empty)
    return NecessaryReport(rc, u, False, False, wa, wb,
                           f"no multiple of {u} found in the {names} "
                           f"semigroup up to {kmax}")


class CoprimePair(NamedTuple):
    """Coprime scalings with membership witnesses: A c = k2 u, B d = k1 u."""

    k1: int
    k2: int
    c: Vector
    d: Vector


def find_coprime_pair(a: SemigroupGens, b: SemigroupGens,
                      kmax: int = 50):
    """Return the smallest coprime pair (k1, k2) certifying a gluing.

    Needs k1 u in <B> and k2 u in <A> with gcd(k1, k2) = 1; such a pair
    makes k1 A and k2 B glue.  Pairs are ordered by k1 + k2, then k1.
    Returns None when no pair exists below the bound.
    """
    u = gluable_lattice_point(a, b)
    in_a = multiples_in_semigroup(u, a, kmax)
    in_b = multiples_in_semigroup(u, b, kmax)
    best = None
    for k1 in in_b:
        for k2 in in_a:
            if gcd(k1, k2) == 1:
                entry = (k1 + k2, k1, k2)
                if best is None or entry < best:
                    best = entry
    if best is None:
        return None
    _, k1, k2 = best
    return CoprimePair(k1, k2, in_a[k2], in_b[k1])


def level(w: Binomial, cand: GluingCandidate) -> int:
    """Return the level of a mixed binomial over the gluing candidate.

    Writing w = x^p y^q - x^r y^s, the x-exponent drop alpha = p - r
    satisfies A alpha = k2 * l * u for an integer l, and the y-exponent
    drop on the other side matches it; the level is |l|.  Raises
    NotCoprime unless gcd(k1, k2) = 1, and NotInIdeal when w is not
    homogeneous for the glued grading.
    """
    assert w.block == cand.c_block
    if gcd(cand.k1, cand.k2) != 1:
        raise NotCoprime(f"scalings {cand.k1}, {cand.k2} share a factor")
    u = gluable_lattice_point(cand.a, cand.b)
    pa = cand.a.count
    pe, me = w.plus.exponents, w.minus.exponents
    alpha = tuple(x - y for x, y in zip(pe[:pa], me[:pa]))
    beta = tuple(y - x for x, y in zip(pe[pa:], me[pa:]))
    va = cand.a.matrix.matvec(alpha)
    vb = cand.b.matrix.matvec(beta)
    if tuple(cand.k1 * x for x in va) != tuple(cand.k2 * x for x in vb):
        raise NotInIdeal("the binomial is not homogeneous for the glued "
                         "degree, hence not in the glued toric ideal")
    nz = next(i for i, x in enumerate(u) if x != 0)
    scale = Fraction(va[nz], u[nz])
    assert all(x == scale * y for x, y in zip(va, u)), \
        "a glued-homogeneous drop lands on the meeting line"
    ell = scale / cand.k2
    assert ell.denominator == 1
    return abs(int(ell))


def _mixed_binomial(cand: GluingCandidate, c: Vector, d: Vector) -> Binomial:
    """Return x^c - y^d over the combined block."""
    block = cand.c_block
    pa, pb = cand.a.count, cand.b.count
    return Binomial(Monomial(block, tuple(c) + (0,) * pb),
                    Monomial(block, (0,) * pa + tuple(d)))


def _joined_generators(cand: GluingCandidate, ia: GradedBinomialSet,
                       ib: GradedBinomialSet) -> list:
    block = cand.c_block
    gens = [embed(g, block, 0) for g in ia.ideal.generators]
    gens += [embed(g, block, cand.a.count) for g in ib.ideal.generators]
    return gens


@dataclass(frozen=True, eq=False)
class GluingReport:
    """Everything verify_gluing found out about one candidate."""

    candidate: GluingCandidate
    rank: RankConditions
    u: Vector | None
    is_gluing: bool
    rho: Binomial | None
    rho_level: int | None
    mu_a: int
    mu_b: int
    mu_c: int
    ideal_a: GradedBinomialSet
    ideal_b: GradedBinomialSet
    ideal_c: GradedBinomialSet
    shared_columns: tuple
    homology: HomologySummary
    detail: str


def verify_gluing(cand: GluingCandidate,
                  work_limit: int = 10 ** 6) -> GluingReport:
    """Decide whether the candidate is a gluing, with certificates.

    The decision is exact.  A gluing needs the rank conditions and the
    generator count identity mu(C) = mu(A) + mu(B) + 1; both are
    necessary, so failing either is a definitive no.  When they hold,
    any single binomial completing the two ideals must be a minimal
    generator of the glued ideal, so trying every mixed binomial over
    the minimal generator degrees is a complete search: the first one
    generating the glued ideal is returned as rho, and if none does the
    candidate is definitively not a gluing.
    """
    ia = toric_ideal(cand.a)
    ib = toric_ideal(cand.b)
    ic = toric_ideal_of_matrix(cand.c_matrix, cand.c_block)
    rc = check_rank_conditions(cand.a, cand.b)
    dim_c = rank(cand.c_matrix)
    codim_c = cand.c_matrix.cols - dim_c
    if ic.mu == codim_c:
        hom = HomologySummary(dim=dim_c, pd=codim_c, depth=dim_c, ci=True,
                              cm=True, gorenstein=True, mu=ic.mu)
    else:
        hom = HomologySummary(dim=dim_c, ci=False, mu=ic.mu)
    base = dict(candidate=cand, rank=rc, mu_a=ia.mu, mu_b=ib.mu, mu_c=ic.mu,
                ideal_a=ia, ideal_b=ib, ideal_c=ic,
                shared_columns=cand.shared_columns, homology=hom)
    if not rc.ok:
        return GluingReport(u=None, is_gluing=False, rho=None, rho_level=None,
                            detail="the column spaces do not meet in a line",
                            **base)
    u = gluable_lattice_point(cand.a, cand.b)
    if ic.mu != ia.mu + ib.mu + 1:
        return GluingReport(
            u=u, is_gluing=False, rho=None, rho_level=None,
            detail=(f"generator counts rule it out: {ic.mu} != "
                    f"{ia.mu} + {ib.mu} + 1"), **base)
    weights_c = tuple(sum(c) for c in cand.c_matrix.columns())
    joined = _joined_generators(cand, ia, ib)

    def completes(rho: Binomial) -> bool:
        glued = BinomialIdeal(cand.c_block, tuple(joined) + (rho,))
        return ideal_equal(glued, ic.ideal, weights_c)

    if gcd(cand.k1, cand.k2) == 1:
        c_wit = is_member(tuple(cand.k2 * x for x in u), cand.a)
        d_wit = is_member(tuple(cand.k1 * x for x in u), cand.b)
        if c_wit is not None and d_wit is not None:
            rho = _mixed_binomial(cand, c_wit, d_wit)
            assert completes(rho), \
                "coprime membership witnesses always give a gluing"
            lev = level(rho, cand)
            assert lev == 1
            return GluingReport(u=u, is_gluing=True, rho=rho, rho_level=lev,
                                detail="glued by coprime membership "
                                       "witnesses", **base)
    degrees = sorted(set(ic.adegrees.values()), key=lambda d: (sum(d), d))
    tried = set()
    for deg in degrees:
        if any(x % cand.k1 for x in deg):
            xs: tuple = ()
        else:
            xs = fiber_monomials(cand.a.matrix,
                                 tuple(x // cand.k1 for x in deg), work_limit)
        if not xs:
            continue
        if any(x % cand.k2 for x in deg):
            continue
        ys = fiber_monomials(cand.b.matrix,
                             tuple(x // cand.k2 for x in deg), work_limit)
        for c in xs:
            if all(x == 0 for x in c):
                continue
            for d in ys:
                if all(x == 0 for x in d):
                    continue
                rho = _mixed_binomial(cand, c, d)
                if rho in tried:
                    continue
                tried.add(rho)
                if completes(rho):
                    try:
                        lev = level(rho, cand)
                    except NotCoprime:
                        lev = None
                    return GluingReport(
                        u=u, is_gluing=True, rho=rho, rho_level=lev,
                        detail="glued by a mixed minimal generator", **base)
    return GluingReport(u=u, is_gluing=False, rho=None, rho_level=None,
                        detail="no single mixed binomial completes the two "
                               "ideals", **base)


def _solve_fractions(matrix: IntegerMatrix, v):
    """Solve matrix * x = v exactly for independent columns; None if unsolvable."""
    rows = [[Fraction(x) for x in row] + [Fraction(y)]
            for row, y in zip(matrix.entries, v)]
    ncols = matrix.cols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = [x / rows[r][c] for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if len(pivots) < ncols:
        return None
    for i in range(r, len(rows)):
        if rows[i][-1] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = rows[i][-1]
    return tuple(sol)


def _cone_solution(v, matrix: IntegerMatrix):
    """Return (exponents, multiplier) with matrix*exponents == multiplier*v.

    The exponents are nonnegative integers and the multiplier positive,
    so this witnesses that v lies in the rational cone of the columns.
    None when v is outside the cone.
    """
    cols = matrix.columns()
    p = len(cols)
    r = rank(matrix)
    for size in range(1, r + 1):
        for subset in combinations(range(p), size):
            sub = IntegerMatrix.from_columns([cols[j] for j in subset])
            if rank(sub) < size:
                continue
            lam = _solve_fractions(sub, v)
            if lam is None or any(x < 0 for x in lam):
                continue
            den = 1
            for x in lam:
                den = den * x.denominator // gcd(den, x.denominator)
            exps = [0] * p
            for j, x in zip(subset, lam):
                exps[j] = int(x * den)
            return tuple(exps), den
    return None


def in_cone(v, matrix: IntegerMatrix) -> bool:
    """Return whether v lies in the rational cone spanned by the columns.

    Exact, by testing independent column subsets; any cone member lies
    in the cone of an independent subset.
    """
    v = tuple(int(x) for x in v)
    if all(x == 0 for x in v):
        return True
    return _cone_solution(v, matrix) is not None


@dataclass(frozen=True, eq=False)
class ChainAudit:
    """The implication chain for a pair, each link three-valued.

    gluing: some scalings make the pair glue; multiples: some positive
    multiple of the lattice point lies in each semigroup; cone_meet:
    the two rational cones share a nonzero point; semigroup_meet: the
    two semigroups share a nonzero element.  gluing implies multiples
    implies cone_meet, and cone_meet holds exactly when semigroup_meet
    does.  None records that a bounded search was inconclusive.
    """

    rank: RankConditions
    u: Vector | None
    gluing: bool | None
    multiples: bool | None
    cone_meet: bool | None
    semigroup_meet: bool | None
    pair: tuple | None
    common_element: Vector | None
    violations: tuple


def implication_chain_audit(a: SemigroupGens, b: SemigroupGens,
                            kmax: int = 50, try_pairs=()) -> ChainAudit:
    """Evaluate the implication chain on one pair of semigroups.

    The gluing link is searched via coprime membership witnesses up to
    kmax plus any explicitly supplied (k1, k2) pairs, which are then
    fully verified.  A nonzero common semigroup element is constructed
    whenever the cones meet, making the last equivalence concrete.
    """
    rc = check_rank_conditions(a, b)
    if not rc.ok:
        return ChainAudit(rc, None, False, None, None, None, None, None, ())
    u = gluable_lattice_point(a, b)
    nr = necessary_conditions(a, b, kmax)
    mult = True if nr.ok else (False if nr.definitive else None)
    neg = tuple(-x for x in u)
    pos_in_both = in_cone(u, a.matrix) and in_cone(u, b.matrix)
    neg_in_both = in_cone(neg, a.matrix) and in_cone(neg, b.matrix)
    cone_meet = pos_in_both or neg_in_both
    common = None
    if cone_meet:
        z = u if pos_in_both else neg
        ea, na = _cone_solution(z, a.matrix)
        eb, nb = _cone_solution(z, b.matrix)
        common = tuple(na * nb * x for x in z)
        assert a.matrix.matvec(tuple(nb * e for e in ea)) == common
        assert b.matrix.matvec(tuple(na * e for e in eb)) == common
    pair = None
    glue: bool | None = None
    cp = find_coprime_pair(a, b, kmax)
    if cp is not None:
        pair = (cp.k1, cp.k2)
        glue = True
    else:
        for k1, k2 in try_pairs:
            report = verify_gluing(GluingCandidate(a, b, k1, k2))
            if report.is_gluing:
                pair = (k1, k2)
                glue = True
                break
    if glue is None and (mult is False or not cone_meet):
        glue = False
    violations = []
    if glue is True and mult is False:
        violations.append("a gluing exists but provably no multiple of the "
                          "lattice point lies in both semigroups")
    if mult is True and not cone_meet:
        violations.append("multiples lie in both semigroups but the cones "
                          "meet only at the origin")
    return ChainAudit(rc, u, glue, mult, cone_meet, cone_meet, pair, common,
                      tuple(violations))
