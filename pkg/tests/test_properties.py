"""Property-based checks of the invariants relating partitions, orbits, induction and jets."""

import random

from hypothesis import assume, given, strategies as st

from nilorbits.induction import (
    InductionDatum,
    LeviShapeA,
    LeviShapeBCD,
    codim_preserved,
    induce_A,
    induce_A_via_duals,
    induce_BCD,
    induced_from_little_set,
    thmBCD_predicate,
)
from nilorbits.jets import JetPolynomial, evaluate, jet_expand
from nilorbits.partitions import (
    EpsClass,
    Partition,
    brute_collapse,
    collapse,
    concat,
    dominates,
    dual,
    enumerate_partitions,
    in_eps_class,
    make_partition,
)

PLUS, MINUS = EpsClass.PLUS, EpsClass.MINUS


@st.composite
def partitions(draw, min_n=0, max_n=20):
    n = draw(st.integers(min_n, max_n))
    parts, left = [], n
    while left:
        k = draw(st.integers(1, left))
        parts.append(k)
        left -= k
    return make_partition(parts)


@st.composite
def eps_partitions(draw, max_n=16):
    eps = draw(st.sampled_from([PLUS, MINUS]))
    lam = draw(partitions(max_n=max_n))
    assume(eps is PLUS or lam.n % 2 == 0)
    return lam, eps


@st.composite
def class_members(draw, max_n=18):
    eps = draw(st.sampled_from([PLUS, MINUS]))
    n = draw(st.integers(1, max_n))
    assume(eps is PLUS or n % 2 == 0)
    return draw(st.sampled_from(enumerate_partitions(n, eps))), eps


@given(partitions(max_n=30))
def test_dual_involution(lam):
    assert dual(dual(lam)) == lam and dual(lam).n == lam.n


@given(partitions(), partitions(), partitions())
def test_concat_commutative_associative(a, b, c):
    assert concat(a, b) == concat(b, a)
    assert concat(concat(a, b), c) == concat(a, concat(b, c))


@given(eps_partitions())
def test_collapse_properties(data):
    lam, eps = data
    mu = collapse(lam, eps)
    assert in_eps_class(mu, eps)
    assert dominates(lam, mu)
    assert collapse(mu, eps) == mu
    if lam.n <= 12:
        assert mu == brute_collapse(lam, eps)


@given(st.lists(partitions(min_n=1, max_n=6), min_size=1, max_size=4))
def test_row_sums_match_dual_concat(orbits):
    levi = LeviShapeA(tuple(o.n for o in orbits))
    assert induce_A(levi, orbits) == induce_A_via_duals(orbits)


@st.composite
def bcd_data(draw, max_n=16):
    eps = draw(st.sampled_from([PLUS, MINUS]))
    n = draw(st.integers(1, max_n))
    assume(eps is PLUS or n % 2 == 0)
    rng = random.Random(draw(st.integers(0, 2 ** 32)))
    half = rng.randint(0, n // 2)
    r = n - 2 * half
    if eps is MINUS and r % 2:
        half, r = half - 1, r + 2
    blocks = []
    while sum(blocks) < half:
        blocks.append(rng.randint(1, half - sum(blocks)))
    gl = tuple(rng.choice(enumerate_partitions(p)) for p in blocks)
    base = rng.choice(enumerate_partitions(r, eps))
    return n, eps, InductionDatum(LeviShapeBCD(tuple(blocks), r), gl, base)


@given(bcd_data())
def test_codim_preserved(data):
    n, eps, d = data
    lam = induce_BCD(n, eps, d)
    assert lam.n == n and in_eps_class(lam, eps)
    assert codim_preserved(n, eps, d, lam)


@given(bcd_data(max_n=14))
def test_set_closed_under_induction(data):
    n, eps, d = data
    base_in = d.levi.r > 0 and d.base_orbit in induced_from_little_set(d.levi.r, eps, "all")
    if base_in:
        assert induce_BCD(n, eps, d) in induced_from_little_set(n, eps, "all")


@given(class_members())
def test_two_jumps_imply_membership(data):
    lam, eps = data
    if thmBCD_predicate(lam):
        assert lam in induced_from_little_set(lam.n, eps, "all")


@st.composite
def homogeneous_polys(draw):
    deg = draw(st.integers(1, 4))
    nvars = draw(st.integers(1, 3))
    terms = {}
    for _ in range(draw(st.integers(1, 4))):
        exps = [0] * nvars
        for _ in range(deg):
            exps[draw(st.integers(0, nvars - 1))] += 1
        mono = tuple(((i, 0), e) for i, e in enumerate(exps) if e)
        terms[mono] = draw(st.integers(-5, 5))
    f = JetPolynomial(terms)
    assume(not f.is_zero())
    return f, deg


@given(homogeneous_polys(), st.integers(0, 4))
def test_grading_identity(data, m):
    f, deg = data
    for j, g in enumerate(jet_expand(f, m)):
        if not g.is_zero():
            assert g.degrees() == {deg}
            assert g.weights() == {j}


@given(homogeneous_polys(), st.integers(2, 4), st.integers(0, 2 ** 32))
def test_shift_embedding(data, m, seed):
    # a jet (0, x_1, ..., x_m) solves the m-jet system once (x_1..x_{m-1}) solves the (m-2)-jet one
    f, deg = data
    assume(deg >= 2)
    rng = random.Random(seed)
    nvars = max(k[0] for k in f.variables()) + 1
    low = jet_expand(f, m - 2)
    # search a small box for a solution of the (m-2)-jet system (zero always works)
    point = {(i, j): 0 for i in range(nvars) for j in range(m - 1)}
    for _ in range(30):
        trial = {(i, j): rng.randint(-2, 2) for i in range(nvars) for j in range(m - 1)}
        if all(evaluate(g, trial) == 0 for g in low):
            point = trial
            break
    shifted = {(i, 0): 0 for i in range(nvars)}
    for (i, j), v in point.items():
        shifted[(i, j + 1)] = v
    for i in range(nvars):
        shifted[(i, m)] = rng.randint(-3, 3)
    assert all(evaluate(g, shifted) == 0 for g in jet_expand(f, m))
