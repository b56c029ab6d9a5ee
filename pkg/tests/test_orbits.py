import pytest

from nilorbits.orbits import (
    Algebra,
    Orbit,
    OrbitError,
    algebra_dim,
    all_orbits,
    boundary,
    closure_leq,
    codim,
    is_little,
    is_rigid,
    minimal_orbit,
    orbit_dim,
    parse_algebra,
    parse_orbit,
    regular_partition,
    subregular_orbit,
)
from nilorbits.partitions import parse_partition


def alg(s):
    return parse_algebra(s)


def orb(s):
    return parse_orbit(s)


def classical_algebras(max_n):
    for n in range(2, max_n + 1):
        yield Algebra("sl", n)
        if n >= 3:
            yield Algebra("so", n)
        if n % 2 == 0:
            yield Algebra("sp", n)


def test_algebra_dims():
    assert algebra_dim(alg("sl6")) == 35
    assert algebra_dim(alg("sp4")) == 10
    assert algebra_dim(alg("E7")) == 133
    assert algebra_dim(alg("so8")) == 28


def test_parse_errors():
    with pytest.raises(OrbitError):
        parse_algebra("gl3")
    with pytest.raises(OrbitError):
        parse_algebra("sp5")
    with pytest.raises(OrbitError):
        parse_orbit("so8:2,1,1")
    with pytest.raises(OrbitError):
        parse_orbit("so8:2^4")
    with pytest.raises(OrbitError):
        parse_orbit("sl4:3,2")
    with pytest.raises(ValueError):
        parse_orbit("E7:A9")


def test_orbit_dim_examples():
    assert orbit_dim(orb("sp4:2,2")) == 6
    for p in range(1, 6):
        assert orbit_dim(Orbit(Algebra("sl", 2 * p), (2,) * p)) == 2 * p * p
    assert orbit_dim(orb("so8:2,2,1^4")) == 10
    assert orbit_dim(orb("sl5:1^5")) == 0
    assert orbit_dim(orb("G2:A1")) == 6


def test_exceptional_extremes():
    e7 = alg("E7")
    assert orbit_dim(Orbit(e7, "0")) == 0
    assert orbit_dim(Orbit(e7, "E7")) == 126
    assert is_rigid(Orbit(e7, "0")) and not is_rigid(Orbit(e7, "E7"))
    assert len(all_orbits(alg("G2"))) == 5
    assert str(minimal_orbit(alg("F4"))) == "F4:A1"


def test_closure_examples():
    o = orb("sl6:3,3")
    assert closure_leq(o, o)
    assert closure_leq(orb("sl6:2,2,1,1"), o)
    a, b = orb("so8:2^4:I"), orb("so8:2^4:II")
    assert not closure_leq(a, b) and not closure_leq(b, a)
    with pytest.raises(OrbitError):
        closure_leq(orb("sl4:2,2"), orb("sp4:2,2"))


def test_boundary_examples():
    got = {x.partition for x in boundary(orb("sl6:3,3"))}
    want = {parse_partition(s) for s in ["3,2,1", "3,1^3", "2^3", "2^2,1^2", "2,1^4", "1^6"]}
    assert got == want
    assert boundary(orb("sl4:1^4")) == []
    assert {x.partition for x in boundary(orb("sp4:2,2"))} == {(2, 1, 1), (1, 1, 1, 1)}


def test_little_examples():
    for p in range(1, 5):
        for q in range(1, 5):
            assert is_little(Orbit(Algebra("sl", 2 * p + q), (2,) * p + (1,) * q))
    for n in range(2, 10):
        for d in range(1, n + 1):
            if n % d == 0:
                assert not is_little(Orbit(Algebra("sl", n), (d,) * (n // d)))
    for p in range(1, 8):
        for q in range(0, 9, 2):
            o = Orbit(Algebra("sp", 2 * p + q), (2,) * p + (1,) * q)
            assert is_little(o) == (p <= q * (q + 1) // 2)
    assert is_little(orb("F4:A1"))


def test_rigid_examples():
    assert is_rigid(orb("sp4:2,1,1"))
    assert not is_rigid(orb("so6:2,2,1,1"))
    for n in range(2, 8):
        for o in all_orbits(Algebra("sl", n)):
            assert is_rigid(o) == o.is_zero


def test_regular_examples():
    assert regular_partition(alg("sl5")).partition == (5,)
    assert regular_partition(alg("sp8")).partition == (8,)
    assert regular_partition(alg("so8")).partition == (7, 1)


def test_subregular_examples():
    assert subregular_orbit(alg("sl5")).partition == (4, 1)
    assert subregular_orbit(alg("sp4")).partition == (2, 2)
    # so7: (5,1,1) has codimension rank + 2 = 5; (3,3,1) has codimension 7
    sub = subregular_orbit(alg("so7"))
    assert sub.partition == (5, 1, 1)
    assert codim(sub) == 5
    assert codim(orb("so7:3,3,1")) == 7


def test_minimal_examples():
    for n in range(2, 9):
        assert minimal_orbit(Algebra("sl", n)).partition == (2,) + (1,) * (n - 2)
    for n in range(7, 15):
        m = minimal_orbit(Algebra("so", n))
        assert m.partition == (2, 2) + (1,) * (n - 4)
        assert orbit_dim(m) == 2 * n - 6
    assert orbit_dim(minimal_orbit(alg("G2"))) == 6


def test_dimension_bounds():
    for a in classical_algebras(16):
        top = algebra_dim(a) - a.rank
        for o in all_orbits(a):
            d = orbit_dim(o)
            assert d % 2 == 0 and 0 <= d <= top
        assert orbit_dim(regular_partition(a)) == top


def test_minimal_orbits_little():
    for a in classical_algebras(14):
        if a.rank >= 2 and not (a.family == "so" and a.n == 4):
            assert is_little(minimal_orbit(a)), a
    assert not is_little(minimal_orbit(alg("sl2")))
    for t in ("G2", "F4", "E6", "E7", "E8"):
        assert is_little(minimal_orbit(alg(t)))


def test_closure_partial_order_and_boundary():
    for a in [alg("sl6"), alg("so8"), alg("sp8"), alg("so9")]:
        orbits = all_orbits(a)
        for x in orbits:
            assert closure_leq(x, x)
            strict = {y for y in orbits if y != x and closure_leq(y, x)}
            assert set(boundary(x)) == strict
            for y in orbits:
                if x != y and closure_leq(x, y):
                    assert not closure_leq(y, x)
                    assert orbit_dim(x) < orbit_dim(y)


def test_rigid_not_regular_and_zero_rigid():
    for a in classical_algebras(12):
        zero = [o for o in all_orbits(a) if o.is_zero][0]
        assert is_rigid(zero)
        if a.rank >= 1:
            assert not is_rigid(regular_partition(a))


def test_very_even_tags_share_dimension():
    a = alg("so8")
    tagged = [o for o in all_orbits(a) if o.tag]
    assert {o.tag for o in tagged} == {"I", "II"}
    assert orbit_dim(orb("so8:2^4:I")) == orbit_dim(orb("so8:2^4:II"))
