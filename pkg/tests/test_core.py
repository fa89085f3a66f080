import pytest
from hypothesis import given, strategies as st

from ainfsusp.fields import QQ
from ainfsusp.core import (CoreError, GradedSpace, MultiMap, apply_multimap,
                           koszul_exponent, lc_add_into)
from ainfsusp.fixtures import path_algebra_a2


@pytest.fixture
def space():
    return GradedSpace(2, [("e1", 0, 1, 1), ("e2", 0, 2, 2),
                           ("a", 1, 1, 2), ("b", -3, 2, 1)])


def test_reduced_degree(space):
    assert space.reduced_degree("e1") == -1
    assert space.reduced_degree("a") == 0
    assert space.reduced_degree("b") == -4
    with pytest.raises(CoreError):
        space.reduced_degree("zz")


def test_koszul_exponent(space):
    assert koszul_exponent(space, []) == 0
    assert koszul_exponent(space, ["a", "a"]) == 0
    assert koszul_exponent(space, ["e1", "a"]) == -1
    # deg 0 and deg 2 elements sum to (-1) + 1 = 0
    sp = GradedSpace(1, [("x", 0, 1, 1), ("y", 2, 1, 1)])
    assert koszul_exponent(sp, ["x", "y"]) == 0


def test_space_validation():
    with pytest.raises(CoreError):
        GradedSpace(1, [("x", 0, 1, 1), ("x", 1, 1, 1)])
    with pytest.raises(CoreError):
        GradedSpace(1, [("x", 0, 1, 2)])


def test_multimap_entry_validation(space):
    mm = MultiMap(QQ, 2, space, space, 0)
    # degree violation
    with pytest.raises(CoreError):
        mm.add_term(("a", "e1"), "e1", 1)
    # non-composable tuple: target(a) = 2 but source(a) = 1
    with pytest.raises(CoreError):
        mm.add_term(("a", "a"), "a", 1)
    # block violation: output must sit in (source(a_1), target(a_d))
    with pytest.raises(CoreError):
        mm.add_term(("e1", "e1"), "e2", 1)
    mm.add_term(("a", "e1"), "a", 1)
    assert mm.value(("a", "e1")) == {"a": QQ.one}


def test_apply_unit_action():
    A = path_algebra_a2(QQ, deg_arrow=3)
    mu2 = A.maps[2]
    one = QQ.one
    # mu^2(e, x) = (-1)^{deg x} x on a strictly unital algebra
    got = apply_multimap(mu2, ({"e2": one}, {"al": one}))
    assert got == {"al": QQ.sign(3)}
    # zero argument gives zero
    assert apply_multimap(mu2, ({}, {"al": one})) == {}
    # non-composable pair gives zero
    assert apply_multimap(mu2, ({"e1": one}, {"al": one})) == {}


def test_apply_arity_mismatch():
    A = path_algebra_a2(QQ)
    with pytest.raises(CoreError):
        A.maps[2].apply(({"e1": QQ.one},))


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4),
       st.integers(-4, 4))
def test_apply_is_bilinear(c1, c2, d1, d2):
    A = path_algebra_a2(QQ, deg_arrow=1)
    mu2 = A.maps[2]
    f = QQ
    x = {"e2": f.coerce(c1), "al": f.coerce(c2)}
    x = {k: v for k, v in x.items() if v}
    y = {"al": f.coerce(d1), "e1": f.coerce(d2)}
    y = {k: v for k, v in y.items() if v}
    lhs = mu2.apply((x, y))
    rhs = {}
    for bx, cx in x.items():
        for by, cy in y.items():
            lc_add_into(f, rhs, mu2.apply(({bx: f.one}, {by: f.one})),
                        f.mul(cx, cy))
    assert lhs == rhs


def test_block_basis(space):
    assert space.block_basis(1, 1, 2) == ["a"]
    assert space.block_basis(0, 1, 2) == []
    assert space.blocks_present() == [(1, 1), (1, 2), (2, 1), (2, 2)]
