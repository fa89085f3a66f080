from fractions import Fraction

from ainfsusp.fields import QQ, GF
from ainfsusp import linalg


def F(x):
    return Fraction(x)


def test_rref_rank():
    rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
    R, piv = linalg.rref(QQ, rows)
    assert piv == [0, 1]
    assert linalg.rank(QQ, rows) == 2


def test_nullspace():
    rows = [[F(1), F(2), F(3)]]
    ns = linalg.nullspace(QQ, rows, 3)
    assert len(ns) == 2
    for v in ns:
        assert sum(c * x for c, x in zip(rows[0], v)) == 0


def test_nullspace_mod_p():
    F5 = GF(5)
    rows = [[1, 2], [2, 4]]
    ns = linalg.nullspace(F5, rows, 2)
    assert len(ns) == 1
    v = ns[0]
    assert (v[0] + 2 * v[1]) % 5 == 0


def test_solve_columns():
    cols = [[F(1), F(0)], [F(1), F(1)]]
    x = linalg.solve_columns(QQ, cols, [F(3), F(2)])
    assert x == [F(1), F(2)]
    assert linalg.solve_columns(QQ, [[F(1), F(0)]], [F(0), F(1)]) is None


def test_invert():
    inv = linalg.invert(QQ, [[F(2), F(1)], [F(1), F(1)]])
    assert inv == [[F(1), F(-1)], [F(-1), F(2)]]
    assert linalg.invert(QQ, [[F(1), F(2)], [F(2), F(4)]]) is None


def test_subspace_and_quotient():
    sub = linalg.Subspace(QQ, 3, [[F(1), F(0), F(1)]])
    assert sub.contains([F(2), F(0), F(2)])
    assert not sub.contains([F(1), F(1), F(0)])
    amb = [[F(1), F(0), F(1)], [F(0), F(1), F(0)], [F(1), F(1), F(1)]]
    q = linalg.quotient_basis(QQ, 3, [[F(1), F(0), F(1)]], amb)
    assert len(q) == 1
