import pytest

from ainfsusp.fields import QQ, GF
from ainfsusp.core import GradedSpace
from ainfsusp.dga import Dga, from_ainf
from ainfsusp.ainf import CheckError, check_relations, check_strict_unital, cohomology
from ainfsusp.fixtures import arity3_kernel


def exterior_dga(field):
    """Lambda(y) (x) K[x]/(x^2) with deg y = 1, deg x = 2, d y = x."""
    one = field.one
    sp = GradedSpace(1, [("e", 0, 1, 1), ("y", 1, 1, 1),
                         ("x", 2, 1, 1), ("xy", 3, 1, 1)])
    diff = {"y": {"x": one}}
    prod = {}
    for z in ["e", "y", "x", "xy"]:
        prod[("e", z)] = {z: one}
        prod[(z, "e")] = {z: one}
    prod[("x", "y")] = {"xy": one}
    prod[("y", "x")] = {"xy": one}
    return Dga(field, sp, diff, prod, units=["e"])


@pytest.mark.parametrize("field", [QQ, GF(2), GF(3)])
def test_dga_conversion_satisfies_relations(field):
    A = exterior_dga(field).to_ainf()
    assert check_relations(A).passed
    assert check_strict_unital(A)
    assert cohomology(A).by_degree() == {0: 1, 3: 1}


def test_leibniz_violation_detected():
    d = exterior_dga(QQ)
    d.prod[("y", "x")] = {"xy": QQ.neg(QQ.one)}
    rep = check_relations(d.to_ainf())
    assert not rep.passed
    assert rep.failures[0][:2] == (2, ("y", "y"))


def test_round_trip():
    d = exterior_dga(QQ)
    A = d.to_ainf()
    d2 = from_ainf(A)
    assert d2.diff == d.diff
    assert {k: v for k, v in d2.prod.items() if v} == \
        {k: v for k, v in d.prod.items() if v}


def test_from_ainf_rejects_higher_maps():
    with pytest.raises(CheckError):
        from_ainf(arity3_kernel(QQ))
