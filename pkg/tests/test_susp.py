import pytest

from ainfsusp.fields import QQ, GF
from ainfsusp.ainf import (check_homomorphism, check_relations,
                           check_strict_unital, cohomology,
                           ground_field_algebra, is_quasi_iso,
                           structure_equal)
from ainfsusp.bimod import (canonical_splitting_morphism,
                            check_bimodule_morphism, is_bimodule_quasi_iso,
                            restriction_bimodule)
from ainfsusp.fixtures import fix_an, fix_dual, fix_k, fix_rand
from ainfsusp.susp import (double_suspension_model, split_after_suspension,
                           suspend, suspend_dga, suspend_morphism,
                           suspension_embedding, tensor_with_endC)
from helpers import nonstrict_morphisms


FIELDS = [QQ, GF(2), GF(3)]


def named_pairs(field):
    return [fix_k(field), fix_dual(field, 1), fix_dual(field, 2),
            fix_dual(field, 3), fix_an(field, 2)]


@pytest.mark.parametrize("field", FIELDS)
def test_suspension_satisfies_relations(field):
    for pair in named_pairs(field):
        sus = suspend(pair)
        assert check_relations(sus.algebra).passed
        assert sus.algebra.arity_bound == pair.parent.arity_bound


def test_suspension_shape():
    pair = fix_an(QQ, 2)
    sus = suspend(pair)
    nA, nB = len(pair.sub.space), len(pair.parent.space)
    assert len(sus.algebra.space) == 2 * nA + nB
    tags = sus.tags
    assert sum(1 for t in tags.values() if t == "plus") == nA
    assert sum(1 for t in tags.values() if t == "shifted") == nB
    for b in pair.parent.space.ids():
        assert sus.algebra.space.degree("s" + b) == \
            pair.parent.space.degree(b) + 1


def test_suspension_differential_signs():
    # d(+a) hits the shifted copy with -1, d(-a) with +1, d(sb) = -s(db)
    sus = suspend(fix_k(QQ))
    mu1 = sus.algebra.maps[1]
    assert mu1.value(("+e",)) == {"se": QQ.neg(QQ.one)}
    assert mu1.value(("-e",)) == {"se": QQ.one}
    assert cohomology(sus.algebra).dims == {(0, 1, 1): 1}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_trivial_extension_suspension_cohomology(n):
    sus = suspend(fix_dual(QQ, n))
    assert cohomology(sus.algebra).by_degree() == {0: 1, n + 1: 1}


def test_diagonal_presentation():
    for pair in (fix_k(QQ), fix_an(QQ, 2)):
        sus = suspend(pair)
        assert sus.diagonal_iso_defect() is None
        dp = sus.diagonal_pair()
        assert check_relations(dp.parent).passed
        assert check_strict_unital(dp.parent)


@pytest.mark.parametrize("field", FIELDS)
def test_dga_route_matches(field):
    for pair in named_pairs(field):
        via_dga = suspend_dga(pair)
        via_ainf = suspend(pair).algebra
        assert structure_equal(
            via_dga, via_ainf, {x: x for x in via_dga.space.ids()}) is None


def test_dga_route_requires_dga():
    from ainfsusp.ainf import CheckError, directed_subalgebra
    from ainfsusp.fixtures import arity3_kernel
    pair = directed_subalgebra(arity3_kernel(QQ))
    with pytest.raises(CheckError):
        suspend_dga(pair)


@pytest.mark.parametrize("field", [QQ, GF(3)])
def test_tensor_oracle(field):
    for pair in named_pairs(field):
        T = tensor_with_endC(pair.parent)
        assert check_relations(T).passed
        emb = suspension_embedding(pair, T)
        assert check_homomorphism(emb).passed


def test_endomorphism_dga_contractible():
    E = tensor_with_endC(ground_field_algebra(QQ))
    assert len(E.space) == 4
    assert check_relations(E).passed
    assert cohomology(E).dims == {}


def test_suspend_morphism_identity():
    pair = fix_an(QQ, 2)
    R = restriction_bimodule(pair)
    from ainfsusp.bimod import identity_bimodule_morphism
    phi = identity_bimodule_morphism(R)
    phis, _s, _t = suspend_morphism(phi, pair, pair)
    # the identity suspends to the identity
    for x in _s.algebra.space.ids():
        assert phis.apply_linear({x: QQ.one}) == {x: QQ.one}
    assert check_homomorphism(phis).passed


def test_suspend_morphism_on_splitting():
    pair = fix_an(QQ, 2)
    phi, t_pair = canonical_splitting_morphism(pair)
    assert is_bimodule_quasi_iso(phi)
    phis, _s, _t = suspend_morphism(phi, t_pair, pair)
    assert check_homomorphism(phis).passed
    assert is_quasi_iso(phis, checked=True)


def test_suspend_morphism_nonstrict():
    # the construction handles morphisms with higher components, and the
    # suspended map lands in the shifted summand for arities >= 2
    for pair in (fix_an(QQ, 1), fix_dual(QQ, 1)):
        R = restriction_bimodule(pair)
        for phi in nonstrict_morphisms(R, sorted(pair.sub_ids), limit=2):
            phis, _s, _t = suspend_morphism(phi, pair, pair)
            assert check_homomorphism(phis).passed
            for d, comp in phis.components.items():
                if d == 1:
                    continue
                for lc in comp.entries.values():
                    assert all(out.startswith("s") for out in lc)


def test_split_after_suspension():
    # the splitting inverts the projection strictly
    pair = fix_k(QQ)
    sus, Q, pi, xi = split_after_suspension(pair)
    assert sorted(Q.space.ids()) == ["+e", "se"]
    assert xi.apply_linear({"+e": QQ.one}) == {"+e": QQ.one}
    assert xi.apply_linear({"se": QQ.one}) == {"se": QQ.one}
    assert check_bimodule_morphism(xi).passed
    from ainfsusp.bimod import compose_strict_bimodule_morphisms, \
        identity_bimodule_morphism
    comp = compose_strict_bimodule_morphisms(pi, xi)
    assert comp.linear().entries == identity_bimodule_morphism(Q).linear().entries
    # and on a larger fixture
    pair = fix_an(QQ, 2)
    _sus, Q, pi, xi = split_after_suspension(pair)
    assert check_bimodule_morphism(xi).passed
    assert is_bimodule_quasi_iso(
        compose_strict_bimodule_morphisms(pi, xi), checked=False)


def test_quotient_by_extension_subalgebra_acyclic():
    # the quotient of the suspension by A (+) P[-1] is acyclic
    from ainfsusp.bimod import quotient_bimodule, bimodule_cohomology
    pair = fix_dual(QQ, 2)
    sus = suspend(pair)
    dp = sus.diagonal_pair()
    R = restriction_bimodule(dp)
    sub_ids = [x for x in dp.parent.space.ids()
               if x.startswith("=") or x == "seps_e"]
    Q, _pi = quotient_bimodule(R, sub_ids)
    assert bimodule_cohomology(Q).dims == {}


def test_double_suspension_fixtures():
    for pair, want in [
            (fix_k(QQ), {0: 1}),
            (fix_dual(QQ, 1), {0: 1, 3: 1}),
            (fix_dual(QQ, 2), {0: 1, 4: 1}),
            (fix_dual(QQ, 3), {0: 1, 5: 1})]:
        rep = double_suspension_model(pair)
        assert rep.passed, [s for s in rep.stages if not s.passed]
        by_deg = {}
        for (r, _i, _j), d in rep.actual_dims.items():
            by_deg[r] = by_deg.get(r, 0) + d
        assert by_deg == want


def test_double_suspension_fix_an_matches_shifted_dual():
    n = 2
    rep = double_suspension_model(fix_an(QQ, n))
    assert rep.passed
    # model dims equal those of A (+) dual(A)[-n-2]
    from ainfsusp.bimod import diagonal_bimodule, dual_bimodule, trivial_extension
    pair = fix_an(QQ, n)
    ref = trivial_extension(
        pair.sub, dual_bimodule(diagonal_bimodule(pair.sub), n + 2), p_prefix="d:")
    assert cohomology(ref).dims == rep.actual_dims


def test_iterated_suspension_degrees():
    # the doubly shifted copy of B sits inside B^{ss} with degrees raised by 2
    pair = fix_dual(QQ, 1)
    sus1 = suspend(pair)
    sus2 = suspend(sus1.diagonal_pair())
    for b in pair.parent.space.ids():
        assert sus2.algebra.space.degree("ss" + b) == \
            pair.parent.space.degree(b) + 2


def test_random_pair_gate():
    for field in (QQ, GF(3)):
        for seed in range(5):
            pair = fix_rand(field, seed + 400)
            sus = suspend(pair)
            assert check_relations(sus.algebra).passed
            assert check_homomorphism(suspension_embedding(pair)).passed
