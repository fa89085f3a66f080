"""A-infinity bimodules over an A-infinity algebra.

A bimodule P over A carries operations mu_P^{s|1|r} of degree shift
1 - r - s, written on tuples (a_{r+s}, ..., a_{r+1}, p, a_r, ..., a_1).
The bimodule relations and morphism equations are not transcribed from
any external convention: they are *defined* through the trivial extension
A (+) P,

    mu^d((a_d,p_d), ..., (a_1,p_1))
      = ( mu_A^d(a_d, ..., a_1),
          sum_i (-1)^{||a_1||+...+||a_{i-1}||+1}
                mu_P^{d-i|1|i-1}(a_d, ..., a_{i+1}, p_i, a_{i-1}, ..., a_1) ),

so P is a bimodule iff the extension satisfies the associativity relations,
and a family phi^{s|1|r} is a morphism iff the induced map of trivial
extensions (identity on A, same signed insertion pattern for phi) satisfies
the homomorphism equations.
"""

from .core import GradedSpace, MultiMap
from .ainf import (AInfAlgebra, AInfHomomorphism, CheckError, check_relations,
                   check_homomorphism, cohomology, is_quasi_iso)


class AInfBimodule:
    """Graded space with operations mu^{s|1|r} over a fixed base algebra.

    ``maps`` is keyed by (s, r); each value is a MultiMap whose input spaces
    are s copies of the base, then the bimodule space, then r copies of the
    base, in display order.
    """

    def __init__(self, base, space, maps, arity_bound):
        self.base = base
        self.field = base.field
        self.space = space
        self.maps = {}
        for (s, r), mm in maps.items():
            if mm.is_zero():
                continue
            if mm.arity != r + 1 + s:
                raise CheckError(f"mu^{{{s}|1|{r}}} has arity {mm.arity}")
            if mm.degree_shift != 1 - r - s:
                raise CheckError(f"mu^{{{s}|1|{r}}} must have degree shift {1-r-s}")
            expected = (base.space,) * s + (space,) + (base.space,) * r
            if tuple(mm.in_spaces) != expected or mm.out_space is not space:
                raise CheckError(f"mu^{{{s}|1|{r}}} defined on the wrong spaces")
            self.maps[(s, r)] = mm
        if any(r + 1 + s > arity_bound for (s, r) in self.maps):
            raise CheckError("arity bound too small for the given maps")
        self.arity_bound = arity_bound

    def op(self, s, r):
        if (s, r) in self.maps:
            return self.maps[(s, r)]
        return self.new_map(s, r)

    def new_map(self, s, r):
        in_spaces = (self.base.space,) * s + (self.space,) + (self.base.space,) * r
        return MultiMap(self.field, r + 1 + s, in_spaces, self.space, 1 - r - s)

    def differential(self):
        return self.op(0, 0)

    def dim(self):
        return len(self.space)


def zero_bimodule(base):
    return AInfBimodule(base, GradedSpace(base.space.num_objects, []), {}, 1)


def _middle_sign_exponent(space, right_entries):
    return sum(space.reduced_degree(x) for x in right_entries) + 1


def diagonal_bimodule(alg):
    """The algebra over itself: mu^{d-i|1|i-1} = +- mu_A^d with the
    (-1)^{||a_1||+...+||a_{i-1}||+1} sign."""
    maps = {}
    P = AInfBimodule(alg, alg.space, {}, alg.arity_bound)
    for d, mm in alg.maps.items():
        for key, lc in mm.entries.items():
            for i in range(1, d + 1):
                s, r = d - i, i - 1
                pos = d - i  # display position of the middle slot
                sign = alg.field.sign(
                    _middle_sign_exponent(alg.space, key[pos + 1:]))
                tgt = maps.setdefault((s, r), P.new_map(s, r))
                for out_id, c in lc.items():
                    tgt.add_term(key, out_id, alg.field.mul(sign, c))
    return AInfBimodule(alg, alg.space, maps, alg.arity_bound)


def restriction_bimodule(pair):
    """B as a bimodule over a subalgebra A, same sign rule as the diagonal;
    the middle slot ranges over all of B, the outer slots over A."""
    B, A = pair.parent, pair.sub
    a_ids = pair.sub_ids
    maps = {}
    shell = AInfBimodule(A, B.space, {}, B.arity_bound)
    for d, mm in B.maps.items():
        for key, lc in mm.entries.items():
            for i in range(1, d + 1):
                pos = d - i
                if any(key[k] not in a_ids for k in range(d) if k != pos):
                    continue
                s, r = d - i, i - 1
                sign = B.field.sign(_middle_sign_exponent(B.space, key[pos + 1:]))
                tgt = maps.setdefault((s, r), shell.new_map(s, r))
                for out_id, c in lc.items():
                    tgt.add_term(key, out_id, B.field.mul(sign, c))
    return AInfBimodule(A, B.space, maps, B.arity_bound)


def shift_bimodule(P, k):
    """P[k]; degrees drop by k.  The displayed [-1] sign
    (-1)^{||a_1||+...+||a_r||+1} applies once per odd |k|."""
    f = P.field
    space = GradedSpace(P.space.num_objects,
                        [(el.id, el.degree - k, el.source, el.target)
                         for el in P.space.basis])
    out = AInfBimodule(P.base, space, {}, P.arity_bound)
    maps = {}
    for (s, r), mm in P.maps.items():
        nm = out.new_map(s, r)
        for key, lc in mm.entries.items():
            if k % 2:
                exp = sum(P.base.space.reduced_degree(x) for x in key[s + 1:]) + 1
                sign = f.sign(exp)
            else:
                sign = f.one
            for out_id, c in lc.items():
                nm.add_term(key, out_id, f.mul(sign, c))
        if not nm.is_zero():
            maps[(s, r)] = nm
    return AInfBimodule(P.base, space, maps, P.arity_bound)


# Koszul exponent for the dual of a bimodule, fixed once by requiring the
# trivial-extension bridge relations to hold on degree-diverse fixtures and
# the point to be self-dual on the nose.  Candidates are Z/2 quadratic forms
# in SR = sum ||a_R||, SL = sum ||a_L||, u = ||x|| (the dualized basis
# element), v = ||p|| (the pairing argument); the surviving class, written
# minimally, is exponent = u.  On stored entries u + v = SL + SR + 1 (mod 2),
# so several spellings of the same convention exist.
DUAL_SIGN_MONOMIALS = ("1", "SR", "SL", "u", "v", "SR*SL", "SR*u", "SR*v",
                       "SL*u", "SL*v", "u*v")
DUAL_SIGN_CHOICE = frozenset({"u"})


def _dual_exponent(choice, SR, SL, u, v):
    vals = {"1": 1, "SR": SR, "SL": SL, "u": u, "v": v,
            "SR*SL": SR * SL, "SR*u": SR * u, "SR*v": SR * v,
            "SL*u": SL * u, "SL*v": SL * v, "u*v": u * v}
    return sum(vals[mon] for mon in choice)


def dual_bimodule(P, n=0, sign_choice=None):
    """The dual P^v[-n]: degree-r block-(i,j) part is the dual of the
    degree-(n-r) block-(j,i) part; structure maps are the rotated adjoints

        < mu^{s|1|r}(a_L, x*, a_R), p > = +- < x*, mu_P^{r|1|s}(a_R, p, a_L) >

    with the package's fixed Koszul exponent (DUAL_SIGN_CHOICE).
    """
    if sign_choice is None:
        sign_choice = DUAL_SIGN_CHOICE
    f = P.field
    space = GradedSpace(P.space.num_objects,
                        [(el.id + "*", -el.degree, el.target, el.source)
                         for el in P.space.basis])
    shell = AInfBimodule(P.base, space, {}, P.arity_bound)
    red = P.space.reduced_degree
    ared = P.base.space.reduced_degree
    maps = {}
    for (s, r), mm in P.maps.items():
        # this P-operation feeds the (r, s) dual operation
        nm = maps.setdefault((r, s), shell.new_map(r, s))
        for key, lc in mm.entries.items():
            a_left = key[:s]          # s base entries left of p
            p = key[s]
            a_right = key[s + 1:]     # r base entries right of p
            for x, c in lc.items():
                SL_dual = sum(ared(a) for a in a_right)  # left block of the dual op
                SR_dual = sum(ared(a) for a in a_left)   # right block of the dual op
                exp = _dual_exponent(sign_choice, SR_dual, SL_dual, red(x), red(p))
                dual_key = a_right + (x + "*",) + a_left
                nm.add_term(dual_key, p + "*", f.mul(f.sign(exp), c))
    maps = {k: v for k, v in maps.items() if not v.is_zero()}
    D = AInfBimodule(P.base, space, maps, P.arity_bound)
    if n:
        D = shift_bimodule(D, -n)
    return D


# -- sub, quotient, trivial extension ----------------------------------------

def sub_bimodule(P, ids):
    """The span of ``ids`` as a bimodule; raises unless it is closed."""
    idset = set(ids)
    for x in ids:
        P.space.element(x)
    for (s, r), mm in P.maps.items():
        for key, lc in mm.entries.items():
            if key[s] in idset:
                for out_id in lc:
                    if out_id not in idset:
                        raise CheckError(
                            f"not a sub-bimodule: mu^{{{s}|1|{r}}}{key} "
                            f"hits {out_id!r}")
    space = GradedSpace(P.space.num_objects, [P.space.element(x) for x in ids])
    out = AInfBimodule(P.base, space, {}, P.arity_bound)
    maps = {}
    for (s, r), mm in P.maps.items():
        nm = out.new_map(s, r)
        for key, lc in mm.entries.items():
            if key[s] in idset:
                for out_id, c in lc.items():
                    nm.add_term(key, out_id, c)
        if not nm.is_zero():
            maps[(s, r)] = nm
    return AInfBimodule(P.base, space, maps, P.arity_bound)


def quotient_bimodule(P, sub_ids):
    """P / span(sub_ids) with the projection as a strict morphism.

    The sub-ids must span a sub-bimodule (checked); the quotient keeps the
    complementary basis ids.
    """
    sub_bimodule(P, sub_ids)  # closure check
    subset = set(sub_ids)
    keep = [el for el in P.space.basis if el.id not in subset]
    space = GradedSpace(P.space.num_objects, keep)
    out = AInfBimodule(P.base, space, {}, P.arity_bound)
    maps = {}
    for (s, r), mm in P.maps.items():
        nm = out.new_map(s, r)
        for key, lc in mm.entries.items():
            if key[s] in subset:
                continue
            for out_id, c in lc.items():
                if out_id not in subset:
                    nm.add_term(key, out_id, c)
        if not nm.is_zero():
            maps[(s, r)] = nm
    Q = AInfBimodule(P.base, space, maps, P.arity_bound)
    proj = {x.id: ({x.id: P.field.one} if x.id not in subset else {})
            for x in P.space.basis}
    pi = strict_bimodule_morphism(P, Q, proj)
    return Q, pi


def trivial_extension(alg, P, p_prefix="p:"):
    """The square-zero extension A (+) P as an A-infinity algebra.

    P-basis ids are prefixed to keep the basis disjoint; the algebra's units
    stay declared (check_strict_unital reports whether P respects them).
    """
    f = alg.field
    basis = list(alg.space.basis) + [
        (p_prefix + el.id, el.degree, el.source, el.target)
        for el in P.space.basis]
    space = GradedSpace(alg.space.num_objects, basis)
    bound = max(alg.arity_bound, P.arity_bound)
    maps = {}
    for d, mm in alg.maps.items():
        nm = MultiMap(f, d, space, space, 2 - d)
        for key, lc in mm.entries.items():
            for out_id, c in lc.items():
                nm.add_term(key, out_id, c)
        maps[d] = nm
    for (s, r), mm in P.maps.items():
        d = r + 1 + s
        nm = maps.setdefault(d, MultiMap(f, d, space, space, 2 - d))
        for key, lc in mm.entries.items():
            sign = f.sign(_middle_sign_exponent(alg.space, key[s + 1:]))
            new_key = key[:s] + (p_prefix + key[s],) + key[s + 1:]
            for out_id, c in lc.items():
                nm.add_term(new_key, p_prefix + out_id, f.mul(sign, c))
    maps = {d: mm for d, mm in maps.items() if not mm.is_zero()}
    return AInfAlgebra(f, space, maps, bound, units=alg.units)


def check_bimodule_relations(P, p_prefix="p:"):
    """P passes iff trivial_extension(A, P) passes the associativity
    relations (the definitional bridge)."""
    return check_relations(trivial_extension(P.base, P, p_prefix))


def as_trivial_extension(pair):
    """Recognize B = A (+) P on the nose and extract P; raises when B is not
    a trivial extension of the subalgebra by the complementary span."""
    B, A = pair.parent, pair.sub
    f = B.field
    a_ids = pair.sub_ids
    p_ids = [x for x in B.space.ids() if x not in a_ids]
    p_set = set(p_ids)
    space = GradedSpace(B.space.num_objects, [B.space.element(x) for x in p_ids])
    shell = AInfBimodule(A, space, {}, B.arity_bound)
    maps = {}
    for d, mm in B.maps.items():
        for key, lc in mm.entries.items():
            middles = [t for t, x in enumerate(key) if x in p_set]
            if len(middles) >= 2:
                raise CheckError(
                    f"not a trivial extension: mu^{d}{key} has two complement inputs")
            if not middles:
                continue
            pos = middles[0]
            if any(x not in p_set for x in lc):
                raise CheckError(
                    f"not a trivial extension: mu^{d}{key} leaves the complement")
            s, r = pos, d - 1 - pos
            sign = f.sign(_middle_sign_exponent(B.space, key[pos + 1:]))
            nm = maps.setdefault((s, r), shell.new_map(s, r))
            for out_id, c in lc.items():
                nm.add_term(key, out_id, f.mul(sign, c))
    P = AInfBimodule(A, space, maps, B.arity_bound)
    from .ainf import structure_equal
    rebuilt = trivial_extension(A, P, p_prefix="p:")
    id_map = {x: x for x in a_ids}
    id_map.update({x: "p:" + x for x in p_ids})
    defect = structure_equal(B, rebuilt, id_map)
    if defect is not None:
        raise CheckError("not a trivial extension: " + defect)
    return P


def canonical_splitting_morphism(pair):
    """For a trivial-extension pair, the comparison morphism
    iota (+) xi: A (+) B/A -> B given by the complementary splitting.
    Returns (morphism, the pair A inside the trivial extension A (+) B/A).
    """
    from .ainf import subalgebra_pair
    as_trivial_extension(pair)  # validate the shape
    B, A = pair.parent, pair.sub
    f = B.field
    R = restriction_bimodule(pair)
    Q, _pi = quotient_bimodule(R, sorted(pair.sub_ids))
    T = trivial_extension(A, Q, p_prefix="q:")
    t_pair = subalgebra_pair(T, list(A.space.ids()), units=A.units, sub=A)
    images = {a: {a: f.one} for a in A.space.ids()}
    images.update({"q:" + x: {x: f.one} for x in Q.space.ids()})
    phi = strict_bimodule_morphism(restriction_bimodule(t_pair), R, images)
    return phi, t_pair


# -- morphisms ----------------------------------------------------------------

class BimoduleMorphism:
    """Components phi^{s|1|r} of degree shift -r-s between bimodules over a
    common base."""

    def __init__(self, source, target, components):
        if source.base is not target.base:
            raise CheckError("bimodule morphism needs a common base algebra")
        self.source = source
        self.target = target
        self.base = source.base
        self.field = source.field
        self.components = {}
        for (s, r), mm in components.items():
            if mm.is_zero():
                continue
            if mm.arity != r + 1 + s or mm.degree_shift != -r - s:
                raise CheckError(f"phi^{{{s}|1|{r}}} has wrong arity or shift")
            self.components[(s, r)] = mm
        if (0, 0) not in self.components:
            self.components[(0, 0)] = MultiMap(
                self.field, 1, source.space, target.space, 0)

    def linear(self):
        return self.components[(0, 0)]

    def apply_linear(self, lc):
        return self.components[(0, 0)].apply((lc,))

    def new_component(self, s, r):
        in_spaces = ((self.base.space,) * s + (self.source.space,)
                     + (self.base.space,) * r)
        return MultiMap(self.field, r + 1 + s, in_spaces, self.target.space, -r - s)


def strict_bimodule_morphism(source, target, images):
    phi = MultiMap(source.field, 1, source.space, target.space, 0)
    for x, lc in images.items():
        for y, c in lc.items():
            phi.add_term((x,), y, c)
    return BimoduleMorphism(source, target, {(0, 0): phi})


def identity_bimodule_morphism(P):
    return strict_bimodule_morphism(P, P, {x: {x: P.field.one} for x in P.space.ids()})


def induced_extension_hom(phi, p_prefix="p:"):
    """The map of trivial extensions (identity on A, phi on the P slots)
    through which the morphism equations are defined.

    The P-slot components carry the same (-1)^{||a_1||+...+||a_{i-1}||+1}
    sign as the extension's structure maps.
    """
    f = phi.field
    src = trivial_extension(phi.base, phi.source, p_prefix)
    tgt = trivial_extension(phi.base, phi.target, p_prefix)
    comps = {}
    phi1 = MultiMap(f, 1, src.space, tgt.space, 0)
    for x in phi.base.space.ids():
        phi1.add_term((x,), x, f.one)
    for (p,), lc in phi.linear().entries.items():
        for y, c in lc.items():
            phi1.add_term((p_prefix + p,), p_prefix + y, c)
    comps[1] = phi1
    for (s, r), mm in phi.components.items():
        d = r + 1 + s
        if d == 1:
            continue
        nm = comps.setdefault(d, MultiMap(f, d, src.space, tgt.space, 1 - d))
        for key, lc in mm.entries.items():
            sign = f.sign(_middle_sign_exponent(phi.base.space, key[s + 1:]))
            new_key = key[:s] + (p_prefix + key[s],) + key[s + 1:]
            for y, c in lc.items():
                nm.add_term(new_key, p_prefix + y, f.mul(sign, c))
    return AInfHomomorphism(src, tgt, comps)


def check_bimodule_morphism(phi):
    """Morphism equations via the induced map of trivial extensions."""
    return check_homomorphism(induced_extension_hom(phi))


def _chain_complex(P):
    mm = P.maps.get((0, 0))
    maps = {}
    if mm is not None:
        d = MultiMap(P.field, 1, P.space, P.space, 1)
        for key, lc in mm.entries.items():
            for out_id, c in lc.items():
                d.add_term(key, out_id, c)
        maps[1] = d
    return AInfAlgebra(P.field, P.space, maps, 1)


def bimodule_cohomology(P):
    """Cohomology of (P, mu^{0|1|0})."""
    return cohomology(_chain_complex(P))


def is_bimodule_quasi_iso(phi, checked=False):
    """True iff phi^{0|1|0} induces an isomorphism on mu^{0|1|0}-cohomology."""
    if not checked:
        rep = check_bimodule_morphism(phi)
        if not rep.passed:
            raise CheckError("bimodule morphism equations fail: " + rep.summary())
    src = _chain_complex(phi.source)
    tgt = _chain_complex(phi.target)
    chain = AInfHomomorphism(src, tgt, {1: _retype_linear(phi)})
    return is_quasi_iso(chain, checked=True)


def _retype_linear(phi):
    mm = MultiMap(phi.field, 1, phi.source.space, phi.target.space, 0)
    for key, lc in phi.linear().entries.items():
        for out_id, c in lc.items():
            mm.add_term(key, out_id, c)
    return mm


def compose_strict_bimodule_morphisms(phi, psi):
    """phi after psi, both strict."""
    if any(k != (0, 0) for k in phi.components) or \
       any(k != (0, 0) for k in psi.components):
        raise CheckError("composition implemented for strict morphisms only")
    images = {x: phi.apply_linear(psi.apply_linear({x: psi.field.one}))
              for x in psi.source.space.ids()}
    return strict_bimodule_morphism(psi.source, phi.target, images)


def direct_sum_bimodule(P, Q, p_prefix="", q_prefix=""):
    """P (+) Q with optional id prefixes to keep bases disjoint."""
    if P.base is not Q.base:
        raise CheckError("direct sum needs a common base algebra")
    f = P.field
    basis = ([(p_prefix + el.id, el.degree, el.source, el.target)
              for el in P.space.basis]
             + [(q_prefix + el.id, el.degree, el.source, el.target)
                for el in Q.space.basis])
    space = GradedSpace(P.space.num_objects, basis)
    bound = max(P.arity_bound, Q.arity_bound)
    out = AInfBimodule(P.base, space, {}, bound)
    maps = {}
    for (src, prefix) in ((P, p_prefix), (Q, q_prefix)):
        for (s, r), mm in src.maps.items():
            nm = maps.setdefault((s, r), out.new_map(s, r))
            for key, lc in mm.entries.items():
                new_key = key[:s] + (prefix + key[s],) + key[s + 1:]
                for out_id, c in lc.items():
                    nm.add_term(new_key, prefix + out_id, c)
    maps = {k: v for k, v in maps.items() if not v.is_zero()}
    return AInfBimodule(P.base, space, maps, bound)
