"""Named and randomized test fixtures.

All fixtures are pairs (A inside B) of strictly unital algebras:

* fix_k:        A = B = K.
* fix_dual(n):  B = K[eps]/(eps^2), deg eps = n; the trivial extension of
                K by K[-n], with A = K.
* fix_an(n):    A the two-object directed path algebra with one arrow,
                B = A (+) dual(A)[-n]; A is exactly the directed part of B.
* fix_rand:     seeded random strictly unital pairs, built from certified
                families (path algebras, trivial extensions by twisted-up
                bimodules, an arity-3 kernel) conjugated by random unit-fixing
                base changes, then gated through check_relations.
"""

import random

from .core import GradedSpace, MultiMap
from .ainf import (AInfAlgebra, CheckError, check_relations, check_strict_unital,
                   change_basis, directed_subalgebra, ground_field_algebra,
                   subalgebra_pair)
from .bimod import (diagonal_bimodule, dual_bimodule, shift_bimodule,
                    trivial_extension)
from . import linalg


def fix_k(field):
    K = ground_field_algebra(field)
    return subalgebra_pair(K, ["e"])


def fix_dual(field, n):
    """B = K (+) K eps with deg eps = n; A = K."""
    K = ground_field_algebra(field)
    P = shift_bimodule(diagonal_bimodule(K), -n)
    B = trivial_extension(K, P, p_prefix="eps_")
    return subalgebra_pair(B, ["e"])


def path_algebra_a2(field, deg_arrow=0):
    """Directed 2-object path algebra: units e1, e2 and one arrow al: 1 -> 2."""
    sp = GradedSpace(2, [("e1", 0, 1, 1), ("e2", 0, 2, 2), ("al", deg_arrow, 1, 2)])
    mu2 = MultiMap(field, 2, sp, sp, 0)
    mu2.add_term(("e1", "e1"), "e1", 1)
    mu2.add_term(("e2", "e2"), "e2", 1)
    mu2.add_term(("al", "e1"), "al", 1)
    mu2.add_term(("e2", "al"), "al", field.sign(deg_arrow))
    return AInfAlgebra(field, sp, {2: mu2}, 2, units=["e1", "e2"])


def fix_an(field, n=2, deg_arrow=0):
    """B = A (+) dual(A)[-n] over the A2 path algebra; dual ids carry '*'."""
    A = path_algebra_a2(field, deg_arrow)
    P = dual_bimodule(diagonal_bimodule(A), n)
    B = trivial_extension(A, P, p_prefix="")
    pair = subalgebra_pair(B, ["e1", "e2", "al"])
    directed = directed_subalgebra(B)
    if set(directed.sub_ids) != set(pair.sub_ids):
        raise CheckError("fix_an: directed part does not match A")
    return pair


def arity3_kernel(field, deg_x=1):
    """Strictly unital algebra with a single nontrivial mu^3: basis e, x, w,
    mu^3(x, x, x) = w.  Passes the relations for any deg_x."""
    deg_w = 3 * deg_x - 1
    sp = GradedSpace(1, [("e", 0, 1, 1), ("x", deg_x, 1, 1), ("w", deg_w, 1, 1)])
    mu2 = MultiMap(field, 2, sp, sp, 0)
    mu2.add_term(("e", "e"), "e", 1)
    for z in ("x", "w"):
        mu2.add_term((z, "e"), z, 1)
        mu2.add_term(("e", z), z, field.sign(sp.degree(z)))
    mu3 = MultiMap(field, 3, sp, sp, -1)
    mu3.add_term(("x", "x", "x"), "w", 1)
    return AInfAlgebra(field, sp, {2: mu2, 3: mu3}, 3, units=["e"])


# -- randomized fixtures ------------------------------------------------------

def _random_scalar(field, rng, allow_zero=True):
    lo = -3 if field.characteristic == 0 else 0
    hi = 3 if field.characteristic == 0 else field.characteristic - 1
    while True:
        c = field.coerce(rng.randint(lo, hi))
        if allow_zero or not field.is_zero(c):
            return c


def _random_block_automorphism(field, rng, space, fixed_ids):
    """Random invertible degree-0 block map fixing ``fixed_ids`` and
    triangular against them: moving ids may pick up fixed-id components."""
    images = {}
    for bid in fixed_ids:
        images[bid] = {bid: field.one}
    moving = [el for el in space.basis if el.id not in fixed_ids]
    groups = {}
    for el in moving:
        groups.setdefault((el.degree, el.source, el.target), []).append(el.id)
    for (deg, i, j), ids in groups.items():
        k = len(ids)
        while True:
            mat = [[_random_scalar(field, rng) for _ in range(k)] for _ in range(k)]
            if linalg.invert(field, mat) is not None:
                break
        fixed_here = [x for x in fixed_ids
                      if space.degree(x) == deg and space.source(x) == i
                      and space.target(x) == j]
        for col, bid in enumerate(ids):
            lc = {ids[row]: mat[row][col] for row in range(k)
                  if not field.is_zero(mat[row][col])}
            for x in fixed_here:
                c = _random_scalar(field, rng)
                if not field.is_zero(c):
                    lc[x] = c
            images[bid] = lc
    return images


def _conjugate(alg, rng, fixed_ids):
    images = _random_block_automorphism(alg.field, rng, alg.space, fixed_ids)
    new_basis = [(el.id, el.degree, el.source, el.target) for el in alg.space.basis]
    return change_basis(alg, new_basis, images, units=alg.units)


def fix_rand(field, seed, max_dim=6):
    """Seeded random strictly unital pair; at most max_dim basis elements in
    the ambient algebra, arity bound at most 3.

    The sample is drawn from certified constructions and then conjugated by
    a random unit-fixing base change; check_relations still gates the
    output, so a construction bug cannot leak a bad fixture.
    """
    rng = random.Random(f"ainfsusp:{seed}")
    kind = rng.choice(["dual", "dual", "shift", "mu3", "point"])
    if kind == "point":
        B = trivial_extension(
            ground_field_algebra(field),
            shift_bimodule(diagonal_bimodule(ground_field_algebra(field)),
                           -rng.randint(0, 3)),
            p_prefix="p_")
    elif kind == "mu3":
        A = arity3_kernel(field, deg_x=rng.choice([0, 1, 2]))
        B = A
    elif kind == "shift":
        A = path_algebra_a2(field, deg_arrow=rng.randint(-1, 2))
        P = shift_bimodule(diagonal_bimodule(A), -rng.randint(0, 2))
        B = trivial_extension(A, P, p_prefix="p_")
    else:
        A = path_algebra_a2(field, deg_arrow=rng.randint(-1, 2))
        P = dual_bimodule(diagonal_bimodule(A), rng.randint(0, 3))
        B = trivial_extension(A, P, p_prefix="")
    if len(B.space) > max_dim:
        raise CheckError("fixture exceeds the dimension budget")
    B = _conjugate(B, rng, fixed_ids=set(B.unit_ids()))
    if not check_relations(B).passed:
        raise CheckError("rejected random sample: relations fail")
    if not check_strict_unital(B):
        raise CheckError("rejected random sample: unitality fails")
    return directed_subalgebra(B)


def random_pairs(field, seeds, max_dim=6):
    return [fix_rand(field, s, max_dim) for s in seeds]


FIXTURES = {
    "k": lambda field: fix_k(field),
    "dual:1": lambda field: fix_dual(field, 1),
    "dual:2": lambda field: fix_dual(field, 2),
    "dual:3": lambda field: fix_dual(field, 3),
    "an:2": lambda field: fix_an(field, 2),
    "an:3": lambda field: fix_an(field, 3),
}


def fixture_by_name(name, field):
    if name in FIXTURES:
        return FIXTURES[name](field)
    if name.startswith("dual:"):
        return fix_dual(field, int(name[5:]))
    if name.startswith("an:"):
        return fix_an(field, int(name[3:]))
    if name.startswith("rand:"):
        return fix_rand(field, int(name[5:]))
    raise CheckError(f"unknown fixture {name!r}")
