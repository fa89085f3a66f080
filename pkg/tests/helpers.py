"""Shared test utilities: a small exact solver for the space of bimodule
morphisms with prescribed identity-on-A part."""

import itertools

from ainfsusp.core import MultiMap
from ainfsusp.bimod import BimoduleMorphism, check_bimodule_morphism
from ainfsusp import linalg


def morphism_slots(R, a_ids):
    """Candidate entry slots for an endomorphism of R that is the identity
    on the subalgebra span: higher components with middle off A, plus the
    free part of the linear component."""
    f = R.field
    A_sp = R.base.space
    slots = []
    D = R.arity_bound
    for s in range(0, D):
        for r in range(0, D - s):
            if (s, r) == (0, 0):
                continue
            shell = MultiMap(f, r + 1 + s, (A_sp,) * s + (R.space,) + (A_sp,) * r,
                             R.space, -r - s)
            pools = [list(A_sp.ids())] * s + [list(R.space.ids())] + \
                    [list(A_sp.ids())] * r
            for key in itertools.product(*pools):
                if not shell.key_is_composable(key) or key[s] in a_ids:
                    continue
                total = sum(sp.degree(x) for sp, x in zip(shell.in_spaces, key))
                src_b, tgt_b = shell.key_output_block(key)
                for out in R.space.block_basis(total - r - s, src_b, tgt_b):
                    slots.append((s, r, key, out))
    for x in R.space.ids():
        if x in a_ids:
            continue
        el = R.space.element(x)
        for out in R.space.block_basis(el.degree, el.source, el.target):
            slots.append((0, 0, (x,), out))
    return slots


def build_morphism(R, slots, xs, a_ids):
    f = R.field
    comps = {}
    m00 = MultiMap(f, 1, R.space, R.space, 0)
    for a in a_ids:
        m00.add_term((a,), a, f.one)
    comps[(0, 0)] = m00
    for (s, r, key, out), x in zip(slots, xs):
        if f.is_zero(f.coerce(x)):
            continue
        if (s, r) not in comps:
            in_spaces = (R.base.space,) * s + (R.space,) + (R.base.space,) * r
            comps[(s, r)] = MultiMap(f, r + 1 + s, in_spaces, R.space, -r - s)
        comps[(s, r)].add_term(key, out, x)
    return BimoduleMorphism(R, R, comps)


def solve_identity_morphisms(R, a_ids):
    """Affine space of self-morphisms restricting to the identity on A:
    returns (slots, particular solution, nullspace basis)."""
    f = R.field
    slots = morphism_slots(R, a_ids)

    def resid(xs):
        rep = check_bimodule_morphism(build_morphism(R, slots, xs, a_ids))
        return {(n, k, o): c for (n, k, lc) in rep.failures for o, c in lc.items()}

    base = resid([0] * len(slots))
    cols = []
    for i in range(len(slots)):
        xs = [0] * len(slots)
        xs[i] = 1
        cols.append(resid(xs))
    keys = sorted(set(base).union(*[set(c) for c in cols])) if cols else sorted(base)
    mat = [[f.sub(c.get(k, f.zero), base.get(k, f.zero)) for c in cols]
           for k in keys]
    rhs = [f.neg(base.get(k, f.zero)) for k in keys]
    sol = linalg.solve_columns(
        f, [[mat[r][c] for r in range(len(keys))] for c in range(len(cols))], rhs)
    null = linalg.nullspace(f, mat, len(slots))
    return slots, sol, null


def nonstrict_morphisms(R, a_ids, limit=3):
    """Up to ``limit`` valid morphisms with a nonzero higher component."""
    slots, sol, null = solve_identity_morphisms(R, a_ids)
    if sol is None:
        return []
    found = []
    for coeffs in itertools.product([0, 1], repeat=len(null)):
        xs = [sol[i] + sum(t * v[i] for t, v in zip(coeffs, null))
              for i in range(len(slots))]
        if any(not R.field.is_zero(xs[i])
               for i, (s, r, _k, _o) in enumerate(slots) if (s, r) != (0, 0)):
            found.append(build_morphism(R, slots, xs, a_ids))
            if len(found) >= limit:
                break
    return found
