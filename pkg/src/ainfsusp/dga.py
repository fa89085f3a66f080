"""Differential graded algebras and their translation into the A-infinity
conventions of this package.

A Dga stores a plain differential d (degree +1, Leibniz with respect to the
product) and an associative product written x2 * x1.  The translation to an
A-infinity algebra is

    mu^1(x)       = (-1)^{deg x} d(x)
    mu^2(x2, x1)  = (-1)^{deg x1} x2 * x1

and is an exact bijection between dga structures and A-infinity structures
with mu^d = 0 for d >= 3 (in this package's sign convention).
"""

from .core import MultiMap, lc_scale
from .ainf import AInfAlgebra, CheckError


class Dga:
    """Plain dga data on a graded space: differential and product tables."""

    def __init__(self, field, space, diff, prod, units=None):
        self.field = field
        self.space = space
        self.diff = diff    # dict id -> lc
        self.prod = prod    # dict (id2, id1) -> lc
        self.units = units

    def d(self, bid):
        return self.diff.get(bid, {})

    def mul(self, b2, b1):
        return self.prod.get((b2, b1), {})

    def mul_lc(self, lc2, lc1):
        f = self.field
        out = {}
        for b2, c2 in lc2.items():
            for b1, c1 in lc1.items():
                lc_add_into(f, out, self.mul(b2, b1), f.mul(c2, c1))
        return out

    def to_ainf(self, arity_bound=2):
        f = self.field
        mu1 = MultiMap(f, 1, self.space, self.space, 1)
        for bid, lc in self.diff.items():
            s = f.sign(self.space.degree(bid))
            for out_id, c in lc.items():
                mu1.add_term((bid,), out_id, f.mul(s, c))
        mu2 = MultiMap(f, 2, self.space, self.space, 0)
        for (b2, b1), lc in self.prod.items():
            s = f.sign(self.space.degree(b1))
            for out_id, c in lc.items():
                mu2.add_term((b2, b1), out_id, f.mul(s, c))
        maps = {}
        if not mu1.is_zero():
            maps[1] = mu1
        if not mu2.is_zero():
            maps[2] = mu2
        return AInfAlgebra(f, self.space, maps, max(arity_bound, 2), units=self.units)


def from_ainf(alg):
    """Inverse translation; requires mu^d = 0 for d >= 3."""
    if any(d >= 3 for d in alg.maps):
        raise CheckError("not a dga: has structure maps of arity >= 3")
    f = alg.field
    diff = {}
    mu1 = alg.maps.get(1)
    if mu1 is not None:
        for (bid,), lc in mu1.entries.items():
            diff[bid] = lc_scale(f, lc, f.sign(alg.space.degree(bid)))
    prod = {}
    mu2 = alg.maps.get(2)
    if mu2 is not None:
        for (b2, b1), lc in mu2.entries.items():
            prod[(b2, b1)] = lc_scale(f, lc, f.sign(alg.space.degree(b1)))
    return Dga(f, alg.space, diff, prod, units=alg.units)
