"""A-infinity algebras over K^m with a finite arity bound.

Structure maps mu^d (1 <= d <= D) have degree shift 2 - d; maps of arity
beyond the bound are zero.  The associativity relations used everywhere
are, for every total arity and composable input tuple,

    sum_{r,s} (-1)^{||a_1|| + ... + ||a_r||}
        mu^{d-s+1}(a_d, ..., a_{r+s+1}, mu^s(a_{r+s}, ..., a_{r+1}), a_r, ..., a_1) = 0,

and the homomorphism equations pair with this convention: the composition
side sum_r mu^r(phi(...), ..., phi(...)) carries no signs, the other side
carries the same (-1)^{||a_1||+...+||a_r||} as above.
"""

from .core import (GradedSpace, MultiMap, lc_add_into, lc_equal, lc_vector)
from . import linalg


class CheckError(ValueError):
    """A precondition of an operation failed (not a verification verdict)."""


class AInfAlgebra:
    """Graded space plus sparse structure maps mu^d, 1 <= d <= arity bound.

    ``units`` optionally lists the m strict units, one per object in object
    order; declaring them is a claim checked by check_strict_unital, not an
    invariant of the constructor.
    """

    def __init__(self, field, space, maps, arity_bound, units=None):
        self.field = field
        self.space = space
        self.maps = {}
        for d, mm in maps.items():
            if mm.is_zero():
                continue
            if mm.arity != d:
                raise CheckError(f"map at key {d} has arity {mm.arity}")
            if mm.degree_shift != 2 - d:
                raise CheckError(f"mu^{d} must have degree shift {2-d}")
            if mm.out_space is not space or any(sp is not space for sp in mm.in_spaces):
                raise CheckError(f"mu^{d} not defined on the algebra's space")
            self.maps[d] = mm
        if arity_bound < 1 or any(d > arity_bound for d in self.maps):
            raise CheckError("arity bound too small for the given maps")
        self.arity_bound = arity_bound
        if units is not None:
            units = list(units)
            if len(units) != space.num_objects:
                raise CheckError("need one unit per object")
            for i, e in enumerate(units, start=1):
                terms = e if isinstance(e, dict) else {e: field.one}
                for bid in terms:
                    el = space.element(bid)
                    if el.degree != 0 or el.source != i or el.target != i:
                        raise CheckError(
                            f"unit term {bid!r} must sit in degree 0, block ({i},{i})")
        self.units = units

    def unit_lc(self, i):
        """The unit of object i as a linear combination."""
        if self.units is None:
            raise CheckError("units not declared")
        e = self.units[i - 1]
        return dict(e) if isinstance(e, dict) else {e: self.field.one}

    def unit_ids(self):
        """Units as basis ids; raises when a unit is a proper combination."""
        if self.units is None:
            raise CheckError("units not declared")
        out = []
        for i, e in enumerate(self.units, start=1):
            if isinstance(e, dict):
                if len(e) != 1 or not self.field.is_zero(
                        self.field.sub(next(iter(e.values())), self.field.one)):
                    raise CheckError(
                        f"the unit of object {i} is not a basis element")
                e = next(iter(e))
            out.append(e)
        return out

    def mu(self, d):
        """mu^d as a MultiMap; a fresh zero map when none is stored."""
        if d in self.maps:
            return self.maps[d]
        return MultiMap(self.field, d, self.space, self.space, 2 - d)

    def mu_entry(self, key):
        d = len(key)
        mm = self.maps.get(d)
        return mm.value(key) if mm else {}

    def apply(self, d, args):
        mm = self.maps.get(d)
        return mm.apply(args) if mm else {}

    def dim(self):
        return len(self.space)

    def new_map(self, d):
        return MultiMap(self.field, d, self.space, self.space, 2 - d)


def zero_algebra(field, num_objects=1):
    return AInfAlgebra(field, GradedSpace(num_objects, []), {}, 1)


def ground_field_algebra(field, unit_id="e"):
    """K itself: one object, one degree-0 basis element squaring to itself."""
    space = GradedSpace(1, [(unit_id, 0, 1, 1)])
    mu2 = MultiMap(field, 2, space, space, 0)
    mu2.add_term((unit_id, unit_id), unit_id, field.one)
    return AInfAlgebra(field, space, {2: mu2}, 2, units=[unit_id])


# -- sparse insertion composition ------------------------------------------

def insertion_terms(field, outer, inner, signed=True):
    """All compositions outer(..., inner(...), ...), one slot at a time.

    Yields (combined_key, out_id, coeff).  With ``signed`` the Koszul factor
    (-1)^{sum of reduced degrees of the r entries right of the insertion}
    multiplies each term, matching the associativity relations.
    """
    f = field
    o = outer.arity
    for r in range(o):
        pos = o - 1 - r
        slot_idx = outer.slot_index(pos)
        right_spaces = outer.in_spaces[pos + 1:]
        for ikey, ilc in inner.entries.items():
            for z, cz in ilc.items():
                for okey in slot_idx.get(z, ()):
                    if signed:
                        exp = sum(sp.reduced_degree(bid)
                                  for sp, bid in zip(right_spaces, okey[pos + 1:]))
                        c = f.mul(cz, f.sign(exp))
                    else:
                        c = cz
                    combined = okey[:pos] + ikey + okey[pos + 1:]
                    for out_id, co in outer.entries[okey].items():
                        yield combined, out_id, f.mul(c, co)


def _accumulate(field, residual, key, out_id, coeff):
    lc = residual.setdefault(key, {})
    s = field.add(lc.get(out_id, field.zero), coeff)
    if field.is_zero(s):
        lc.pop(out_id, None)
        if not lc:
            del residual[key]
    else:
        lc[out_id] = s


class RelationReport:
    """Outcome of a relation or homomorphism check; failures are data."""

    def __init__(self, failures):
        self.failures = failures

    @property
    def passed(self):
        return not self.failures

    def __bool__(self):
        return self.passed

    def __repr__(self):
        if self.passed:
            return "RelationReport(pass)"
        return f"RelationReport({len(self.failures)} failing tuples)"

    def summary(self):
        if self.passed:
            return "pass"
        a, key, res = self.failures[0]
        return (f"{len(self.failures)} failing tuples; first at arity {a}, "
                f"inputs {key}, residual {res}")


def check_relations(alg, max_arity=None):
    """Associativity residuals for all total arities up to 2D - 1."""
    f = alg.field
    top = max_arity if max_arity is not None else 2 * alg.arity_bound - 1
    failures = []
    for n in range(1, top + 1):
        residual = {}
        for s in range(1, min(alg.arity_bound, n) + 1):
            o = n - s + 1
            if o < 1 or o > alg.arity_bound:
                continue
            outer, inner = alg.maps.get(o), alg.maps.get(s)
            if outer is None or inner is None:
                continue
            for key, out_id, c in insertion_terms(f, outer, inner, signed=True):
                _accumulate(f, residual, key, out_id, c)
        for key in sorted(residual):
            failures.append((n, key, residual[key]))
    failures.sort(key=lambda t: (t[0], t[1]))
    return RelationReport(failures)


def check_strict_unital(alg):
    """Exact verification of the strict-unit equations on basis elements.

    Units may be single basis ids or linear combinations (the vertex-sum
    unit of a cochain algebra, say).
    """
    if alg.units is None:
        raise CheckError("units not declared")
    f = alg.field
    mu1, mu2 = alg.maps.get(1), alg.maps.get(2)
    units = [alg.unit_lc(i) for i in range(1, alg.space.num_objects + 1)]
    for e in units:
        if mu1 is not None and mu1.apply((e,)):
            return False
    for x in alg.space.ids():
        xlc = {x: f.one}
        got = mu2.apply((xlc, units[alg.space.source(x) - 1])) if mu2 else {}
        if not lc_equal(f, got, xlc):
            return False
        got = mu2.apply((units[alg.space.target(x) - 1], xlc)) if mu2 else {}
        want = {x: f.sign(alg.space.degree(x))}
        if not lc_equal(f, got, want):
            return False
    for d, mm in alg.maps.items():
        if d < 3:
            continue
        for j in range(d):
            for e in units:
                acc = {}
                for v, cv in e.items():
                    for key in mm.slot_index(j).get(v, ()):
                        masked = key[:j] + (None,) + key[j + 1:]
                        cell = acc.setdefault(masked, {})
                        lc_add_into(f, cell, mm.entries[key], cv)
                if any(acc.values()):
                    return False
    return True


# -- cohomology --------------------------------------------------------------

class CohomologyTable:
    """Graded dimensions and representative cycles per (degree, i, j)."""

    def __init__(self, dims, reps):
        self.dims = dims
        self.reps = reps

    def dim(self, degree, source=1, target=1):
        return self.dims.get((degree, source, target), 0)

    def by_degree(self):
        out = {}
        for (r, _i, _j), d in self.dims.items():
            out[r] = out.get(r, 0) + d
        return {r: d for r, d in sorted(out.items()) if d}

    def total(self):
        return sum(self.dims.values())

    def __eq__(self, other):
        return isinstance(other, CohomologyTable) and self.dims == other.dims

    def __repr__(self):
        return f"CohomologyTable({self.dims})"


def cohomology(alg):
    """Exact rank computation of ker mu^1 / im mu^1 per degree and block."""
    f = alg.field
    mu1 = alg.maps.get(1)
    if mu1 is not None:
        sq = {}
        for key, out_id, c in insertion_terms(f, mu1, mu1, signed=True):
            _accumulate(f, sq, key, out_id, c)
        if sq:
            raise CheckError("differential does not square to zero")
    dims, reps = {}, {}
    for (i, j) in alg.space.blocks_present():
        degs = sorted({alg.space.degree(x) for x in alg.space.ids()
                       if alg.space.source(x) == i and alg.space.target(x) == j})
        for r in degs:
            basis_r = alg.space.block_basis(r, i, j)
            basis_up = alg.space.block_basis(r + 1, i, j)
            basis_dn = alg.space.block_basis(r - 1, i, j)
            images = {x: (mu1.value((x,)) if mu1 else {}) for x in basis_r + basis_dn}
            mat = [[images[x].get(y, f.zero) for x in basis_r] for y in basis_up]
            kernel = linalg.nullspace(f, mat, len(basis_r))
            im_rows = [lc_vector(f, images[x], basis_r) for x in basis_dn]
            qreps = linalg.quotient_basis(f, len(basis_r), im_rows, kernel)
            if qreps:
                dims[(r, i, j)] = len(qreps)
                reps[(r, i, j)] = [
                    {bid: c for bid, c in zip(basis_r, v) if not f.is_zero(c)}
                    for v in qreps]
    return CohomologyTable(dims, reps)


# -- subalgebras -------------------------------------------------------------

class SubalgebraWitness:
    def __init__(self, parent, ids):
        self.parent = parent
        self.ids = frozenset(ids)


class SubalgebraPair:
    """A pair A inside B where A is spanned by a closed subset of B's basis."""

    def __init__(self, parent, sub_ids, sub):
        self.parent = parent
        self.sub_ids = frozenset(sub_ids)
        self.sub = sub
        self.witness = SubalgebraWitness(parent, sub_ids)

    @property
    def field(self):
        return self.parent.field


def subalgebra_pair(parent, ids, units=None, sub=None):
    """Verify closure of the span of ``ids`` and package the pair.

    ``sub`` optionally supplies an existing algebra object to serve as the
    subalgebra; it must match the restriction exactly (checked).  Sharing
    the object keeps bimodules over the two pairs comparable.
    """
    ids = list(dict.fromkeys(ids))
    idset = set(ids)
    for x in ids:
        parent.space.element(x)
    for d, mm in parent.maps.items():
        for key, lc in mm.entries.items():
            if all(b in idset for b in key):
                for out_id in lc:
                    if out_id not in idset:
                        raise CheckError(
                            f"not closed: mu^{d}{key} hits {out_id!r} outside the subset")
    sub_space = GradedSpace(parent.space.num_objects,
                            [parent.space.element(x) for x in ids])
    sub_maps = {}
    for d, mm in parent.maps.items():
        sm = MultiMap(parent.field, d, sub_space, sub_space, 2 - d)
        for key, lc in mm.entries.items():
            if all(b in idset for b in key):
                for out_id, c in lc.items():
                    sm.add_term(key, out_id, c)
        if not sm.is_zero():
            sub_maps[d] = sm
    if units is None and parent.units is not None:
        supports = [set(u) if isinstance(u, dict) else {u} for u in parent.units]
        if all(sup <= idset for sup in supports):
            units = parent.units
    restricted = AInfAlgebra(parent.field, sub_space, sub_maps,
                             parent.arity_bound, units=units)
    if sub is not None:
        defect = structure_equal(restricted, sub, {x: x for x in ids})
        if defect is not None:
            raise CheckError("supplied subalgebra does not match: " + defect)
        restricted = sub
    return SubalgebraPair(parent, ids, restricted)


def directed_subalgebra(alg):
    """Units plus all basis elements with source < target; closure verified."""
    if alg.units is None:
        raise CheckError("directed subalgebra needs declared units")
    unit_ids = alg.unit_ids()
    ids = unit_ids + [x for x in alg.space.ids()
                      if alg.space.source(x) < alg.space.target(x)
                      and x not in unit_ids]
    return subalgebra_pair(alg, ids, units=alg.units)


# -- object doubling ---------------------------------------------------------

def _double_id(bid, si, ti):
    return f"{bid}@{si}{ti}"


def double_objects(alg):
    """Two isomorphic copies of every object; constants copied along the
    index map i -> {i, i+m}."""
    m = alg.space.num_objects
    basis = []
    for el in alg.space.basis:
        for si in (0, 1):
            for ti in (0, 1):
                basis.append((_double_id(el.id, si + 1, ti + 1), el.degree,
                              el.source + si * m, el.target + ti * m))
    space = GradedSpace(2 * m, basis)
    maps = {}
    for d, mm in alg.maps.items():
        nm = MultiMap(alg.field, d, space, space, 2 - d)
        for key, lc in mm.entries.items():
            # object chain o_0 -> ... -> o_d read right-to-left; each object
            # lifts to either copy independently
            for mask in range(1 << (d + 1)):
                choice = [(mask >> k) & 1 for k in range(d + 1)]
                new_key = []
                for pos, bid in enumerate(key):
                    k = d - 1 - pos  # input number minus 1, counted from the right
                    new_key.append(_double_id(bid, choice[k] + 1, choice[k + 1] + 1))
                for out_id, c in lc.items():
                    nm.add_term(tuple(new_key),
                                _double_id(out_id, choice[0] + 1, choice[d] + 1), c)
        if not nm.is_zero():
            maps[d] = nm
    units = None
    if alg.units is not None:
        def lift(e, a, b):
            if isinstance(e, dict):
                return {_double_id(v, a, b): c for v, c in e.items()}
            return _double_id(e, a, b)
        units = ([lift(e, 1, 1) for e in alg.units]
                 + [lift(e, 2, 2) for e in alg.units])
    return AInfAlgebra(alg.field, space, maps, alg.arity_bound, units=units)


# -- homomorphisms -----------------------------------------------------------

class AInfHomomorphism:
    """Components phi^d with degree shift 1 - d, zero beyond their bound."""

    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.field = source.field
        if target.field != source.field:
            raise CheckError("source and target live over different fields")
        self.components = {}
        for d, mm in components.items():
            if mm.is_zero():
                continue
            if mm.arity != d or mm.degree_shift != 1 - d:
                raise CheckError(f"phi^{d} must have arity {d} and degree shift {1-d}")
            self.components[d] = mm
        if 1 not in self.components:
            self.components[1] = MultiMap(self.field, 1, source.space, target.space, 0)

    @property
    def bound(self):
        return max(self.components)

    def linear(self):
        return self.components[1]

    def apply_linear(self, lc):
        return self.components[1].apply((lc,))


def identity_homomorphism(alg):
    phi1 = MultiMap(alg.field, 1, alg.space, alg.space, 0)
    for x in alg.space.ids():
        phi1.add_term((x,), x, alg.field.one)
    return AInfHomomorphism(alg, alg, {1: phi1})


def strict_homomorphism(source, target, images):
    """Homomorphism with only a linear part, given by basis images."""
    phi1 = MultiMap(source.field, 1, source.space, target.space, 0)
    for x, lc in images.items():
        for y, c in lc.items():
            phi1.add_term((x,), y, c)
    return AInfHomomorphism(source, target, {1: phi1})


def check_homomorphism(phi, max_arity=None):
    """Verify the homomorphism equations on all composable tuples up to the
    working arity bound (beyond it both sides vanish identically)."""
    f = phi.field
    dphi = phi.bound
    ds = phi.source.arity_bound
    dt = phi.target.arity_bound
    top = max(dt * dphi, ds + dphi - 1)
    if max_arity is not None:
        top = min(top, max_arity)
    sides = {n: {} for n in range(1, top + 1)}
    out_idx = {d: mm.out_index() for d, mm in phi.components.items()}
    # composition side: mu_target of phi-blocks, no signs
    for r, mm in phi.target.maps.items():
        for key, lc in mm.entries.items():
            stack = [((), f.one, 0)]
            for bid in key:
                nxt = []
                for ck, c, tot in stack:
                    for d, idx in out_idx.items():
                        if tot + d > top:
                            continue
                        for pk, pc in idx.get(bid, ()):
                            nxt.append((ck + pk, f.mul(c, pc), tot + d))
                stack = nxt
                if not stack:
                    break
            for ck, c, tot in stack:
                for out_id, co in lc.items():
                    _accumulate(f, sides[tot], ck, out_id, f.mul(c, co))
    # insertion side, subtracted with the Koszul sign of the relations
    for o, comp in phi.components.items():
        for s, mm in phi.source.maps.items():
            n = o + s - 1
            if n > top:
                continue
            for key, out_id, c in insertion_terms(f, comp, mm, signed=True):
                _accumulate(f, sides[n], key, out_id, f.neg(c))
    failures = []
    for n in range(1, top + 1):
        for key in sorted(sides[n]):
            failures.append((n, key, sides[n][key]))
    return RelationReport(failures)


def _h_coordinates(field, basis, im_rows, reps):
    """Return a function assigning H-coordinates to cocycle vectors."""
    cols = [list(r) for r in im_rows] + [list(r) for r in reps]
    k_im = len(im_rows)

    def coords(vec):
        x = linalg.solve_columns(field, cols, vec)
        if x is None:
            return None
        return x[k_im:]
    return coords


def induced_cohomology_map(phi, h_src=None, h_tgt=None):
    """Matrices of the map induced by phi^1 per (degree, block).

    Returns (h_src, h_tgt, matrices) where matrices maps each key present in
    either table to a list of target-coordinate rows (one per source rep),
    or None when phi^1 of a representative fails to be a cocycle in range.
    """
    f = phi.field
    if h_src is None:
        h_src = cohomology(phi.source)
    if h_tgt is None:
        h_tgt = cohomology(phi.target)
    mu1_t = phi.target.maps.get(1)
    matrices = {}
    for key in sorted(set(h_src.dims) | set(h_tgt.dims)):
        r, i, j = key
        src_reps = h_src.reps.get(key, [])
        basis_r = phi.target.space.block_basis(r, i, j)
        basis_dn = phi.target.space.block_basis(r - 1, i, j)
        im_rows = [lc_vector(f, mu1_t.value((x,)) if mu1_t else {}, basis_r)
                   for x in basis_dn]
        tgt_reps = [lc_vector(f, lc, basis_r) for lc in h_tgt.reps.get(key, [])]
        coords = _h_coordinates(f, basis_r, im_rows, tgt_reps)
        rows = []
        for rep in src_reps:
            img = phi.apply_linear(rep)
            vec = lc_vector(f, img, basis_r)
            c = coords(vec)
            if c is None:
                matrices[key] = None
                break
            rows.append(c)
        else:
            matrices[key] = rows
    return h_src, h_tgt, matrices


def is_quasi_iso(phi, checked=False):
    """True iff phi^1 induces an isomorphism on cohomology everywhere."""
    if not checked:
        rep = check_homomorphism(phi)
        if not rep.passed:
            raise CheckError("homomorphism equations fail: " + rep.summary())
    h_src, h_tgt, mats = induced_cohomology_map(phi)
    for key in sorted(set(h_src.dims) | set(h_tgt.dims)):
        ds = h_src.dims.get(key, 0)
        dt = h_tgt.dims.get(key, 0)
        if ds != dt:
            return False
        rows = mats.get(key)
        if rows is None:
            return False
        if ds and linalg.rank(phi.field, rows) != ds:
            return False
    return True


# -- base change -------------------------------------------------------------

def change_basis(alg, new_basis, images, units=None):
    """Conjugate the structure maps by an invertible degree-0 block map.

    ``new_basis`` lists (id, degree, source, target) for the new algebra and
    ``images`` sends each new id to its expansion in the old basis.  The map
    must be block- and degree-preserving and invertible.
    """
    f = alg.field
    new_space = GradedSpace(alg.space.num_objects, new_basis)
    if len(new_space) != len(alg.space):
        raise CheckError("base change must preserve dimension")
    for nid in new_space.ids():
        el = new_space.element(nid)
        for old_id in images[nid]:
            oel = alg.space.element(old_id)
            if (oel.degree, oel.source, oel.target) != (el.degree, el.source, el.target):
                raise CheckError(f"image of {nid!r} leaves its (degree, block)")
    # invert blockwise: old basis vector -> linear combination of new ids
    inverse = {}
    for (i, j) in alg.space.blocks_present():
        for r in alg.space.degrees_present():
            old_ids = alg.space.block_basis(r, i, j)
            new_ids = new_space.block_basis(r, i, j)
            if not old_ids and not new_ids:
                continue
            if len(old_ids) != len(new_ids):
                raise CheckError("base change must preserve block dimensions")
            cols = [[images[nid].get(oid, f.zero) for oid in old_ids] for nid in new_ids]
            inv = linalg.invert(f, [[cols[c][r_] for c in range(len(new_ids))]
                                    for r_ in range(len(old_ids))])
            if inv is None:
                raise CheckError("base change is singular")
            for k, oid in enumerate(old_ids):
                inverse[oid] = {nid: inv[c][k] for c, nid in enumerate(new_ids)
                                if not f.is_zero(inv[c][k])}
    def pullback(lc):
        out = {}
        for oid, c in lc.items():
            lc_add_into(f, out, inverse[oid], c)
        return out

    maps = {}
    for d, mm in alg.maps.items():
        nm = MultiMap(f, d, new_space, new_space, 2 - d)
        for key in _composable_keys(new_space, d):
            val = mm.apply(tuple(images[x] for x in key))
            if val:
                for out_id, c in pullback(val).items():
                    nm.add_term(key, out_id, c)
        if not nm.is_zero():
            maps[d] = nm
    return AInfAlgebra(f, new_space, maps, alg.arity_bound, units=units)


def _composable_keys(space, arity):
    by_source = {}
    for el in space.basis:
        by_source.setdefault(el.source, []).append(el.id)
    def extend(suffix, depth):
        if depth == 0:
            yield suffix
            return
        # the next input composes after the current leftmost one
        for bid in by_source.get(space.target(suffix[0]), ()):
            yield from extend((bid,) + suffix, depth - 1)
    for a1 in space.ids():
        yield from extend((a1,), arity - 1)


def structure_equal(alg_a, alg_b, id_map):
    """Exact structure-constant equality under the given id translation.

    Returns None when equal, otherwise a string naming the first mismatch.
    """
    f = alg_a.field
    if set(id_map) != set(alg_a.space.ids()):
        return "id map does not cover the source basis"
    if sorted(id_map.values()) != sorted(alg_b.space.ids()):
        return "id map is not a bijection onto the target basis"
    for x in alg_a.space.ids():
        ea, eb = alg_a.space.element(x), alg_b.space.element(id_map[x])
        if (ea.degree, ea.source, ea.target) != (eb.degree, eb.source, eb.target):
            return f"basis element {x!r} changes degree or block"
    degrees = set(alg_a.maps) | set(alg_b.maps)
    for d in sorted(degrees):
        ma, mb = alg_a.mu(d), alg_b.mu(d)
        keys = set(ma.entries) | {tuple(k) for k in _unmap_keys(mb.entries, id_map)}
        for key in sorted(keys):
            va = ma.value(key)
            vb = mb.value(tuple(id_map[x] for x in key))
            va_t = {id_map[b]: c for b, c in va.items()}
            if not lc_equal(f, va_t, vb):
                return (f"mu^{d}{key}: {va_t} != {vb}")
    return None


def _unmap_keys(entries, id_map):
    rev = {v: k for k, v in id_map.items()}
    for key in entries:
        if all(b in rev for b in key):
            yield tuple(rev[b] for b in key)
