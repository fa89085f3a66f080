"""Twisted complexes over an A-infinity algebra with object labels, mapping
cones, the doubled directed algebra, and the cone description of the
suspension.

Only the fragment needed here is implemented: finite one-sided twisted
complexes with strictly lower-triangular differential.  A twisted complex
is a formal sum of shifted objects V (x) K[s] with the shift factor on the
right; morphisms are matrices x (x) psi with psi the canonical generator of
Hom(K[s], K[s']) in degree s - s'.  The structure maps insert the twisting
differentials into the ambient operations, with the Koszul rule whose
exponent sums, over pairs of inputs, |psi of the earlier input| times the
reduced total degree of the later input, matching the
tensor-with-endomorphisms description of the suspension.
"""

from .core import GradedSpace, MultiMap
from .ainf import (AInfAlgebra, CheckError, check_homomorphism,
                   directed_subalgebra, double_objects, strict_homomorphism,
                   structure_equal)
from .susp import suspend


class TwistedComplex:
    """Formal sum of shifted objects with a strictly lower-triangular
    Maurer-Cartan differential.

    summands: list of (object_index, shift); the differential maps summand
    k to summand l only for l > k, with entries given as linear
    combinations of ambient basis ids of total degree 1 (after shifts).
    """

    def __init__(self, ambient, summands, diff, validate=True):
        self.ambient = ambient
        self.field = ambient.field
        self.summands = [(int(o), int(s)) for (o, s) in summands]
        for (o, _s) in self.summands:
            if not (1 <= o <= ambient.space.num_objects):
                raise CheckError(f"object index {o} out of range")
        self.diff = {}
        for (l, k), lc in diff.items():
            if not lc:
                continue
            if not (1 <= k < l <= len(self.summands)):
                raise CheckError("differential must be strictly lower-triangular")
            ok, sk = self.summands[k - 1]
            ol, sl = self.summands[l - 1]
            for bid in lc:
                el = ambient.space.element(bid)
                if (el.source, el.target) != (ok, ol):
                    raise CheckError(f"entry {bid!r} is not a morphism "
                                     f"from object {ok} to {ol}")
                if el.degree + sk - sl != 1:
                    raise CheckError(f"entry {bid!r} of delta must have total degree 1")
            self.diff[(l, k)] = dict(lc)
        if validate:
            bad = self.maurer_cartan_defect()
            if bad:
                raise CheckError(f"Maurer-Cartan fails: {bad}")

    def n_summands(self):
        return len(self.summands)

    def delta_items(self):
        """(k, l, amb_id, coeff, psi_degree) for every differential term."""
        out = []
        for (l, k), lc in self.diff.items():
            sk = self.summands[k - 1][1]
            sl = self.summands[l - 1][1]
            for bid, c in lc.items():
                out.append((k, l, bid, c, sk - sl))
        return out

    def maurer_cartan_defect(self):
        """sum_d mu^d(delta, ..., delta) accumulated per summand pair; None
        when it vanishes.  Finite because delta lowers the filtration."""
        f = self.field
        residual = {}
        by_start = {}
        for it in self.delta_items():
            by_start.setdefault(it[0], []).append(it)

        def note(chain):
            key = tuple(it[2] for it in reversed(chain))
            val = self.ambient.mu_entry(key)
            if not val:
                return
            coeff = f.one
            for it in chain:
                coeff = f.mul(coeff, it[3])
            # pairwise Koszul exponents vanish: every delta has reduced
            # total degree zero
            start, end = chain[0][0], chain[-1][1]
            cell = residual.setdefault((start, end), {})
            for out_id, c in val.items():
                s = f.add(cell.get(out_id, f.zero), f.mul(coeff, c))
                if f.is_zero(s):
                    cell.pop(out_id, None)
                else:
                    cell[out_id] = s

        def extend(chain):
            note(chain)
            if len(chain) >= self.ambient.arity_bound:
                return
            for it in by_start.get(chain[-1][1], []):
                extend(chain + [it])

        for it in self.delta_items():
            extend([it])
        residual = {k: v for k, v in residual.items() if v}
        return residual or None


def cone(ambient, obj_src, obj_tgt, cycle, validate=True):
    """Cone(c: X -> Y) = (X[1] (+) Y, delta = c) for a degree-0 cycle c."""
    return TwistedComplex(ambient, [(obj_src, 1), (obj_tgt, 0)],
                          {(2, 1): cycle}, validate=validate)


def _item_id(amb_id, i, k, j, l):
    return f"{amb_id}|{i}.{k}>{j}.{l}"


def twisted_category(objects, validate=True):
    """The endomorphism algebra of a list of twisted complexes over a
    common ambient algebra, as an A-infinity algebra over K^len(objects).

    The basis id "x|i.k>j.l" names the matrix entry carried by the ambient
    basis element x, from summand k of the i-th complex to summand l of the
    j-th one.
    """
    if not objects:
        raise CheckError("need at least one twisted complex")
    ambient = objects[0].ambient
    f = ambient.field
    if any(X.ambient is not ambient for X in objects):
        raise CheckError("all twisted complexes must share the ambient algebra")
    if validate:
        for X in objects:
            bad = X.maurer_cartan_defect()
            if bad:
                raise CheckError(f"Maurer-Cartan fails: {bad}")

    basis = []
    # item data: id -> (i, k, j, l, amb_id, psi_degree, total_degree)
    items = {}
    for i, X in enumerate(objects, start=1):
        for j, Y in enumerate(objects, start=1):
            for k, (ok, sk) in enumerate(X.summands, start=1):
                for l, (ol, sl) in enumerate(Y.summands, start=1):
                    for el in ambient.space.basis:
                        if (el.source, el.target) == (ok, ol):
                            mid = _item_id(el.id, i, k, j, l)
                            basis.append((mid, el.degree + sk - sl, i, j))
                            items[mid] = (i, k, j, l, el.id, sk - sl,
                                          el.degree + sk - sl)
    space = GradedSpace(len(objects), basis)

    delta_by_start = {}
    for i, X in enumerate(objects, start=1):
        for it in X.delta_items():
            k, l, bid, c, psi = it
            delta_by_start.setdefault((i, k), []).append(
                (bid, c, psi, 1, (i, k), (i, l)))

    D = ambient.arity_bound
    maps = {}

    def emit(d, key, seq):
        """seq in composition order: tuples (amb_id, coeff, psi_deg,
        total_deg, start(obj,summand), end(obj,summand))."""
        amb_key = tuple(it[0] for it in reversed(seq))
        val = ambient.mu_entry(amb_key)
        if not val:
            return
        coeff = f.one
        exp = 0
        n = len(seq)
        for a in range(n):
            coeff = f.mul(coeff, seq[a][1])
            for b in range(a + 1, n):
                exp += seq[a][2] * (seq[b][3] - 1)
        coeff = f.mul(coeff, f.sign(exp))
        if f.is_zero(coeff):
            return
        start_obj, start_sum = seq[0][4]
        end_obj, end_sum = seq[-1][5]
        nm = maps.setdefault(d, MultiMap(f, d, space, space, 2 - d))
        for out_id, c in val.items():
            nm.add_term(key, _item_id(out_id, start_obj, start_sum,
                                      end_obj, end_sum), f.mul(coeff, c))

    def delta_runs(at, budget):
        """Delta chains starting at (obj, summand) ``at``, incl. the empty
        one, of length <= budget."""
        runs = [[]]
        frontier = [([], at)]
        while frontier:
            run, pos = frontier.pop()
            if len(run) >= budget:
                continue
            for it in delta_by_start.get(pos, []):
                ext = run + [it]
                runs.append(ext)
                frontier.append((ext, it[5]))
        return runs

    def assemble(d):
        ids = list(space.ids())

        def place(n_left, seq, chosen):
            if n_left == 0:
                budget = D - len(seq)
                for run in delta_runs(seq[-1][5], budget):
                    emit(d, tuple(reversed(chosen)), seq + run)
                return
            for mid in ids:
                i, k, j, l, amb_id, psi, deg = items[mid]
                if seq and seq[-1][5] != (i, k):
                    continue
                item = (amb_id, f.one, psi, deg, (i, k), (j, l))
                if seq:
                    pres = [seq]
                else:
                    # a leading run below the first input, ending at (i, k)
                    pres = []
                    for start in range(1, k + 1):
                        for run in delta_runs((i, start), D - d):
                            if (run and run[-1][5] == (i, k)) or \
                               (not run and start == k):
                                pres.append(run)
                for pre in pres:
                    seq2 = pre + [item]
                    budget = D - (len(seq2) + n_left - 1)
                    if budget < 0:
                        continue
                    if n_left == 1:
                        place(0, seq2, chosen + [mid])
                    else:
                        for run in delta_runs(item[5], budget):
                            place(n_left - 1, seq2 + run, chosen + [mid])

        place(d, [], [])

    for d in range(1, D + 1):
        assemble(d)
    maps = {d: mm for d, mm in maps.items() if not mm.is_zero()}
    return AInfAlgebra(f, space, maps, D)


def hom_twisted(X, Y):
    """The hom complex between two twisted complexes: returns the category
    algebra on [X, Y] together with the (source, target) block of hom(X, Y)
    inside it ((1, 1) when X is Y)."""
    if X is Y:
        return twisted_category([X]), (1, 1)
    return twisted_category([X, Y]), (1, 2)


# -- the doubled directed algebra and the cone description --------------------

def tilde_directed(pair):
    """The directed algebra on 2m objects whose hom blocks are A for
    i <= j <= m and m < i <= j, B for i <= m < j, zero otherwise; structure
    maps lifted from B.  Equals directed_subalgebra(double_objects(B))."""
    B, A = pair.parent, pair.sub
    if B.units is None:
        raise CheckError("tilde construction needs declared units")
    unit_lcs = [B.unit_lc(i) for i in range(1, B.space.num_objects + 1)]
    if not all(set(u) <= pair.sub_ids for u in unit_lcs):
        raise CheckError("the subalgebra must contain the units")
    m = B.space.num_objects
    f = B.field
    a_ids = pair.sub_ids
    basis = []
    for el in A.space.basis:
        basis.append((f"{el.id}@11", el.degree, el.source, el.target))
    for el in B.space.basis:
        basis.append((f"{el.id}@12", el.degree, el.source, el.target + m))
    for el in A.space.basis:
        basis.append((f"{el.id}@22", el.degree, el.source + m, el.target + m))
    space = GradedSpace(2 * m, basis)
    maps = {}
    for d, mm in B.maps.items():
        nm = MultiMap(f, d, space, space, 2 - d)
        for key, lc in mm.entries.items():
            if all(x in a_ids for x in key):
                for out_id, c in lc.items():
                    nm.add_term(tuple(f"{x}@11" for x in key), f"{out_id}@11", c)
                    nm.add_term(tuple(f"{x}@22" for x in key), f"{out_id}@22", c)
            for pos in range(d):
                if any(key[t] not in a_ids for t in range(d) if t != pos):
                    continue
                new_key = (tuple(f"{x}@22" for x in key[:pos])
                           + (f"{key[pos]}@12",)
                           + tuple(f"{x}@11" for x in key[pos + 1:]))
                for out_id, c in lc.items():
                    nm.add_term(new_key, f"{out_id}@12", c)
        if not nm.is_zero():
            maps[d] = nm
    units = ([{f"{v}@11": c for v, c in u.items()} for u in unit_lcs]
             + [{f"{v}@22": c for v, c in u.items()} for u in unit_lcs])
    return AInfAlgebra(f, space, maps, B.arity_bound, units=units)


def cone_objects(pair, tilde=None):
    """The cones S_i = Cone(e_i: V_i -> V_{i+m}) over the doubled directed
    algebra; the arrows are the images of B's identity elements."""
    B = pair.parent
    if B.units is None:
        raise CheckError("cone objects need declared units")
    At = tilde if tilde is not None else tilde_directed(pair)
    f = B.field
    return At, [cone(At, i, i + B.space.num_objects,
                     {f"{v}@12": c for v, c in B.unit_lc(i).items()})
                for i in range(1, B.space.num_objects + 1)]


def cone_endomorphism_algebra(pair, tilde=None):
    """The full subcategory of twisted complexes on the cones S_i, as an
    algebra over K^m."""
    At, cones = cone_objects(pair, tilde=tilde)
    return twisted_category(cones)


def suspension_cone_identification(pair, cone_alg=None, suspension=None):
    """The strict map from suspend(pair) onto the cone algebra:
    a+ -> a@22 in the (2,2) corner, a- -> a@11 in the (1,1) corner,
    s b -> (-1)^{deg b} b@12 in the (1,2) corner."""
    f = pair.field
    sus = suspension if suspension is not None else suspend(pair, validate=False)
    if cone_alg is None:
        cone_alg = cone_endomorphism_algebra(pair)
    sp = pair.parent.space
    images = {}
    for a in pair.sub_ids:
        i, j = sp.source(a), sp.target(a)
        images["+" + a] = {_item_id(f"{a}@22", i, 2, j, 2): f.one}
        images["-" + a] = {_item_id(f"{a}@11", i, 1, j, 1): f.one}
    for b in sp.ids():
        i, j = sp.source(b), sp.target(b)
        images["s" + b] = {_item_id(f"{b}@12", i, 1, j, 2):
                           f.sign(sp.degree(b))}
    return strict_homomorphism(sus.algebra, cone_alg, images), sus, cone_alg


class LemmaAlgReport:
    def __init__(self, passed, detail=""):
        self.passed = passed
        self.detail = detail

    def __repr__(self):
        return "LemmaAlgReport(pass)" if self.passed else \
            f"LemmaAlgReport(FAIL: {self.detail})"


def lemma_alg_check(pair):
    """Structure-constant equality between the cone description and the
    suspension, under the canonical identification.  Because the
    identification is a basis bijection, the strict homomorphism equations
    holding exactly is that equality; the first failing tuple is reported.
    """
    ident, sus, cone_alg = suspension_cone_identification(pair)
    if len(sus.algebra.space) != len(cone_alg.space):
        return LemmaAlgReport(False, "dimensions differ: "
                              f"{len(sus.algebra.space)} vs {len(cone_alg.space)}")
    rep = check_homomorphism(ident)
    if not rep.passed:
        return LemmaAlgReport(False, rep.summary())
    return LemmaAlgReport(True)


def tilde_matches_doubling(pair):
    """tilde_directed(pair) equals directed_subalgebra(double_objects(B))
    under the identity id translation; returns the defect or None."""
    At = tilde_directed(pair)
    dbl = directed_subalgebra(double_objects(pair.parent))
    return structure_equal(At, dbl.sub, {x: x for x in At.space.ids()})
