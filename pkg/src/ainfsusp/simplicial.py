"""Simplicial cochain dga's of pairs, the mapping-cylinder-style algebra
C*(U) (+) C*(U,W)[1], the glued double, and the comparison map into the
suspension.

Complexes are stored Delta-complex style: each simplex carries explicit
ordered face keys, so gluing two copies of U along W may produce distinct
simplices on the same vertex set (two edges sharing both endpoints).  The
cup product is the ordered front-face/back-face one, which is associative
and strictly unital with unit the sum of vertex duals.
"""

from .core import GradedSpace, lc_add_into
from .ainf import (AInfAlgebra, CheckError, strict_homomorphism, subalgebra_pair)
from .dga import Dga


class Simplex:
    __slots__ = ("key", "dim", "faces", "label")

    def __init__(self, key, dim, faces, label):
        self.key = key
        self.dim = dim
        self.faces = tuple(faces)  # face i omits vertex i; empty for dim 0
        self.label = label


class SimplicialComplex:
    """Finite Delta-complex: simplices with explicit face maps."""

    def __init__(self, simplices):
        self.simplices = {}
        for s in simplices:
            if s.key in self.simplices:
                raise CheckError(f"duplicate simplex key {s.key!r}")
            self.simplices[s.key] = s
        for s in self.simplices.values():
            if s.dim > 0 and len(s.faces) != s.dim + 1:
                raise CheckError(f"simplex {s.label} needs {s.dim + 1} faces")
            for fk in s.faces:
                if fk not in self.simplices:
                    raise CheckError(f"missing face {fk!r} of {s.label}")
                if self.simplices[fk].dim != s.dim - 1:
                    raise CheckError(f"face of {s.label} has the wrong dimension")
        labels = [s.label for s in self.simplices.values()]
        if len(set(labels)) != len(labels):
            raise CheckError("duplicate simplex labels")

    def __len__(self):
        return len(self.simplices)

    def ordered(self):
        return sorted(self.simplices.values(), key=lambda s: (s.dim, s.label))

    def dimension(self):
        return max((s.dim for s in self.simplices.values()), default=-1)

    def front(self, key, p):
        """Iterated deletion of the last vertex down to dimension p."""
        s = self.simplices[key]
        while s.dim > p:
            s = self.simplices[s.faces[s.dim]]
        return s.key

    def back(self, key, p):
        """Iterated deletion of the first vertex down to dimension p."""
        s = self.simplices[key]
        while s.dim > p:
            s = self.simplices[s.faces[0]]
        return s.key

    def has_key(self, key):
        return key in self.simplices


def complex_from_vertex_sets(vertices, simplices):
    """Build the downward closure of the given simplices; vertex order is
    the order of ``vertices`` and fixes the cup product."""
    order = {v: i for i, v in enumerate(vertices)}
    if len(order) != len(vertices):
        raise CheckError("duplicate vertices")
    keys = set()
    for vs in simplices:
        vs = tuple(sorted(set(vs), key=lambda v: order[v]))
        if not vs:
            raise CheckError("empty simplex")
        for v in vs:
            if v not in order:
                raise CheckError(f"unknown vertex {v!r}")
        keys.add(vs)
    for v in vertices:
        keys.add((v,))
    # close under faces
    frontier = list(keys)
    while frontier:
        vs = frontier.pop()
        if len(vs) <= 1:
            continue
        for i in range(len(vs)):
            face = vs[:i] + vs[i + 1:]
            if face not in keys:
                keys.add(face)
                frontier.append(face)
    out = []
    for vs in keys:
        label = ".".join(str(v) for v in vs)
        faces = [vs[:i] + vs[i + 1:] for i in range(len(vs))] if len(vs) > 1 else []
        out.append(Simplex(vs, len(vs) - 1, faces, label))
    return SimplicialComplex(out)


def simplex_span(X, keys):
    """The subcomplex on the given keys (must be face-closed)."""
    keys = set(keys)
    for k in keys:
        s = X.simplices[k]
        for fk in s.faces:
            if fk not in keys:
                raise CheckError(f"subcomplex is not closed under faces at {s.label}")
    return SimplicialComplex([X.simplices[k] for k in keys])


class SimplicialPair:
    def __init__(self, complex_, sub_keys):
        self.complex = complex_
        self.sub_keys = frozenset(sub_keys)
        self.subcomplex = simplex_span(complex_, sub_keys)


def pair_from_vertex_sets(vertices, simplices, sub_simplices):
    X = complex_from_vertex_sets(vertices, simplices)
    keys = set()
    order = {v: i for i, v in enumerate(vertices)}
    frontier = []
    for vs in sub_simplices:
        vs = tuple(sorted(set(vs), key=lambda v: order[v]))
        if not X.has_key(vs):
            raise CheckError(f"subcomplex simplex {vs} is not in the complex")
        keys.add(vs)
        frontier.append(vs)
    while frontier:
        vs = frontier.pop()
        for fk in X.simplices[vs].faces:
            if fk not in keys:
                keys.add(fk)
                frontier.append(fk)
    return SimplicialPair(X, keys)


# -- cochain algebras ----------------------------------------------------------

def _coboundary_table(X):
    """label-level coboundary: d(s*) = sum over (t, i) with face_i(t) = s of
    (-1)^i t*."""
    out = {}
    for t in X.ordered():
        for i, fk in enumerate(t.faces):
            s = X.simplices[fk]
            cell = out.setdefault(s.label, {})
            cell[t.label] = cell.get(t.label, 0) + (-1) ** i
    return out


def _cup_table(X):
    """label-level cup product: (s* cup t*)(u) = [front(u) = s][back(u) = t]."""
    out = {}
    for u in X.ordered():
        for p in range(u.dim + 1):
            s = X.simplices[X.front(u.key, p)]
            t = X.simplices[X.back(u.key, u.dim - p)]
            cell = out.setdefault((s.label, t.label), {})
            cell[u.label] = cell.get(u.label, 0) + 1
    return out


def cochain_dga(X, field):
    """The simplicial cochain dga of a nonempty complex, as a strictly
    unital one-object algebra (unit: the sum of vertex duals)."""
    if len(X) == 0:
        raise CheckError("empty complex")
    basis = [(s.label, s.dim, 1, 1) for s in X.ordered()]
    space = GradedSpace(1, basis)
    f = field
    diff = {}
    for s_label, lc in _coboundary_table(X).items():
        v = {t: f.coerce(c) for t, c in lc.items() if not f.is_zero(f.coerce(c))}
        if v:
            diff[s_label] = v
    prod = {}
    for (a, b), lc in _cup_table(X).items():
        v = {t: f.coerce(c) for t, c in lc.items() if not f.is_zero(f.coerce(c))}
        if v:
            prod[(a, b)] = v
    unit = {s.label: f.one for s in X.ordered() if s.dim == 0}
    return Dga(f, space, diff, prod, units=[unit]).to_ainf()


def zero_cochain_algebra(field):
    return AInfAlgebra(field, GradedSpace(1, []), {}, 2)


def pair_algebra(pair, field):
    """B = C*(U) (+) C*(U,W)[1] with the inclusion of A = C*(U):

        d(b, c) = (delta b + (-1)^{deg c} c, delta c),
        (b2, c2) (b1, c1) = (b2 b1, b2 c1 + (-1)^{deg b1} c2 b1).

    Returns (pair A in B, restriction) where restriction is the
    quasi-isomorphism B -> C*(W), (b, c) |-> b|W.
    """
    U, W = pair.complex, pair.subcomplex
    f = field
    rel = [s for s in U.ordered() if s.key not in pair.sub_keys]
    basis = [("b:" + s.label, s.dim, 1, 1) for s in U.ordered()]
    basis += [("c:" + s.label, s.dim - 1, 1, 1) for s in rel]
    space = GradedSpace(1, basis)
    cob = _coboundary_table(U)
    cup = _cup_table(U)
    relset = {s.label for s in rel}

    diff = {}
    for s in U.ordered():
        lc = {"b:" + t: f.coerce(c) for t, c in cob.get(s.label, {}).items()}
        lc = {k: v for k, v in lc.items() if not f.is_zero(v)}
        if lc:
            diff["b:" + s.label] = lc
    for s in rel:
        lc = {}
        for t, c in cob.get(s.label, {}).items():
            if t in relset:
                cv = f.coerce(c)
                if not f.is_zero(cv):
                    lc[("c:" + t)] = cv
        lc_add_into(f, lc, {"b:" + s.label: f.sign(s.dim)})
        if lc:
            diff["c:" + s.label] = lc

    prod = {}
    def add_prod(x2, x1, lc):
        if lc:
            prod[(x2, x1)] = lc
    for (a, b), lc in cup.items():
        out_b = {"b:" + t: f.coerce(c) for t, c in lc.items()}
        out_b = {k: v for k, v in out_b.items() if not f.is_zero(v)}
        add_prod("b:" + a, "b:" + b, out_b)
        if b in relset:
            out_c = {"c:" + t: f.coerce(c) for t, c in lc.items() if t in relset}
            out_c = {k: v for k, v in out_c.items() if not f.is_zero(v)}
            add_prod("b:" + a, "c:" + b, out_c)
        if a in relset:
            db = U.simplices[next(s.key for s in U.ordered() if s.label == b)].dim
            out_c = {"c:" + t: f.mul(f.sign(db), f.coerce(c))
                     for t, c in lc.items() if t in relset}
            out_c = {k: v for k, v in out_c.items() if not f.is_zero(v)}
            add_prod("c:" + a, "b:" + b, out_c)

    unit = {"b:" + s.label: f.one for s in U.ordered() if s.dim == 0}
    B = Dga(f, space, diff, prod, units=[unit]).to_ainf()
    ab_pair = subalgebra_pair(B, ["b:" + s.label for s in U.ordered()])

    if len(W) > 0:
        CW = cochain_dga(W, f)
        images = {}
        for s in U.ordered():
            if s.key in pair.sub_keys:
                images["b:" + s.label] = {W.simplices[s.key].label: f.one}
            else:
                images["b:" + s.label] = {}
        for s in rel:
            images["c:" + s.label] = {}
        restriction = strict_homomorphism(B, CW, images)
    else:
        CW = zero_cochain_algebra(f)
        restriction = strict_homomorphism(
            B, CW, {x: {} for x in space.ids()})
    return ab_pair, restriction


# -- gluing ---------------------------------------------------------------------

def glue_double(pair):
    """W^s = U_+ cup_W U_-: two copies of U with the W-simplices identified.
    Labels: W-side simplices keep the '+' copy; fresh '-' copies are added
    for simplices off W."""
    U = pair.complex
    sub = pair.sub_keys
    simplices = []
    for s in U.ordered():
        simplices.append(Simplex(("+", s.key), s.dim,
                                 [("+", fk) for fk in s.faces], "+" + s.label))
    for s in U.ordered():
        if s.key in sub:
            continue
        faces = [("+", fk) if fk in sub else ("-", fk) for fk in s.faces]
        simplices.append(Simplex(("-", s.key), s.dim, faces, "-" + s.label))
    return SimplicialComplex(simplices)


def sandwich_map(pair, field):
    """The strict dga map C*(W^s) -> B^s,
    a |-> (a|U_+, a|U_-, 0, a|U_+ - a|U_-).

    Returns (map, glued complex, suspension result, pair algebra data).
    """
    from .susp import suspend
    f = field
    ab_pair, _restriction = pair_algebra(pair, f)
    sus = suspend(ab_pair, validate=False)
    Ws = glue_double(pair)
    CWs = cochain_dga(Ws, f)
    sub = pair.sub_keys
    images = {}
    for s in Ws.ordered():
        side, key = s.key
        label = pair.complex.simplices[key].label
        if side == "+" and key in sub:
            images[s.label] = {"+b:" + label: f.one, "-b:" + label: f.one}
        elif side == "+":
            images[s.label] = {"+b:" + label: f.one, "sc:" + label: f.one}
        else:
            images[s.label] = {"-b:" + label: f.one, "sc:" + label: f.sign(1)}
    return strict_homomorphism(CWs, sus.algebra, images), Ws, sus, ab_pair


# -- ready-made pairs -----------------------------------------------------------

def simplex_pair(n, with_boundary=True):
    """(Delta^n, boundary) as a SimplicialPair; vertices 0..n."""
    verts = list(range(n + 1))
    top = [tuple(verts)]
    X = complex_from_vertex_sets(verts, top)
    if not with_boundary:
        return SimplicialPair(X, [k for k in X.simplices])
    sub = [k for k in X.simplices if len(k) <= n]
    return SimplicialPair(X, sub)


def point_pair():
    X = complex_from_vertex_sets([0], [(0,)])
    return SimplicialPair(X, [(0,)])


NAMED_PAIRS = {
    "point": point_pair,
    "delta1": lambda: simplex_pair(1),
    "delta2": lambda: simplex_pair(2),
    "delta3": lambda: simplex_pair(3),
}
