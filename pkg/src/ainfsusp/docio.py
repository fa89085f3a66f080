"""JSON documents for algebras, pairs, reports, and simplicial complexes.

Structure constants are serialized as strings ("3/2" over Q, "4" over F_p)
to keep the arithmetic exact.  Serialization is canonical: basis in space
order, entries sorted, so serialize(parse(doc)) is idempotent.
"""

import hashlib
import json

from .core import GradedSpace, MultiMap
from .ainf import AInfAlgebra, CheckError, subalgebra_pair
from .fields import field_from_descriptor
from . import simplicial


class DocumentError(ValueError):
    pass


def algebra_to_doc(alg, sub_ids=None):
    f = alg.field
    doc = {
        "field": f.descriptor(),
        "num_objects": alg.space.num_objects,
        "arity_bound": alg.arity_bound,
        "basis": [],
        "mu": [],
    }
    unit_ids = set()
    units_lc = None
    if alg.units is not None:
        try:
            unit_ids = set(alg.unit_ids())
        except CheckError:
            units_lc = [sorted([[f.show(c), bid] for bid, c in alg.unit_lc(i).items()])
                        for i in range(1, alg.space.num_objects + 1)]
    for el in alg.space.basis:
        entry = {"id": el.id, "degree": el.degree,
                 "source": el.source, "target": el.target}
        if el.id in unit_ids:
            entry["unit"] = True
        doc["basis"].append(entry)
    if units_lc is not None:
        doc["units_lc"] = units_lc
    for d in sorted(alg.maps):
        mm = alg.maps[d]
        for key in sorted(mm.entries):
            outs = sorted([[f.show(c), bid] for bid, c in mm.entries[key].items()],
                          key=lambda t: t[1])
            doc["mu"].append({"arity": d, "inputs": list(key), "outputs": outs})
    if sub_ids is not None:
        doc["subalgebra"] = sorted(sub_ids, key=list(alg.space.ids()).index)
    return doc


def algebra_from_doc(doc):
    """Returns (algebra, pair-or-None)."""
    try:
        field = field_from_descriptor(doc["field"])
        m = int(doc["num_objects"])
        basis = [(b["id"], int(b["degree"]), int(b["source"]), int(b["target"]))
                 for b in doc["basis"]]
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed document: {exc}") from exc
    space = GradedSpace(m, basis)
    unit_flags = [b["id"] for b in doc["basis"] if b.get("unit")]
    units = None
    if "units_lc" in doc:
        units = [{bid: field.parse(c) for c, bid in entry}
                 for entry in doc["units_lc"]]
    elif unit_flags:
        by_obj = {}
        for bid in unit_flags:
            by_obj[space.source(bid)] = bid
        if sorted(by_obj) != list(range(1, m + 1)):
            raise DocumentError("unit flags must mark one unit per object")
        units = [by_obj[i] for i in range(1, m + 1)]
    maps = {}
    arities = [int(e["arity"]) for e in doc.get("mu", [])]
    bound = int(doc.get("arity_bound", max(arities, default=1)))
    for e in doc.get("mu", []):
        d = int(e["arity"])
        key = tuple(e["inputs"])
        if len(key) != d:
            raise DocumentError(f"entry at {key} has {len(key)} inputs, arity {d}")
        mm = maps.setdefault(d, MultiMap(field, d, space, space, 2 - d))
        for c, bid in e["outputs"]:
            mm.add_term(key, bid, field.parse(c))
    alg = AInfAlgebra(field, space, maps, bound, units=units)
    pair = None
    if "subalgebra" in doc:
        pair = subalgebra_pair(alg, list(doc["subalgebra"]))
    return alg, pair


def load_algebra(path):
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from exc
    return algebra_from_doc(doc)


def save_doc(doc, path):
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")


def canonical_digest(obj):
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


# -- simplicial documents -------------------------------------------------------

def complex_from_doc(doc):
    if "delta_simplices" in doc:
        simplices = []
        for c in doc["delta_simplices"]:
            simplices.append(simplicial.Simplex(
                c["label"], int(c["dim"]), [str(x) for x in c.get("faces", [])],
                c["label"]))
        # keys are labels in this format
        return simplicial.SimplicialComplex(simplices)
    try:
        return simplicial.complex_from_vertex_sets(
            doc["vertices"], [tuple(s) for s in doc["simplices"]])
    except KeyError as exc:
        raise DocumentError(f"malformed complex document: {exc}") from exc


def pair_from_doc(doc):
    X = complex_from_doc(doc)
    if "subcomplex" not in doc:
        raise DocumentError("pair document needs a 'subcomplex' entry")
    if "delta_simplices" in doc:
        keys = [str(s) for s in doc["subcomplex"]]
        return simplicial.SimplicialPair(X, keys)
    order = {v: i for i, v in enumerate(doc["vertices"])}
    keys = set()
    for vs in doc["subcomplex"]:
        key = tuple(sorted(set(vs), key=lambda v: order[v]))
        if not X.has_key(key):
            raise DocumentError(f"subcomplex simplex {vs} not in the complex")
        keys.add(key)
    frontier = list(keys)
    while frontier:
        k = frontier.pop()
        for fk in X.simplices[k].faces:
            if fk not in keys:
                keys.add(fk)
                frontier.append(fk)
    return simplicial.SimplicialPair(X, keys)


def complex_to_doc(X):
    return {"delta_simplices": [
        {"label": s.label, "dim": s.dim,
         "faces": [X.simplices[fk].label for fk in s.faces]}
        for s in X.ordered()]}
