"""Graded vector spaces over K^m, sparse multilinear maps, Koszul helpers.

Conventions used throughout the package:

* Inputs of a d-linear map are written right-to-left, (a_d, ..., a_1);
  a_1 is the rightmost entry and composes first.  Key tuples store them
  in that display order, so key[-1] is a_1.
* A tuple is composable when target(input k) = source(input k+1), reading
  right-to-left; the output sits in block (source(a_1), target(a_d)).
* The reduced degree of a basis element x is deg(x) - 1; it is the degree
  entering every sign exponent in this package.
* Shifts follow X[k]_r = X_{r+k}, so [-1] raises degrees by 1.

Linear combinations are plain dicts {basis_id: scalar} with no zero values.
"""

from typing import NamedTuple


class CoreError(ValueError):
    pass


class BasisElement(NamedTuple):
    id: str
    degree: int
    source: int
    target: int


class GradedSpace:
    """Finite graded basis with object labels over R = K^m.

    Objects are numbered 1..m.  A basis element with source i and target j
    spans part of the (i, j)-component e_j X e_i.
    """

    def __init__(self, num_objects, basis):
        if num_objects < 1:
            raise CoreError("need at least one object")
        self.num_objects = num_objects
        self.basis = []
        self._by_id = {}
        for el in basis:
            el = BasisElement(*el)
            if el.id in self._by_id:
                raise CoreError(f"duplicate basis id {el.id!r}")
            if not (1 <= el.source <= num_objects and 1 <= el.target <= num_objects):
                raise CoreError(f"object label out of range on {el.id!r}")
            self.basis.append(el)
            self._by_id[el.id] = el

    def __contains__(self, basis_id):
        return basis_id in self._by_id

    def __len__(self):
        return len(self.basis)

    def ids(self):
        return [el.id for el in self.basis]

    def element(self, basis_id):
        try:
            return self._by_id[basis_id]
        except KeyError:
            raise CoreError(f"unknown basis id {basis_id!r}") from None

    def degree(self, basis_id):
        return self.element(basis_id).degree

    def reduced_degree(self, basis_id):
        """deg(x) - 1."""
        return self.element(basis_id).degree - 1

    def source(self, basis_id):
        return self.element(basis_id).source

    def target(self, basis_id):
        return self.element(basis_id).target

    def block_basis(self, degree, source, target):
        """Ordered ids spanning the (degree, source, target) piece."""
        return [el.id for el in self.basis
                if el.degree == degree and el.source == source and el.target == target]

    def degrees_present(self):
        return sorted({el.degree for el in self.basis})

    def blocks_present(self):
        return sorted({(el.source, el.target) for el in self.basis})


def koszul_exponent(space, basis_ids):
    """Sum of reduced degrees; callers add their own +1 offsets."""
    return sum(space.reduced_degree(x) for x in basis_ids)


# -- linear combination helpers ------------------------------------------

def lc_add_into(field, acc, lc, coeff=None):
    """acc += coeff * lc, dropping zeros.  Mutates and returns acc."""
    if coeff is not None and field.is_zero(coeff):
        return acc
    for bid, c in lc.items():
        v = c if coeff is None else field.mul(coeff, c)
        s = field.add(acc.get(bid, field.zero), v)
        if field.is_zero(s):
            acc.pop(bid, None)
        else:
            acc[bid] = s
    return acc


def lc_scale(field, lc, coeff):
    if field.is_zero(coeff):
        return {}
    return {bid: field.mul(coeff, c) for bid, c in lc.items()}


def lc_sub(field, a, b):
    out = dict(a)
    for bid, c in b.items():
        s = field.sub(out.get(bid, field.zero), c)
        if field.is_zero(s):
            out.pop(bid, None)
        else:
            out[bid] = s
    return out


def lc_equal(field, a, b):
    return not lc_sub(field, a, b)


def lc_vector(field, lc, ordered_ids):
    return [lc.get(bid, field.zero) for bid in ordered_ids]


class MultiMap:
    """Sparse d-linear map between graded spaces over a common K^m.

    ``in_spaces`` lists the slot spaces in display order (a_d first);
    passing a single GradedSpace uses it for every slot.  Every stored
    entry must respect the degree rule deg(out) = sum deg(in) + shift and
    the right-to-left composability rule; violations raise at insert time.
    """

    def __init__(self, field, arity, in_spaces, out_space, degree_shift):
        if arity < 1:
            raise CoreError("arity must be >= 1")
        if isinstance(in_spaces, GradedSpace):
            in_spaces = (in_spaces,) * arity
        else:
            in_spaces = tuple(in_spaces)
        if len(in_spaces) != arity:
            raise CoreError("in_spaces length must equal arity")
        m = out_space.num_objects
        if any(sp.num_objects != m for sp in in_spaces):
            raise CoreError("all spaces must share the same object count")
        self.field = field
        self.arity = arity
        self.in_spaces = in_spaces
        self.out_space = out_space
        self.degree_shift = degree_shift
        self.entries = {}
        self._slot_index = None
        self._out_index = None

    def key_is_composable(self, key):
        sps = self.in_spaces
        for i in range(self.arity - 1):
            if sps[i].source(key[i]) != sps[i + 1].target(key[i + 1]):
                return False
        return True

    def key_output_block(self, key):
        return (self.in_spaces[-1].source(key[-1]), self.in_spaces[0].target(key[0]))

    def add_term(self, key, out_id, coeff):
        key = tuple(key)
        if len(key) != self.arity:
            raise CoreError(f"key arity {len(key)} != {self.arity}")
        coeff = self.field.coerce(coeff)
        if self.field.is_zero(coeff):
            return
        for sp, bid in zip(self.in_spaces, key):
            sp.element(bid)
        out = self.out_space.element(out_id)
        total = sum(sp.degree(bid) for sp, bid in zip(self.in_spaces, key))
        if out.degree != total + self.degree_shift:
            raise CoreError(
                f"degree violation: {key} -> {out_id}: "
                f"{out.degree} != {total} + {self.degree_shift}")
        if not self.key_is_composable(key):
            raise CoreError(f"non-composable input tuple {key}")
        src, tgt = self.key_output_block(key)
        if (out.source, out.target) != (src, tgt):
            raise CoreError(
                f"block violation: {key} -> {out_id}: "
                f"output block {(out.source, out.target)} != {(src, tgt)}")
        lc = self.entries.setdefault(key, {})
        s = self.field.add(lc.get(out_id, self.field.zero), coeff)
        if self.field.is_zero(s):
            lc.pop(out_id, None)
            if not lc:
                del self.entries[key]
        else:
            lc[out_id] = s
        self._slot_index = None
        self._out_index = None

    def set_entry(self, key, lc):
        for out_id, c in lc.items():
            self.add_term(key, out_id, c)

    def value(self, key):
        return self.entries.get(tuple(key), {})

    def is_zero(self):
        return not self.entries

    def slot_index(self, pos):
        """keys grouped by the basis id appearing at position pos."""
        if self._slot_index is None:
            self._slot_index = [dict() for _ in range(self.arity)]
            for key in self.entries:
                for i, bid in enumerate(key):
                    self._slot_index[i].setdefault(bid, []).append(key)
        return self._slot_index[pos]

    def out_index(self):
        """(key, coeff) pairs grouped by output basis id."""
        if self._out_index is None:
            self._out_index = {}
            for key, lc in self.entries.items():
                for out_id, c in lc.items():
                    self._out_index.setdefault(out_id, []).append((key, c))
        return self._out_index

    def apply(self, args):
        """Multilinear extension: args is a tuple of linear combinations in
        display order (a_d, ..., a_1).  Non-composable tuples contribute 0.
        """
        if len(args) != self.arity:
            raise CoreError(f"expected {self.arity} arguments, got {len(args)}")
        f = self.field
        out = {}
        stack = [((), f.one)]
        for arg in args:
            nxt = []
            for prefix, coeff in stack:
                for bid, c in arg.items():
                    nxt.append((prefix + (bid,), f.mul(coeff, c)))
            stack = nxt
            if not stack:
                return {}
        for key, coeff in stack:
            lc = self.entries.get(key)
            if lc:
                lc_add_into(f, out, lc, coeff)
        return out

    def copy(self):
        other = MultiMap(self.field, self.arity, self.in_spaces,
                         self.out_space, self.degree_shift)
        other.entries = {k: dict(v) for k, v in self.entries.items()}
        return other

    def scaled(self, coeff):
        other = MultiMap(self.field, self.arity, self.in_spaces,
                         self.out_space, self.degree_shift)
        for key, lc in self.entries.items():
            for out_id, c in lc.items():
                other.add_term(key, out_id, self.field.mul(coeff, c))
        return other

    def __eq__(self, other):
        return (isinstance(other, MultiMap)
                and self.arity == other.arity
                and self.degree_shift == other.degree_shift
                and self.entries == other.entries)


def apply_multimap(f, args):
    """Module-level alias for MultiMap.apply."""
    return f.apply(args)
