"""Exact dense linear algebra over a Field: RREF, rank, kernels, quotients.

Matrices are lists of row vectors (lists of field scalars).  Everything is
small and exact; no pivoting heuristics needed.
"""


def rref(field, rows):
    """Reduced row echelon form.  Returns (rows, pivot_columns); zero rows
    are dropped."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    h = 0
    for j in range(ncols):
        pivot_row = None
        for i in range(h, len(rows)):
            if not field.is_zero(rows[i][j]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[h], rows[pivot_row] = rows[pivot_row], rows[h]
        inv = field.inv(rows[h][j])
        rows[h] = [field.mul(inv, x) for x in rows[h]]
        for i in range(len(rows)):
            if i != h and not field.is_zero(rows[i][j]):
                c = rows[i][j]
                rows[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(rows[i], rows[h])]
        pivots.append(j)
        h += 1
        if h == len(rows):
            break
    return rows[:h], pivots


def rank(field, rows):
    return len(rref(field, rows)[0])


class Subspace:
    """Row span of a matrix, kept in RREF for membership and coordinates."""

    def __init__(self, field, ncols, rows=()):
        self.field = field
        self.ncols = ncols
        self.rows, self.pivots = rref(field, rows)

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        """Eliminate the pivot coordinates of vec; returns the remainder."""
        vec = list(vec)
        f = self.field
        for row, j in zip(self.rows, self.pivots):
            c = vec[j]
            if not f.is_zero(c):
                vec = [f.sub(x, f.mul(c, y)) for x, y in zip(vec, row)]
        return vec

    def contains(self, vec):
        return all(self.field.is_zero(x) for x in self.reduce(vec))

    def coords(self, vec):
        """Coefficients of vec on self.rows, or None if vec is outside."""
        f = self.field
        vec = list(vec)
        cs = []
        for row, j in zip(self.rows, self.pivots):
            c = vec[j]
            cs.append(c)
            if not f.is_zero(c):
                vec = [f.sub(x, f.mul(c, y)) for x, y in zip(vec, row)]
        if any(not f.is_zero(x) for x in vec):
            return None
        return cs


def nullspace(field, rows, ncols):
    """Basis of {v : M v = 0} for the matrix with the given rows."""
    R, pivots = rref(field, rows)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        v = [field.zero] * ncols
        v[j] = field.one
        for row, pj in zip(R, pivots):
            v[pj] = field.neg(row[j])
        basis.append(v)
    return basis


def quotient_basis(field, ncols, sub_rows, amb_rows):
    """Vectors of amb_rows reduced mod sub_rows, independent, spanning the
    quotient (ambient span / sub span).  sub span must lie in amb span."""
    sub = Subspace(field, ncols, sub_rows)
    reduced = []
    seen = Subspace(field, ncols, sub_rows)
    for v in amb_rows:
        r = seen.reduce(v)
        if any(not field.is_zero(x) for x in r):
            reduced.append(sub.reduce(v))
            seen = Subspace(field, ncols, seen.rows + [r])
    return reduced


def solve_columns(field, cols, b):
    """Solve sum_i x_i cols[i] = b; returns x or None if inconsistent.
    Free variables are set to zero."""
    k = len(cols)
    n = len(b)
    rows = [[cols[j][i] for j in range(k)] + [b[i]] for i in range(n)]
    R, pivots = rref(field, rows)
    x = [field.zero] * k
    for row, pj in zip(R, pivots):
        if pj == k:
            return None
        x[pj] = row[k]
    return x


def invert(field, rows):
    """Inverse of a square matrix, or None if singular."""
    n = len(rows)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)]
           for i, r in enumerate(rows)]
    R, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)) or len(R) != n:
        return None
    return [row[n:] for row in R]
