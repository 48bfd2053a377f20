"""Dense linear algebra over GF(p) on int64 numpy arrays.

p stays below 2^16, so products plus sums of two residues fit comfortably in
int64 and every routine reduces eagerly after each elimination step.
"""

import numpy as np


def as_matrix(rows, ncols):
    m = np.array(rows, dtype=np.int64).reshape(-1, ncols)
    return m


def rref(mat, p):
    """Reduced row echelon form mod p. Returns (matrix, pivot column list)."""
    m = np.array(mat, dtype=np.int64) % p
    if m.size == 0:
        return m.reshape(m.shape), []
    nrows, ncols = m.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        rows = np.nonzero(m[r:, c])[0]
        if rows.size == 0:
            continue
        i = r + rows[0]
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        col = m[:, c].copy()
        col[r] = 0
        nz = np.nonzero(col)[0]
        if nz.size:
            m[nz] = (m[nz] - np.outer(col[nz], m[r])) % p
        pivots.append(c)
        r += 1
    return m[: len(pivots)], pivots


def rank(mat, p):
    return len(rref(mat, p)[1])


def nullspace(mat, p):
    """Rows spanning the right kernel, in reduced echelon form over free columns."""
    m = np.asarray(mat, dtype=np.int64)
    ncols = m.shape[1] if m.ndim == 2 else len(m)
    red, pivots = rref(m, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-red[r, c]) % p
    return basis


def row_space_contains(red, pivots, vec, p):
    """Membership test against a matrix already in rref."""
    v = np.array(vec, dtype=np.int64) % p
    for r, c in enumerate(pivots):
        if v[c]:
            v = (v - v[c] * red[r]) % p
    return not v.any()

def residual(red, pivots, vec, p):
    """Reduce vec modulo an rref row space; zero iff contained."""
    v = np.array(vec, dtype=np.int64) % p
    for r, c in enumerate(pivots):
        if v[c]:
            v = (v - v[c] * red[r]) % p
    return v


def inverse(mat, p):
    m = np.asarray(mat, dtype=np.int64) % p
    n = m.shape[0]
    aug = np.concatenate([m, np.eye(n, dtype=np.int64)], axis=1)
    red, pivots = rref(aug, p)
    assert pivots[:n] == list(range(n)), "matrix not invertible mod %d" % p
    return red[:, n:]


class IncrementalSpan:
    """Growable row space with online membership; rows kept pivot-normalized."""

    def __init__(self, ncols, p, seed_matrix=None, seed_pivots=None):
        self.ncols = ncols
        self.p = p
        self.rows = {}
        if seed_matrix is not None:
            for r, c in enumerate(seed_pivots):
                self.rows[c] = np.array(seed_matrix[r], dtype=np.int64) % p

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        v = np.array(vec, dtype=np.int64) % self.p
        for c in sorted(self.rows):
            if v[c]:
                v = (v - v[c] * self.rows[c]) % self.p
        return v

    def add(self, vec):
        """Insert vec; returns True when the rank grew."""
        v = self.reduce(vec)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = v * pow(int(v[c]), -1, self.p) % self.p
        self.rows[c] = v
        return True


def intersect_row_spaces(a, b, p):
    """Rows spanning rowspace(a) meet rowspace(b)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64)
    stacked = np.concatenate([a, b], axis=0)
    ker = nullspace(stacked.T, p)
    combos = ker[:, : a.shape[0]] @ a % p
    red, pivots = rref(combos, p)
    return red
