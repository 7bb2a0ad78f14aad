import logging

import numpy as np

from tetra.const import DEFAULT_PRIME
from tetra.modfield.exc import FieldMismatch
from tetra.modfield.exc import ShapeMismatch
from tetra.modfield.field import FieldScalar
from tetra.modfield.field import get_field
from tetra.modfield.field import inverse_mod


logger = logging.getLogger('tetra.modfield')


class FMatrix(object):
    """A dense matrix over F_p.

    Entries are held in a two-dimensional :class:`numpy.ndarray` of
    least nonnegative residues. Instances are treated as immutable;
    every operation returns a new matrix. Matrices with at most
    `small_limit` entries are row reduced directly in numpy; larger
    ones go through :mod:`galois`.
    """
    small_limit = 10000

    def __init__(self, array, p=DEFAULT_PRIME):
        array = np.asarray(array, dtype=np.int64)
        if array.ndim != 2:
            raise ShapeMismatch("expected a two-dimensional array")
        self.field = get_field(p)
        self.p = p
        self.array = np.mod(array, p)
        self.array.setflags(write=False)

    @classmethod
    def from_rows(cls, rows, p=DEFAULT_PRIME, cols=None):
        """Build a matrix from a sequence of integer rows. The column
        count must be given when `rows` is empty.
        """
        rows = [[int(x) % p for x in row] for row in rows]
        if not rows:
            return cls(np.zeros((0, cols or 0), dtype=np.int64), p)
        if cols is not None and any(len(r) != cols for r in rows):
            raise ShapeMismatch("rows do not have %s columns" % cols)
        if len(set(map(len, rows))) > 1:
            raise ShapeMismatch("ragged rows")
        return cls(np.array(rows, dtype=np.int64).reshape(len(rows), len(rows[0])), p)

    @classmethod
    def zeros(cls, rows, cols, p=DEFAULT_PRIME):
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n, p=DEFAULT_PRIME):
        return cls(np.eye(n, dtype=np.int64), p)

    @property
    def rows(self):
        return self.array.shape[0]

    @property
    def cols(self):
        return self.array.shape[1]

    @property
    def shape(self):
        return self.array.shape

    @property
    def entries(self):
        return tuple(FieldScalar(int(x), self.p) for x in self.array.flat)

    def __getitem__(self, index):
        i, j = index
        return FieldScalar(int(self.array[i, j]), self.p)

    def tolist(self):
        return [[int(x) for x in row] for row in self.array]

    def __eq__(self, other):
        return isinstance(other, FMatrix) and self.p == other.p\
            and self.shape == other.shape\
            and bool(np.array_equal(self.array, other.array))

    def __repr__(self):
        return "FMatrix(%sx%s, p=%s)" % (self.rows, self.cols, self.p)

    def _check(self, other):
        if other.p != self.p:
            raise FieldMismatch("%s != %s" % (self.p, other.p))

    def transpose(self):
        return FMatrix(self.array.T.copy(), self.p)

    def hstack(self, other):
        self._check(other)
        if other.rows != self.rows:
            raise ShapeMismatch("row counts differ")
        return FMatrix(np.hstack([self.array, other.array]), self.p)

    def vstack(self, other):
        self._check(other)
        if other.cols != self.cols:
            raise ShapeMismatch("column counts differ")
        return FMatrix(np.vstack([self.array, other.array]), self.p)

    def dot(self, other):
        """Matrix product with another :class:`FMatrix`, or
        matrix-vector product with a sequence of integers.
        """
        if isinstance(other, FMatrix):
            self._check(other)
            if self.cols != other.rows:
                raise ShapeMismatch("%s does not compose with %s" % (self, other))
            return FMatrix(_mulmod(self.array, other.array, self.p), self.p)
        vector = np.array([int(x) % self.p for x in other], dtype=np.int64)
        if vector.shape[0] != self.cols:
            raise ShapeMismatch("vector length %s != %s" % (vector.shape[0], self.cols))
        product = _mulmod(self.array, vector.reshape(-1, 1), self.p)
        return [int(x) for x in product[:, 0]]

    __matmul__ = dot

    def row_reduce(self):
        """Return ``(reduced, rank, kernel_basis)``.

        `reduced` is the reduced row-echelon form with the same shape
        as this matrix (zero rows last). The kernel basis is the
        canonical echelon parametrization: one vector per free column,
        in ascending column order, with a 1 at the free column.
        """
        if self.rows == 0 or self.cols == 0:
            kernel = [tuple(int(i == j) for i in range(self.cols))
                for j in range(self.cols)]
            return self, 0, kernel
        if self.rows * self.cols <= self.small_limit and self.p < 2**31:
            reduced = _row_reduce_small(self.array, self.p)
        else:
            gf = self.field.gf
            reduced = np.asarray(gf(self.array).row_reduce().view(np.ndarray),
                dtype=np.int64)
        pivots = []
        for row in reduced:
            nz = np.flatnonzero(row)
            if nz.size == 0:
                break
            pivots.append(int(nz[0]))
        rank = len(pivots)
        kernel = []
        pivot_set = set(pivots)
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [0] * self.cols
            v[free] = 1
            for i, c in enumerate(pivots):
                v[c] = int(-reduced[i, free]) % self.p
            kernel.append(tuple(v))
        logger.debug("Row reduced %sx%s matrix (rank: %s)",
            self.rows, self.cols, rank)
        return FMatrix(reduced, self.p), rank, kernel

    def pivots(self):
        reduced, rank, _ = self.row_reduce()
        out = []
        for row in reduced.array[:rank]:
            out.append(int(np.flatnonzero(row)[0]))
        return out

    def rank(self):
        return self.row_reduce()[1]

    def kernel(self):
        return self.row_reduce()[2]

    def solve(self, b):
        """Return one solution x of ``self · x = b`` as a list of
        residues, or None if the system is inconsistent.
        """
        column = FMatrix.from_rows([[x] for x in b], self.p, cols=1)\
            if len(b) else FMatrix.zeros(0, 1, self.p)
        reduced, rank, _ = self.hstack(column).row_reduce()
        x = [0] * self.cols
        for row in reduced.array[:rank]:
            c = int(np.flatnonzero(row)[0])
            if c == self.cols:
                return None
            x[c] = int(row[-1])
        return x


def _row_reduce_small(array, p):
    # entries stay below p, so products fit in int64 for p < 2^31
    a = np.array(array, dtype=np.int64)
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = np.mod(a[r] * inverse_mod(int(a[r, c]), p), p)
        factors = a[:, c].copy()
        factors[r] = 0
        a = np.mod(a - np.outer(factors, a[r]), p)
        r += 1
    return a


def _mulmod(a, b, p):
    # int64 is exact while n * (p - 1)^2 fits in 63 bits.
    n = a.shape[1]
    if n == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if n * (p - 1) * (p - 1) < 2**63:
        return np.mod(a @ b, p)
    out = np.mod(a.astype(object) @ b.astype(object), p)
    return out.astype(np.int64)


def row_reduce(matrix):
    """Module-level form of :meth:`FMatrix.row_reduce`."""
    return matrix.row_reduce()
