"""
    :class:`DenseMatrix`: row-major storage of field scalars.
    :class:`BlockView`: a rectangular window into a parent matrix.

Plus the elementwise helpers, norms, the error metric and the text
load/store format used by the benchmark CLI.
"""

import logging

from .exceptions import DimensionError, ScalarDomainError
from .fields import Field, get_field

logger = logging.getLogger(__name__)


class _MatrixLike:
    """Shared read helpers for matrices and views"""

    rows = 0
    cols = 0
    field = None

    @property
    def shape(self):
        return (self.rows, self.cols)

    def row(self, i):
        raise NotImplementedError('row method not implemented')

    def iter_rows(self):
        for i in range(self.rows):
            yield self.row(i)

    def as_dense(self) -> 'DenseMatrix':
        return DenseMatrix([list(r) for r in self.iter_rows()], self.field)

    def view(self, row_offset, col_offset, rows, cols) -> 'BlockView':
        raise NotImplementedError('view method not implemented')

    def __eq__(self, other):
        if not isinstance(other, _MatrixLike) or self.shape != other.shape:
            return False
        return all(ra == rb for ra, rb in zip(self.iter_rows(), other.iter_rows()))

    __hash__ = None


class DenseMatrix(_MatrixLike):

    def __init__(self, data, field: Field):
        """
        :param list data: list of row lists, all of equal length
        :param Field field: scalar field of every element
        """
        if not data or not data[0]:
            raise DimensionError('a matrix needs at least one row and one column', code='empty')
        cols = len(data[0])
        if any(len(r) != cols for r in data):
            raise DimensionError('rows have different lengths', code='ragged')
        self.data = data
        self.rows = len(data)
        self.cols = cols
        self.field = field

    @classmethod
    def zeros(cls, rows, cols, field: Field) -> 'DenseMatrix':
        zero = field.zero()
        return cls([[zero] * cols for _ in range(rows)], field)

    @classmethod
    def identity(cls, n, field: Field) -> 'DenseMatrix':
        m = cls.zeros(n, n, field)
        one = field.one()
        for i in range(n):
            m.data[i][i] = one
        return m

    @classmethod
    def from_rows(cls, rows, field: Field) -> 'DenseMatrix':
        """Build from ints, floats or decimal strings, converted exactly by the field"""
        def convert(v):
            if isinstance(v, str):
                return field.from_string(v)
            if isinstance(v, int):
                return field.from_int(v)
            if isinstance(v, float):
                return field.from_float(v)
            return v
        return cls([[convert(v) for v in r] for r in rows], field)

    def row(self, i):
        return self.data[i]

    def __getitem__(self, index):
        i, j = index
        return self.data[i][j]

    def __setitem__(self, index, value):
        i, j = index
        self.data[i][j] = value

    def copy(self) -> 'DenseMatrix':
        return DenseMatrix([list(r) for r in self.data], self.field)

    def as_dense(self) -> 'DenseMatrix':
        return self

    def view(self, row_offset, col_offset, rows, cols) -> 'BlockView':
        return BlockView(self, row_offset, col_offset, rows, cols)

    def pad(self, rows, cols) -> 'DenseMatrix':
        """Zero padded temporary of shape (rows, cols) with self in the top left corner"""
        if rows < self.rows or cols < self.cols:
            raise DimensionError('cannot pad {}x{} down to {}x{}'.format(self.rows, self.cols, rows, cols),
                                 code='bad_pad')
        zero = self.field.zero()
        extra = cols - self.cols
        data = [r + [zero] * extra for r in self.data]
        data.extend([zero] * cols for _ in range(rows - self.rows))
        return DenseMatrix(data, self.field)

    def crop(self, rows, cols) -> 'DenseMatrix':
        return DenseMatrix([r[:cols] for r in self.data[:rows]], self.field)

    def __repr__(self):
        return 'DenseMatrix({}x{}, {})'.format(self.rows, self.cols, self.field.name)


class BlockView(_MatrixLike):
    """
    Window [row_offset:row_offset+rows, col_offset:col_offset+cols] of a parent
    DenseMatrix. Reads and writes go straight to the parent.
    """

    def __init__(self, parent: DenseMatrix, row_offset, col_offset, rows, cols):
        if rows < 1 or cols < 1 or row_offset < 0 or col_offset < 0 \
                or row_offset + rows > parent.rows or col_offset + cols > parent.cols:
            raise DimensionError('view ({}, {}, {}x{}) outside parent {}x{}'.format(
                row_offset, col_offset, rows, cols, parent.rows, parent.cols), code='bad_view')
        self.parent = parent
        self.row_offset = row_offset
        self.col_offset = col_offset
        self.rows = rows
        self.cols = cols
        self.field = parent.field

    def row(self, i):
        c0 = self.col_offset
        return self.parent.data[self.row_offset + i][c0:c0 + self.cols]

    def __getitem__(self, index):
        i, j = index
        return self.parent.data[self.row_offset + i][self.col_offset + j]

    def __setitem__(self, index, value):
        i, j = index
        self.parent.data[self.row_offset + i][self.col_offset + j] = value

    def view(self, row_offset, col_offset, rows, cols) -> 'BlockView':
        return BlockView(self.parent, self.row_offset + row_offset, self.col_offset + col_offset, rows, cols)

    def assign(self, source: _MatrixLike):
        """Overwrite the window with the elements of `source`"""
        check_same_shape(self, source, 'assign')
        c0 = self.col_offset
        for i, r in enumerate(source.iter_rows()):
            self.parent.data[self.row_offset + i][c0:c0 + self.cols] = r

    def __repr__(self):
        return 'BlockView({}x{} at ({}, {}) of {!r})'.format(
            self.rows, self.cols, self.row_offset, self.col_offset, self.parent)


def check_same_shape(a, b, op_name):
    if a.shape != b.shape:
        raise DimensionError('{}: shapes {} and {} do not match'.format(op_name, a.shape, b.shape),
                             code='shape_mismatch')


def check_conforming(a, b, op_name):
    if a.cols != b.rows:
        raise DimensionError('{}: inner dimensions {}x{} and {}x{} do not agree'.format(
            op_name, a.rows, a.cols, b.rows, b.cols), code='shape_mismatch')


def mat_add(a, b) -> DenseMatrix:
    check_same_shape(a, b, 'mat_add')
    return DenseMatrix([[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a.iter_rows(), b.iter_rows())],
                       a.field)


def mat_sub(a, b) -> DenseMatrix:
    check_same_shape(a, b, 'mat_sub')
    return DenseMatrix([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a.iter_rows(), b.iter_rows())],
                       a.field)


def mat_vec(a, x):
    """a @ x for a list x, left-to-right sums"""
    if a.cols != len(x):
        raise DimensionError('mat_vec: {}x{} matrix and vector of length {}'.format(a.rows, a.cols, len(x)),
                             code='shape_mismatch')
    zero = a.field.zero()
    out = []
    for r in a.iter_rows():
        acc = zero
        for aik, xk in zip(r, x):
            acc = acc + aik * xk
        out.append(acc)
    return out


def norm_1(a):
    """Maximum absolute column sum"""
    field = a.field
    sums = [field.zero()] * a.cols
    for r in a.iter_rows():
        sums = [s + abs(v) for s, v in zip(sums, r)]
    return max(sums)


def norm_inf(a):
    """Maximum absolute row sum"""
    zero = a.field.zero()
    best = zero
    for r in a.iter_rows():
        s = zero
        for v in r:
            s = s + abs(v)
        if s > best:
            best = s
    return best


def vector_norm_inf(x, field: Field):
    best = field.zero()
    for v in x:
        if abs(v) > best:
            best = abs(v)
    return best


def max_componentwise_rel_error(x, ref):
    """
    max |x - r| / |r| over all elements, where an element with r == 0 is
    measured against ||ref||_inf instead.
    """
    check_same_shape(x, ref, 'max_componentwise_rel_error')
    field = ref.field
    scale = norm_inf(ref)
    worst = field.zero()
    for rx, rr in zip(x.iter_rows(), ref.iter_rows()):
        for xv, rv in zip(rx, rr):
            diff = abs(xv - rv)
            if rv:
                err = diff / abs(rv)
            elif scale:
                err = diff / scale
            elif diff:
                raise ScalarDomainError('reference is entirely zero but the result is not',
                                        code='zero_reference')
            else:
                continue
            if err > worst:
                worst = err
    return worst


def max_scaled_error(x, ref):
    """max |x - r| over all elements divided by max |r|; zero when both are zero"""
    check_same_shape(x, ref, 'max_scaled_error')
    field = ref.field
    worst = field.zero()
    scale = field.zero()
    for rx, rr in zip(x.iter_rows(), ref.iter_rows()):
        for xv, rv in zip(rx, rr):
            diff = abs(xv - rv)
            if diff > worst:
                worst = diff
            if abs(rv) > scale:
                scale = abs(rv)
    if not scale:
        if worst:
            raise ScalarDomainError('reference is entirely zero but the result is not', code='zero_reference')
        return worst
    return worst / scale


def column_matrix(values, field: Field) -> DenseMatrix:
    return DenseMatrix([[v] for v in values], field)


def store_matrix(a, path):
    """
    Text format: a header line `rows cols precision`, then one row per line of
    space separated decimal strings with round-trip digits.
    """
    field = a.field
    with open(path, 'w') as f:
        f.write('{} {} {}\n'.format(a.rows, a.cols, field.name))
        for r in a.iter_rows():
            f.write(' '.join(field.to_string(v) for v in r))
            f.write('\n')
    logger.debug('stored %dx%d %s matrix to %s', a.rows, a.cols, field.name, path)


def load_matrix(path, field: Field = None) -> DenseMatrix:
    with open(path) as f:
        header = f.readline().split()
        if len(header) != 3:
            raise DimensionError('{}: header must be "rows cols precision"'.format(path), code='bad_header')
        rows, cols = int(header[0]), int(header[1])
        if field is None:
            field = get_field(header[2])
        data = []
        for line in f:
            if not line.strip():
                continue
            data.append([field.from_string(t) for t in line.split()])
    if len(data) != rows or any(len(r) != cols for r in data):
        raise DimensionError('{}: body does not match header {}x{}'.format(path, rows, cols), code='bad_body')
    logger.debug('loaded %dx%d %s matrix from %s', rows, cols, field.name, path)
    return DenseMatrix(data, field)
