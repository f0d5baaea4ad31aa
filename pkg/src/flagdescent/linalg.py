"""Dense exact matrices and the catalog of named constant matrices.

Entries are usually :class:`GaussianRational`, but any ring element with the
usual operators and a ``conj`` method works for products and sums.  That is
how torus points with Laurent polynomial entries get conjugated.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch, InvalidParams, ParseError
from .exactnum import GaussianRational, I, ONE, ZERO, as_gaussian

__all__ = ["ExactMatrix", "named_matrix", "star", "block_diag"]


def _entry(x):
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return x


class ExactMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols=None, entries=None):
        if cols is None:
            # ExactMatrix([[...], [...]])
            data = [list(r) for r in rows]
            nrows = len(data)
            ncols = len(data[0]) if data else 0
            if any(len(r) != ncols for r in data):
                raise DimensionMismatch("ragged rows")
            flat = [_entry(x) for r in data for x in r]
            rows, cols, entries = nrows, ncols, flat
        else:
            entries = [_entry(x) for x in entries]
            if len(entries) != rows * cols:
                raise DimensionMismatch("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    # construction helpers

    @classmethod
    def identity(cls, n, one=ONE):
        zero = one - one
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, r, c):
        return cls(r, c, [ZERO] * (r * c))

    @classmethod
    def diag(cls, values):
        values = [_entry(v) for v in values]
        n = len(values)
        if n == 0:
            return cls(0, 0, [])
        zero = values[0] - values[0]
        return cls(n, n, [values[i] if i == j else zero for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self):
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    # arithmetic

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return ExactMatrix(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self.matmul(other)
        if getattr(other, "matrix_like", False):
            return NotImplemented
        return ExactMatrix(self.rows, self.cols, [a * other for a in self.entries])

    def __rmul__(self, other):
        return ExactMatrix(self.rows, self.cols, [other * a for a in self.entries])

    def matmul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = [(k, a[i * m + k]) for k in range(m) if a[i * m + k]]
            for j in range(p):
                acc = None
                for k, x in arow:
                    y = b[k * p + j]
                    if y:
                        acc = x * y if acc is None else acc + x * y
                out.append(ZERO if acc is None else acc)
        return ExactMatrix(n, p, out)

    def __pow__(self, k: int):
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        base = self.inverse() if k < 0 else self
        result = ExactMatrix.identity(self.rows)
        for _ in range(abs(k)):
            result = result * base
        return result

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def map(self, f):
        return ExactMatrix(self.rows, self.cols, [f(x) for x in self.entries])

    def transpose(self):
        return ExactMatrix(self.cols, self.rows,
                           [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    T = property(transpose)

    def conj(self):
        return self.map(lambda x: x.conj())

    def star(self):
        return self.conj().transpose()

    def is_diagonal(self):
        return self.is_square() and all(
            not self.entries[i * self.cols + j]
            for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal(self):
        return [self.entries[i * self.cols + i] for i in range(min(self.rows, self.cols))]

    def is_identity(self):
        return self.is_diagonal() and all(x == 1 for x in self.diagonal())

    # field operations (entries must support division)

    def _eliminate(self, augment=None):
        """Gauss-Jordan on a copy; returns (determinant, reduced augment)."""
        if not self.is_square():
            raise DimensionMismatch("determinant/inverse need a square matrix")
        n = self.rows
        a = [list(self.row(i)) for i in range(n)]
        b = [list(augment.row(i)) for i in range(n)] if augment is not None else None
        det = ONE
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c]), None)
            if piv is None:
                return ZERO, None
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                if b is not None:
                    b[c], b[piv] = b[piv], b[c]
                det = -det
            p = a[c][c]
            det = det * p
            inv = 1 / p
            a[c] = [x * inv for x in a[c]]
            if b is not None:
                b[c] = [x * inv for x in b[c]]
            for r in range(n):
                if r != c and a[r][c]:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
                    if b is not None:
                        b[r] = [x - f * y for x, y in zip(b[r], b[c])]
        return det, b

    def det(self):
        if self.rows == 0:
            return ONE
        return self._eliminate()[0]

    def inverse(self):
        n = self.rows
        det, b = self._eliminate(ExactMatrix.identity(n))
        if b is None:
            raise ZeroDivisionError("singular matrix")
        return ExactMatrix(b)

    # serialization

    def to_json(self):
        return [[as_gaussian(x).to_json() for x in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
            raise ParseError("matrix JSON must be an array of arrays")
        return cls([[GaussianRational.from_json(x) for x in r] for r in data])

    def pretty(self):
        cells = [[str(x) for x in self.row(i)] for i in range(self.rows)]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __repr__(self):
        return f"ExactMatrix({self.tolist()!r})"

    __str__ = pretty


def star(g: ExactMatrix) -> ExactMatrix:
    """Conjugate transpose."""
    return g.star()


def block_diag(*blocks):
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = [ZERO] * (n * m)
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[(r0 + i) * m + c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return ExactMatrix(n, m, out)


def _blocks2x2(a, b, c, d):
    top = [list(a.row(i)) + list(b.row(i)) for i in range(a.rows)]
    bottom = [list(c.row(i)) + list(d.row(i)) for i in range(c.rows)]
    return ExactMatrix(top + bottom)


def _S2():
    return ExactMatrix([[0, 1], [1, 0]])


def _g2():
    return ExactMatrix([[1, -I], [-I, 1]])


def _identity(n):
    return ExactMatrix.identity(n)


def _need(cond, msg):
    if not cond:
        raise InvalidParams(msg)


def _S(m):
    _need(m >= 1, "S_m needs m >= 1")
    blocks = [_S2()] * (m // 2)
    if m % 2:
        blocks.append(_identity(1))
    return block_diag(*blocks)


def _S_prime(m):
    _need(m >= 1, "S'_m needs m >= 1")
    if m % 2:
        return block_diag(_identity(1), *([_S2()] * (m // 2)))
    n = m // 2
    z = ExactMatrix.zeros(n, n)
    return _blocks2x2(z, _identity(n), _identity(n), z)


def _g(m):
    # g_{2n-1} = diag(g_2, ..., g_2, 1) and g_{2n} = diag(g_2, ..., g_2)
    _need(m >= 1, "g_m needs m >= 1")
    blocks = [_g2()] * (m // 2)
    if m % 2:
        blocks.append(_identity(1))
    return block_diag(*blocks)


def _g_prime(n):
    _need(n >= 1, "g'_{2n} needs n >= 1")
    e = _identity(n)
    return _blocks2x2(e, I * e, e * Fraction(1, 2), e * (-I / 2))


def _g_pq(p, q):
    _need(p >= 0 and q >= 0 and p + q >= 1, "g_{p,q} needs p, q >= 0 and p + q >= 1")
    g2 = _g2()
    ig2 = I * g2
    if p % 2 == 0 and q % 2 == 0:
        blocks = [g2] * (p // 2) + [ig2] * (q // 2)
    elif p % 2 == 0:
        blocks = [g2] * (p // 2) + [ig2] * ((q - 1) // 2) + [ExactMatrix([[I]])]
    elif q % 2 == 0:
        blocks = [_identity(1)] + [g2] * ((p - 1) // 2) + [ig2] * (q // 2)
    else:
        blocks = [g2] * ((p - 1) // 2) + [ExactMatrix([[1, 1], [I, -I]])] + [ig2] * ((q - 1) // 2)
    return block_diag(*blocks)


def _Ipq(p, q):
    _need(p >= 0 and q >= 0, "I_{p,q} needs p, q >= 0")
    return ExactMatrix.diag([1] * p + [-1] * q)


def _K(n):
    _need(n >= 1, "K_n needs n >= 1")
    return ExactMatrix([[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)])


def _J(n):
    _need(n >= 1, "J_n needs n >= 1")
    z = ExactMatrix.zeros(n, n)
    return _blocks2x2(z, _identity(n), -_identity(n), z)


_CATALOG = {
    "J": (1, _J),
    "S2": (0, _S2),
    "S": (1, _S),
    "S'": (1, _S_prime),
    "w2": (0, lambda: ExactMatrix.diag([1, -1])),
    "K": (1, _K),
    "I": (1, lambda n: (_need(n >= 0, "I_n needs n >= 0"), _identity(n))[1]),
    "Ipq": (2, _Ipq),
    "Ipqpq": (2, lambda p, q: block_diag(_Ipq(p, q), _Ipq(p, q))),
    "g2": (0, _g2),
    "g": (1, _g),
    "g'": (1, _g_prime),
    "gpq": (2, _g_pq),
}


def named_matrix(name: str, params=()) -> ExactMatrix:
    """Return a named constant matrix.

    Tags and parameters: ``J`` (n), ``S2``, ``S`` (m), ``S'`` (m), ``w2``,
    ``K`` (n), ``I`` (n), ``Ipq`` (p, q), ``Ipqpq`` (p, q), ``g2``,
    ``g`` (m, giving g_m for either parity), ``g'`` (n, giving the
    2n x 2n matrix) and ``gpq`` (p, q).
    """
    if isinstance(params, int):
        params = (params,)
    params = tuple(params)
    if name not in _CATALOG:
        raise InvalidParams(f"unknown matrix name {name!r}")
    arity, build = _CATALOG[name]
    if len(params) != arity or not all(isinstance(x, int) for x in params):
        raise InvalidParams(f"{name} takes {arity} integer parameter(s), got {params!r}")
    return build(*params)
