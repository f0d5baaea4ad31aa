"""The standard forms of classical groups over Z[1/2] and their split models.

A form is described through its k'-points, k' = Z[1/2, i] (or Q(i) for the
``Gq_demo`` family).  Groups that are defined as subgroups of a Weil
restriction store an element ``a (x) 1 + b (x) i`` as a :class:`ResMatrix`
holding the pair ``(a, b)``.  Every form comes with a conjugator ``C`` and
the split isomorphism ``x -> C x C^{-1}`` (applied to ``a + i b`` for the
restriction type), which carries the fundamental Cartan subgroup onto the
diagonal torus of the split target group.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import DimensionMismatch, InvalidParams, ParseError, UnknownFamily
from .exactnum import I, ONE, ZERO, GaussianRational, as_gaussian, classify_scalar
from .laurent import LaurentPoly
from .linalg import ExactMatrix, block_diag, named_matrix
from .rootdata import SplitTarget

__all__ = [
    "FAMILIES",
    "ResMatrix",
    "StandardForm",
    "SplitIso",
    "Torus",
    "form_data",
    "form_tag",
    "fundamental_torus",
    "galois_original",
    "membership",
    "parse_form",
    "split_form_matrix",
    "split_iso",
    "split_membership",
    "twisted_galois",
]

FAMILIES = (
    "GL_odd", "GL_even", "U(p,q)", "U*(2n)", "SO(2p,2q+1)", "Sp_n", "Sp(p,q)",
    "SO(2p,2q)", "SO(2p+1,2q+1)", "SO*(4n)", "SO*(4n+2)", "Gq_demo",
)


class ResMatrix:
    """The element ``a (x) 1 + b (x) i`` of a matrix ring over k' (x)_k k'.

    Under k' (x) k' = k' x k' (x (x) c -> (xc, x c-bar)) it becomes the pair
    ``P = a + i b`` and ``Q = a - i b``; products and inverses are computed
    on that pair.
    """

    __slots__ = ("a", "b")
    matrix_like = True

    def __init__(self, a: ExactMatrix, b: ExactMatrix | None = None):
        self.a = a
        self.b = b if b is not None else ExactMatrix.zeros(a.rows, a.cols)

    @classmethod
    def from_pair(cls, p: ExactMatrix, q: ExactMatrix):
        half = GaussianRational(Fraction(1, 2))
        return cls((p + q) * half, (p - q) * (1 / (2 * I)))

    @property
    def P(self):
        return self.a + self.b * I

    @property
    def Q(self):
        return self.a - self.b * I

    @property
    def size(self):
        return self.a.rows

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            other = ResMatrix(other)
        return ResMatrix(self.a * other.a - self.b * other.b, self.a * other.b + self.b * other.a)

    def __rmul__(self, other):
        return ResMatrix(other) * self

    def __eq__(self, other):
        if isinstance(other, ExactMatrix):
            other = ResMatrix(other)
        if not isinstance(other, ResMatrix):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def transpose(self):
        return ResMatrix(self.a.transpose(), self.b.transpose())

    def bar(self):
        """The involution induced by conjugation of the second factor."""
        return ResMatrix(self.a, -self.b)

    def star(self):
        return self.bar().transpose()

    def galois(self):
        """Conjugation of the coefficient ring k' (the first factor)."""
        return ResMatrix(self.a.conj(), self.b.conj())

    def inverse(self):
        return ResMatrix.from_pair(self.P.inverse(), self.Q.inverse())

    def det(self):
        return ResMatrix.from_pair(ExactMatrix([[self.P.det()]]), ExactMatrix([[self.Q.det()]]))

    def is_identity(self):
        return self.a.is_identity() and all(not x for x in self.b.entries)

    def entries(self):
        return self.a.entries + self.b.entries

    def to_json(self):
        return {"a": self.a.to_json(), "b": self.b.to_json()}

    def __repr__(self):
        return f"ResMatrix(a={self.a!r}, b={self.b!r})"


@dataclass(frozen=True)
class StandardForm:
    family: str
    params: tuple

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnknownFamily(f"unknown family {self.family!r}")
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        form_data(self)  # validates parameters

    @property
    def data(self):
        return form_data(self)

    @property
    def target(self) -> SplitTarget:
        return self.data.target

    @property
    def rank(self) -> int:
        return self.data.target.rank

    @property
    def n(self) -> int:
        return self.data.n

    def label(self) -> str:
        return self.data.label

    def __str__(self):
        return self.label()


@dataclass(frozen=True)
class FormData:
    label: str
    n: int
    size: int
    target: SplitTarget
    restriction: bool
    over_field: bool  # base is Q rather than Z[1/2]
    conjugator: ExactMatrix
    conjugator_inv: ExactMatrix
    theta: Callable | None  # P -> Q for restriction types
    equations: Callable  # element -> bool
    torus: Callable  # coords -> element
    w: object  # ExactMatrix or ResMatrix
    cochar_basis: tuple


# helpers -----------------------------------------------------------------

def _ring(x):
    return x if isinstance(x, LaurentPoly) else as_gaussian(x)


def _zero_like(x):
    return x - x


def _one_like(x):
    return x / x


def _place(size, blocks, filler):
    """Matrix with the given square blocks on consecutive diagonal positions."""
    zero = _zero_like(filler)
    out = [[zero] * size for _ in range(size)]
    pos = 0
    for blk in blocks:
        k = len(blk)
        for i in range(k):
            for j in range(k):
                out[pos + i][pos + j] = blk[i][j]
        pos += k
    if pos != size:
        raise AssertionError("blocks do not fill the matrix")
    return ExactMatrix(out)


def _mu2(a):
    """g_2 diag(a, a^-1) g_2^-1, the rotation block attached to a."""
    c = (a + 1 / a) * GaussianRational(Fraction(1, 2))
    s = (a - 1 / a) * (1 / (2 * I))
    return [[c, -s], [s, c]]


def _rotation_blocks(coords):
    # conjugation by g_2 (or i g_2) sends mu2(1/a) to diag(a, 1/a)
    return [_mu2(1 / a) for a in coords]


def _paired_mu2(coords):
    """Block matrix [[diag c, -diag s], [diag s, diag c]] on coordinates (i, m+i)."""
    m = len(coords)
    zero = _zero_like(coords[0])
    out = [[zero] * (2 * m) for _ in range(2 * m)]
    for i, a in enumerate(coords):
        blk = _mu2(a)
        for r, rr in enumerate((i, m + i)):
            for c, cc in enumerate((i, m + i)):
                out[rr][cc] = blk[r][c]
    return ExactMatrix(out)


def _gl_block(x, y):
    # forward image diag(x, y) under conjugation by g_2
    alpha = (x + y) * GaussianRational(Fraction(1, 2))
    beta = (y - x) * (1 / (2 * I))
    return [[alpha, -beta], [beta, alpha]]


def _diag(values):
    return ExactMatrix.diag(values)


def _normalized_conjugator(c0: ExactMatrix, original_form: ExactMatrix, target_form: ExactMatrix):
    """Rescale ``c0`` by a diagonal matrix so forms match exactly.

    With F = c0^{-T} B c0^{-1}, returns D c0 such that the image of the
    group preserving B preserves ``target_form``.  D commutes with the
    diagonal torus, so character computations are unaffected.
    """
    cinv = c0.inverse()
    f = cinv.transpose() * original_form * cinv
    n = f.rows
    d = [None] * n
    for i in range(n):
        for j in range(n):
            s = target_form[i, j]
            if not s:
                continue
            if i == j:
                if f[i, i] != s:
                    raise AssertionError("diagonal form entry needs a square root")
                d[i] = d[i] or ONE
            elif d[i] is None and d[j] is None:
                d[i] = f[i, j] / s
                d[j] = ONE
    d = [x if x is not None else ONE for x in d]
    dm = ExactMatrix.diag(d)
    dinv = ExactMatrix.diag([1 / x for x in d])
    if dinv * f * dinv != target_form:
        raise AssertionError("conjugator cannot be normalized onto the target form")
    return dm * c0


def _dyadic_entries(entries):
    return all(classify_scalar(x)["in_dyadic_gaussian"] for x in entries)


def _unit(x):
    return classify_scalar(x)["is_unit_of_dyadic_gaussian"]


def _blocks3(size_list, blocks):
    """Assemble a block matrix from a dict {(r, c): ExactMatrix}."""
    n = sum(size_list)
    out = [[ZERO] * n for _ in range(n)]
    offs = [sum(size_list[:k]) for k in range(len(size_list))]
    for (r, c), m in blocks.items():
        for i in range(m.rows):
            for j in range(m.cols):
                out[offs[r] + i][offs[c] + j] = m[i, j]
    return ExactMatrix(out)


def _eps(rank, i, j=None):
    v = [0] * rank
    v[i] += 1
    if j is not None:
        v[j] -= 1
    return tuple(v)


# family builders ------------------------------------------------------------

def _gl(m, odd):
    n = m // 2
    c = named_matrix("g", m)
    cinv = c.inverse()

    def torus(coords):
        blocks = [_gl_block(coords[2 * i], coords[2 * i + 1]) for i in range(n)]
        if odd:
            blocks.append([[coords[-1]]])
        return _place(m, blocks, coords[0])

    def equations(g):
        return g.det() != 0

    label = f"GL_{m}"
    return dict(label=label, n=n, size=m, target=SplitTarget("GL", m), restriction=False,
                conjugator=c, conjugator_inv=cinv, theta=None, equations=equations,
                torus=torus, w=named_matrix("S", m),
                cochar_basis=tuple(_eps(m, 2 * i, 2 * i + 1) for i in range(n)))


def _upq(p, q):
    if p < q:
        raise InvalidParams("U(p,q) needs p >= q; swap the signature")
    if q < 0 or p + q < 1:
        raise InvalidParams("U(p,q) needs p + q >= 1")
    n = p + q
    ipq = named_matrix("Ipq", (p, q))

    def theta(P):
        return ipq * P.transpose().inverse() * ipq

    def torus(coords):
        return ResMatrix.from_pair(_diag(coords), _diag([1 / a for a in coords]))

    def equations(g):
        return g.star() * ipq * g == ipq

    blocks = {}
    sizes = [q, p - q, q]
    if q:
        k = named_matrix("K", q) * I
        blocks[(0, 2)] = k
        blocks[(2, 0)] = k
    if p - q:
        blocks[(1, 1)] = named_matrix("K", p - q)
    sizes_nz = sizes
    w = _blocks3(sizes_nz, blocks)
    ident = ExactMatrix.identity(n)
    return dict(label=f"U({p},{q})", n=n, size=n, target=SplitTarget("GL", n), restriction=True,
                conjugator=ident, conjugator_inv=ident, theta=theta, equations=equations,
                torus=torus, w=ResMatrix(w),
                cochar_basis=tuple(_eps(n, i) for i in range(n)))


def _ustar(n):
    if n < 1:
        raise InvalidParams("U*(2n) needs n >= 1")
    j = named_matrix("J", n)
    jinv = j.inverse()

    def theta(P):
        return j * P * jinv

    def torus(coords):
        swapped = list(coords[n:]) + list(coords[:n])
        return ResMatrix.from_pair(_diag(coords), _diag(swapped))

    def equations(g):
        return g.bar() * j == j * g

    ident = ExactMatrix.identity(2 * n)
    return dict(label=f"U*({2 * n})", n=n, size=2 * n, target=SplitTarget("GL", 2 * n),
                restriction=True, conjugator=ident, conjugator_inv=ident, theta=theta,
                equations=equations, torus=torus, w=ResMatrix(j),
                cochar_basis=tuple(_eps(2 * n, i, i + n) for i in range(n)))


def _orthogonal_equations(form, det_one=True):
    def equations(g):
        if g.transpose() * form * g != form:
            return False
        return not det_one or g.det() == 1
    return equations


def _so_even_odd(p, q):
    # SO(2p, 2q+1)
    if p < 0 or q < 0:
        raise InvalidParams("SO(2p,2q+1) needs p, q >= 0")
    n = p + q
    m = 2 * n + 1
    ipq = named_matrix("Ipq", (2 * p, 2 * q + 1))
    target = SplitTarget("SO", m)
    c = _normalized_conjugator(named_matrix("gpq", (2 * p, 2 * q + 1)), ipq, named_matrix("S", m))

    def torus(coords):
        one = _one_like(coords[0]) if coords else ONE
        return _place(m, _rotation_blocks(coords) + [[[one]]], one)

    w = _diag([1, -1] * n + [(-1) ** (p + q)])
    return dict(label=f"SO({2 * p},{2 * q + 1})", n=n, size=m, target=target, restriction=False,
                conjugator=c, conjugator_inv=c.inverse(), theta=None,
                equations=_orthogonal_equations(ipq), torus=torus, w=w,
                cochar_basis=tuple(_eps(n, i) for i in range(n)))


def _sp(n):
    if n < 1:
        raise InvalidParams("Sp_n needs n >= 1")
    j = named_matrix("J", n)
    c = _normalized_conjugator(named_matrix("g'", n), j, j)

    def equations(g):
        return g.transpose() * j * g == j

    return dict(label=f"Sp_{n}", n=n, size=2 * n, target=SplitTarget("Sp", 2 * n),
                restriction=False, conjugator=c, conjugator_inv=c.inverse(), theta=None,
                equations=equations, torus=_paired_mu2, w=named_matrix("S'", 2 * n) * I,
                cochar_basis=tuple(_eps(n, i) for i in range(n)))


def _sppq(p, q):
    if p < 0 or q < 0 or p + q < 1:
        raise InvalidParams("Sp(p,q) needs p, q >= 0 and p + q >= 1")
    n = p + q
    j = named_matrix("J", n)
    jinv = j.inverse()
    i4 = named_matrix("Ipqpq", (p, q))
    c = named_matrix("Ipq", (n + p, q))

    def theta(P):
        return i4 * P.transpose().inverse() * i4

    def torus(coords):
        inv = [1 / a for a in coords]
        return ResMatrix.from_pair(_diag(list(coords) + inv), _diag(inv + list(coords)))

    def equations(g):
        if g.bar() * j != j * g:
            return False
        if not g.det().is_identity():
            return False
        return g.star() * i4 * g == i4

    del jinv
    return dict(label=f"Sp({p},{q})", n=n, size=2 * n, target=SplitTarget("Sp", 2 * n),
                restriction=True, conjugator=c, conjugator_inv=c, theta=theta,
                equations=equations, torus=torus, w=ResMatrix(j),
                cochar_basis=tuple(_eps(n, i) for i in range(n)))


def _so_even_even(p, q):
    # SO(2p, 2q)
    if p < 0 or q < 0 or p + q < 1:
        raise InvalidParams("SO(2p,2q) needs p, q >= 0 and p + q >= 1")
    n = p + q
    m = 2 * n
    ipq = named_matrix("Ipq", (2 * p, 2 * q))
    c = _normalized_conjugator(named_matrix("gpq", (2 * p, 2 * q)), ipq, named_matrix("S", m))

    def torus(coords):
        return _place(m, _rotation_blocks(coords), coords[0])

    if n % 2 == 0:
        w = _diag([1, -1] * n)
    else:
        w = _diag([1, -1] * (n - 1) + [1, 1])
    return dict(label=f"SO({2 * p},{2 * q})", n=n, size=m, target=SplitTarget("SO", m),
                restriction=False, conjugator=c, conjugator_inv=c.inverse(), theta=None,
                equations=_orthogonal_equations(ipq), torus=torus, w=w,
                cochar_basis=tuple(_eps(n, i) for i in range(n)))


def _so11_block(t):
    half = GaussianRational(Fraction(1, 2))
    x = (t + 1 / t) * half
    y = (t - 1 / t) * half
    return [[x, y], [y, x]]


def _so_odd_odd(p, q):
    # SO(2p+1, 2q+1)
    if p < 0 or q < 0:
        raise InvalidParams("SO(2p+1,2q+1) needs p, q >= 0")
    n = p + q
    m = 2 * n + 2
    ipq = named_matrix("Ipq", (2 * p + 1, 2 * q + 1))
    c = _normalized_conjugator(named_matrix("gpq", (2 * p + 1, 2 * q + 1)), ipq, named_matrix("S", m))

    def torus(coords):
        blocks = (_rotation_blocks(coords[:p]) + [_so11_block(coords[p])]
                  + _rotation_blocks(coords[p + 1:]))
        return _place(m, blocks, coords[0])

    w = _diag([1, -1] * p + [(-1) ** p, (-1) ** q] + [1, -1] * q)
    basis = tuple(_eps(n + 1, i) for i in range(n + 1) if i != p)
    return dict(label=f"SO({2 * p + 1},{2 * q + 1})", n=n, size=m, target=SplitTarget("SO", m),
                restriction=False, conjugator=c, conjugator_inv=c.inverse(), theta=None,
                equations=_orthogonal_equations(ipq), torus=torus, w=w, cochar_basis=basis)


def _sostar(m):
    # SO*(2m): U*(2m) intersected with O(2m), split target SO'_{2m}
    j = named_matrix("J", m)
    jinv = j.inverse()
    ident = ExactMatrix.identity(2 * m)
    c = _normalized_conjugator(named_matrix("g'", m), ident, named_matrix("S'", 2 * m))

    def theta(P):
        return j * P * jinv

    def torus(coords):
        t = _paired_mu2(coords)
        return ResMatrix.from_pair(t, t)

    def equations(g):
        if g.bar() * j != j * g:
            return False
        if not g.det().is_identity():
            return False
        return (g.transpose() * g).is_identity()

    if m % 2 == 0:
        d = _diag([1] * m + [-1] * m)
        w = ResMatrix.from_pair(-d, d)
    else:
        k = m - 1
        w = ResMatrix.from_pair(_diag([-1] * k + [1] + [1] * k + [1]),
                                _diag([1] * k + [1] + [-1] * k + [1]))
    return dict(n=m // 2, size=2 * m, target=SplitTarget("SO'", 2 * m), restriction=True,
                conjugator=c, conjugator_inv=c.inverse(), theta=theta, equations=equations,
                torus=torus, w=w, cochar_basis=tuple(_eps(m, i) for i in range(m)),
                label=f"SO*({2 * m})")


def _gq(q):
    if q not in (1, -1):
        raise InvalidParams("Gq_demo needs q in {+1, -1}")
    iq = _diag([3, q])
    iq_inv = iq.inverse()
    ident = ExactMatrix.identity(2)

    def theta(P):
        return iq_inv * P.transpose().inverse() * iq

    def torus(coords):
        a = coords[0]
        return ResMatrix.from_pair(_diag([a, 1 / a]), _diag([1 / a, a]))

    def equations(g):
        return g.det().is_identity() and g.star() * iq * g == iq

    # the Weyl representative is given on the split side, SL_2(Q(i))
    w_split = ExactMatrix([[0, 1], [-1, 0]])
    return dict(label=f"G_{q:+d}", n=1, size=2, target=SplitTarget("Sp", 2), restriction=True,
                conjugator=ident, conjugator_inv=ident, theta=theta, equations=equations,
                torus=torus, w=ResMatrix.from_pair(w_split, theta(w_split)),
                cochar_basis=((1,),), over_field=True)


@functools.lru_cache(maxsize=None)
def _build(family: str, params: tuple) -> FormData:
    def need(k):
        if len(params) != k:
            raise InvalidParams(f"{family} takes {k} parameter(s), got {params!r}")

    if family in ("GL_odd", "GL_even"):
        need(1)
        (n,) = params
        if n < (0 if family == "GL_odd" else 1):
            raise InvalidParams(f"{family} needs n >= {0 if family == 'GL_odd' else 1}")
        m = 2 * n + 1 if family == "GL_odd" else 2 * n
        spec = _gl(m, family == "GL_odd")
    elif family == "U(p,q)":
        need(2)
        spec = _upq(*params)
    elif family == "U*(2n)":
        need(1)
        spec = _ustar(*params)
    elif family == "SO(2p,2q+1)":
        need(2)
        spec = _so_even_odd(*params)
    elif family == "Sp_n":
        need(1)
        spec = _sp(*params)
    elif family == "Sp(p,q)":
        need(2)
        spec = _sppq(*params)
    elif family == "SO(2p,2q)":
        need(2)
        spec = _so_even_even(*params)
    elif family == "SO(2p+1,2q+1)":
        need(2)
        spec = _so_odd_odd(*params)
    elif family == "SO*(4n)":
        need(1)
        if params[0] < 1:
            raise InvalidParams("SO*(4n) needs n >= 1")
        spec = _sostar(2 * params[0])
    elif family == "SO*(4n+2)":
        need(1)
        if params[0] < 0:
            raise InvalidParams("SO*(4n+2) needs n >= 0")
        spec = _sostar(2 * params[0] + 1)
    elif family == "Gq_demo":
        need(1)
        spec = _gq(*params)
    else:
        raise UnknownFamily(family)
    spec.setdefault("over_field", False)
    return FormData(**spec)


def form_data(form: StandardForm) -> FormData:
    return _build(form.family, form.params)


# public operations ----------------------------------------------------------

def _check_shape(form, g):
    size = form.data.size
    m = g.a if isinstance(g, ResMatrix) else g
    if m.shape != (size, size):
        raise DimensionMismatch(f"{form.label()} needs {size}x{size} matrices, got {m.rows}x{m.cols}")


def membership(form: StandardForm, g) -> bool:
    """Whether ``g`` is a k'-point of the form (in its original coordinates).

    For restriction-type forms a bare :class:`ExactMatrix` ``a`` is read as
    ``a (x) 1``.
    """
    d = form.data
    if d.restriction and isinstance(g, ExactMatrix):
        g = ResMatrix(g)
    if not d.restriction and isinstance(g, ResMatrix):
        raise DimensionMismatch(f"{form.label()} is not a restriction-type form")
    _check_shape(form, g)
    entries = g.entries() if isinstance(g, ResMatrix) else g.entries
    if not d.over_field and not _dyadic_entries(entries):
        return False
    try:
        if not d.equations(g):
            return False
    except ZeroDivisionError:
        return False
    if not d.over_field:
        if isinstance(g, ResMatrix):
            dets = (g.P.det(), g.Q.det())
        else:
            dets = (g.det(),)
        if not all(_unit(x) for x in dets):
            return False
    return True


@dataclass(frozen=True)
class SplitIso:
    forward: Callable
    backward: Callable


def split_iso(form: StandardForm) -> SplitIso:
    d = form.data
    c, cinv = d.conjugator, d.conjugator_inv

    if d.restriction:
        def forward(g):
            if isinstance(g, ExactMatrix):
                g = ResMatrix(g)
            return c * g.P * cinv

        def backward(h):
            p = cinv * h * c
            return ResMatrix.from_pair(p, d.theta(p))
    else:
        def forward(g):
            return c * g * cinv

        def backward(h):
            return cinv * h * c
    return SplitIso(forward, backward)


def galois_original(form: StandardForm, g):
    """The nontrivial Galois element acting on k'-points in original coordinates."""
    if isinstance(g, ResMatrix):
        return g.galois()
    if form.data.restriction:
        return ResMatrix(g).galois()
    return g.conj()


def twisted_galois(form: StandardForm) -> Callable:
    """The Galois involution transported to split-side matrices."""
    iso = split_iso(form)

    def action(h: ExactMatrix) -> ExactMatrix:
        return iso.forward(galois_original(form, iso.backward(h)))

    return action


@dataclass(frozen=True)
class Torus:
    torus_rank: int
    torus_point: Callable
    hs_point: Callable
    galois_point: Callable  # coords -> split image of the Galois-conjugated torus point


def fundamental_torus(form: StandardForm) -> Torus:
    d = form.data
    iso = split_iso(form)
    target = d.target

    def torus_point(*coords):
        coords = _coords(coords, target.rank)
        return d.torus(coords)

    def hs_point(*coords):
        coords = _coords(coords, target.rank)
        one = _one_like(coords[0]) if coords else ONE
        return ExactMatrix.diag(target.diagonal_from(coords, one))

    def galois_point(*coords):
        return iso.forward(galois_original(form, torus_point(*coords)))

    return Torus(target.rank, torus_point, hs_point, galois_point)


def _coords(coords, rank):
    if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
        coords = tuple(coords[0])
    if len(coords) != rank:
        raise DimensionMismatch(f"expected {rank} torus coordinates, got {len(coords)}")
    return [_ring(x) for x in coords]


def split_form_matrix(target: SplitTarget):
    if target.kind == "SO":
        return named_matrix("S", target.size)
    if target.kind == "SO'":
        return named_matrix("S'", target.size)
    if target.kind == "Sp":
        return named_matrix("J", target.size // 2)
    return None


def split_membership(target: SplitTarget, h: ExactMatrix) -> bool:
    """Whether ``h`` lies in the split group GL_m, SO_m, SO'_m or Sp_m."""
    if h.shape != (target.size, target.size):
        raise DimensionMismatch(f"{target} needs {target.size}x{target.size} matrices")
    det = h.det()
    if det == 0:
        return False
    form = split_form_matrix(target)
    if form is None:
        return True
    if h.transpose() * form * h != form:
        return False
    return target.kind == "Sp" or det == 1


# parsing --------------------------------------------------------------------

_TAG_RE = re.compile(r"^(?P<tag>[a-z-]+):(?P<args>[+-]?\d+(?:,[+-]?\d+)*)$")


def parse_form(text: str) -> StandardForm:
    """Parse tags such as ``gl:5``, ``u:2,1``, ``so:2,3``, ``gq:+1``."""
    s = text.strip()
    m = _TAG_RE.match(s)
    if not m:
        pos = s.find(":")
        raise ParseError(f"bad form spec {text!r} at position {max(pos, 0)}: expected tag:params")
    tag = m.group("tag")
    args = tuple(int(x) for x in m.group("args").split(","))

    def arity(k):
        if len(args) != k:
            raise ParseError(f"form tag {tag!r} takes {k} parameter(s), got {len(args)}")

    if tag == "gl":
        arity(1)
        (size,) = args
        if size < 1:
            raise InvalidParams("gl:m needs m >= 1")
        return StandardForm("GL_odd" if size % 2 else "GL_even", (size // 2,))
    if tag == "u":
        arity(2)
        return StandardForm("U(p,q)", args)
    if tag == "u-star":
        arity(1)
        if args[0] < 2 or args[0] % 2:
            raise InvalidParams("u-star:2n needs an even size >= 2")
        return StandardForm("U*(2n)", (args[0] // 2,))
    if tag == "so":
        arity(2)
        p, q = args
        if p < 0 or q < 0:
            raise InvalidParams("so:p,q needs p, q >= 0")
        if p % 2 == 0 and q % 2 == 1:
            return StandardForm("SO(2p,2q+1)", (p // 2, q // 2))
        if p % 2 == 0 and q % 2 == 0:
            return StandardForm("SO(2p,2q)", (p // 2, q // 2))
        if p % 2 == 1 and q % 2 == 1:
            return StandardForm("SO(2p+1,2q+1)", (p // 2, q // 2))
        raise InvalidParams("so:p,q with p odd and q even is not cataloged; use so:q,p")
    if tag == "sp":
        arity(1)
        return StandardForm("Sp_n", args)
    if tag == "sp-pq":
        arity(2)
        return StandardForm("Sp(p,q)", args)
    if tag == "so-star":
        arity(1)
        size = args[0]
        if size < 2 or size % 2:
            raise InvalidParams("so-star:2m needs an even size >= 2")
        if size % 4 == 0:
            return StandardForm("SO*(4n)", (size // 4,))
        return StandardForm("SO*(4n+2)", ((size - 2) // 4,))
    if tag == "gq":
        arity(1)
        return StandardForm("Gq_demo", args)
    raise UnknownFamily(f"unknown family tag {tag!r}")


def form_tag(form: StandardForm) -> str:
    """Inverse of :func:`parse_form`."""
    f, p = form.family, form.params
    if f == "GL_odd":
        return f"gl:{2 * p[0] + 1}"
    if f == "GL_even":
        return f"gl:{2 * p[0]}"
    if f == "U(p,q)":
        return f"u:{p[0]},{p[1]}"
    if f == "U*(2n)":
        return f"u-star:{2 * p[0]}"
    if f == "SO(2p,2q+1)":
        return f"so:{2 * p[0]},{2 * p[1] + 1}"
    if f == "SO(2p,2q)":
        return f"so:{2 * p[0]},{2 * p[1]}"
    if f == "SO(2p+1,2q+1)":
        return f"so:{2 * p[0] + 1},{2 * p[1] + 1}"
    if f == "Sp_n":
        return f"sp:{p[0]}"
    if f == "Sp(p,q)":
        return f"sp-pq:{p[0]},{p[1]}"
    if f == "SO*(4n)":
        return f"so-star:{4 * p[0]}"
    if f == "SO*(4n+2)":
        return f"so-star:{4 * p[0] + 2}"
    return f"gq:{p[0]:+d}"
