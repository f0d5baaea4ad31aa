"""Actions on characters, the generalized Satake involution and Dynkin schemes.

Everything here is for the quadratic case Gamma = {e, sigma}.  Actions on
the character lattice are read off by conjugating a symbolic split torus
point whose diagonal entries are Laurent monomials in a_1, ..., a_r.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .errors import NotInNormalizer, RankMismatch, SatakeNotStable
from .forms import (ResMatrix, StandardForm, fundamental_torus, galois_original, membership,
                    split_iso)
from .laurent import variables
from .linalg import ExactMatrix
from .rootdata import (RootDatum, build_root_datum, format_root, lex_positive_system,
                       simple_system)

__all__ = [
    "MonomialAction",
    "SatakeData",
    "DynkinScheme",
    "action_on_characters",
    "galois_on_characters",
    "build_satake",
    "dynkin_scheme",
    "parabolic_types_over_base",
    "verify_w",
    "wbar_w",
]


@dataclass(frozen=True)
class MonomialAction:
    """Signed permutation e_i -> signs[i] * e_{perm[i]} of the character lattice."""

    perm: tuple
    signs: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))) or len(self.signs) != len(self.perm):
            raise ValueError("not a signed permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @classmethod
    def identity(cls, rank):
        return cls(tuple(range(rank)), (1,) * rank)

    @classmethod
    def negation(cls, rank):
        return cls(tuple(range(rank)), (-1,) * rank)

    @classmethod
    def from_images(cls, images):
        """Build from the images of e_1, ..., e_r, each a signed unit vector."""
        perm, signs = [], []
        for v in images:
            nz = [(j, x) for j, x in enumerate(v) if x]
            if len(nz) != 1 or nz[0][1] not in (1, -1):
                raise ValueError(f"{v} is not a signed unit vector")
            perm.append(nz[0][0])
            signs.append(nz[0][1])
        return cls(tuple(perm), tuple(signs))

    @property
    def rank(self):
        return len(self.perm)

    def __call__(self, lam):
        if len(lam) != self.rank:
            raise RankMismatch(f"action of rank {self.rank} applied to rank {len(lam)}")
        out = [0] * self.rank
        for i, x in enumerate(lam):
            out[self.perm[i]] += self.signs[i] * x
        return tuple(out)

    def __mul__(self, other):
        """Composition: (self * other)(lam) = self(other(lam))."""
        return MonomialAction.from_images([self(other(_e(self.rank, i))) for i in range(self.rank)])

    def inverse(self):
        perm = [0] * self.rank
        signs = [0] * self.rank
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            perm[j] = i
            signs[j] = s
        return MonomialAction(tuple(perm), tuple(signs))

    def is_identity(self):
        return self.perm == tuple(range(self.rank)) and all(s == 1 for s in self.signs)

    def is_involution(self):
        return (self * self).is_identity()

    def matrix(self):
        """Integer matrix M with M @ lam = self(lam)."""
        m = [[0] * self.rank for _ in range(self.rank)]
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            m[j][i] = s
        return m

    def to_json(self):
        return {"perm": list(self.perm), "signs": list(self.signs)}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["perm"]), tuple(data["signs"]))

    def describe(self):
        """Formula such as ``(l2, l1, -l3)`` for the image of (l1, ..., lr)."""
        out = [""] * self.rank
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            out[j] = ("-" if s < 0 else "") + f"l{i + 1}"
        return "(" + ", ".join(out) + ")"


def _e(rank, i):
    return tuple(int(i == j) for j in range(rank))


def _read_torus_map(form: StandardForm, m: ExactMatrix) -> MonomialAction:
    """Turn a symbolic torus point hs(b_1, ..., b_r) into the induced action on X^*.

    If ``b_i = prod_j a_j^{N_ij}`` then lam -> N^T lam.
    """
    target = form.target
    rank = target.rank
    if not m.is_diagonal():
        raise NotInNormalizer("conjugate of the torus is not diagonal")
    diag = m.diagonal()
    images = []
    coords = []
    for i in range(rank):
        entry = diag[target.position(i)]
        mono = entry.as_monomial() if hasattr(entry, "as_monomial") else None
        if mono is None or mono[0] != 1:
            raise NotInNormalizer(f"torus coordinate {i + 1} maps to {entry!r}, not a monomial")
        images.append(mono[1])
        coords.append(entry)
    try:
        action = MonomialAction.from_images(images)
    except ValueError as exc:
        raise NotInNormalizer(str(exc)) from exc
    if rank and m != fundamental_torus(form).hs_point(*coords):
        raise NotInNormalizer("conjugate is diagonal but not a point of the split torus")
    return action


def action_on_characters(form: StandardForm, g) -> MonomialAction:
    """The action lam -> g lam with (g lam)(t) = lam(g^{-1} t g)."""
    rank = form.rank
    if rank == 0:
        return MonomialAction.identity(0)
    big = split_iso(form).forward(g)
    try:
        big_inv = big.inverse()
    except ZeroDivisionError as exc:
        raise NotInNormalizer("matrix is singular") from exc
    t = fundamental_torus(form).hs_point(*variables(rank))
    return _read_torus_map(form, big_inv * t * big)


def galois_on_characters(form: StandardForm) -> MonomialAction:
    """lam -> lam-bar, from the Galois-conjugated symbolic torus point."""
    rank = form.rank
    if rank == 0:
        return MonomialAction.identity(0)
    return _read_torus_map(form, fundamental_torus(form).galois_point(*variables(rank)))


@dataclass(frozen=True)
class SatakeData:
    form: StandardForm
    datum: RootDatum
    positive: tuple
    pi: tuple
    galois_on_chars: MonomialAction
    w_on_chars: MonomialAction
    satake_involution: tuple  # index permutation of pi
    w_matrix: object = field(repr=False)

    def satake(self, alpha):
        return self.pi[self.satake_involution[self.pi.index(tuple(alpha))]]


def _satake_map(pi, gal, wact):
    perm = []
    for alpha in pi:
        image = gal(wact(alpha))
        if image not in pi:
            raise SatakeNotStable(f"{format_root(alpha)} maps to {format_root(image)}, outside the simple system")
        perm.append(pi.index(image))
    if sorted(perm) != list(range(len(pi))):
        raise SatakeNotStable("induced map on simple roots is not a permutation")
    return tuple(perm)


def build_satake(form: StandardForm, w=None) -> SatakeData:
    if w is None:
        return _cached_satake(form)
    return _assemble(form, w)


@functools.lru_cache(maxsize=None)
def _cached_satake(form):
    return _assemble(form, None)


def _assemble(form, w):
    d = form.data
    datum = build_root_datum(form.target)
    positive = tuple(lex_positive_system(datum, d.cochar_basis))
    pi = tuple(simple_system(positive))
    gal = galois_on_characters(form)
    w_matrix = d.w if w is None else w
    wact = action_on_characters(form, w_matrix)
    perm = _satake_map(pi, gal, wact)
    return SatakeData(form, datum, positive, pi, gal, wact, perm, w_matrix)


@dataclass(frozen=True)
class DynkinScheme:
    orbits: tuple  # of tuples of roots
    base: str
    extension: str

    def counts(self):
        """(number of components over the base, number over the extension)."""
        return (sum(1 for o in self.orbits if len(o) == 1), sum(1 for o in self.orbits if len(o) > 1))

    def describe(self):
        a, b = self.counts()
        parts = []
        if a:
            parts.append(f"Spec {self.base}^{a}")
        if b:
            parts.append(f"Spec {self.extension}^{b}")
        return " + ".join(parts) if parts else "empty"

    def to_json(self):
        return {"orbits": [{"roots": [list(r) for r in o], "size": len(o),
                            "base": self.base if len(o) == 1 else self.extension}
                           for o in self.orbits]}


def dynkin_scheme(sd: SatakeData) -> DynkinScheme:
    seen = set()
    orbits = []
    for i in range(len(sd.pi)):
        if i in seen:
            continue
        j = sd.satake_involution[i]
        orbit = (i,) if j == i else tuple(sorted((i, j)))
        seen.update(orbit)
        orbits.append(tuple(sd.pi[k] for k in orbit))
    field_base = sd.form.data.over_field
    return DynkinScheme(tuple(orbits), "Q" if field_base else "Z[1/2]",
                        "Q(i)" if field_base else "Z[1/2,i]")


def parabolic_types_over_base(sd: SatakeData) -> list:
    """All Satake-stable subsets of the simple system (unions of orbits)."""
    orbits = dynkin_scheme(sd).orbits
    types = []
    for k in range(len(orbits) + 1):
        for combo in itertools.combinations(orbits, k):
            chosen = {r for o in combo for r in o}
            types.append(tuple(a for a in sd.pi if a in chosen))
    return types


def wbar_w(form: StandardForm, w=None) -> ExactMatrix:
    """The split-side image of w-bar * w."""
    w = form.data.w if w is None else w
    if form.data.restriction and isinstance(w, ExactMatrix):
        w = ResMatrix(w)
    return split_iso(form).forward(galois_original(form, w) * w)


def wbar_w_coords(form: StandardForm, w=None) -> list:
    """Torus coordinates of w-bar * w (read at the positions of the e_i)."""
    m = wbar_w(form, w)
    return [m[form.target.position(i), form.target.position(i)] for i in range(form.rank)]


def verify_w(form: StandardForm, w=None) -> dict:
    """Run the five matrix-level checks on the Weyl representative."""
    w = form.data.w if w is None else w
    checks = []

    def record(name, ok, detail=""):
        checks.append({"name": name, "pass": bool(ok), "detail": detail})

    try:
        ok = membership(form, w)
        record("membership", ok, "" if ok else "w is not a k'-point of the form")
    except Exception as exc:  # report, do not raise
        record("membership", False, str(exc))

    wact = None
    try:
        wact = action_on_characters(form, w)
        record("normalizer", True, f"w acts as {wact.to_json()}")
    except NotInNormalizer as exc:
        record("normalizer", False, str(exc))

    if wact is not None:
        datum = build_root_datum(form.target)
        pi = simple_system(lex_positive_system(datum, form.data.cochar_basis))
        gal = galois_on_characters(form)
        ok = {wact(a) for a in pi} == {gal(a) for a in pi}
        record("w_pi_equals_pi_bar", ok, "" if ok else "w(Pi) differs from the conjugate of Pi")
    else:
        record("w_pi_equals_pi_bar", False, "skipped: w does not normalize the torus")

    m = wbar_w(form, w)
    ok = (m * m).is_identity()
    record("wbar_w_squared_is_identity", ok, "" if ok else "(w-bar w)^2 is not the identity")
    in_torus = m.is_diagonal()
    if in_torus and form.rank:
        coords = [m[form.target.position(i), form.target.position(i)] for i in range(form.rank)]
        in_torus = m == fundamental_torus(form).hs_point(*coords)
    elif in_torus:
        in_torus = m.is_identity()
    record("wbar_w_in_torus", in_torus, "" if in_torus else "w-bar w is not a split torus point")
    diag = [str(x) for x in m.diagonal()] if m.is_diagonal() else None
    return {"form": form.label(), "checks": checks, "w_bar_w": diag,
            "passed": all(c["pass"] for c in checks)}


def pi_labels(pi) -> list:
    return [format_root(a) for a in pi]

