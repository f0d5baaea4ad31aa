"""Descent of characters: extension, conjugation, the cocycle and its triviality."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import (NotAntidominant, NotWellPosed, PiPrimeNotStable, RankMismatch,
                     UnsupportedExtension, UnsupportedValue, WbarwNotInTorus, ZeroEntry)
from .exactnum import ONE, GaussianRational, as_gaussian
from .forms import StandardForm, fundamental_torus
from .rootdata import Lattice, pairing, parabolic_char_lattice
from .satake import SatakeData, build_satake, wbar_w

__all__ = [
    "Cocycle2",
    "DescentVerdict",
    "LineBundleClassification",
    "classify_line_bundles",
    "cocycle_beta",
    "conjugation_condition",
    "descent_data_count",
    "eval_char",
    "extends_to",
    "extension_of",
    "irr_partition",
    "is_trivial_quadratic",
    "verdict",
    "wbar_w_coordinates",
]

EXTENSIONS = ("C_over_R", "Qi_over_Q", "Z12i_over_Z12")
TRIAL_DIVISION_CAP = 2 ** 31


def extends_to(lam, pi_prime, sd: SatakeData) -> bool:
    """lam extends to the parabolic of type pi_prime iff it kills those coroots."""
    return all(pairing(sd.datum.coroot(a), lam) == 0 for a in pi_prime)


def conjugation_condition(form: StandardForm, lam) -> bool:
    sd = build_satake(form)
    lam = _check_rank(form, lam)
    return sd.galois_on_chars(lam) == sd.w_on_chars(lam)


def _check_rank(form, lam):
    lam = tuple(int(x) for x in lam)
    if len(lam) != form.rank:
        raise RankMismatch(f"{form.label()} has rank {form.rank}, character has {len(lam)} coordinates")
    return lam


def eval_char(lam, torus_diag) -> GaussianRational:
    """lam(t) = prod a_i^{lam_i} for the torus point with coordinates a_i."""
    if len(lam) != len(torus_diag):
        raise RankMismatch(f"character of rank {len(lam)} on {len(torus_diag)} coordinates")
    value = ONE
    for k, a in zip(lam, torus_diag):
        a = as_gaussian(a)
        if not a:
            raise ZeroEntry("torus coordinate is zero")
        if k:
            value = value * a ** k
    return value


def wbar_w_coordinates(form: StandardForm) -> list:
    """Coordinates of w-bar w on the split torus; raises if it is not a torus point."""
    return list(_wbar_w_coordinates(form))


@functools.lru_cache(maxsize=None)
def _wbar_w_coordinates(form):
    m = wbar_w(form)
    if not m.is_diagonal():
        raise WbarwNotInTorus(f"w-bar w is not diagonal for {form.label()}")
    t = form.target
    coords = [m[t.position(i), t.position(i)] for i in range(form.rank)]
    if form.rank and m != fundamental_torus(form).hs_point(*coords):
        raise WbarwNotInTorus(f"w-bar w is diagonal but not a split torus point for {form.label()}")
    if not form.rank and not m.is_identity():
        raise WbarwNotInTorus("w-bar w is a nontrivial element of a rank-0 torus")
    return tuple(coords)


@dataclass(frozen=True)
class Cocycle2:
    """A 2-cocycle Gamma x Gamma -> (k')^x for a finite group given by a table."""

    table: tuple  # table[s][t] = index of s*t; index 0 is the identity
    values: dict  # (s, t) -> GaussianRational
    act: Callable = field(compare=False)  # (s, value) -> s(value)

    def __call__(self, s, t):
        return self.values[(s, t)]

    def identity_failures(self):
        """Triples (s, t, r) where s(b(t,r)) b(s,tr) != b(st,r) b(s,t)."""
        g = range(len(self.table))
        bad = []
        for s, t, r in itertools.product(g, repeat=3):
            lhs = self.act(s, self(t, r)) * self(s, self.table[t][r])
            rhs = self(self.table[s][t], r) * self(s, t)
            if lhs != rhs:
                bad.append((s, t, r))
        return bad

    def is_cocycle(self):
        return not self.identity_failures()

    def to_json(self):
        return {f"{s},{t}": str(v) for (s, t), v in sorted(self.values.items())}


Z2_TABLE = ((0, 1), (1, 0))


def _conj_action(s, z):
    return z.conj() if s else z


def cocycle_beta(form: StandardForm, lam) -> Cocycle2:
    """beta_lam for Gamma = {e, sigma}: the only nontrivial value is lam(w-bar w)."""
    lam = _check_rank(form, lam)
    if not conjugation_condition(form, lam):
        raise NotWellPosed(f"lam-bar != w lam for {lam}; the cocycle is not defined")
    value = eval_char(lam, wbar_w_coordinates(form))
    values = {(0, 0): ONE, (0, 1): ONE, (1, 0): ONE, (1, 1): value}
    beta = Cocycle2(Z2_TABLE, values, _conj_action)
    if not beta.is_cocycle():
        raise NotWellPosed(f"beta fails the cocycle identity at {beta.identity_failures()}")
    return beta


def _factor_exponents(n: int):
    """Prime exponents of a positive integer n <= TRIAL_DIVISION_CAP."""
    if n > TRIAL_DIVISION_CAP:
        raise UnsupportedValue(f"{n} exceeds the trial-division cap 2^31")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_rational_norm_from_gaussian(q: Fraction) -> bool:
    """Is q = c * conj(c) for some c in Q(i)?"""
    if q <= 0:
        return False
    exps = dict(_factor_exponents(q.numerator))
    for p, k in _factor_exponents(q.denominator).items():
        exps[p] = exps.get(p, 0) - k
    return all(k % 2 == 0 for p, k in exps.items() if p % 4 == 3)


def is_trivial_quadratic(value, extension: str) -> bool:
    value = as_gaussian(value)
    if extension not in EXTENSIONS:
        raise UnsupportedExtension(f"unsupported extension {extension!r}")
    if not value:
        raise UnsupportedValue("cocycle values are nonzero")
    if extension == "Qi_over_Q":
        if value.im != 0:
            raise UnsupportedValue(f"{value} is not rational")
        return is_rational_norm_from_gaussian(value.re)
    if value not in (1, -1):
        raise UnsupportedValue(f"{value} is not +1 or -1")
    return value == 1


def extension_of(form: StandardForm) -> str:
    return "Qi_over_Q" if form.data.over_field else "Z12i_over_Z12"


def _is_stable(sd: SatakeData, pi_prime) -> bool:
    chosen = {tuple(a) for a in pi_prime}
    return chosen <= set(sd.pi) and all(sd.satake(a) in chosen for a in chosen)


@dataclass(frozen=True)
class LineBundleClassification:
    form: StandardForm
    pi_prime: tuple
    lattice: Lattice  # extension and conjugation conditions, plus parity if exact
    parity_exact: bool  # False: the cocycle condition is only available via contains()
    wbar_w: tuple
    extension: str

    def contains(self, lam) -> bool:
        lam = tuple(lam)
        if not self.lattice.contains(lam):
            return False
        if self.parity_exact:
            return True
        return is_trivial_quadratic(eval_char(lam, self.wbar_w), self.extension)

    def examples(self, max_coord=1, limit=20):
        out = []
        for lam in itertools.product(range(-max_coord, max_coord + 1), repeat=self.lattice.rank):
            if self.contains(lam):
                out.append(lam)
                if len(out) >= limit:
                    break
        return out

    def to_json(self, max_coord=1):
        return {
            "pi_prime": [list(a) for a in self.pi_prime],
            "lattice_basis": [list(b) for b in self.lattice.basis],
            "parity_constraint": list(self.lattice.parity) if self.lattice.parity else None,
            "parity_automatic": self.lattice.parity_vacuous(),
            "examples": [list(x) for x in self.examples(max_coord)],
        }


def classify_line_bundles(form: StandardForm, pi_prime) -> LineBundleClassification:
    sd = build_satake(form)
    pi_prime = tuple(tuple(a) for a in pi_prime)
    if not _is_stable(sd, pi_prime):
        raise PiPrimeNotStable("the chosen simple roots are not a union of Satake orbits")
    gal = sd.galois_on_chars.matrix()
    wm = sd.w_on_chars.matrix()
    conj_rows = [tuple(a - b for a, b in zip(gr, wr)) for gr, wr in zip(gal, wm)]
    lattice = parabolic_char_lattice(pi_prime, sd.datum, conj_rows)
    coords = tuple(wbar_w_coordinates(form))
    exact = all(c in (1, -1) for c in coords)
    if exact:
        parity = tuple(int(c == -1) for c in coords)
        lattice = lattice.with_parity(parity if any(parity) else None)
    return LineBundleClassification(form, pi_prime, lattice, exact, coords, extension_of(form))


@dataclass(frozen=True)
class DescentVerdict:
    extends_to_parabolic: bool
    conjugation_ok: bool
    wbar_w_value: GaussianRational
    cocycle_trivial: bool
    admits_descent: bool

    def to_json(self):
        return {
            "extends_to_parabolic": self.extends_to_parabolic,
            "conjugation_ok": self.conjugation_ok,
            "wbar_w_value": str(self.wbar_w_value),
            "cocycle_trivial": self.cocycle_trivial,
            "admits_descent": self.admits_descent,
        }


def verdict(form: StandardForm, lam, pi_prime=()) -> DescentVerdict:
    lam = _check_rank(form, lam)
    sd = build_satake(form)
    pi_prime = tuple(tuple(a) for a in pi_prime)
    if not _is_stable(sd, pi_prime):
        raise PiPrimeNotStable("the chosen simple roots are not a union of Satake orbits")
    ext = extends_to(lam, pi_prime, sd)
    conj = conjugation_condition(form, lam)
    value = eval_char(lam, wbar_w_coordinates(form))
    trivial = conj and is_trivial_quadratic(value, extension_of(form))
    return DescentVerdict(ext, conj, value, trivial, ext and conj and trivial)


_PID_BASES = {"Z[1/2]", "Z", "R", "Q", "C", "Q(i)", "Z[1/2,i]"}


def descent_data_count(base: str) -> str:
    """Descent data for a line bundle are unique when H^1(Gamma, k'^x) vanishes."""
    if base in _PID_BASES:
        return "unique-up-to-isomorphism"
    return "principal-homogeneous-under-H1"


def irr_partition(form: StandardForm, lam) -> str:
    """Sort an antidominant (lowest) weight into Irr1, Irr0 or IrrMinus1."""
    lam = _check_rank(form, lam)
    sd = build_satake(form)
    if any(pairing(sd.datum.coroot(a), lam) > 0 for a in sd.pi):
        raise NotAntidominant(f"{lam} pairs positively with a simple coroot")
    if not conjugation_condition(form, lam):
        return "Irr0"
    value = eval_char(lam, wbar_w_coordinates(form))
    ext = "Qi_over_Q" if form.data.over_field else "C_over_R"
    return "Irr1" if is_trivial_quadratic(value, ext) else "IrrMinus1"
