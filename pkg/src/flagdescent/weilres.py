"""Weil restrictions Res_{k'/k} G' of a split group: combinatorics of the product datum.

Gamma is an abstract finite group given by a multiplication table with the
identity at index 0.  The Galois action on the base characters and the Weyl
assignments w_sigma are signed permutations of X^*(H').  The product
character lattice is prod_{tau in Gamma} X^*(H'), stored as a tuple of
components indexed like the table.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass

from .errors import CocycleDataInconsistent, InvalidParams, ParseError, RankMismatch
from .lattice import integer_kernel
from .rootdata import (RootDatum, SplitTarget, build_root_datum, lex_positive_system, pairing,
                       simple_system)
from .satake import DynkinScheme, MonomialAction

__all__ = [
    "ResCharacter",
    "ResSatake",
    "cyclic_table",
    "longest_element",
    "make_res_satake",
    "parse_res_tag",
    "product_datum",
    "product_simple_system",
    "random_conjugation_passing",
    "res_beta_trivial",
    "res_complex",
    "res_conjugation",
    "res_dynkin",
    "res_extension_pairing",
    "res_from_json",
    "res_line_bundles",
    "split_base",
]

PRODUCT_MATERIALIZE_LIMIT = 12


def cyclic_table(order: int) -> tuple:
    return tuple(tuple((a + b) % order for b in range(order)) for a in range(order))


def _check_group(table):
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise InvalidParams("multiplication table must be square and nonempty")
    if any(x not in range(n) for row in table for x in row):
        raise InvalidParams("table entries must be element indices")
    if any(table[0][a] != a or table[a][0] != a for a in range(n)):
        raise InvalidParams("index 0 must be the identity")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise InvalidParams("table is not associative")
    for row in table:
        if sorted(row) != list(range(n)):
            raise InvalidParams("table rows must be permutations (no inverses otherwise)")


def split_base(target: SplitTarget):
    """Root datum and canonical simple system of the split group with this target."""
    datum = build_root_datum(target)
    basis = [tuple(datum.rank - i for i in range(datum.rank))]
    pi = tuple(simple_system(lex_positive_system(datum, basis))) if datum.roots else ()
    return datum, pi


def longest_element(datum: RootDatum, pi) -> MonomialAction:
    """w_0 as a signed permutation, built from simple reflections."""
    rank = datum.rank
    w = MonomialAction.identity(rank)
    positive = set(_positive_cone(datum, pi))
    while True:
        for a in pi:
            if w(a) in positive:
                w = w * _reflection(datum, a)
                break
        else:
            return w


def _positive_cone(datum, pi):
    basis = [tuple(datum.rank - i for i in range(datum.rank))]
    return lex_positive_system(datum, basis) if datum.roots else []


def _reflection(datum, alpha):
    rank = datum.rank
    return MonomialAction.from_images(
        [datum.reflect(alpha, tuple(int(i == j) for j in range(rank))) for i in range(rank)])


def _conj(g: MonomialAction, w: MonomialAction) -> MonomialAction:
    """sigma(w) = g_sigma w g_sigma^{-1} on characters."""
    return g * w * g.inverse()


@dataclass(frozen=True)
class ResSatake:
    table: tuple
    datum: RootDatum
    pi: tuple
    galois: tuple  # MonomialAction per element
    w: tuple  # MonomialAction per element, w_sigma(Pi) = sigma(Pi)

    @property
    def order(self):
        return len(self.table)

    @property
    def rank(self):
        return self.datum.rank

    def inv(self, s):
        return self.table[s].index(0)

    def cocycle_failures(self):
        """Pairs (s, t) where w_{st} != s(w_t) w_s."""
        bad = []
        for s, t in itertools.product(range(self.order), repeat=2):
            if self.w[self.table[s][t]] != _conj(self.galois[s], self.w[t]) * self.w[s]:
                bad.append((s, t))
        return bad

    def satake(self, s, alpha):
        """The alpha-part of sigma acting on alpha*tau: w_sigma^{-1} sigma(alpha)."""
        return self.w[s].inverse()(self.galois[s](alpha))

    def validate(self):
        _check_group(self.table)
        n, r = self.order, self.rank
        if len(self.galois) != n or len(self.w) != n:
            raise InvalidParams("need one Galois action and one w per group element")
        if any(g.rank != r for g in self.galois + self.w):
            raise RankMismatch("actions must have the rank of the base datum")
        roots = self.datum.root_set()
        for s, t in itertools.product(range(n), repeat=2):
            if self.galois[self.table[s][t]] != self.galois[s] * self.galois[t]:
                raise InvalidParams("Galois actions do not form a homomorphism")
        for s in range(n):
            if {self.galois[s](a) for a in roots} != roots:
                raise InvalidParams(f"Galois action of element {s} does not preserve the roots")
            if {self.w[s](a) for a in roots} != roots:
                raise InvalidParams(f"w of element {s} does not preserve the roots")
            if {self.w[s](a) for a in self.pi} != {self.galois[s](a) for a in self.pi}:
                raise InvalidParams(f"w_sigma(Pi) != sigma(Pi) for element {s}")
        if not self.w[0].is_identity():
            raise CocycleDataInconsistent("w_e must be the identity")
        bad = self.cocycle_failures()
        if bad:
            raise CocycleDataInconsistent(f"w_(st) != s(w_t) w_s at {bad}")
        return self

    def to_json(self):
        return {
            "table": [list(r) for r in self.table],
            "base": str(self.datum.target),
            "galois": [g.to_json() for g in self.galois],
            "w": [x.to_json() for x in self.w],
        }


def make_res_satake(table, target: SplitTarget, galois=None, w=None, validate=True) -> ResSatake:
    datum, pi = split_base(target)
    n = len(table)
    ident = MonomialAction.identity(datum.rank)
    galois = tuple(galois) if galois is not None else (ident,) * n
    w = tuple(w) if w is not None else (ident,) * n
    rs = ResSatake(tuple(tuple(r) for r in table), datum, pi, galois, w)
    return rs.validate() if validate else rs


@dataclass(frozen=True)
class ResCharacter:
    components: tuple  # lambda_tau, indexed like the group table

    def __post_init__(self):
        ranks = {len(c) for c in self.components}
        if len(ranks) > 1:
            raise RankMismatch("components of a ResCharacter must share one rank")
        object.__setattr__(self, "components", tuple(tuple(int(x) for x in c) for c in self.components))

    def __getitem__(self, tau):
        return self.components[tau]

    def flat(self):
        return tuple(x for c in self.components for x in c)


def _check_char(lam: ResCharacter, rs: ResSatake):
    if len(lam.components) != rs.order:
        raise RankMismatch(f"expected {rs.order} components, got {len(lam.components)}")
    if any(len(c) != rs.rank for c in lam.components):
        raise RankMismatch(f"components must have rank {rs.rank}")


def res_dynkin(rs: ResSatake) -> DynkinScheme:
    """Orbits of Gamma on Pi x Gamma: sigma(alpha tau) = (w_sigma^{-1} sigma alpha)(sigma tau)."""
    seen = set()
    orbits = []
    for alpha in rs.pi:
        start = (alpha, 0)
        if start in seen:
            continue
        orbit = []
        for s in range(rs.order):
            node = (rs.satake(s, alpha), rs.table[s][0])
            if node not in orbit:
                orbit.append(node)
        seen.update(orbit)
        orbits.append(tuple(orbit))
    return DynkinScheme(tuple(orbits), "k", "k'")


def res_extension_pairing(lam: ResCharacter, alpha, sigma: int, rs: ResSatake) -> int:
    """<sigma(alpha^vee), w_sigma lam_sigma>."""
    _check_char(lam, rs)
    coroot = rs.galois[sigma](rs.datum.coroot(alpha))
    return pairing(coroot, rs.w[sigma](lam[sigma]))


def res_conjugation(lam: ResCharacter, rs: ResSatake) -> bool:
    _check_char(lam, rs)
    base = lam[0]
    return all(lam[s] == rs.w[s].inverse()(rs.galois[s](base)) for s in range(rs.order))


def _w_vec(rs: ResSatake, s):
    """Components sigma(w_{sigma^{-1} tau})^{-1} w_tau of the product Weyl element."""
    si = rs.inv(s)
    return tuple(_conj(rs.galois[s], rs.w[rs.table[si][t]]).inverse() * rs.w[t]
                 for t in range(rs.order))


def _act_vec(rs: ResSatake, s, vec):
    """sigma acting on a product element: component tau is sigma(v_{sigma^{-1} tau})."""
    si = rs.inv(s)
    return tuple(_conj(rs.galois[s], vec[rs.table[si][t]]) for t in range(rs.order))


def res_beta_trivial(lam: ResCharacter, rs: ResSatake) -> bool:
    """beta for a conjugation-passing character is trivial; the w data are checked on the way."""
    _check_char(lam, rs)
    vecs = [_w_vec(rs, s) for s in range(rs.order)]
    for s, vec in enumerate(vecs):
        if any(c != rs.w[s] for c in vec):
            raise CocycleDataInconsistent(f"product Weyl element for {s} is not diagonal w_sigma")
    for s, t in itertools.product(range(rs.order), repeat=2):
        st = rs.table[s][t]
        moved = _act_vec(rs, s, vecs[t])
        for k in range(rs.order):
            if not (vecs[st][k].inverse() * moved[k] * vecs[s][k]).is_identity():
                raise CocycleDataInconsistent(f"telescoping product is not the identity at ({s}, {t})")
    if not res_conjugation(lam, rs):
        raise InvalidParams("the cocycle is only defined for conjugation-passing characters")
    return True


def random_conjugation_passing(rs: ResSatake, rng: random.Random, bound=3) -> ResCharacter:
    base = tuple(rng.randint(-bound, bound) for _ in range(rs.rank))
    return ResCharacter(tuple(rs.w[s].inverse()(rs.galois[s](base)) for s in range(rs.order)))


def product_datum(rs: ResSatake) -> RootDatum:
    """The root datum of prod_tau G' with roots alpha*tau, materialized for small cases."""
    n, r = rs.order, rs.rank
    if n * r > PRODUCT_MATERIALIZE_LIMIT:
        raise InvalidParams(f"product datum of rank {n * r} exceeds {PRODUCT_MATERIALIZE_LIMIT}")
    pairs = []
    for t in range(n):
        for alpha, coroot in rs.datum.roots:
            pairs.append((_embed(alpha, t, n, r), _embed(coroot, t, n, r)))
    pairs.sort(reverse=True)
    target = SplitTarget("GL", max(n * r, 1))
    return RootDatum(target, n * r, tuple(pairs))


def _embed(v, t, n, r):
    out = [0] * (n * r)
    out[t * r:(t + 1) * r] = v
    return tuple(out)


def product_simple_system(rs: ResSatake) -> list:
    """Simple system of the product for the concatenated lexicographic order."""
    pd = product_datum(rs)
    n, r = rs.order, rs.rank
    basis = []
    for t in range(n):
        basis.append(_embed(tuple(r - i for i in range(r)), t, n, r))
    return simple_system(lex_positive_system(pd, basis)) if pd.roots else []


def res_complex(target: SplitTarget) -> ResSatake:
    """Gamma = Z/2 acting trivially on the characters of a split base, w = e."""
    return make_res_satake(cyclic_table(2), target)


@dataclass(frozen=True)
class ResLineBundles:
    pi_prime: tuple
    basis: tuple  # basis of admissible lambda_e
    examples: tuple

    def to_json(self):
        return {"pi_prime": [list(a) for a in self.pi_prime],
                "lattice_basis": [list(b) for b in self.basis],
                "parity_constraint": None,
                "examples": [[list(c) for c in x] for x in self.examples]}


def res_line_bundles(rs: ResSatake, pi_prime, max_coord=1, limit=20) -> ResLineBundles:
    """Admissible characters for the type Pi' (any subset of Pi); beta is always trivial.

    A conjugation-passing character is determined by lambda_e, and since
    each sigma acts orthogonally the extension pairing reduces to
    <alpha^vee, lambda_e>.
    """
    pi_prime = tuple(tuple(a) for a in pi_prime)
    if not set(pi_prime) <= set(rs.pi):
        raise InvalidParams("Pi' must be a subset of the simple system")
    eqs = [rs.datum.coroot(a) for a in pi_prime]
    basis = tuple(tuple(b) for b in integer_kernel(eqs, rs.rank))
    examples = []
    for base in itertools.product(range(-max_coord, max_coord + 1), repeat=rs.rank):
        if all(pairing(c, base) == 0 for c in eqs):
            lam = ResCharacter(tuple(rs.w[s].inverse()(rs.galois[s](base)) for s in range(rs.order)))
            examples.append(lam.components)
            if len(examples) >= limit:
                break
    return ResLineBundles(pi_prime, basis, tuple(examples))


_TARGETS = {"gl": "GL", "so": "SO", "sp": "Sp"}


def parse_res_tag(text: str) -> ResSatake:
    """``res:gl:3``, ``res:so:5`` or ``res:sp:4`` (matrix size of the split base)."""
    parts = text.strip().split(":")
    if len(parts) != 3 or parts[0] != "res" or parts[1] not in _TARGETS:
        raise ParseError(f"bad restriction tag {text!r}: expected res:<gl|so|sp>:<size>")
    try:
        size = int(parts[2])
    except ValueError:
        raise ParseError(f"bad size in {text!r} at position {len(parts[0]) + len(parts[1]) + 2}") from None
    return res_complex(SplitTarget(_TARGETS[parts[1]], size))


def res_from_json(data) -> ResSatake:
    """Build from {"table", "base": "GL_3", "galois": [...], "w": [...]}."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON at position {exc.pos}: {exc.msg}") from None
    try:
        kind, size = str(data["base"]).rsplit("_", 1)
        target = SplitTarget(kind, int(size))
        table = data["table"]
        galois = [MonomialAction.from_json(g) for g in data["galois"]] if "galois" in data else None
        w = [MonomialAction.from_json(x) for x in data["w"]] if "w" in data else None
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad restriction spec: {exc}") from None
    return make_res_satake(table, target, galois, w)
