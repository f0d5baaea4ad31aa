"""Root data of the split classical groups in diagonal-torus coordinates.

Characters and cocharacters are plain integer tuples in the dual bases
{e_i} and {eps_i}; the pairing is the dot product.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (DegenerateBasis, InvalidRank, NotAPositiveSystem, ParseError,
                     RankMismatch)
from .lattice import integer_kernel

__all__ = [
    "SplitTarget",
    "RootDatum",
    "Lattice",
    "pairing",
    "build_root_datum",
    "lex_positive_system",
    "simple_system",
    "parabolic_char_lattice",
    "unit_vector",
    "format_root",
]

Character = tuple
Cocharacter = tuple


@dataclass(frozen=True)
class SplitTarget:
    """A split group GL_m, SO_m, SO'_m or Sp_m (m is the matrix size)."""

    kind: str  # "GL", "SO", "SO'", "Sp"
    size: int

    def __post_init__(self):
        if self.kind not in ("GL", "SO", "SO'", "Sp"):
            raise InvalidRank(f"unknown split target {self.kind!r}")
        if self.size < 1 or (self.kind == "Sp" and self.size % 2):
            raise InvalidRank(f"bad size {self.size} for {self.kind}")

    @property
    def rank(self) -> int:
        return self.size if self.kind == "GL" else self.size // 2

    def position(self, i: int) -> int:
        """Diagonal index (0-based) read by the character e_{i+1}."""
        if self.kind == "GL":
            return i
        if self.kind == "SO":
            return 2 * i
        if self.kind == "SO'" and self.size % 2:
            return 2 * i + 1
        return i

    def diagonal_from(self, coords, one=1):
        """Diagonal of the split torus point with coordinates ``coords``."""
        r, m = self.rank, self.size
        if len(coords) != r:
            raise RankMismatch(f"{self} needs {r} coordinates, got {len(coords)}")
        if self.kind == "GL":
            return list(coords)
        inv = [1 / a for a in coords]
        if self.kind == "SO":
            d = []
            for a, b in zip(coords, inv):
                d += [a, b]
            return d + [one] * (m % 2)
        if self.kind == "SO'" and m % 2:
            d = [one]
            for a, b in zip(coords, inv):
                d += [a, b]
            return d
        return list(coords) + inv

    def __str__(self):
        return f"{self.kind}_{self.size}"


def pairing(mu, lam) -> int:
    if len(mu) != len(lam):
        raise RankMismatch(f"pairing of rank {len(mu)} with rank {len(lam)}")
    return sum(a * b for a, b in zip(mu, lam))


def unit_vector(rank, i, scale=1):
    return tuple(scale if j == i else 0 for j in range(rank))


def _add(*vs):
    return tuple(sum(x) for x in zip(*vs))


def _neg(v):
    return tuple(-x for x in v)


@dataclass(frozen=True)
class RootDatum:
    target: SplitTarget
    rank: int
    roots: tuple  # of (root, coroot)
    _coroot: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_coroot", dict(self.roots))

    def coroot(self, alpha):
        return self._coroot[tuple(alpha)]

    def root_set(self):
        return set(self._coroot)

    def is_root(self, alpha):
        return tuple(alpha) in self._coroot

    def reflect(self, alpha, lam):
        """s_alpha(lam) = lam - <alpha^vee, lam> alpha."""
        k = pairing(self.coroot(alpha), lam)
        return tuple(x - k * a for x, a in zip(lam, alpha))


def build_root_datum(target: SplitTarget, rank: int | None = None) -> RootDatum:
    if rank is None:
        rank = target.rank
    if rank != target.rank:
        raise InvalidRank(f"{target} has rank {target.rank}, not {rank}")
    e = [unit_vector(rank, i) for i in range(rank)]
    pairs = []
    if target.kind == "GL":
        for i, j in itertools.permutations(range(rank), 2):
            v = _add(e[i], _neg(e[j]))
            pairs.append((v, v))
    else:
        for i, j in itertools.combinations(range(rank), 2):
            for si, sj in itertools.product((1, -1), repeat=2):
                v = tuple(si * a + sj * b for a, b in zip(e[i], e[j]))
                pairs.append((v, v))
        odd_orthogonal = target.kind in ("SO", "SO'") and target.size % 2
        for i in range(rank):
            for s in (1, -1):
                if odd_orthogonal:
                    pairs.append((unit_vector(rank, i, s), unit_vector(rank, i, 2 * s)))
                elif target.kind == "Sp":
                    pairs.append((unit_vector(rank, i, 2 * s), unit_vector(rank, i, s)))
    pairs.sort(reverse=True)
    return RootDatum(target, rank, tuple(pairs))


def lex_positive_system(datum: RootDatum, ordered_basis) -> list:
    """Roots whose first nonzero pairing with ``ordered_basis`` is positive."""
    basis = [tuple(b) for b in ordered_basis]
    for b in basis:
        if len(b) != datum.rank:
            raise RankMismatch("basis vector of wrong rank")
    positive = []
    for alpha, _ in datum.roots:
        for b in basis:
            k = pairing(b, alpha)
            if k:
                if k > 0:
                    positive.append(alpha)
                break
        else:
            raise DegenerateBasis(f"root {format_root(alpha)} pairs to zero with every basis vector")
    return sorted(positive, reverse=True)


def _solve_rational(columns, target):
    """Solve sum x_j columns[j] = target over Q; None if inconsistent."""
    n = len(columns)
    m = len(target)
    a = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(target[i])] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    if any(a[i][n] for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = a[i][n]
    return x


def simple_system(positive) -> list:
    """The indecomposable positive roots, sorted in descending coordinate order."""
    pos = [tuple(a) for a in positive]
    pos_set = set(pos)
    if len(pos_set) != len(pos) or any(_neg(a) in pos_set for a in pos):
        raise NotAPositiveSystem("set contains a root together with its negative")
    sums = {_add(b, c) for b, c in itertools.combinations(pos, 2)}
    pi = sorted((a for a in pos if a not in sums), reverse=True)
    if pi and _solve_rational(pi[1:], pi[0]) is not None and len(pi) > 1:
        raise NotAPositiveSystem("simple roots are linearly dependent")
    for a in pos:
        x = _solve_rational(pi, a)
        if x is None or any(c < 0 or c.denominator != 1 for c in x):
            raise NotAPositiveSystem(f"{format_root(a)} is not a nonnegative integer combination of simple roots")
    return pi


@dataclass(frozen=True)
class Lattice:
    """Integer sublattice cut out by linear equations, plus an optional parity condition.

    ``equations`` are integer rows ``r`` with ``r . lam = 0``; ``parity`` (if
    set) is a row ``f`` with ``f . lam`` required to be even.
    """

    rank: int
    basis: tuple
    equations: tuple = ()
    parity: tuple | None = None

    def contains(self, lam) -> bool:
        if len(lam) != self.rank:
            raise RankMismatch(f"expected rank {self.rank}, got {len(lam)}")
        if any(pairing(r, lam) for r in self.equations):
            return False
        return self.parity is None or pairing(self.parity, lam) % 2 == 0

    def parity_vacuous(self) -> bool:
        """True when the parity row is even on every basis vector."""
        return self.parity is None or all(pairing(self.parity, b) % 2 == 0 for b in self.basis)

    def with_parity(self, parity):
        return Lattice(self.rank, self.basis, self.equations, tuple(parity) if parity is not None else None)


def parabolic_char_lattice(pi_prime, datum: RootDatum, extra_equations=()) -> Lattice:
    """Characters killed by every coroot of ``pi_prime`` (and any extra rows)."""
    eqs = [tuple(datum.coroot(a)) for a in pi_prime] + [tuple(r) for r in extra_equations]
    eqs = [r for r in eqs if any(r)]
    basis = integer_kernel(eqs, datum.rank)
    return Lattice(datum.rank, tuple(tuple(b) for b in basis), tuple(eqs))


def format_root(v) -> str:
    """Readable form such as ``e1-e3`` or ``2e2``."""
    parts = []
    for i, c in enumerate(v):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}e{i + 1}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def parse_character(text: str, rank: int | None = None) -> tuple:
    s = text.strip()
    if not s:
        v = ()
    elif not re.fullmatch(r"\s*[+-]?\d+(\s*,\s*[+-]?\d+)*\s*", s):
        bad = next((k for k, ch in enumerate(s) if not (ch.isdigit() or ch in "+-, ")), len(s) - 1)
        raise ParseError(f"bad character {text!r} at position {bad}: expected comma-separated integers")
    else:
        v = tuple(int(x) for x in s.split(","))
    if rank is not None and len(v) != rank:
        raise RankMismatch(f"character has {len(v)} coordinates, rank is {rank}")
    return v
