"""Laurent polynomials over Q(i) in a fixed number of formal variables.

Used to conjugate a generic torus point symbolically: the variables stand
for the coordinates a_1, ..., a_r of the split torus and stay fixed under
complex conjugation, which only touches coefficients.
"""

from __future__ import annotations

from .exactnum import GaussianRational, as_gaussian

__all__ = ["LaurentPoly", "variables"]


class LaurentPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        # exponent tuple -> nonzero GaussianRational
        self.terms = {}
        for exps, c in (terms or {}).items():
            c = as_gaussian(c)
            if c:
                self.terms[tuple(exps)] = c

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, nvars, exps, c=1):
        return cls(nvars, {tuple(exps): c})

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("Laurent polynomials in different variable counts")
            return other
        try:
            return LaurentPoly.constant(self.nvars, as_gaussian(other))
        except TypeError:
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def inverse(self):
        mono = self.as_monomial()
        if mono is None:
            raise ZeroDivisionError("only nonzero monomials are invertible")
        c, exps = mono
        return LaurentPoly.monomial(self.nvars, [-x for x in exps], c.inverse())

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self.inverse() if n < 0 else self
        result = LaurentPoly.constant(self.nvars, 1)
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def conj(self):
        return LaurentPoly(self.nvars, {e: c.conj() for e, c in self.terms.items()})

    def as_monomial(self):
        """Return ``(coefficient, exponents)`` if this is a single term, else None."""
        if len(self.terms) != 1:
            return None
        (exps, c), = self.terms.items()
        return c, exps

    def evaluate(self, values):
        total = GaussianRational(0)
        for exps, c in self.terms.items():
            term = c
            for v, k in zip(values, exps):
                if k:
                    term = term * as_gaussian(v) ** k
            total = total + term
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in sorted(self.terms.items()):
            mono = "*".join(f"a{i + 1}^{k}" for i, k in enumerate(exps) if k)
            parts.append(f"({c})" + ("*" + mono if mono else ""))
        return " + ".join(parts)


def variables(n: int):
    """The formal variables a_1, ..., a_n."""
    return [LaurentPoly.monomial(n, [int(i == j) for j in range(n)]) for i in range(n)]
