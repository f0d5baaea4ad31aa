"""Shared catalog of forms and the closed-form expectations used across the suite."""

import itertools
import sys

import pytest

from flagdescent.errors import DescentError
from flagdescent.forms import FAMILIES, StandardForm


def catalog(max_n=4, max_pq=3, include_gq=True):
    """Every cataloged form with single parameter <= max_n or p, q <= max_pq."""
    out = []
    for fam in FAMILIES:
        if fam == "Gq_demo":
            if include_gq:
                out += [StandardForm(fam, (1,)), StandardForm(fam, (-1,))]
            continue
        candidates = [(n,) for n in range(max_n + 1)]
        candidates += list(itertools.product(range(max_pq + 1), repeat=2))
        for params in candidates:
            try:
                form = StandardForm(fam, params)
                form.data
            except DescentError:
                continue
            out.append(form)
    return out


def standard_forms(**kw):
    return [f for f in catalog(**kw) if f.family != "Gq_demo"]


def small_rank(forms, max_rank):
    return [f for f in forms if f.rank <= max_rank]


def family_n(form):
    """The n of the family headers (p + q for two-parameter families)."""
    return sum(form.params)


def e(rank, *pairs):
    """Character sum c * e_i for (i, c) pairs with 1-based i."""
    v = [0] * rank
    for i, c in pairs:
        v[i - 1] += c
    return tuple(v)


def _a_chain(rank, idx):
    return [e(rank, (i, 1), (i + 1, -1)) for i in idx]


def published_pi(form):
    """The simple systems displayed in the case studies, typos corrected."""
    f, n = form.family, family_n(form)
    r = form.rank
    if f == "GL_odd":
        return ([e(r, (2 * i - 1, 1), (2 * i + 1, -1)) for i in range(1, n + 1)]
                + [e(r, (2 * i, -1), (2 * i + 2, 1)) for i in range(1, n)]
                + ([e(r, (2 * n, -1), (2 * n + 1, 1))] if n else []))
    if f == "GL_even":
        return ([e(r, (2 * i - 1, 1), (2 * i + 1, -1)) for i in range(1, n)]
                + [e(r, (2 * i, -1), (2 * i + 2, 1)) for i in range(1, n)]
                + [e(r, (2 * n - 1, 1), (2 * n, -1))])
    if f == "U(p,q)":
        return _a_chain(r, range(1, n))
    if f == "U*(2n)":
        return (_a_chain(r, range(1, n)) + [e(r, (n, 1), (2 * n, -1))]
                + [e(r, (i, -1), (i + 1, 1)) for i in range(n + 1, 2 * n)])
    if f == "SO(2p,2q+1)":
        return _a_chain(r, range(1, n)) + ([e(r, (n, 1))] if n else [])
    if f in ("Sp_n", "Sp(p,q)"):
        return _a_chain(r, range(1, n)) + [e(r, (n, 2))]
    if f in ("SO(2p,2q)", "SO*(4n)", "SO*(4n+2)"):
        if r < 2:
            return []
        return _a_chain(r, range(1, r)) + [e(r, (r - 1, 1), (r, 1))]
    if f == "SO(2p+1,2q+1)":
        p = form.params[0]
        if n == 0:
            return []
        if p == 0:
            return _a_chain(r, range(2, n + 1)) + [e(r, (n + 1, 1), (1, 1)), e(r, (n + 1, 1), (1, -1))]
        if p == n:
            return _a_chain(r, range(1, n + 1)) + [e(r, (n, 1), (n + 1, 1))]
        return (_a_chain(r, [i for i in range(1, n + 1) if i not in (p, p + 1)])
                + [e(r, (p, 1), (p + 2, -1)), e(r, (n + 1, 1), (p + 1, 1)), e(r, (n + 1, 1), (p + 1, -1))])
    if f == "Gq_demo":
        return [(2,)]
    raise AssertionError(f)


def published_dynkin(form):
    """(components over Z[1/2], components over Z[1/2,i]) from the closed forms."""
    f, n = form.family, family_n(form)
    if f == "GL_odd":
        return (2 * n, 0)
    if f == "GL_even":
        return (2 * n - 1, 0)
    if f == "U(p,q)":
        return (1, n // 2 - 1) if n % 2 == 0 else (0, (n - 1) // 2)
    if f == "U*(2n)":
        return (2 * n - 1, 0)
    if f in ("SO(2p,2q+1)", "Sp_n", "Sp(p,q)"):
        return (n, 0)
    if f == "SO(2p,2q)":
        if n % 2 == 0:
            return (n, 0)
        return (n - 2, 1) if n >= 3 else (0, 0)
    if f == "SO(2p+1,2q+1)":
        if n == 0:
            return (0, 0)
        return (n + 1, 0) if n % 2 == 0 else (n - 1, 1)
    if f == "SO*(4n)":
        return (2 * n, 0)
    if f == "SO*(4n+2)":
        return (2 * n - 1, 1) if n >= 1 else (0, 0)
    if f == "Gq_demo":
        return (1, 0)
    raise AssertionError(f)


def _neg(lam):
    return tuple(-x for x in lam)


def _pair_swap(lam):
    out = list(lam)
    for i in range(0, len(lam) - 1, 2):
        out[i], out[i + 1] = lam[i + 1], lam[i]
    return tuple(out)


def published_actions(form):
    """(lambda -> lambda-bar, lambda -> w lambda) as displayed in the case studies."""
    f, n = form.family, family_n(form)
    if f in ("GL_odd", "GL_even"):
        return _pair_swap, _pair_swap
    if f == "U(p,q)":
        return _neg, lambda lam: tuple(reversed(lam))
    if f == "U*(2n)":
        swap = lambda lam: tuple(lam[n:]) + tuple(lam[:n])  # noqa: E731
        return swap, swap
    if f in ("SO(2p,2q+1)", "Sp_n", "Sp(p,q)", "SO*(4n)"):
        return _neg, _neg
    if f == "SO(2p,2q)":
        if n % 2 == 0:
            return _neg, _neg
        return _neg, lambda lam: _neg(lam[:-1]) + (lam[-1],)
    if f == "SO(2p+1,2q+1)":
        if n == 0:
            return (lambda lam: lam), (lambda lam: lam)
        p = form.params[0]
        bar = lambda lam: tuple(x if i == p else -x for i, x in enumerate(lam))  # noqa: E731
        return bar, (bar if n % 2 == 0 else _neg)
    if f == "SO*(4n+2)":
        return _neg, lambda lam: _neg(lam[:-1]) + (lam[-1],)
    if f == "Gq_demo":
        return _neg, _neg
    raise AssertionError(f)


def box(rank, bound):
    return itertools.product(range(-bound, bound + 1), repeat=rank)


@pytest.fixture(scope="session")
def all_forms():
    return catalog()


@pytest.fixture(scope="session")
def std_forms():
    return standard_forms()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)
