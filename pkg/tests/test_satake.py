import itertools

import pytest
from conftest import catalog, published_actions, published_dynkin, published_pi, small_rank

from flagdescent.forms import StandardForm, parse_form
from flagdescent.linalg import ExactMatrix
from flagdescent.satake import (MonomialAction, build_satake, dynkin_scheme,
                                parabolic_types_over_base, verify_w)

FORMS = catalog()


def weyl_group(target):
    """All signed permutations in the Weyl group of the split target."""
    r = target.rank
    for perm in itertools.permutations(range(r)):
        if target.kind == "GL":
            yield MonomialAction(perm, (1,) * r)
            continue
        for signs in itertools.product((1, -1), repeat=r):
            even_orthogonal = target.kind in ("SO", "SO'") and target.size % 2 == 0
            if even_orthogonal and signs.count(-1) % 2:
                continue
            yield MonomialAction(perm, signs)


@pytest.mark.parametrize("form", small_rank(FORMS, 4), ids=str)
def test_w_is_the_unique_weyl_element(form):
    sd = build_satake(form)
    target_set = {sd.galois_on_chars(a) for a in sd.pi}
    hits = [x for x in weyl_group(form.target) if {x(a) for a in sd.pi} == target_set]
    assert len(hits) == 1
    assert hits[0] == sd.w_on_chars


@pytest.mark.parametrize("form", FORMS, ids=str)
def test_against_published_tables(form):
    sd = build_satake(form)
    assert sorted(sd.pi) == sorted(published_pi(form))
    bar, w = published_actions(form)
    for lam in itertools.product(range(-2, 3), repeat=min(form.rank, 3)):
        lam = lam + (0,) * (form.rank - len(lam))
        assert sd.galois_on_chars(lam) == bar(lam)
        assert sd.w_on_chars(lam) == w(lam)
    assert dynkin_scheme(sd).counts() == published_dynkin(form)


@pytest.mark.parametrize("form", FORMS, ids=str)
def test_satake_involution(form):
    sd = build_satake(form)
    for a in sd.pi:
        assert sd.satake(sd.satake(a)) == a
        assert sd.satake(a) == sd.galois_on_chars(sd.w_on_chars(a))
    assert sd.galois_on_chars.is_involution()
    orbits = dynkin_scheme(sd).orbits
    assert len(parabolic_types_over_base(sd)) == 2 ** len(orbits)
    assert sorted(r for o in orbits for r in o) == sorted(sd.pi)


def test_unitary_reversal():
    sd = build_satake(parse_form("u:3,2"))
    n = 5
    for i in range(1, n):
        a = tuple(int(j == i - 1) - int(j == i) for j in range(n))
        b = tuple(int(j == n - i - 1) - int(j == n - i) for j in range(n))
        assert sd.satake(a) == b


def test_quaternionic_identity_and_sostar_swap():
    sd = build_satake(parse_form("sp-pq:2,1"))
    assert all(sd.satake(a) == a for a in sd.pi)
    sd = build_satake(parse_form("so-star:10"))
    last, penult = (0, 0, 0, 1, 1), (0, 0, 0, 1, -1)
    assert sd.satake(last) == penult and sd.satake(penult) == last
    assert all(sd.satake(a) == a for a in sd.pi if a not in (last, penult))
    assert dynkin_scheme(sd).describe() == "Spec Z[1/2]^3 + Spec Z[1/2,i]^1"


def test_gq_dynkin_over_field():
    sd = build_satake(parse_form("gq:+1"))
    assert sd.pi == ((2,),)
    assert dynkin_scheme(sd).describe() == "Spec Q^1"


@pytest.mark.parametrize("form", [f for f in FORMS if f.family != "Gq_demo"], ids=str)
def test_verify_w_passes(form):
    report = verify_w(form)
    assert report["passed"], report


def test_verify_w_detects_wrong_w():
    form = parse_form("sp:1")
    report = verify_w(form, ExactMatrix.identity(2))
    status = {c["name"]: c["pass"] for c in report["checks"]}
    assert not status["w_pi_equals_pi_bar"] and not report["passed"]
    assert status["membership"] and status["normalizer"]
    report = verify_w(form, ExactMatrix([[1, 1], [0, 1]]))
    status = {c["name"]: c["pass"] for c in report["checks"]}
    assert not status["normalizer"]


def test_gq_wbar_w_has_infinite_order_part():
    # (w-bar w)^2 = diag(1/9, 9) for these forms; the other four checks hold
    report = verify_w(StandardForm("Gq_demo", (1,)))
    status = {c["name"]: c["pass"] for c in report["checks"]}
    assert report["w_bar_w"] == ["-1/3", "-3"]
    assert not status.pop("wbar_w_squared_is_identity")
    assert all(status.values())


def test_monomial_action_algebra():
    a = MonomialAction((1, 0, 2), (1, -1, 1))
    b = MonomialAction.negation(3)
    lam = (1, 2, 3)
    assert (a * b)(lam) == a(b(lam))
    assert (a * a.inverse()).is_identity()
    assert MonomialAction.from_json(a.to_json()) == a
    assert a.describe() == "(-l2, l1, l3)"
    m = a.matrix()
    assert tuple(sum(m[i][j] * lam[j] for j in range(3)) for i in range(3)) == a(lam)
    with pytest.raises(ValueError):
        MonomialAction((0, 0), (1, 1))
    with pytest.raises(ValueError):
        MonomialAction.from_images([(1, 1), (0, 1)])
