import itertools
import json
import random

import pytest

from flagdescent.errors import CocycleDataInconsistent, InvalidParams, ParseError, RankMismatch
from flagdescent.rootdata import SplitTarget, pairing
from flagdescent.satake import MonomialAction
from flagdescent.weilres import (ResCharacter, cyclic_table, longest_element, make_res_satake,
                                 parse_res_tag, product_datum, product_simple_system,
                                 random_conjugation_passing, res_beta_trivial, res_complex,
                                 res_conjugation, res_dynkin, res_extension_pairing, res_from_json,
                                 res_line_bundles, split_base)

BASES = [SplitTarget("GL", 2), SplitTarget("GL", 3), SplitTarget("SO", 5), SplitTarget("Sp", 4),
         SplitTarget("SO", 6), SplitTarget("SO", 4), SplitTarget("Sp", 6)]


def _opposition(target):
    datum, pi = split_base(target)
    w0 = longest_element(datum, pi)
    neg = MonomialAction.negation(datum.rank)
    return make_res_satake(cyclic_table(2), target, [MonomialAction.identity(datum.rank), neg],
                           [MonomialAction.identity(datum.rank), w0])


def _coxeter_a2():
    c = MonomialAction((1, 2, 0), (1, 1, 1))
    acts = [MonomialAction.identity(3), c, c * c]
    return make_res_satake(cyclic_table(3), SplitTarget("GL", 3), acts, acts)


def cases():
    out = []
    for t in BASES:
        out.append((f"{t}-Z2", res_complex(t)))
        out.append((f"{t}-Z2-opp", _opposition(t)))
        out.append((f"{t}-Z3", make_res_satake(cyclic_table(3), t)))
    out.append(("A2-coxeter", _coxeter_a2()))
    return out


CASES = cases()


def test_longest_elements():
    assert longest_element(*split_base(SplitTarget("GL", 3))).describe() == "(l3, l2, l1)"
    assert longest_element(*split_base(SplitTarget("SO", 6))).describe() == "(-l1, -l2, l3)"
    assert longest_element(*split_base(SplitTarget("Sp", 4))).describe() == "(-l1, -l2)"


@pytest.mark.parametrize("name,rs", CASES, ids=[c[0] for c in CASES])
def test_orbits_have_full_size(name, rs):
    dyn = res_dynkin(rs)
    assert len(dyn.orbits) == len(rs.pi)
    assert all(len(o) == rs.order for o in dyn.orbits)
    nodes = {n for o in dyn.orbits for n in o}
    assert len(nodes) == len(rs.pi) * rs.order
    assert not rs.cocycle_failures()


@pytest.mark.parametrize("name,rs", CASES, ids=[c[0] for c in CASES])
def test_extension_pairing_against_product(name, rs):
    if rs.order * rs.rank > 12:
        pytest.skip("product datum too large to materialize")
    pd = product_datum(rs)
    n, r = rs.order, rs.rank
    rng = random.Random(7)
    for _ in range(15):
        lam = random_conjugation_passing(rs, rng)
        assert res_conjugation(lam, rs) and res_beta_trivial(lam, rs)
        for alpha, s in itertools.product(rs.pi, range(n)):
            node = rs.satake(s, alpha)
            emb = tuple([0] * (s * r)) + node + tuple([0] * ((n - s - 1) * r))
            brute = pairing(pd.coroot(emb), lam.flat())
            assert res_extension_pairing(lam, alpha, s, rs) == brute
            assert brute == pairing(rs.datum.coroot(alpha), lam[0])


def test_product_simple_system_of_complex_restriction():
    rs = res_complex(SplitTarget("GL", 3))
    pi = rs.pi
    expected = {a + (0, 0, 0) for a in pi} | {(0, 0, 0) + a for a in pi}
    assert set(product_simple_system(rs)) == expected


def test_rank_one_conjugation():
    rs = _opposition(SplitTarget("Sp", 2))
    assert res_conjugation(ResCharacter(((1,), (1,))), rs)
    assert not res_conjugation(ResCharacter(((1,), (-1,))), rs)
    with pytest.raises(InvalidParams):
        res_beta_trivial(ResCharacter(((1,), (-1,))), rs)
    with pytest.raises(RankMismatch):
        res_conjugation(ResCharacter(((1,),)), rs)


def _diagram_flip():
    # -w0 on GL_3 preserves Pi but is not in the Weyl group
    return MonomialAction((2, 1, 0), (-1, -1, -1))


def test_corrupted_w_is_detected():
    ident = MonomialAction.identity(3)
    d = _diagram_flip()
    rs = make_res_satake(cyclic_table(3), SplitTarget("GL", 3), None, [ident, d, d], validate=False)
    assert rs.cocycle_failures()
    with pytest.raises(CocycleDataInconsistent):
        res_beta_trivial(ResCharacter(((0, 0, 0),) * 3), rs)
    with pytest.raises(CocycleDataInconsistent):
        rs.validate()


def test_sign_flip_breaks_w_condition():
    rs = _opposition(SplitTarget("GL", 3))
    flipped = MonomialAction(rs.w[1].perm, tuple(-s for s in rs.w[1].signs))
    with pytest.raises(InvalidParams):
        make_res_satake(rs.table, SplitTarget("GL", 3), rs.galois, [rs.w[0], flipped])
    with pytest.raises(CocycleDataInconsistent):
        make_res_satake(rs.table, SplitTarget("GL", 3), rs.galois, [_diagram_flip(), rs.w[1]])


def test_bad_tables():
    for table in ([[0, 1], [0, 1]], [[1, 0], [0, 1]], [], [[0, 1, 2], [1, 0, 2], [2, 1, 0]]):
        with pytest.raises(InvalidParams):
            make_res_satake(table, SplitTarget("GL", 2))


def test_line_bundles():
    rs = res_complex(SplitTarget("GL", 3))
    lb = res_line_bundles(rs, rs.pi[:1], max_coord=1)
    assert lb.basis and all(pairing(rs.datum.coroot(rs.pi[0]), b) == 0 for b in lb.basis)
    for comps in lb.examples:
        assert res_conjugation(ResCharacter(comps), rs)
    assert len(res_line_bundles(rs, (), max_coord=1, limit=5).examples) == 5
    with pytest.raises(InvalidParams):
        res_line_bundles(rs, [(1, 1, 0)])


def test_json_and_tags():
    rs = _opposition(SplitTarget("SO", 5))
    assert res_from_json(json.dumps(rs.to_json())) == rs
    assert parse_res_tag("res:gl:3") == res_complex(SplitTarget("GL", 3))
    for bad in ("res:e:8", "gl:3", "res:gl:x"):
        with pytest.raises(ParseError):
            parse_res_tag(bad)
    with pytest.raises(ParseError):
        res_from_json("{not json")
    with pytest.raises(ParseError):
        res_from_json({"table": [[0]]})


def test_product_limit():
    rs = make_res_satake(cyclic_table(3), SplitTarget("GL", 5))
    with pytest.raises(InvalidParams):
        product_datum(rs)
