import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagdescent.errors import InvalidParams
from flagdescent.exactnum import I, GaussianRational, classify_scalar
from flagdescent.linalg import ExactMatrix, block_diag, named_matrix, star

small = st.builds(GaussianRational, st.integers(-4, 4), st.integers(-4, 4))


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n).map(ExactMatrix)


def test_named_examples():
    assert named_matrix("J", 1) == ExactMatrix([[0, 1], [-1, 0]])
    assert named_matrix("g2") == ExactMatrix([[1, -I], [-I, 1]])
    k3 = named_matrix("K", 3)
    assert k3 == ExactMatrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert (k3 * k3).is_identity()


def test_star_examples():
    assert star(ExactMatrix([[I]])) == ExactMatrix([[-I]])
    g2 = named_matrix("g2")
    assert star(g2) * g2 == ExactMatrix.identity(2) * 2
    assert star(ExactMatrix.identity(3)) == ExactMatrix.identity(3)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_involution_identities(n):
    j = named_matrix("J", n)
    assert j.det() == 1
    assert j * j == -ExactMatrix.identity(2 * n)
    assert (named_matrix("K", n) ** 2).is_identity()
    for m in (n, n + 1, 2 * n):
        assert (named_matrix("S", m) ** 2).is_identity()
        assert (named_matrix("S'", m) ** 2).is_identity()


@pytest.mark.parametrize("p,q", [(1, 0), (0, 2), (2, 1), (3, 3)])
def test_ipq_squares(p, q):
    assert (named_matrix("Ipq", (p, q)) ** 2).is_identity()
    assert named_matrix("Ipqpq", (p, q)).shape == (2 * (p + q), 2 * (p + q))


def _conjugators():
    yield named_matrix("g2")
    for m in range(1, 7):
        yield named_matrix("g", m)
    for n in range(1, 4):
        yield named_matrix("g'", n)
    for p, q in itertools.product(range(4), repeat=2):
        if p + q:
            yield named_matrix("gpq", (p, q))


def test_conjugator_determinants_are_units():
    count = 0
    for g in _conjugators():
        flags = classify_scalar(g.det())
        assert flags["is_unit_of_dyadic_gaussian"], g
        assert (g.inverse() * g).is_identity()
        count += 1
    assert count > 20


def test_gpq_covers_all_parities():
    shapes = {(p % 2, q % 2) for p, q in itertools.product(range(1, 4), repeat=2)}
    assert shapes == {(0, 0), (0, 1), (1, 0), (1, 1)}
    for p, q in itertools.product(range(1, 4), repeat=2):
        assert named_matrix("gpq", (p, q)).shape == (p + q, p + q)


@pytest.mark.parametrize("name,params", [("J", 0), ("K", -1), ("S", 0), ("gpq", (0, 0)),
                                         ("nope", ()), ("J", (1, 2)), ("g2", 1)])
def test_named_invalid(name, params):
    with pytest.raises(InvalidParams):
        named_matrix(name, params)


@settings(max_examples=60)
@given(square(3))
def test_inverse_exact(m):
    if m.det() == 0:
        with pytest.raises(ZeroDivisionError):
            m.inverse()
    else:
        assert (m.inverse() * m).is_identity()
        assert (m * m.inverse()).is_identity()


@settings(max_examples=60)
@given(square(3), square(3))
def test_det_multiplicative_and_star(a, b):
    assert (a * b).det() == a.det() * b.det()
    assert star(a * b) == star(b) * star(a)
    assert star(star(a)) == a
    assert (a * b).T == b.T * a.T


def test_det_by_permutation_expansion():
    m = ExactMatrix([[1, 2 * I, 0, 3], [0, 1, 1, -1], [I, 0, 2, 1], [1, 1, 1, 1 + I]])
    total = GaussianRational(0)
    for perm in itertools.permutations(range(4)):
        sign = 1
        for i, j in itertools.combinations(range(4), 2):
            if perm[i] > perm[j]:
                sign = -sign
        term = GaussianRational(sign)
        for i in range(4):
            term = term * m[i, perm[i]]
        total = total + term
    assert m.det() == total


def test_block_diag_and_json():
    m = block_diag(named_matrix("J", 1), ExactMatrix([[I]]))
    assert m.shape == (3, 3)
    assert m[2, 2] == I and m[0, 1] == 1
    data = json.loads(json.dumps(m.to_json()))
    assert ExactMatrix.from_json(data) == m


def test_scalar_and_shape_errors():
    m = ExactMatrix.identity(2)
    assert (m * 3)[1, 1] == 3 and (3 * m)[0, 0] == 3
    with pytest.raises(Exception):
        m * ExactMatrix.identity(3)
