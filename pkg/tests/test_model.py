"""Tests for spec validation and derived counting parameters."""

import pytest
from hypothesis import given

from catspectra.model import EmptySpec, NegativeLegCount, derive_params, validate_spec

from conftest import leg_counts


def test_validate_accepts_worked_example():
    spec = validate_spec((4, 9, 0, 1))
    assert spec.q == (4, 9, 0, 1)
    assert spec.k == 4
    assert spec.canonical


def test_validate_coerces_to_ints():
    spec = validate_spec([2, 0, 3])
    assert spec.q == (2, 0, 3)


@pytest.mark.parametrize(
    "q",
    [(3,), (0,), (1, 1), (0, 0)],
)
def test_degenerate_specs_are_accepted_but_not_canonical(q):
    spec = validate_spec(q)
    assert not spec.canonical


def test_canonical_needs_k2_and_n5():
    # k=2, n=5 is the smallest canonical caterpillar
    assert validate_spec((2, 1)).canonical
    assert validate_spec((1, 2)).canonical
    assert not validate_spec((1, 1)).canonical  # n=4
    assert not validate_spec((5,)).canonical    # k=1


def test_validate_rejects_negative():
    with pytest.raises(NegativeLegCount):
        validate_spec((2, -1))


def test_validate_rejects_empty():
    with pytest.raises(EmptySpec):
        validate_spec(())


def test_derived_params_worked_example():
    p = derive_params(validate_spec((4, 9, 0, 1)))
    assert p.delta == (1, 1, 0, 1)
    assert p.qplus == (4, 9, 1, 1)
    assert p.n == 18
    assert p.a == 11
    assert p.b == 1
    assert p.dim_c == 7


def test_derived_params_all_zero_legs():
    p = derive_params(validate_spec((0, 0, 0)))
    assert p.n == 3
    assert p.a == 0
    assert p.b == 3
    assert p.dim_c == 5


@given(leg_counts())
def test_derived_identities(q):
    spec = validate_spec(q)
    p = derive_params(spec)
    k = len(q)
    assert p.n == sum(q) + k
    assert p.dim_c == 2 * k - 1
    # a counts legs beyond the first at each spine vertex, b counts bare ones
    assert p.a == sum(x - 1 for x in q if x > 0)
    assert p.b == sum(1 for x in q if x == 0)
    assert p.a + p.b + sum(p.delta) == sum(q) + sum(1 for x in q if x == 0)
    assert all(qp == max(1, x) for qp, x in zip(p.qplus, q))
    assert spec.canonical == (k >= 2 and p.n >= 5)
