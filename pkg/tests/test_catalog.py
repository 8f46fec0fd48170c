"""Built-in group tables: validity, structure constants, subgroup lattices."""

import pytest

from convreg import (
    builtin_group,
    builtin_names,
    cayley_text,
    enumerate_group,
    is_abelian,
    load_group,
    order,
    subgroups_of,
    uniform_on,
    convolve,
)

EXPECTED_ORDERS = {"Z2": 2, "Z3": 3, "Z4": 4, "V4": 4, "S3": 6, "D4": 8, "Q8": 8}
EXPECTED_SUBGROUP_COUNTS = {"Z2": 2, "Z3": 2, "Z4": 3, "V4": 5, "S3": 6, "D4": 10, "Q8": 6}
EXPECTED_ABELIAN = {"Z2": True, "Z3": True, "Z4": True, "V4": True, "S3": False, "D4": False, "Q8": False}


def test_names_cover_expectations():
    assert set(builtin_names()) == set(EXPECTED_ORDERS)


def test_tables_load_through_the_validating_parser():
    for name in builtin_names():
        g = load_group(cayley_text(name))
        assert g.order == EXPECTED_ORDERS[name]


def test_unknown_name_rejected():
    with pytest.raises(KeyError):
        cayley_text("Z5")


def test_element_orders_q8():
    q8 = builtin_group("Q8")
    # index 0 = 1, 1 = -1, then +/-i, +/-j, +/-k.
    assert order(q8.element(0)) == 1
    assert order(q8.element(1)) == 2
    for idx in range(2, 8):
        assert order(q8.element(idx)) == 4


def test_q8_hamilton_product():
    q8 = builtin_group("Q8")
    i, j, k = q8.element(2), q8.element(4), q8.element(6)
    minus_one = q8.element(1)
    assert i * j == k
    assert j * i == k.inverse()
    assert i * i == minus_one
    assert (i * j) * k == minus_one


def test_d4_structure():
    d4 = builtin_group("D4")
    orders = sorted(order(el) for el in enumerate_group(d4))
    assert orders == [1, 2, 2, 2, 2, 2, 4, 4]


def test_abelian_flags():
    for name in builtin_names():
        assert is_abelian(builtin_group(name)) == EXPECTED_ABELIAN[name]


def test_subgroup_counts():
    for name in builtin_names():
        subs = subgroups_of(builtin_group(name))
        assert len(subs) == EXPECTED_SUBGROUP_COUNTS[name], name


def test_subgroups_are_closed_and_contain_identity():
    for name in builtin_names():
        g = builtin_group(name)
        for sub in subgroups_of(g):
            assert sub[0] == 0
            members = set(sub)
            assert all(g.table[i][j] in members for i in sub for j in sub)


def test_subgroup_uniform_measures_are_idempotent():
    for name in builtin_names():
        g = builtin_group(name)
        for sub in subgroups_of(g):
            mu = uniform_on(g, [g.element(i) for i in sub])
            assert convolve(mu, mu) == mu


def test_subgroup_enumeration_bails_out_beyond_sixteen():
    big = [[(i + j) % 17 for j in range(17)] for i in range(17)]
    from convreg import CayleyGroup

    with pytest.raises(ValueError):
        subgroups_of(CayleyGroup(big))
