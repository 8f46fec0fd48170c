"""Cayley-table and permutation backends: arithmetic, parsing, budgets."""

import random

import pytest

from convreg import (
    BackendMismatch,
    CapExceeded,
    CayleyGroup,
    ClosureBudgetExceeded,
    GrigorchukGroup,
    NotAGroup,
    OrderBudgetExceeded,
    ParseError,
    PermGroup,
    closure,
    enumerate_group,
    identity,
    inverse,
    load_cayley,
    load_group,
    load_perm,
    multiply,
    order,
)

Z2_TEXT = "cayley 2\n0 1\n1 0\n"
Z4_TEXT = "cayley 4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n"
S3_PERM_TEXT = "perm 3\n(0 1)\n(0 1 2)\n"


def z4():
    return load_cayley(Z4_TEXT)


# ---------------------------------------------------------------------------
# Cayley backend


def test_load_cayley_z2():
    g = load_cayley(Z2_TEXT)
    assert g.order == 2
    assert g.identity() == g.element(0)


def test_cayley_multiply_and_inverse():
    g = z4()
    assert multiply(g.element(1), g.element(3)) == g.element(0)
    assert inverse(g.element(3)) == g.element(1)
    assert identity(g) == g.element(0)


def test_cayley_rejects_repeated_row():
    with pytest.raises(NotAGroup):
        load_cayley("cayley 2\n0 1\n0 1\n")


def test_cayley_rejects_identity_off_zero():
    # Rows/columns are permutations but index 0 is not the identity.
    with pytest.raises(NotAGroup):
        load_cayley("cayley 2\n1 0\n0 1\n")


def test_cayley_rejects_non_associative_table():
    # Each row and column is a permutation fixing index 0 as identity, but
    # (1*1)*2 != 1*(1*2) under this table.
    text = "cayley 5\n" + "\n".join(
        " ".join(str(v) for v in row)
        for row in [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
    )
    with pytest.raises(NotAGroup):
        load_cayley(text)


def test_cayley_parse_element_bounds():
    g = z4()
    assert g.parse_element("2") == g.element(2)
    assert g.parse_element("e") == g.identity()
    with pytest.raises(ParseError):
        g.parse_element("4")
    with pytest.raises(ParseError):
        g.parse_element("x")


def test_cayley_order_values():
    g = z4()
    assert order(g.element(1)) == 4
    assert order(g.element(2)) == 2
    assert order(g.identity()) == 1


# ---------------------------------------------------------------------------
# Permutation backend


def test_perm_cycle_parsing_roundtrip():
    g = PermGroup(5)
    el = g.parse_element("(0 1 2)(3 4)")
    assert el.payload == (1, 2, 0, 4, 3)
    assert str(el) == "(0 1 2)(3 4)"
    assert str(g.identity()) == "e"


def test_perm_cycles_compose_leftmost_last():
    g = PermGroup(3)
    # (0 1)(1 2) maps 2 -> 1 -> 0 via the right cycle first.
    el = g.parse_element("(0 1)(1 2)")
    assert el.payload == (1, 2, 0)


def test_perm_multiply_involution():
    g = PermGroup(3)
    t = g.parse_element("(0 1)")
    assert multiply(t, t) == g.identity()


def test_perm_inverse():
    g = PermGroup(3)
    el = g.element((1, 2, 0))
    assert inverse(el) == g.element((2, 0, 1))


def test_perm_order_lcm_of_cycles():
    g = PermGroup(5)
    assert order(g.parse_element("(0 1 2)(3 4)")) == 6


def test_perm_parse_rejects_bad_cycles():
    g = PermGroup(3)
    for bad in ["(0 3)", "(0 0)", "0 1", "(", "(0 1"]:
        with pytest.raises(ParseError):
            g.parse_element(bad)


def test_load_perm_s3():
    g = load_perm(S3_PERM_TEXT)
    assert g.degree == 3
    assert len(enumerate_group(g)) == 6


# ---------------------------------------------------------------------------
# Cross-backend rules and budgets


def test_cross_backend_multiplication_rejected():
    a = z4().element(1)
    b = PermGroup(3).parse_element("(0 1)")
    with pytest.raises(BackendMismatch):
        multiply(a, b)


def test_elements_of_distinct_group_objects_do_not_mix():
    g1, g2 = z4(), z4()
    with pytest.raises(BackendMismatch):
        multiply(g1.element(1), g2.element(1))


def test_order_budget_exceeded():
    g = z4()
    with pytest.raises(OrderBudgetExceeded):
        order(g.element(1), cap=3)


def test_closure_generates_subgroup():
    g = z4()
    elems = closure(g, [g.element(2)])
    assert [el.payload for el in elems] == [0, 2]


def test_closure_budget():
    g = GrigorchukGroup()
    with pytest.raises(ClosureBudgetExceeded):
        closure(g, [g.element("a"), g.element("b"), g.element("c")], cap=50)


def test_enumerate_group_cap():
    g = GrigorchukGroup()
    with pytest.raises(CapExceeded):
        enumerate_group(g, cap=100)


# ---------------------------------------------------------------------------
# File parsing edges


def test_load_group_dispatches_on_header():
    assert isinstance(load_group(Z2_TEXT), CayleyGroup)
    assert isinstance(load_group(S3_PERM_TEXT), PermGroup)
    assert isinstance(load_group("# comment\ngrigorchuk\n"), GrigorchukGroup)
    with pytest.raises(ParseError):
        load_group("lattice 3\n")


def test_comments_and_blank_lines_ignored():
    g = load_cayley("# Z2\n\ncayley 2\n0 1\n# middle\n1 0\n")
    assert g.order == 2


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        load_cayley("cayley 2\n0 1\n1 x\n")
    assert "line 3" in str(err.value)


def test_non_ascii_rejected():
    with pytest.raises(ParseError):
        load_cayley("cayley 2\n0 1\n1 0 é\n")


# ---------------------------------------------------------------------------
# Random properties


def test_random_associativity_and_inverses():
    rng = random.Random(60601)
    groups = [z4(), load_perm(S3_PERM_TEXT)]
    for g in groups:
        elems = enumerate_group(g)
        for _ in range(80):
            a, b, c = (rng.choice(elems) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * a.inverse() == g.identity()
            assert a.inverse() * a == g.identity()


def test_order_divides_cyclic_subgroup_size():
    rng = random.Random(2)
    for g in [z4(), load_perm(S3_PERM_TEXT)]:
        for el in enumerate_group(g):
            n = order(el)
            assert len(closure(g, [el])) == n
            power = g.identity()
            for _ in range(n):
                power = power * el
            assert power == g.identity()
