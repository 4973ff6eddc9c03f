import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bcpsat.instance import (
    BcpInstance,
    BmcpInstance,
    Coloring,
    InstanceError,
    bmcp_to_bcp,
    parse_bmcp,
    parse_col,
    reflect,
    validate,
    write_col,
)

from conftest import KITE_COLORING


def test_parse_minimal():
    inst = parse_col("p edge 2 1\ne 1 2 3")
    assert inst.n == 2
    assert inst.edges == ((0, 1, 3),)


def test_parse_kite():
    text = """c kite: A B C D
p edge 4 5
e 1 2 2
e 2 3 3
e 3 4 1
e 4 1 2
e 1 3 1
"""
    inst = parse_col(text)
    assert (inst.n, inst.m) == (4, 5)
    assert inst.edges == ((0, 1, 2), (0, 2, 1), (0, 3, 2), (1, 2, 3), (2, 3, 1))


def test_missing_weight_defaults_to_one():
    assert parse_col("p edge 3 2\ne 1 2\ne 2 3").edges == ((0, 1, 1), (1, 2, 1))


def test_duplicate_identical_edge_is_merged():
    assert parse_col("p edge 2 2\ne 1 2 3\ne 2 1 3").m == 1


@pytest.mark.parametrize(
    "text",
    [
        "p edge 2 1\ne 1 1 2",
        "p edge 2 1\ne 1 3 2",
        "p edge 2 1\ne 0 1 2",
        "p edge 2 1\ne 1 2 0",
        "p edge 2 2\ne 1 2 3\ne 2 1 4",
        "p edge two 1\n",
        "p cnf 2 1\n",
        "e 1 2 3\n",
        "",
        "p edge 2 1\nx 1 2\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(InstanceError):
        parse_col(text)


def test_constructor_invariants():
    with pytest.raises(InstanceError):
        BcpInstance(2, ((0, 0, 1),))
    with pytest.raises(InstanceError):
        BcpInstance(2, ((0, 2, 1),))
    with pytest.raises(InstanceError):
        BcpInstance(2, ((0, 1, 1), (1, 0, 1)))
    inst = BcpInstance(3, ((2, 0, 4),))
    assert inst.edges == ((0, 2, 4),)


def test_writer_format(kite):
    text = write_col(kite)
    lines = text.splitlines()
    assert lines[0].startswith("c")
    assert lines[1] == "p edge 4 5"
    assert lines[2:] == ["e 1 2 2", "e 1 3 1", "e 1 4 2", "e 2 3 3", "e 3 4 1"]


def test_validate_kite(kite):
    assert validate(kite, Coloring(KITE_COLORING)) == []
    assert validate(kite, Coloring((1, 2, 6, 4))) == [(0, 1, 2)]


def test_validate_all_equal():
    inst = BcpInstance(3, ((0, 1, 1), (1, 2, 1), (0, 2, 1)))
    assert len(validate(inst, [5, 5, 5])) == 3


def test_validate_wrong_size(kite):
    with pytest.raises(InstanceError):
        validate(kite, [1, 2])


def test_reflect_examples(kite):
    r = reflect(Coloring(KITE_COLORING), 6)
    assert r.color == (6, 4, 1, 3)
    assert validate(kite, r) == []
    assert reflect(Coloring((1,)), 1).color == (1,)
    pair = BcpInstance(2, ((0, 1, 3),))
    r = reflect(Coloring((1, 4)), 4)
    assert r.color == (4, 1) and validate(pair, r) == []
    with pytest.raises(InstanceError):
        reflect(Coloring((1, 7)), 6)


def test_coloring_span():
    assert Coloring((3, 1, 2)).span == 3
    with pytest.raises(InstanceError):
        Coloring((0, 1))


# -------------------------------------------------------------- BMCP


def test_bmcp_single_vertex_clique():
    b = BmcpInstance(1, (3,), {(0, 0): 2})
    inst, origin = bmcp_to_bcp(b)
    assert inst.n == 3
    assert inst.edges == ((0, 1, 2), (0, 2, 2), (1, 2, 2))
    assert origin == [0, 0, 0]


def test_bmcp_unit_demands_identity():
    b = BmcpInstance(2, (1, 1), {(0, 1): 5})
    inst, origin = bmcp_to_bcp(b)
    assert inst.edges == ((0, 1, 5),) and origin == [0, 1]


def test_bmcp_mixed():
    # u has two copies (0, 1), v is copy 2
    b = BmcpInstance(2, (2, 1), {(0, 0): 2, (0, 1): 1})
    inst, origin = bmcp_to_bcp(b)
    assert inst.edges == ((0, 1, 2), (0, 2, 1), (1, 2, 1))
    assert origin == [0, 0, 1]


def test_bmcp_missing_self_distance():
    with pytest.raises(InstanceError):
        bmcp_to_bcp(BmcpInstance(1, (2,), {}))


def test_parse_bmcp():
    b = parse_bmcp("p edge 2 2\nn 1 2\ne 1 1 2\ne 1 2 1\n")
    assert b.demand == (2, 1)
    assert b.dist == {(0, 0): 2, (0, 1): 1}


@st.composite
def bmcps(draw):
    n = draw(st.integers(1, 4))
    demand = tuple(draw(st.integers(1, 3)) for _ in range(n))
    dist = {(v, v): draw(st.integers(1, 4)) for v in range(n)}
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                dist[(u, v)] = draw(st.integers(1, 4))
    return BmcpInstance(n, demand, dist)


@given(bmcps())
def test_bmcp_sizes(b):
    inst, origin = bmcp_to_bcp(b)
    assert inst.n == sum(b.demand)
    for v, w in enumerate(b.demand):
        copies = {i for i, o in enumerate(origin) if o == v}
        intra = [e for e in inst.edges if e[0] in copies and e[1] in copies]
        assert len(intra) == w * (w - 1) // 2


# ------------------------------------------------------- properties


@st.composite
def instances(draw, max_n=7, max_d=5):
    n = draw(st.integers(1, max_n))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                edges.append((u, v, draw(st.integers(1, max_d))))
    return BcpInstance(n, tuple(edges))


@given(instances(), st.data())
def test_reflection_preserves_feasibility(inst, data):
    colors = tuple(data.draw(st.integers(1, 9)) for _ in range(inst.n))
    c = Coloring(colors)
    assert (validate(inst, c) == []) == (validate(inst, reflect(c, c.span)) == [])


@given(instances())
@settings(max_examples=50)
def test_col_round_trip(inst):
    once = parse_col(write_col(inst))
    assert once == inst
    assert parse_col(write_col(once)) == once
