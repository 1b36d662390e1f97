import networkx as nx
import pytest

from rgdesign import develop as dv
from rgdesign.design import params, recover_graph, verify
from rgdesign.develop import BaseBlockSet, builtin_orders, builtin_table, develop, is_short_orbit, orbit, orbit_length
from rgdesign.errors import DuplicateBlock, FormatError, UnknownTable
from rgdesign.graph import girth, is_connected, regularity

from .oracles import naive_check, to_nx


def brute_orbit(block, n, s):
    """All distinct translates by multiples of s."""
    return {tuple(sorted((x + t * s) % n for x in block)) for t in range(n)}


def test_orbit_examples():
    assert orbit_length((0, 5, 10), 15, 5) == 1
    assert len(orbit((0, 1, 4), 5, 1)) == 5
    assert orbit_length((0, 10, 20, 30), 40, 4) == 5
    assert is_short_orbit((0, 10, 20, 30), 40, 4)
    assert not is_short_orbit((0, 1, 4), 5, 1)


@pytest.mark.parametrize("block,n,s", [((0, 1, 4), 5, 1), ((0, 5, 10), 15, 5), ((0, 10, 20, 30), 40, 4),
                                       ((0, 3, 7), 21, 3), ((1, 2, 9), 12, 2)])
def test_orbit_matches_brute_force(block, n, s):
    assert set(orbit(block, n, s)) == brute_orbit(block, n, s)


def test_develop_small_tables():
    d = develop(builtin_table(10, "delta3"))
    assert (d.n, d.b, d.delta) == (10, 10, 3)
    assert nx.is_isomorphic(to_nx(recover_graph(d)), nx.petersen_graph())
    assert develop(builtin_table(40, "delta3")).b == 140
    assert develop(builtin_table(15, "delta2")).b == 40


def test_builtin_examples():
    t = builtin_table(17, "delta2")
    assert t.s == 1 and set(t.base_blocks) == {(0, 1, 16), (0, 4, 10), (0, 3, 8)}
    t = builtin_table(46, "delta3")
    assert t.s == 2 and len(t.base_blocks) == 8 and t.base_blocks[0] == (0, 1, 2, 44)
    t = builtin_table(105, "delta4")
    assert t.s == 3 and len(t.base_blocks) == 17
    assert t.base_blocks[-1] == (0, 21, 42, 63, 84)
    assert t.short_orbits() == [(0, 21, 42, 63, 84)]
    with pytest.raises(UnknownTable):
        builtin_table(11, "delta2")
    with pytest.raises(UnknownTable):
        builtin_table(10, "delta7")


def test_builtin_index():
    d2 = [o for o, _ in builtin_orders("delta2")]
    assert d2 == [5, 15, 17, 21, 23, 27, 29, 33, 39]
    d3 = [o for o, _ in builtin_orders("delta3")]
    assert d3 == [10] + list(range(40, 203, 6))
    assert [o for o, _ in builtin_orders("delta4")] == [105, 117]


@pytest.mark.parametrize("order,family", builtin_orders("delta2"))
def test_delta2_tables_give_cycles(order, family):
    d = develop(builtin_table(order, family))
    g = recover_graph(d)
    assert regularity(g) == 2 and is_connected(g)
    assert naive_check(order, g.edges, d.blocks)


def test_develop_collisions():
    with pytest.raises(DuplicateBlock):
        develop(dv.from_text("15 5\n0 5 10\n0 5 10\n"))
    with pytest.raises(DuplicateBlock):
        develop(BaseBlockSet(7, 1, ((0, 1, 3), (1, 2, 4))))


def test_base_block_text():
    t = dv.from_text("5 1\n0 1 4\n")
    assert t == BaseBlockSet(5, 1, ((0, 1, 4),))
    for order, family in builtin_orders():
        t = builtin_table(order, family)
        assert dv.from_text(dv.to_text(t)) == t
    assert dv.from_text("# c\n10 2\n0,1,2,8\n1, 0, 5, 7\n").base_blocks[1] == (0, 1, 5, 7)
    for bad in ["", "5\n0 1 4\n", "5 1\n0 1\n0 1 4\n", "5 1\n0 x 4\n", "5 1\n0 1 9\n"]:
        with pytest.raises(FormatError):
            dv.from_text(bad)


def test_block_counts_follow_formula():
    for order, family in builtin_orders():
        t = builtin_table(order, family)
        delta = t.block_size - 1
        assert sum(orbit_length(b, order, t.s) for b in t.base_blocks) == params(order, delta).b


def test_order_117():
    d = develop(builtin_table(117, "delta4"))
    g = recover_graph(d)
    assert verify(d, g).ok and girth(g) == 6 and is_connected(g)
