from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rgdesign import design as dm
from rgdesign.design import (
    SYLVESTER_REMAINDER_BLOCKS,
    Design,
    neighborhood_blocks,
    pair_table,
    params,
    recover_graph,
    remainder_degrees,
    remainder_pairs,
    render_pair_table,
    trivial_design,
    verify,
)
from rgdesign.errors import DimensionMismatch, FormatError, GirthTooSmall, NotRegular, RecoveryFailed
from rgdesign.graph import cycle, disjoint_union, hoffman_singleton, path, petersen, sylvester

from .oracles import display_one_admissible, far_pairs, naive_check, to_nx

PAIRS_C9 = """\
  1 2 3 4 5 6 7 8
0 X X - - - - X X
1   X X - - - - X
2     X X - - - -
3       X X - - -
4         X X - -
5           X X -
6             X X
7               X
"""

PAIRS_C11 = """\
  1 2 3 4 5 6 7 8 9 A
0 X X - - - - - - X X
1   X X - - - - - - X
2     X X - - - - - -
3       X X - - - - -
4         X X - - - -
5           X X - - -
6             X X - -
7               X X -
8                 X X
9                   X
"""

PAIRS_C5_C6 = """\
  1 2 3 4 5 6 7 8 9 A
0 X X X X - - - - - -
1   X X X - - - - - -
2     X X - - - - - -
3       X - - - - - -
4         - - - - - -
5           X X - X X
6             X X - X
7               X X -
8                 X X
9                   X
"""


def sylvester_design():
    g = sylvester()
    return Design(36, 5, tuple(neighborhood_blocks(g)) + SYLVESTER_REMAINDER_BLOCKS), g


# ---------------------------------------------------------------- params

def test_params_examples():
    p = params(36, 5)
    assert (p.k, p.b, p.r, p.remainder_count, p.admissible) == (6, 48, 8, 12, True)
    p = params(10, 3)
    assert (p.b, p.r, p.remainder_count, p.admissible) == (10, 4, 0, True)
    p = params(9, 2)
    assert (p.b, p.remainder_count, p.admissible) == (15, 6, True)
    assert not params(12, 2).admissible


def test_params_degenerate_and_moore():
    assert params(1, 0).admissible and params(1, 0).b == 0
    assert not params(2, 0).admissible
    p = params(3250, 57)
    assert p.admissible and p.remainder_count == 0
    with pytest.raises(ValueError):
        params(0, 2)


@given(st.integers(1, 400), st.integers(1, 12))
def test_params_identities(n, delta):
    p = params(n, delta)
    assert p.admissible == display_one_admissible(n, delta)
    if p.admissible:
        assert p.b * p.k == n * p.r
        assert p.b == n + p.remainder_count


def test_admissibility_reductions():
    for n in range(1, 301):
        assert params(n, 2).admissible == (n >= 5 and n % 6 in (3, 5))
        assert params(n, 3).admissible == (n >= 10 and n % 6 == 4)


# ---------------------------------------------------------------- B_N and P_R

def test_neighbourhood_blocks():
    assert neighborhood_blocks(cycle(5)) == [(0, 1, 4), (0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4)]
    blocks = neighborhood_blocks(petersen())
    assert len(blocks) == 10
    for e in petersen().edges:
        assert sum(1 for b in blocks if set(e) <= set(b)) == 2
    with pytest.raises(GirthTooSmall):
        neighborhood_blocks(cycle(4))
    with pytest.raises(NotRegular):
        neighborhood_blocks(path(4))


def test_remainder_pairs():
    rp = remainder_pairs(cycle(9))
    assert len(rp) == 18 and (0, 5) in rp
    assert remainder_pairs(cycle(5)) == set()
    assert len(remainder_pairs(sylvester())) == 180
    for g in [cycle(13), petersen(), disjoint_union(cycle(6), cycle(7)), sylvester()]:
        assert remainder_pairs(g) == far_pairs(g)


# ---------------------------------------------------------------- verify

def test_sylvester_design_verifies():
    d, g = sylvester_design()
    assert verify(d, g).ok
    assert naive_check(36, g.edges, d.blocks)
    assert (d.n, d.b, d.k) == (36, 48, 6)


def test_verify_missing_block():
    d, g = sylvester_design()
    gone = d.with_blocks(b for b in d.blocks if b != (0, 2, 10, 18, 26, 34))
    rep = verify(gone, g)
    assert rep.count("pair-undercovered") == 15
    assert not rep.ok


def test_verify_duplicated_block():
    d, g = sylvester_design()
    twice = d.with_blocks(d.blocks + ((0, 2, 10, 18, 26, 34),))
    rep = verify(twice, g)
    assert rep.count("duplicate-block") == 1
    assert rep.count("pair-overcovered") == 15


def test_verify_wrong_block_size_and_mismatch():
    d, g = sylvester_design()
    bad = d.with_blocks(d.blocks[:-1] + ((0, 1),))
    assert verify(bad, g).count("block-size") == 1
    with pytest.raises(DimensionMismatch):
        verify(d, cycle(36))
    with pytest.raises(DimensionMismatch):
        verify(d, petersen())


def test_design_rejects_out_of_range():
    with pytest.raises(ValueError):
        Design(5, 2, ((0, 1, 5),))


def test_trivial_designs():
    d, g = trivial_design(1, 0)
    assert d.blocks == () and verify(d, g).ok
    for n in (2, 4, 8):
        d, g = trivial_design(n, 1)
        assert verify(d, g).ok
        assert naive_check(n, g.edges, d.blocks)


def test_remainder_degrees_are_constant():
    d, g = sylvester_design()
    assert remainder_degrees(d, g) == [36 - 25 - 1] * 36


# ---------------------------------------------------------------- pair tables

@pytest.mark.parametrize("g,expected", [
    (cycle(9), PAIRS_C9),
    (cycle(11), PAIRS_C11),
    (disjoint_union(cycle(5), cycle(6)), PAIRS_C5_C6),
])
def test_pair_table_rendering(g, expected):
    assert render_pair_table(pair_table(g)) == expected


def test_pair_table_classes():
    for g, delta in [(cycle(9), 2), (petersen(), 3), (sylvester(), 5)]:
        t = pair_table(g)
        n = g.n
        assert t.count(dm.EDGE) == n * delta // 2
        assert t.count(dm.REMAINDER) == n * (n - delta * delta - 1) // 2
        assert sum(t.count(c) for c in (dm.EDGE, dm.NEIGHBOURHOOD, dm.REMAINDER)) == n * (n - 1) // 2
    assert "-" not in render_pair_table(pair_table(cycle(5)))


# ---------------------------------------------------------------- recovery and formats

def test_recover_graph():
    d, g = sylvester_design()
    assert recover_graph(d) == g
    pd = Design(10, 3, tuple(neighborhood_blocks(petersen())))
    assert recover_graph(pd) == petersen()
    hs = hoffman_singleton()
    hd = Design(50, 7, tuple(neighborhood_blocks(hs)))
    assert verify(hd, hs).ok and recover_graph(hd) == hs


def test_recover_graph_failures():
    d, _ = sylvester_design()
    with pytest.raises(RecoveryFailed):
        recover_graph(d.with_blocks(d.blocks[1:]))
    with pytest.raises(RecoveryFailed):
        recover_graph(d.with_blocks(d.blocks + (d.blocks[0],)))
    # K4 blocks of a 4-cycle-like structure: doubled pairs form C4, girth 4
    c4 = Design(4, 2, ((0, 1, 3), (0, 1, 2), (1, 2, 3), (0, 2, 3)))
    with pytest.raises(RecoveryFailed):
        recover_graph(c4)


def test_text_and_json_round_trip():
    d, _ = sylvester_design()
    assert dm.from_text(dm.to_text(d)) == d
    assert dm.from_json(dm.to_json(d)) == d
    assert dm.from_text("# comment\n5 2\n0 1 4\n\n0 1 2\n").blocks == ((0, 1, 2), (0, 1, 4))
    with pytest.raises(FormatError):
        dm.from_text("5\n0 1 2\n")
    with pytest.raises(FormatError):
        dm.from_text("5 2\n0 a 2\n")
    with pytest.raises(FormatError):
        dm.from_json('{"n": 5}')


def test_neighbourhood_design_is_isomorphism_invariant():
    # relabelling the host graph relabels the design and verification still passes
    g = petersen()
    perm = [3, 7, 1, 0, 9, 2, 8, 4, 6, 5]
    h = g.relabel(perm)
    d = Design(10, 3, tuple(neighborhood_blocks(h)))
    assert verify(d, h).ok
    assert nx.is_isomorphic(to_nx(recover_graph(d)), nx.petersen_graph())


def test_all_pairs_accounted_for_in_cycle_designs():
    g = cycle(9)
    covered = {p for b in neighborhood_blocks(g) for p in combinations(b, 2)}
    assert covered | remainder_pairs(g) == set(combinations(range(9), 2))
