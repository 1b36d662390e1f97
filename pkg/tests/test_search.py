from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rgdesign.design import verify
from rgdesign.errors import GenerationFailed, GirthTooSmall, PreconditionViolated
from rgdesign.graph import (
    cycle,
    disjoint_union,
    generalized_petersen,
    girth,
    hoffman_singleton,
    petersen,
    regularity,
    sylvester,
    to_graph6,
)
from rgdesign.search import (
    Status,
    algorithm_a,
    algorithm_b,
    algorithm_c,
    algorithm_d,
    batch,
    candidate_blocks,
    cover_instance,
    exact_cover,
    parse_pipeline,
    random_regular_girth5,
    triple_partitions,
)
from rgdesign.search.certificate import check_weight_certificate, weight_certificate
from rgdesign.search.cover import ExactCover, default_budget
from rgdesign.search.randgraph import short_cycle_defect

from .oracles import brute_force_exists, far_pairs


def brute_covers(ncols, rows):
    """Every subset of rows that covers each column exactly once."""
    out = []
    for k in range(len(rows) + 1):
        for chosen in combinations(range(len(rows)), k):
            cells = [c for r in chosen for c in rows[r]]
            if sorted(cells) == list(range(ncols)):
                out.append(list(chosen))
    return out


@st.composite
def cover_problems(draw):
    ncols = draw(st.integers(1, 7))
    rows = draw(st.lists(st.sets(st.integers(0, ncols - 1), min_size=1), max_size=9))
    return ncols, [sorted(r) for r in rows]


# ---------------------------------------------------------------- exact cover core

@settings(max_examples=150, deadline=None)
@given(cover_problems())
def test_exact_cover_matches_brute_force(problem):
    ncols, rows = problem
    solver = ExactCover(ncols, rows)
    assert sorted(solver.solutions()) == sorted(brute_covers(ncols, rows))


@settings(max_examples=150, deadline=None)
@given(cover_problems())
def test_weight_certificates_are_sound(problem):
    ncols, rows = problem
    w = weight_certificate(ncols, rows)
    if w is not None:
        assert check_weight_certificate(ncols, rows, w)
        assert brute_covers(ncols, rows) == []


def test_certificate_checker_rejects_bad_weights():
    rows = [[0, 1], [1, 2]]
    assert not check_weight_certificate(3, rows, [1, 1, 1])
    assert not check_weight_certificate(3, rows, [-1, -1])
    assert check_weight_certificate(3, rows, [1, -1, 1]) is False
    assert check_weight_certificate(3, rows, [-2, 2, -2])


def test_budget_and_env(monkeypatch):
    monkeypatch.setenv("RGD_BUDGET", "7")
    assert default_budget() == 7
    monkeypatch.delenv("RGD_BUDGET")
    assert default_budget() > 10 ** 6
    out = exact_cover(disjoint_union(cycle(6), cycle(9)), budget=5, certify=False)
    assert out.status is Status.INCONCLUSIVE


# ---------------------------------------------------------------- candidates

@pytest.mark.parametrize("g", [cycle(9), cycle(11), cycle(17), disjoint_union(cycle(5), cycle(6)), petersen(),
                               generalized_petersen(13, 5), sylvester()])
def test_candidates_match_brute_force(g):
    delta = regularity(g)
    far = far_pairs(g)
    expected = [b for b in combinations(range(g.n), delta + 1) if all(p in far for p in combinations(b, 2))]
    cs = candidate_blocks(g)
    assert [b for b, _ in cs.candidates] == expected
    assert set(cs.universe) == far


def test_candidates_need_girth():
    with pytest.raises(GirthTooSmall):
        candidate_blocks(cycle(4))


# ---------------------------------------------------------------- algorithms

def test_algorithm_a():
    out = algorithm_a(cycle(9))
    assert out.status is Status.NOT_EXISTS and out.witness == (0, 5)
    assert out.describe().startswith("NotExists stage=A witness={0,5}")
    assert algorithm_a(cycle(17)).status is Status.INCONCLUSIVE


def test_algorithm_b_instance():
    inst = cover_instance(candidate_blocks(cycle(17)))
    assert inst.incidence.shape == (len(inst.rows), len(inst.columns))
    assert inst.incidence.dtype == np.uint8
    assert set(inst.incidence.sum(axis=0).tolist()) == {3}
    out = algorithm_b(cycle(17))
    assert out.status is Status.EXISTS and verify(out.design, cycle(17)).ok
    assert algorithm_b(cycle(9)).witness == (0, 5)


def test_algorithm_c():
    out = algorithm_c(cycle(9))
    assert out.status is Status.NOT_EXISTS and out.nodes == 3 == comb(4, 2) // 2
    with pytest.raises(PreconditionViolated):
        algorithm_c(cycle(11))


def test_algorithm_d_precondition():
    with pytest.raises(PreconditionViolated):
        algorithm_d(petersen())


def test_triple_partitions_count():
    # (3m)! / ((3!)^m m!)
    assert sum(1 for _ in triple_partitions(range(6))) == 10
    assert sum(1 for _ in triple_partitions(range(9))) == 280
    parts = list(triple_partitions(range(12)))
    assert len(parts) == 15400 and len(set(parts)) == 15400
    with pytest.raises(ValueError):
        list(triple_partitions(range(4)))


def test_exact_cover_modes():
    out = exact_cover(sylvester(), "first")
    assert out.status is Status.EXISTS and verify(out.design, sylvester()).ok
    assert exact_cover(sylvester(), "count").count == exact_cover(sylvester(), "count").count == 1
    assert exact_cover(cycle(5)).status is Status.EXISTS
    assert exact_cover(hoffman_singleton()).status is Status.EXISTS
    assert exact_cover(cycle(9), "count").count == 0
    with pytest.raises(ValueError):
        exact_cover(cycle(5), "all")


def test_certificate_agrees_with_plain_search():
    for g in [cycle(9), cycle(11), disjoint_union(cycle(5), cycle(6)), disjoint_union(cycle(6), cycle(9)),
              disjoint_union(cycle(7), cycle(8))]:
        assert exact_cover(g).status is exact_cover(g, certify=False).status is Status.NOT_EXISTS


@pytest.mark.parametrize("n", range(5, 12))
def test_small_cycles_against_brute_force(n):
    assert (exact_cover(cycle(n)).status is Status.EXISTS) == brute_force_exists(cycle(n), 2)


def test_consistency_on_gp():
    # 3-regular girth >= 5 generalized Petersen graphs: B and cover agree, A refutes only if cover does
    for n, k in [(10, 2), (12, 5), (13, 5), (14, 3)]:
        g = generalized_petersen(n, k)
        if girth(g) < 5:
            continue
        cover = exact_cover(g).status
        assert algorithm_b(g).status is cover
        if algorithm_a(g).status is Status.NOT_EXISTS:
            assert cover is Status.NOT_EXISTS


# ---------------------------------------------------------------- random graphs

@pytest.mark.parametrize("n,delta,seed", [(22, 3, 0), (22, 3, 1), (25, 4, 0), (30, 3, 5), (40, 5, 2)])
def test_random_regular_girth5(n, delta, seed):
    g = random_regular_girth5(n, delta, seed)
    assert g.n == n and regularity(g) == delta and girth(g) >= 5
    assert random_regular_girth5(n, delta, seed) == g


def test_random_regular_errors():
    for args in [(7, 3, 0), (9, 3, 0), (4, 4, 0)]:
        with pytest.raises(GenerationFailed):
            random_regular_girth5(*args)


def test_short_cycle_defect():
    adj = lambda g: [set(a) for a in g.adjacency]  # noqa: E731
    assert short_cycle_defect(adj(petersen())) == 0
    assert short_cycle_defect(adj(cycle(4))) > 0
    assert short_cycle_defect(adj(cycle(3))) > 0


# ---------------------------------------------------------------- batch

def test_batch_mixed_stream():
    lines = [to_graph6(cycle(9)), to_graph6(cycle(17)), "", "not graph6!", to_graph6(cycle(4)),
             to_graph6(disjoint_union(cycle(7), cycle(10)))]
    rep = batch(lines, "a,cover")
    outcomes = [r.outcome for r in rep.records]
    assert outcomes == ["NotExists", "Exists", "Error", "Skipped", "NotExists"]
    assert rep.records[0].stage == "A" and rep.records[4].stage == "cover"
    assert rep.summary() == "# summary exists=1 notexists=2 inconclusive=0 errors=1 skipped=1"
    assert rep.render().splitlines()[0].split("\t")[:5] == ["0", "9", "2", "NotExists", "A"]


def test_batch_parallel_matches_serial():
    lines = [to_graph6(cycle(n)) for n in (9, 11, 17, 23)]
    strip = lambda rep: [(r.index, r.outcome, r.stage) for r in rep.records]  # noqa: E731
    assert strip(batch(lines, ["cover"], jobs=2)) == strip(batch(lines, ["cover"]))


def test_batch_skips_stages_with_unmet_preconditions():
    rep = batch([to_graph6(cycle(17))], "c,cover")
    assert rep.records[0].outcome == "Exists"


def test_parse_pipeline():
    assert parse_pipeline("A, c,cover") == ("a", "c", "cover")
    with pytest.raises(ValueError):
        parse_pipeline("a,z")
    with pytest.raises(ValueError):
        parse_pipeline("")
