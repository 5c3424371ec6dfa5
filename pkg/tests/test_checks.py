import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from siginertia.core import SignedGraph, disjoint_union
from siginertia.families import CycleSpec, make_cycle, make_path
from siginertia.inertia import Inertia, adjacency_matrix, graph_inertia
from siginertia.verify.checks import (
    STATUS_NAMES,
    check_bounds,
    check_deletion_lemmas,
    check_interlacing,
)

from strategies import signed_graphs


def test_p2_report():
    rep = check_bounds(make_path(2))
    assert rep.inertia == Inertia(1, 1, 0)
    assert (rep.n, rep.p, rep.theta) == (2, 2, 0)
    assert rep.weak_bound == 0
    assert rep.strict_applicable and rep.strict_bound == Fraction(1, 2)
    assert rep.passed
    assert rep.equality_flags == {"i_plus": False, "i_minus": False, "nullity": False}
    assert not rep.extremal_verdict


def test_balanced_c4_report():
    rep = check_bounds(make_cycle(CycleSpec(4, True)))
    assert rep.inertia == Inertia(1, 1, 2)
    assert rep.weak_bound == 1 and rep.nullity_bound == 2
    assert not rep.strict_applicable
    assert rep.equality_flags == {"i_plus": True, "i_minus": True, "nullity": True}
    assert rep.extremal_verdict and rep.passed


def test_bowtie_report(bowtie):
    rep = check_bounds(bowtie)
    assert (rep.p, rep.theta) == (0, 2)
    assert not rep.cycle_disjoint and rep.strict_applicable
    assert rep.strict_bound == 1
    # char poly (x - 1)(x + 1)^2 (x^2 - x - 4): roots 1, -1, -1, (1 +- sqrt 17)/2
    assert rep.inertia == Inertia(2, 3, 0)
    assert rep.passed
    assert rep.statuses["nullity_strict"] is True


def test_statuses_cover_every_name():
    rep = check_bounds(make_path(3))
    assert tuple(rep.statuses) == STATUS_NAMES


def test_check_bounds_rejects_tiny():
    with pytest.raises(ValueError):
        check_bounds(SignedGraph(0))
    with pytest.raises(ValueError):
        check_bounds(SignedGraph(1))


def test_isolated_vertices_judged_on_the_rest():
    rep = check_bounds(disjoint_union(make_path(2), SignedGraph(1)))
    assert rep.isolated == 1
    assert rep.passed
    assert set(rep.equality_flags.values()) == {None}
    assert rep.statuses["i_plus_equality"] is None
    assert not rep.extremal_verdict and rep.extremal_reason == "isolated-vertex"

    edgeless = check_bounds(SignedGraph(3))
    assert edgeless.passed and not edgeless.strict_applicable


def test_status_detects_a_planted_violation():
    # same numbers with an impossible inertia: statuses must say so
    rep = check_bounds(make_cycle(CycleSpec(4, True)))
    fake = type(rep)(**{**rep.__dict__, "inertia": Inertia(0, 2, 2)})
    assert not fake.passed
    assert "i_plus_weak" in fake.failed()


def test_deletion_lemmas_p4():
    lc = check_deletion_lemmas(make_path(4))
    assert lc.passed
    assert graph_inertia(make_path(4)) == Inertia(2, 2, 0)
    assert graph_inertia(make_path(2)) + Inertia(1, 1, 0) == Inertia(2, 2, 0)


@pytest.mark.parametrize("balanced", [True, False])
def test_deletion_lemmas_c5(balanced):
    c5 = make_cycle(CycleSpec(5, balanced))
    assert check_deletion_lemmas(c5).passed
    assert graph_inertia(make_path(4)).positive <= graph_inertia(c5).positive


def test_deletion_lemmas_two_triangles():
    c3 = make_cycle(CycleSpec(3, True))
    g = disjoint_union(c3, c3)
    assert graph_inertia(g) == Inertia(2, 4, 0)
    assert check_deletion_lemmas(g).passed


def test_deletion_lemmas_unknown_name():
    with pytest.raises(ValueError):
        check_deletion_lemmas(make_path(3), ["nope"])


def test_deletion_lemmas_catch_a_wrong_inertia():
    lc = check_deletion_lemmas(make_path(4), inertia=Inertia(1, 1, 2))
    assert not lc.passed
    assert any(f.startswith("pendant") for f in lc.failures)


@settings(max_examples=150, deadline=None)
@given(signed_graphs(min_order=2, max_order=8))
def test_deletion_lemmas_hold(g):
    assert check_deletion_lemmas(g).passed


@settings(max_examples=300)
@given(signed_graphs(min_order=2, max_order=9))
def test_bounds_hold_on_random_graphs(g):
    rep = check_bounds(g)
    assert rep.passed, rep.failed()


def test_interlacing_examples():
    c4 = adjacency_matrix(make_cycle(CycleSpec(4, True)))
    assert check_interlacing(c4, range(4))
    assert check_interlacing(c4, [0, 1, 2])
    assert graph_inertia(make_path(3)).positive == 1 == graph_inertia(make_cycle(CycleSpec(4, True))).positive


def test_interlacing_random_eight_vertex():
    rng = random.Random(11)
    for _ in range(100):
        g = SignedGraph.from_edges(8, [(i, j, rng.choice((1, -1))) for i in range(8) for j in range(i + 1, 8) if rng.random() < 0.5])
        keep = [v for v in range(8) if rng.random() < 0.5]
        assert check_interlacing(adjacency_matrix(g), keep)
