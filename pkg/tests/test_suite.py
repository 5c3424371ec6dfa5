import pytest

from siginertia.families import CycleSpec, is_extremal_family, make_cycle
from siginertia.verify.enumerate import canonical_form
from siginertia.verify.suite import SuiteOptions, run_suite
from siginertia.structure import is_balanced

FAST = SuiteOptions(lemmas=("pendant", "additivity", "local_stats"))


def _cycle_shape(g):
    """(length, balanced) for a single-cycle graph, else None."""
    if g.num_edges == g.order and all(len(nb) == 2 for nb in g.adjacency):
        return g.order, is_balanced(g)
    return None


def test_max_n_2():
    s = run_suite(2)
    assert s.ok
    assert (s.graphs_checked, s.signatures_checked) == (1, 1)
    assert s.equality_census[("i_plus", True, True)] == 0
    assert s.equality_census[("i_plus", True, False)] == 0
    assert s.attaining("i_plus") == []


def test_max_n_4_equality_is_only_balanced_c4():
    s = run_suite(4)
    assert s.ok
    attained = s.attaining("i_plus")
    assert [_cycle_shape(g) for g in attained] == [(4, True)]
    assert s.equality_census[("i_plus", True, False)] == 0
    assert s.equality_census[("i_plus", False, True)] == 0


def test_max_n_6_census():
    s = run_suite(6, FAST)
    assert s.ok
    for kind in ("i_plus", "i_minus", "nullity"):
        shapes = sorted(_cycle_shape(g) for g in s.attaining(kind))
        assert shapes == [(4, True), (6, False)]
        assert s.equality_census[(kind, True, False)] == 0
        assert s.equality_census[(kind, False, True)] == 0


def test_suite_is_monotone_in_max_n():
    small, big = run_suite(5, FAST), run_suite(6, FAST)
    for n in range(2, 6):
        assert small.per_order[n] == big.per_order[n]
    assert big.attaining("i_plus")[: len(small.attaining("i_plus"))] == small.attaining("i_plus")


def test_truncation():
    s = run_suite(6, SuiteOptions(max_signatures=10))
    assert s.truncated and s.signatures_checked == 10


def test_workers_match_serial():
    serial = run_suite(5, FAST)
    parallel = run_suite(5, SuiteOptions(lemmas=FAST.lemmas, workers=2))
    assert serial.signatures_checked == parallel.signatures_checked
    assert serial.equality_census == parallel.equality_census
    assert serial.attaining("i_plus") == parallel.attaining("i_plus")
    assert serial.lemma_checks == parallel.lemma_checks


def test_disconnected_skeletons_including_isolated_vertices():
    s = run_suite(6, SuiteOptions(connected_only=False, lemmas=FAST.lemmas))
    assert s.ok
    for g in s.attaining("i_plus"):
        assert is_extremal_family(g).verdict


def test_sampled_unions():
    s = run_suite(4, SuiteOptions(sample_unions=50, seed=3))
    assert s.unions_checked == 50 and s.ok
    again = run_suite(4, SuiteOptions(sample_unions=50, seed=3))
    assert again.equality_census == s.equality_census


def test_lemma_sampling_is_seeded():
    a = run_suite(5, SuiteOptions(lemma_rate=0.3, seed=1))
    b = run_suite(5, SuiteOptions(lemma_rate=0.3, seed=1))
    full = run_suite(5)
    assert a.lemma_checks == b.lemma_checks < full.lemma_checks


@pytest.mark.parametrize("max_n, opts", [(1, SuiteOptions()), (8, SuiteOptions()), (9, SuiteOptions(include_n8=True))])
def test_range_errors(max_n, opts):
    with pytest.raises(ValueError):
        run_suite(max_n, opts)


def test_attaining_graphs_are_canonical_cycles():
    s = run_suite(6, FAST)
    codes = {canonical_form(g.order, g.pairs())[0] for g in s.attaining("i_plus")}
    for spec in (CycleSpec(4, True), CycleSpec(6, False)):
        g = make_cycle(spec)
        assert canonical_form(g.order, g.pairs())[0] in codes
