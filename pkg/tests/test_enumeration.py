import os

import numpy as np
import pytest

from semicomm import oracles
from semicomm.enumeration import (
    CLASS_FILTERS,
    EnumerationTask,
    canonical_form,
    class_filter,
    enumerate_semigroups,
    is_canonical,
    iter_semigroups,
    iter_tables,
    relabelled_tables,
)
from semicomm.errors import OrderUnsupported
from semicomm.semigroup import FiniteSemigroup
from semicomm.verify import THEOREMS

# brute-force oracle values: every n^(n^2) table checked and orbits collected
ISO_CLASSES = {1: 1, 2: 5, 3: 24}
LABELLED = {1: 1, 2: 8, 3: 113}
BANDS_OF_ORDER_3 = 10


def test_oracle_values_are_current():
    for n, count in ISO_CLASSES.items():
        assert oracles.isomorphism_classes(n) == count
    for n, count in LABELLED.items():
        assert len(oracles.semigroup_tables(n)) == count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_up_to_isomorphism(n):
    assert enumerate_semigroups(EnumerationTask(n)) == ISO_CLASSES[n]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_raw_tables_match_brute_force(n):
    got = sorted(tuple(v for row in t for v in row) for t in iter_tables(n, dedup=False))
    assert got == sorted(oracles.semigroup_tables(n))


def test_order_4_counts():
    assert sum(1 for _ in iter_tables(4, dedup=False)) == 3492
    assert enumerate_semigroups(EnumerationTask(4)) == 188


def test_bands_of_order_3():
    assert enumerate_semigroups(EnumerationTask(3, "band")) == BANDS_OF_ORDER_3


def test_class_filters_partition():
    comm = enumerate_semigroups(EnumerationTask(3, "commutative"))
    noncomm = enumerate_semigroups(EnumerationTask(3, "non-commutative"))
    assert comm + noncomm == ISO_CLASSES[3]
    assert enumerate_semigroups(EnumerationTask(3, "group")) == 1
    assert enumerate_semigroups(EnumerationTask(4, "inverse+non-commutative")) == 0


def test_unknown_filter():
    with pytest.raises(ValueError):
        class_filter("abelian")
    with pytest.raises(ValueError):
        EnumerationTask(2, "abelian")
    assert set(CLASS_FILTERS) >= {"any", "band", "inverse", "clifford"}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_visited_tables_are_canonical_and_associative(n):
    seen = []
    enumerate_semigroups(EnumerationTask(n), visit=seen.append)
    for S in seen:
        t = S.table
        assert np.array_equal(canonical_form(t), t)
        assert oracles.associativity_violation(t.tolist()) is None
    codes = {tuple(S.flat()) for S in seen}
    assert len(codes) == len(seen)


def test_dedup_visits_one_per_orbit():
    tables = [np.array(t) for t in iter_tables(3, dedup=False)]
    forms = {tuple(canonical_form(t).ravel()) for t in tables}
    assert len(forms) == ISO_CLASSES[3]
    for t in tables:
        form = canonical_form(t)
        assert is_canonical(form)
        FiniteSemigroup(form)  # raises unless associative


def test_relabelling_is_an_isomorphism():
    t = np.array([[0, 1, 0, 0], [0, 1, 1, 1], [0, 1, 2, 2], [0, 1, 3, 3]])
    for r in relabelled_tables(t):
        assert oracles.associativity_violation(r.tolist()) is None
    assert len({tuple(r.ravel()) for r in relabelled_tables(t)}) <= 24


def test_partitioned_enumeration_is_identical():
    serial = list(iter_tables(3))
    parallel = list(iter_tables(3, jobs=2))
    assert serial == parallel
    assert list(iter_tables(4, dedup=False, jobs=2)) == list(iter_tables(4, dedup=False))


def test_order_limits():
    with pytest.raises(OrderUnsupported):
        EnumerationTask(0)
    with pytest.raises(OrderUnsupported):
        EnumerationTask(6, allow_long=True)
    with pytest.raises(OrderUnsupported):
        EnumerationTask(5)
    assert EnumerationTask(5, allow_long=True).order == 5


@pytest.mark.slow
@pytest.mark.skipif(not os.environ.get("SEMICOMM_LONG"), reason="set SEMICOMM_LONG=1 (about 4 min)")
def test_order_5_count():
    assert enumerate_semigroups(EnumerationTask(5, allow_long=True)) == 1915


@pytest.mark.slow
@pytest.mark.skipif(not os.environ.get("SEMICOMM_LONG"), reason="set SEMICOMM_LONG=1 (about 8 min)")
def test_theorems_at_order_5():
    counts = {tid: 0 for tid in THEOREMS}
    for S in iter_semigroups(EnumerationTask(5, allow_long=True)):
        for tid, theorem in THEOREMS.items():
            if class_filter(theorem.class_spec)(S):
                counts[tid] += 1
                assert theorem.holds(S), (tid, S.flat())
    print("order-5 instances:", counts)
    # the Brandt semigroup B2 is non-commutative inverse; a non-commutative Clifford
    # semigroup needs a non-abelian subgroup, hence order at least 6
    assert counts["inverse-clique-ge-2"] > 0
    assert counts["clifford-no-left-paths"] == 0

