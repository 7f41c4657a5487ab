import math

import numpy as np
import pytest

from shortwide.paths import (Domination, Label, LabelSet, consolidate, covers, dominates,
                             maximize_labels, node_insertion)


def keys(labels):
    return [label.key for label in labels]


@pytest.mark.parametrize('a, b, expected', [
    ((2, 0.5), (3, 1.0), Domination.STRICT),
    ((2, 1.0), (3, 1.0), Domination.WEAK),
    ((3, 0.5), (3, 1.0), Domination.WEAK),
    ((3, 1.0), (3, 1.0), Domination.NONE),
    ((2, 1.0), (3, 0.5), Domination.NONE),
    ((3, 1.0), (2, 0.5), Domination.NONE),
])
def test_dominates(a, b, expected):
    assert dominates(Label.of(*a), Label.of(*b)) is expected


def test_label_extend_tracks_predecessor():
    label = Label.source().extend(4, 0, 0.5).extend(7, 2, 0.25)
    assert label.key == (2, 0.5)
    assert label.product == 1.0
    assert (label.pred, label.pred_label) == (7, 2)


def test_consolidate_keeps_frontier_sorted_by_width():
    frontier = consolidate([Label.of(1, 3.0), Label.of(4, 0.25), Label.of(2, 1.0),
                            Label.of(5, 0.5), Label.of(3, 1.0), Label.of(2, 1.0)])
    assert frontier.keys() == [(4, 0.25), (2, 1.0), (1, 3.0)]
    hops = [label.hops for label in frontier]
    assert hops == sorted(hops, reverse=True)


def test_consolidate_merges_equal_keys_keeping_first():
    first, second = Label.of(2, 0.5, pred=1), Label.of(2, 0.5, pred=9)
    frontier = consolidate([first, second])
    assert len(frontier) == 1
    assert frontier[0].pred == 1


def test_consolidate_is_idempotent_and_covers_every_candidate():
    rng = np.random.default_rng(3)
    for _ in range(300):
        candidates = [Label.of(int(rng.integers(1, 8)), float(rng.choice([0.25, 0.5, 1.0, 2.0])),
                               pred=k)
                      for k in range(int(rng.integers(0, 12)))]
        frontier = consolidate(candidates)
        assert consolidate(frontier.labels) == frontier
        assert all(kept in candidates for kept in frontier)
        assert all(any(covers(kept, c) for kept in frontier) for c in candidates)
        assert all(dominates(a, b) is Domination.NONE for a in frontier for b in frontier)
        assert len(set(frontier.keys())) == len(frontier)


def test_label_set_best_and_distance():
    frontier = consolidate([Label.of(4, 0.25), Label.of(2, 1.0), Label.of(1, 3.0)])
    assert frontier.best().key == (4, 0.25)
    assert frontier.distance == 1.0
    assert LabelSet().best() is None
    assert math.isinf(LabelSet().distance)


def test_label_set_best_breaks_ties_on_hops():
    frontier = consolidate([Label.of(4, 0.5), Label.of(2, 1.0)])
    assert frontier.best().key == (2, 1.0)


def test_maximize_labels_merges_two_frontiers():
    current = [Label.of(6, 0.25), Label.of(3, 1.0)]
    inserted = [Label.of(4, 0.5), Label.of(2, 2.0), Label.of(1, 4.0)]
    assert keys(maximize_labels(current, inserted)) == [(6, 0.25), (4, 0.5), (3, 1.0),
                                                        (2, 2.0), (1, 4.0)]


def test_maximize_labels_prefers_current_on_ties():
    current = [Label.of(2, 0.5, pred=None)]
    inserted = [Label.of(2, 0.5, pred=3)]
    merged = maximize_labels(current, inserted)
    assert len(merged) == 1 and merged[0].pred is None


def test_maximize_labels_drops_dominated():
    current = [Label.of(3, 0.5)]
    inserted = [Label.of(2, 0.5), Label.of(4, 1.0)]
    assert keys(maximize_labels(current, inserted)) == [(2, 0.5)]
    assert keys(maximize_labels([], inserted)) == [(2, 0.5)]
    assert maximize_labels([], []) == []


def test_node_insertion_combines_hops_and_widths():
    left = [Label.of(2, 0.25), Label.of(1, 1.0)]
    right = [Label.of(1, 0.5)]
    combined = node_insertion(left, right, pivot=5)
    assert keys(combined) == [(3, 0.5), (2, 1.0)]
    assert all(label.pred == 5 for label in combined)
    assert [label.product for label in combined] == [1.5, 2.0]
