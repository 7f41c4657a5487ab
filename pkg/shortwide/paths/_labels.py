"""
Pareto labels over (hop count, maximum edge weight).

A label summarises one path from a source: how many edges it uses and the
largest edge weight on it. Since short-and-wide paths break optimal
substructure, every node keeps the whole set of non-dominated labels rather
than a single best value.
"""
import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np


class Domination(enum.Enum):
    """Outcome of comparing two labels with :func:`dominates`."""
    STRICT = 'strict'
    WEAK = 'weak'
    NONE = 'none'


@dataclass(frozen=True)
class Label:
    """
    One Pareto label.

    Attributes
    ----------
    hops : int
        Number of edges of the path.
    max_width : float
        Largest edge weight on the path; 0.0 for the source label.
    product : float
        ``hops * max_width``, the bottleneck cost of the path.
    pred : int or None
        Predecessor node, None for a source label (or a direct edge in the
        all-pairs tables).
    pred_label : int or None
        Index of the predecessor's label in its node's label store.
    """
    hops: int
    max_width: float
    product: float
    pred: Optional[int] = None
    pred_label: Optional[int] = None

    @classmethod
    def source(cls):
        return cls(0, 0.0, 0.0)

    @classmethod
    def of(cls, hops, max_width, pred=None, pred_label=None):
        return cls(hops, max_width, hops * max_width, pred, pred_label)

    def extend(self, node, index, weight):
        """Return the label obtained by appending an edge of the given weight.

        ``node`` and ``index`` identify this label, which becomes the
        predecessor of the new one.
        """
        hops = self.hops + 1
        width = max(self.max_width, weight)
        return Label(hops, width, hops * width, node, index)

    @property
    def key(self):
        return (self.hops, self.max_width)


def dominates(a, b):
    """
    Compare label a against label b.

    Parameters
    ----------
    a, b : Label
        Labels at the same node.

    Returns
    -------
    Domination
        ``STRICT`` if a is better in both criteria, ``WEAK`` if a is better
        in one and equal in the other, ``NONE`` otherwise (including equal
        labels, which are merged rather than pruned).

    Examples
    --------
    >>> dominates(Label.of(2, 0.5), Label.of(3, 1.0))
    <Domination.STRICT: 'strict'>
    >>> dominates(Label.of(2, 1.0), Label.of(3, 0.5))
    <Domination.NONE: 'none'>
    """
    if a.hops < b.hops and a.max_width < b.max_width:
        return Domination.STRICT
    if (a.hops < b.hops and a.max_width == b.max_width) or \
            (a.hops == b.hops and a.max_width < b.max_width):
        return Domination.WEAK
    return Domination.NONE


def covers(a, b):
    """True if a dominates b (strictly or weakly) or has the same key."""
    return a.hops <= b.hops and a.max_width <= b.max_width


@dataclass(frozen=True)
class LabelSet:
    """
    Non-dominated labels of one node (or one node pair).

    Labels are sorted by increasing ``max_width``; hops is then strictly
    decreasing.
    """
    labels: tuple = ()

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __getitem__(self, item):
        return self.labels[item]

    @property
    def count(self):
        return len(self.labels)

    def best(self):
        """Label of minimum product; ties go to fewer hops. None if empty."""
        if not self.labels:
            return None
        return min(self.labels, key=lambda label: (label.product, label.hops))

    @property
    def distance(self):
        best = self.best()
        return np.inf if best is None else best.product

    def keys(self):
        return [label.key for label in self.labels]


def _frontier(ordered):
    # ordered by (max_width, hops), first-seen first among equal keys
    kept = []
    best_hops = None
    for label in ordered:
        if best_hops is None or label.hops < best_hops:
            kept.append(label)
            best_hops = label.hops
    return kept


def consolidate(candidates):
    """
    Reduce candidate labels to their Pareto frontier.

    Dominated labels are dropped and labels sharing both hops and width are
    merged, keeping the first one seen.

    Parameters
    ----------
    candidates : iterable of Label
        Labels at one node, in the order they were produced.

    Returns
    -------
    LabelSet
        Frontier sorted by increasing width.

    Examples
    --------
    >>> consolidate([Label.of(3, 1.0), Label.of(2, 0.5)]).keys()
    [(2, 0.5)]
    >>> consolidate([Label.of(2, 0.5), Label.of(2, 0.5), Label.of(2, 1.0)]).keys()
    [(2, 0.5)]
    """
    ordered = sorted(candidates, key=lambda label: (label.max_width, label.hops))
    return LabelSet(tuple(_frontier(ordered)))


def maximize_labels(current, inserted):
    """
    Merge two frontiers into one.

    Both inputs are scanned together by increasing width and a label is kept
    only when its hop count beats the best seen so far. Labels of
    ``current`` win ties against labels of ``inserted``.

    Parameters
    ----------
    current, inserted : sequence of Label
        Frontiers sorted by increasing width.

    Returns
    -------
    list of Label
        Merged frontier.
    """
    merged = []
    i = j = 0
    while i < len(current) or j < len(inserted):
        take_current = j == len(inserted) or (
            i < len(current)
            and (current[i].max_width, current[i].hops)
            <= (inserted[j].max_width, inserted[j].hops))
        if take_current:
            merged.append(current[i])
            i += 1
        else:
            merged.append(inserted[j])
            j += 1
    return _frontier(merged)


def node_insertion(left, right, pivot=None):
    """
    Combine every label of ``left`` (i to k) with every label of ``right``
    (k to j): hops add up and widths take the maximum.

    Returns
    -------
    list of Label
        Candidate frontier for the pair (i, j) through ``pivot``.
    """
    candidates = [Label.of(a.hops + b.hops, max(a.max_width, b.max_width), pivot)
                  for a in left for b in right]
    return list(consolidate(candidates).labels)
