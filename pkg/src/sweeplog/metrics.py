"""Multitasking indexes and summary counts for event logs.

All indexes build on one pairwise ratio::

    overlap(a, b) = max(min(a.end, b.end) - max(a.start, b.start), 0)
                    / max(a.duration, b.duration)

computed only between items of the same resource.  From it:

* MTRI (per resource): mean overlap over every unordered pair of the
  resource's items; 0 when the resource has fewer than two items.
* MTLI (per log): mean MTRI over all resources.  How much of the log is
  multitasked at all.
* MTRI_overlapped (per resource): mean overlap restricted to pairs whose
  intersection is strictly positive; undefined without such a pair.
* MTWII (per log): mean MTRI_overlapped over the resources where it is
  defined.  How intense multitasking is where it occurs.

Pair loops are exact and quadratic per resource; log sizes in this domain
(about a million pairs) do not warrant sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Optional

from .model import EventLog, ResourceSegment, WorkItem, segments_per_resource


@dataclass(frozen=True)
class PairOverlap:
    """Overlap ratio of one unordered pair of same-resource items."""

    first_id: object
    second_id: object
    ratio: float


@dataclass(frozen=True)
class SummaryCounts:
    """How much of a log is touched by multitasking.

    tasks_multitasked: distinct activities with at least one overlapped item.
    events_overlapped: work items overlapping at least one sibling.
    resources_multitasking: resources with at least one overlapped pair.
    pairs_overlapped: unordered same-resource pairs with positive intersection.
    """

    tasks_multitasked: int
    events_overlapped: int
    resources_multitasking: int
    pairs_overlapped: int


@dataclass(frozen=True)
class MetricsReport:
    """All indexes and counts for one log.

    ``mtwii`` is 0.0 with ``mtwii_defined`` False when no resource has an
    overlapped pair.  ``mtri_overlapped`` only has entries for resources
    where the restricted mean is defined.
    """

    mtli: float
    mtwii: float
    mtwii_defined: bool
    mtri_all: Mapping[str, float]
    mtri_overlapped: Mapping[str, float]
    counts: SummaryCounts


def _intersection(a: WorkItem, b: WorkItem) -> int:
    return min(a.end, b.end) - max(a.start, b.start)


def overlap(a: WorkItem, b: WorkItem) -> float:
    """Intersection length over the larger of the two durations, in [0, 1].

    Symmetric; 0 exactly when the closed intersection has no positive
    length.  Two instantaneous items overlap by 0.  Items of different
    resources never overlap by definition, so comparing them is an error.
    """
    if a.resource != b.resource:
        raise ValueError(
            f"overlap is defined within one resource; got "
            f"{a.resource!r} and {b.resource!r}"
        )
    shared = max(_intersection(a, b), 0)
    longest = max(a.duration, b.duration)
    if longest == 0:
        return 0.0
    return shared / longest


def overlapped_pairs(segment: ResourceSegment) -> list[PairOverlap]:
    """All unordered pairs of the segment with strictly positive intersection."""
    pairs = []
    for a, b in combinations(segment.items, 2):
        if _intersection(a, b) > 0:
            pairs.append(PairOverlap(a.id, b.id, overlap(a, b)))
    return pairs


def mtri(segment: ResourceSegment) -> float:
    """Mean overlap over every unordered pair; 0 with fewer than two items."""
    pairs = list(combinations(segment.items, 2))
    if not pairs:
        return 0.0
    return sum(overlap(a, b) for a, b in pairs) / len(pairs)


def mtri_overlapped(segment: ResourceSegment) -> Optional[float]:
    """Mean overlap over the overlapped pairs only; None when there are none."""
    pairs = overlapped_pairs(segment)
    if not pairs:
        return None
    return sum(pair.ratio for pair in pairs) / len(pairs)


def mtli(log: EventLog) -> float:
    """Mean MTRI across all resources of the log; 0 for an empty log."""
    segments = segments_per_resource(log)
    if not segments:
        return 0.0
    return sum(mtri(segment) for segment in segments) / len(segments)


def mtwii(log: EventLog) -> Optional[float]:
    """Mean restricted MTRI over resources that have an overlapped pair.

    None when no resource multitasks at all.
    """
    values = []
    for segment in segments_per_resource(log):
        value = mtri_overlapped(segment)
        if value is not None:
            values.append(value)
    if not values:
        return None
    return sum(values) / len(values)


def summarize(log: EventLog) -> MetricsReport:
    """Compute every index plus the summary counts in one pass."""
    segments = segments_per_resource(log)
    mtri_all: dict[str, float] = {}
    mtri_over: dict[str, float] = {}
    multitasked_activities: set[str] = set()
    overlapped_items: set[object] = set()
    total_pairs = 0

    for segment in segments:
        mtri_all[segment.resource] = mtri(segment)
        pairs = overlapped_pairs(segment)
        if not pairs:
            continue
        total_pairs += len(pairs)
        mtri_over[segment.resource] = (
            sum(pair.ratio for pair in pairs) / len(pairs)
        )
        by_id = {item.id: item for item in segment.items}
        for pair in pairs:
            for wiid in (pair.first_id, pair.second_id):
                overlapped_items.add(wiid)
                multitasked_activities.add(by_id[wiid].activity)

    mtli_value = (
        sum(mtri_all.values()) / len(mtri_all) if mtri_all else 0.0
    )
    mtwii_defined = bool(mtri_over)
    mtwii_value = (
        sum(mtri_over.values()) / len(mtri_over) if mtwii_defined else 0.0
    )
    counts = SummaryCounts(
        tasks_multitasked=len(multitasked_activities),
        events_overlapped=len(overlapped_items),
        resources_multitasking=len(mtri_over),
        pairs_overlapped=total_pairs,
    )
    return MetricsReport(
        mtli=mtli_value,
        mtwii=mtwii_value,
        mtwii_defined=mtwii_defined,
        mtri_all=mtri_all,
        mtri_overlapped=mtri_over,
        counts=counts,
    )
