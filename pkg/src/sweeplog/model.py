"""Core event-log model: work items, validated logs, per-resource segments.

Timestamps are integer milliseconds since a fixed epoch so that span
arithmetic is exact.  Fair-share computations elsewhere in the package
carry durations as :class:`fractions.Fraction` and round to whole
milliseconds only when a log is serialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

WorkItemId = Union[int, str]

Instant = int
DurationMs = int


class LogValidationError(ValueError):
    """Raised when one or more work items violate the log contract.

    ``problems`` holds one human-readable diagnostic per offending item.
    """

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__(
            "invalid event log: " + "; ".join(self.problems)
        )


def round_half_up_ms(value: Fraction) -> int:
    """Round a rational millisecond value to a whole millisecond, halves up."""
    return int((value + Fraction(1, 2)).__floor__())


def _id_key(item_id: WorkItemId) -> str:
    # ids may be ints or strings; compare lexicographically for a total order
    return str(item_id)


@dataclass(frozen=True)
class WorkItem:
    """One executed task instance.

    ``start`` and ``end`` are integer milliseconds; ``end == start`` marks
    an instantaneous item, which is legal everywhere in the package.
    """

    id: WorkItemId
    activity: str
    resource: str
    trace_id: str
    start: Instant
    end: Instant

    @property
    def duration(self) -> DurationMs:
        return self.end - self.start


@dataclass(frozen=True)
class EventLog:
    """A validated, deterministically ordered collection of work items.

    ``trace_index`` maps each case identifier to its item ids in start
    order; every referenced id is present in ``items``.
    """

    items: tuple[WorkItem, ...]
    trace_index: Mapping[str, tuple[WorkItemId, ...]]

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[WorkItem]:
        return iter(self.items)

    def by_id(self) -> dict[WorkItemId, WorkItem]:
        """Return a lookup table from item id to item."""
        return {item.id: item for item in self.items}


@dataclass(frozen=True)
class ResourceSegment:
    """All work items of one resource, across every trace, in start order.

    Ties on start are broken by earlier end, then lexicographic id, so the
    ordering is total and runs are reproducible.
    """

    resource: str
    items: tuple[WorkItem, ...]

    def __len__(self) -> int:
        return len(self.items)


def validate_log(raw_items: Iterable[WorkItem]) -> EventLog:
    """Check raw work items and assemble an :class:`EventLog`.

    Items are ordered by (trace id, start, id) so identical inputs always
    produce identical logs.

    Raises:
        LogValidationError: listing every item whose end precedes its
            start, that lacks a resource or activity, or whose id repeats.
    """
    items = list(raw_items)
    problems: list[str] = []
    seen_ids: set[WorkItemId] = set()
    for item in items:
        if item.end < item.start:
            problems.append(f"item {item.id!r}: end precedes start "
                            f"({item.end} < {item.start})")
        if not item.resource:
            problems.append(f"item {item.id!r}: missing resource")
        if not item.activity:
            problems.append(f"item {item.id!r}: missing activity")
        if item.id in seen_ids:
            problems.append(f"item {item.id!r}: duplicate id")
        seen_ids.add(item.id)
    if problems:
        raise LogValidationError(problems)

    ordered = sorted(items, key=lambda w: (w.trace_id, w.start, _id_key(w.id)))
    trace_ids: dict[str, list[WorkItemId]] = {}
    for item in ordered:
        trace_ids.setdefault(item.trace_id, []).append(item.id)
    trace_index = {trace: tuple(ids) for trace, ids in trace_ids.items()}
    return EventLog(items=tuple(ordered), trace_index=trace_index)


def segments_per_resource(log: EventLog) -> list[ResourceSegment]:
    """Partition a log into one segment per resource.

    Every work item lands in exactly one segment; segments are returned
    sorted by resource name and their items by (start, end, id).
    """
    grouped: dict[str, list[WorkItem]] = {}
    for item in log.items:
        grouped.setdefault(item.resource, []).append(item)
    segments = []
    for resource in sorted(grouped):
        ordered = sorted(grouped[resource],
                         key=lambda w: (w.start, w.end, _id_key(w.id)))
        segments.append(ResourceSegment(resource=resource, items=tuple(ordered)))
    return segments
