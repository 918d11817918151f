"""Event-log preprocessing for resource multitasking.

Detect resources working several items at once, redistribute their busy
time fairly via a sweep-line decomposition, emit an adjusted log that
traditional simulators can consume, quantify multitasking with dedicated
indexes, and inject controlled overlap into clean logs for benchmarking.
"""

from .inject import PlannedShift, ShiftPlan, find_adjacent_pairs, inject, plan_shifts
from .logio import (
    CSV_COLUMNS,
    LogFormatError,
    format_timestamp,
    infer_format,
    parse_timestamp,
    read_csv,
    read_xes,
    report_to_dict,
    write_csv,
    write_log,
    write_report,
    write_xes,
)
from .metrics import (
    MetricsReport,
    PairOverlap,
    SummaryCounts,
    mtli,
    mtri,
    mtri_overlapped,
    mtwii,
    overlap,
    overlapped_pairs,
    summarize,
)
from .model import (
    DurationMs,
    EventLog,
    Instant,
    LogValidationError,
    ResourceSegment,
    WorkItem,
    WorkItemId,
    round_half_up_ms,
    segments_per_resource,
    validate_log,
)
from .sweep import (
    MINUS,
    PLUS,
    ActiveInterval,
    AuxWorkItem,
    CoalescedItem,
    LogAdjustment,
    TimePoint,
    adjust_log,
    build_aux_items,
    build_intervals,
    build_time_points,
    format_adjustment_table,
)

__version__ = "0.1.0"

__all__ = [
    "ActiveInterval",
    "AuxWorkItem",
    "CSV_COLUMNS",
    "CoalescedItem",
    "DurationMs",
    "EventLog",
    "Instant",
    "LogAdjustment",
    "LogFormatError",
    "LogValidationError",
    "MINUS",
    "MetricsReport",
    "PLUS",
    "PairOverlap",
    "PlannedShift",
    "ResourceSegment",
    "ShiftPlan",
    "SummaryCounts",
    "TimePoint",
    "WorkItem",
    "WorkItemId",
    "adjust_log",
    "build_aux_items",
    "build_intervals",
    "build_time_points",
    "find_adjacent_pairs",
    "format_adjustment_table",
    "format_timestamp",
    "infer_format",
    "inject",
    "mtli",
    "mtri",
    "mtri_overlapped",
    "mtwii",
    "overlap",
    "overlapped_pairs",
    "parse_timestamp",
    "plan_shifts",
    "read_csv",
    "read_xes",
    "report_to_dict",
    "round_half_up_ms",
    "segments_per_resource",
    "summarize",
    "validate_log",
    "write_csv",
    "write_log",
    "write_report",
    "write_xes",
]
