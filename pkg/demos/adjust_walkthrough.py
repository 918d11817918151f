"""Walk through the fair-share adjustment on a small single-resource log.

One resource, R1, works four tasks over 150 minutes of wall clock, but the
raw durations add up to 280 minutes because the tasks overlap.  This
script shows every stage of the sweep: boundary points, homogeneous
intervals, per-interval shares, and the coalesced log whose durations add
up to exactly the 150 minutes the resource was actually busy.
"""

from fractions import Fraction

from sweeplog import (
    WorkItem,
    adjust_log,
    format_adjustment_table,
    validate_log,
)

# Timestamps in minutes for readability (the library only sees integers;
# real logs use epoch milliseconds).
items = [
    WorkItem(id="A", activity="T1", resource="R1", trace_id="c1",
             start=0, end=130),
    WorkItem(id="B", activity="T2", resource="R1", trace_id="c1",
             start=10, end=75),
    WorkItem(id="C", activity="T3", resource="R1", trace_id="c2",
             start=95, end=150),
    WorkItem(id="D", activity="T4", resource="R1", trace_id="c2",
             start=110, end=140),
]
log = validate_log(items)

print("raw durations:", {i.id: i.duration for i in log.items})
print("raw total:", sum(i.duration for i in log.items), "minutes")
print()

print("sweep state")
print(format_adjustment_table(log))
print()

adjusted = adjust_log(log)

print("fair shares per item")
for share in adjusted.aux_items:
    print(f"  share {share.id:>2}: item {share.parent_id} gets "
          f"{float(share.duration):6.2f} of [{share.start}, {share.end})")
print()

print("coalesced durations (exact)")
total = Fraction(0)
for coalesced in adjusted.coalesced_exact:
    duration = coalesced.duration_exact
    total += duration
    print(f"  {coalesced.id}: {duration} = {float(duration):.2f} minutes")
print("adjusted total:", total, "minutes (the resource's true busy time)")
print()

print("coalesced log (ends rounded to whole units)")
for item in adjusted.coalesced.items:
    print(f"  {item.id}: [{item.start}, {item.end})  {item.activity}")
