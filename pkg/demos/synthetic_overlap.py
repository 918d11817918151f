"""Create benchmark logs with a chosen amount of multitasking.

Starting from a clean log, adjacent items (first ends exactly where the
second starts) are paired up per resource and each pair's second item is
slid earlier by a fraction of the pair's larger duration.  On pairs of
equal duration the resulting overlap intensity (MTWII) equals the shift
fraction; once a short item gets embedded inside its partner, extra
shifting adds no extra overlap and MTWII falls behind the dial.

The end of the script closes the loop: the injected log is run through
the fair-share adjuster, which hands back the busy time the shift created.
"""

from sweeplog import (
    WorkItem,
    adjust_log,
    inject,
    mtwii,
    plan_shifts,
    summarize,
    validate_log,
)

MINUTE = 60_000


def clean_log(pairs=40, duration=30 * MINUTE):
    """Every resource gets one pair of equal, adjacent items."""
    items = []
    for k in range(pairs):
        resource = f"res-{k:02d}"
        items.append(WorkItem(id=f"a{k}", activity="prepare",
                              resource=resource, trace_id=f"case-{k}",
                              start=0, end=duration))
        items.append(WorkItem(id=f"b{k}", activity="finish",
                              resource=resource, trace_id=f"case-{k}",
                              start=duration, end=2 * duration))
    return validate_log(items)


log = clean_log()
plan = plan_shifts(log, 0.2)
print(f"clean log: {len(log)} items, {len(plan.pairs)} adjacent pairs,",
      f"MTWII = {mtwii(log)}")
print()

print("shift dial versus measured intensity")
print("  shift   MTWII    overlapped pairs")
for percent in (0.0, 0.05, 0.10, 0.20, 0.40, 0.80):
    shifted = inject(log, percent)
    report = summarize(shifted)
    print(f"  {percent:5.2f}   {report.mtwii:.4f}   "
          f"{report.counts.pairs_overlapped:4d}")
print()

# mixed durations: short partners get embedded, capping the intensity
mixed_items = []
for k in range(40):
    resource = f"mix-{k:02d}"
    first_end = 40 * MINUTE
    tail = first_end + (5 * MINUTE if k % 2 else 40 * MINUTE)
    mixed_items.append(WorkItem(id=f"a{k}", activity="prepare",
                                resource=resource, trace_id=f"case-{k}",
                                start=0, end=first_end))
    mixed_items.append(WorkItem(id=f"b{k}", activity="finish",
                                resource=resource, trace_id=f"case-{k}",
                                start=first_end, end=tail))
mixed = validate_log(mixed_items)

print("same dial on mixed durations (embedding caps the intensity)")
print("  shift   MTWII")
for percent in (0.10, 0.20, 0.40, 0.80):
    value = mtwii(inject(mixed, percent))
    print(f"  {percent:5.2f}   {value:.4f}")
print()

# close the loop: adjust the injected log and recover the busy time
shifted = inject(log, 0.25)
adjusted = adjust_log(shifted)
resource = "res-00"
raw = sum(i.duration for i in shifted.items if i.resource == resource)
busy = sum(i.duration for i in adjusted.coalesced.items
           if i.resource == resource)
print(f"{resource} after a 25% shift: raw durations {raw / MINUTE:.0f} min,"
      f" adjusted busy time {busy / MINUTE:.0f} min")
