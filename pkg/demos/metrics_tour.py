"""Tour of the multitasking indexes on three small logs.

MTRI scores one resource: the mean pairwise overlap ratio over all of its
item pairs.  MTLI averages MTRI over resources, so it says how much of the
log multitasks at all.  MTWII averages only over the pairs (and resources)
that actually overlap, so it says how intense multitasking is where it
happens.  A log can have a tiny MTLI and a large MTWII at the same time:
rare but deep overlap.
"""

import json

from sweeplog import (
    WorkItem,
    mtli,
    mtri,
    mtwii,
    overlap,
    report_to_dict,
    segments_per_resource,
    summarize,
    validate_log,
)


def show(title, log):
    report = summarize(log)
    print(title)
    print(json.dumps(report_to_dict(report), indent=2, sort_keys=True))
    print()


def item(wid, res, start, end, act="T"):
    return WorkItem(id=wid, activity=f"{act}{wid}", resource=res,
                    trace_id="c1", start=start, end=end)


# 1. no multitasking: everything sequential
clean = validate_log([
    item(1, "alice", 0, 60),
    item(2, "alice", 60, 120),
    item(3, "bob", 0, 90),
])
show("clean log (indexes are zero, intensity undefined)", clean)

# 2. one resource multitasking heavily, one not at all
busy = validate_log([
    item(1, "alice", 0, 100),
    item(2, "alice", 10, 90),
    item(3, "bob", 0, 50),
    item(4, "bob", 50, 100),
])
show("alice overlaps, bob does not (MTLI diluted, MTWII high)", busy)

pair = busy.by_id()
print("alice's single pair overlap:",
      overlap(pair[1], pair[2]))
for segment in segments_per_resource(busy):
    print(f"  MTRI[{segment.resource}] = {mtri(segment):.4f}")
print(f"  MTLI  = {mtli(busy):.4f}")
print(f"  MTWII = {mtwii(busy):.4f}")
print()

# 3. rare but deep overlap: 1 of 45 pairs overlaps, and fully
sparse_items = [item(k, "carol", 200 * k, 200 * k + 100) for k in range(9)]
sparse_items.append(item(99, "carol", 0, 100))  # duplicates item 0's span
sparse = validate_log(sparse_items)
show("rare but total overlap (low MTLI, MTWII = 1)", sparse)
