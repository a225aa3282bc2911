#!/usr/bin/env python3
"""Watch the fleet follow a moving crowd, one drone move at a time.

A small scene: two occupied zones and one drone. People drift into a new
zone, gain importance, and eventually the original zone empties out. Every
event triggers at most one relocation, and the covered weight always
equals what a from-scratch placement would pick.
"""

from swarmcover import Event, GridConfig, Point, build, static_place

config = GridConfig(r_cov=0.5, shape="square", m=1)

state = build(
    [
        Point("alice", 0.2, 0.4, 6.0),
        Point("bob", 0.7, 0.8, 4.0),
        Point("carol", 2.3, 0.5, 7.0),
    ],
    config,
)
print(f"start: covered weight {state.covered_weight():.1f} "
      f"(drone sits on the {state.min_covered()[1]:.1f}-weight cell)")

story = [
    ("dave appears in carol's zone", Event.insert("dave", 2.6, 0.2, 2.0)),
    ("carol's rank is raised", Event.update("carol", 9.0)),
    ("alice leaves", Event.delete("alice")),
    ("bob leaves", Event.delete("bob")),
    ("dave's rank is lowered", Event.update("dave", 0.5)),
]

for caption, event in story:
    report = state.apply(event)
    move = (
        f"drone {report.drone} moved {report.vacated} -> {report.occupied}"
        if report.moved
        else "no move needed"
    )
    check = static_place(state.store, config).covered_weight
    flag = "ok" if check == report.covered_weight_after else "MISMATCH"
    print(f"{caption:34s} {move:28s} covered {report.covered_weight_after:5.1f} (static recheck {flag})")
