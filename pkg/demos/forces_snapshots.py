"""Watch the spring embedder improve a random drawing.

A connected random graph starts from random positions; snapshots along one
deterministic run are scored as a comparison set. Later snapshots should
rank better. A single run can wobble mid-way (see validity_experiment.py
for the averaged claim), but the trend is usually visible even here.

Run: python3 demos/forces_snapshots.py
"""

from drawqual import (
    DrawingSet,
    LayoutParams,
    Seed,
    compare_drawing_set,
    erdos_renyi_gnm,
    force_directed_snapshots,
)

seed = Seed(4)
graph = erdos_renyi_gnm(20, 26, seed, require_connected=True)
params = LayoutParams()
snaps = force_directed_snapshots(graph, params, [0, 3000, 6000, 12000], seed)

ds = DrawingSet(graph, tuple((f"iter{i}", lay) for i, lay in snaps))
report = compare_drawing_set(ds)
print(f"G(20,26), seed {seed.master_seed}, one run, four snapshots")
for sc in sorted(report.scores, key=lambda s: int(s.layout_name[4:])):
    print(
        f"  {sc.layout_name:>9}  rank {sc.rank}  overall {sc.overall:+.3f}  "
        f"crossings {sc.raw.cross_count}"
    )

# Rerunning with the same seed reproduces the exact same numbers; a new
# stream id gives an independent but equally reproducible run.
again = force_directed_snapshots(graph, params, [12000], seed)
print("rerun reproduces snapshot 12000:", again[0][1] == snaps[-1][1])
