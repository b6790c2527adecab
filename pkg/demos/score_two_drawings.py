"""Score and rank two drawings of the same square-with-diagonal graph.

The score of a drawing only means something relative to the other drawings
of the same graph: each metric is standardized within the comparison set
and the four z-scores are combined with their better-is-higher signs.

Run: python3 demos/score_two_drawings.py
"""

from drawqual import DrawingSet, Graph, Layout, compare_drawing_set

graph = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 2)))

# Same graph twice: once as a convex quadrilateral with one inner diagonal,
# once with two corners swapped so the diagonal crosses an outer edge.
convex = Layout(((0.0, 0.0), (4.0, 0.0), (4.0, 4.0), (0.0, 4.0)))
tangled = Layout(((0.0, 0.0), (4.0, 4.0), (4.0, 0.0), (0.0, 4.0)))

report = compare_drawing_set(
    DrawingSet(graph, (("convex", convex), ("tangled", tangled)))
)
for sc in report.scores:
    raw = sc.raw
    print(
        f"#{sc.rank} {sc.layout_name:8s} overall {sc.overall:+.3f}  "
        f"(crossings {raw.cross_count}, crossing angle {raw.cross_res_deg:.1f}, "
        f"branch angle {raw.angular_res_deg:.1f}, "
        f"length spread {raw.edge_len_stddev:.2f})"
    )

# With two drawings every non-tied z-column contributes +-1/sqrt(2), so the
# overall scores land symmetrically around zero.
total = sum(sc.overall for sc in report.scores)
print(f"overall scores always cancel within a set: sum = {total:+.1e}")
