"""The four raw aesthetics on two tiny hand-made drawings.

Run: python3 demos/four_aesthetics.py
"""

import math

from drawqual import Graph, Layout, aesthetic_vector

# Two edges drawn as an X: one crossing, at a right angle. No node has two
# incident edges, so the branch-angle metric reports its no-branch default.
x_graph = Graph(4, ((0, 1), (2, 3)))
x_layout = Layout(((0.0, 0.0), (2.0, 2.0), (0.0, 2.0), (2.0, 0.0)))
vec = aesthetic_vector(x_graph, x_layout)
print("two segments crossed as an X")
print(f"  crossings          {vec.cross_count}")
print(f"  crossing angle     {vec.cross_res_deg:.1f} deg")
print(f"  branch angle       {vec.angular_res_deg:.1f} deg (no degree-2 node)")
print(f"  edge length spread {vec.edge_len_stddev:.3f} (equal lengths)")

# K5 on a regular pentagon: all ten segments, five crossings among the
# diagonals. Two chords meeting inside a circle form half the sum of their
# arcs: (72 + 144) / 2 = 108, acute 72. The 108-degree corners are cut into
# three 36-degree fans, and lengths take exactly two values.
k5 = Graph(5, tuple((u, v) for u in range(5) for v in range(u + 1, 5)))
pentagon = Layout(
    tuple(
        (math.cos(2.0 * math.pi * i / 5.0), math.sin(2.0 * math.pi * i / 5.0))
        for i in range(5)
    )
)
vec = aesthetic_vector(k5, pentagon)
print("\ncomplete graph on a regular pentagon (circumradius 1)")
print(f"  crossings          {vec.cross_count}")
print(f"  crossing angle     {vec.cross_res_deg:.4f} deg")
print(f"  branch angle       {vec.angular_res_deg:.4f} deg")
print(f"  edge length spread {vec.edge_len_stddev:.4f}")
