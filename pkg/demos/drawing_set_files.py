"""The drawing-set file format: write, read back, and catch bad files.

A drawing set is one graph plus named layouts in a single JSON document.
Serialization uses shortest round-trip floats, so parse(serialize(ds))
reproduces every coordinate bit for bit.

Run: python3 demos/drawing_set_files.py
"""

from drawqual import (
    DrawingSet,
    Graph,
    Layout,
    SemanticError,
    parse_drawing_set,
    serialize_drawing_set,
    validate_drawing_set,
)

graph = Graph(3, ((0, 1), (1, 2)))
ds = DrawingSet(
    graph,
    (("flat", Layout(((0.0, 0.0), (0.2, 0.0), (0.1, 0.0)))),),
)

text = serialize_drawing_set(ds)
print(text)
print("round-trips bit for bit:", parse_drawing_set(text) == ds)

# Validation separates hard errors from warnings. Overlapping collinear
# edges at a shared endpoint are legal but usually unintended, so the
# drawing above parses with a warning.
report = validate_drawing_set(ds)
print("errors:", list(report.errors))
print("warnings:", [code for code, _ in report.warnings])

# A file whose edges point outside the node range is rejected outright.
broken = text.replace("[1, 2]", "[1, 9]")
try:
    parse_drawing_set(broken)
except SemanticError as exc:
    print("rejected:", exc)
