"""
Gluing graphs and the three kinds of decomposition curves
=========================================================

A pants decomposition of a surface is encoded as a gluing graph: nodes
are pairs of pants, each with three slots, and decomposition curves
join two slots (a self-gluing makes a handle).  Cutting a curve either
keeps the surface connected, cuts off a single pair of pants, or splits
it into two larger pieces; the three cases are read off the graph.
"""

from curvelab import (
    InfiniteModel,
    adjacency_graph,
    build_finite_surface,
    build_truncation,
    classify_curve,
    cut_vertices,
    signature,
    validate,
)

# A closed genus-3 surface: a chain of four pants with a handle at each
# end and one in the middle.
g = build_finite_surface(3, 0)
sig = signature(g)
print(f"S_{{{sig.genus},{sig.boundary}}}: {len(g.pants)} pants, {len(g.curves)} curves")
print("defects:", validate(g) or "none")

for c in g.curves:
    print(f"  {c.id}: {classify_curve(g, c.id).value}")

# The same machinery runs on finite approximations of infinite-genus
# surfaces.  A truncation keeps identifiers stable as the depth grows,
# so curve c2 of the depth-4 approximation is curve c2 at every deeper one.
g = build_truncation(InfiniteModel.LOCH_NESS, 4)
print(f"\nloch_ness depth 4: {len(g.pants)} pants, frontier {g.frontier}")
for cid in ("c1", "c2", "h0", "t1"):
    print(f"  {cid}: {classify_curve(g, cid).value}")

# The adjacency graph has one vertex per ordinary curve and an edge when
# two curves bound a common pants.  Its cut vertices are exactly the
# curves classified as non-outer separating.
a = adjacency_graph(g)
print(f"\nadjacency graph: {len(a.vertices)} vertices, {len(a.edges)} edges")
cuts = cut_vertices(a)
non_outer = tuple(
    c.id
    for c in g.curves
    if not c.is_frontier and classify_curve(g, c.id).value == "NonOuterSeparating"
)
print("cut vertices:        ", cuts)
print("non-outer separating:", non_outer)
assert set(cuts) == set(non_outer)
