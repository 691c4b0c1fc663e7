"""
Finite curve graphs, witnesses and short paths
==============================================

Out of a surface and a finite inventory of curve references one can
build the induced subgraph of a curve graph: vertices joined when
disjoint (modes c and n) or when crossing exactly once (mode g).  Two
library routines keep these graphs small-diameter in practice: every
pair of curves has a common disjoint neighbor, and any two handles are
joined by a length-four path of unit crossings.
"""

from curvelab import (
    PantsCurve,
    build_truncation,
    disjointness_witness,
    format_ref,
    global_intersection,
    local_graph,
    parse_ref,
    schmutz_path,
)

g = build_truncation("loch_ness", 5)

inventory = [parse_ref(t) for t in (
    "pants:h0",
    "pants:h2",
    "win:h0:1/0",
    "win:c2:1/1",
    "chain:h0:h2:c1,c2,t2",
)]
for mode in ("c", "g"):
    lg = local_graph(g, inventory, mode)
    print(f"mode {mode} ({lg.relation}): {len(lg.vertices)} vertices")
    for x, y in lg.edges:
        print(f"  {format_ref(x)} -- {format_ref(y)}")
    for x, y in lg.undefined_pairs:
        print(f"  undefined: {format_ref(x)} vs {format_ref(y)}")

# Any two curves here are at distance two in the disjointness graph:
# a pants curve disjoint from both is found by scanning the decomposition.
a, b = parse_ref("win:h0:1/1"), parse_ref("win:h3:2/1")
w = disjointness_witness(g, a, b)
print(f"\n{format_ref(a)} and {format_ref(b)} are both disjoint from {format_ref(w)}")

# Two handles are joined by handle - chain - handle - chain - handle,
# with consecutive members crossing exactly once.
path = schmutz_path(g, PantsCurve("h0"), PantsCurve("h4"))
print("\npath from h0 to h4:")
for x in path:
    print(" ", format_ref(x))
crossings = [global_intersection(g, x, y) for x, y in zip(path, path[1:])]
print("consecutive crossings:", crossings)
