"""
Telling infinite-genus surfaces apart by their ends
===================================================

The three built-in models all have infinite genus but different spaces
of ends: one end, two ends, or a Cantor set of ends.  At a finite
truncation the ends show up as the components of the graph far from a
base point, organized into a finite tree; deep enough truncations of
different models give non-isomorphic trees.
"""

from curvelab import (
    adjacency_graph,
    build_truncation,
    end_tree,
    end_trees_isomorphic,
    induced_end_correspondence,
    surface_end_tree,
)

for model in ("loch_ness", "ladder", "cantor_tree"):
    g = build_truncation(model, 8)
    tree = surface_end_tree(g, 3)
    print(f"{model:12s} leaf counts per level: {tree.leaf_counts()}")

# The ladder and the Cantor tree both show two directions at depth 1;
# they separate at depth 2, where the Cantor tree branches again.
ladder = surface_end_tree(build_truncation("ladder", 8), 2)
cantor = surface_end_tree(build_truncation("cantor_tree", 8), 2)
print("\nladder vs cantor at depth 2, isomorphic:", end_trees_isomorphic(ladder, cantor))

# The ends of the curve adjacency graph match the ends of the surface:
# the two trees are isomorphic level by level, with compatible parents.
g = build_truncation("cantor_tree", 6)
pants_tree = surface_end_tree(g, 3)
curve_tree = end_tree(adjacency_graph(g), 3)
print("\ncantor_tree pants tree  :", pants_tree.canonical())
print("cantor_tree curve tree  :", curve_tree.canonical())
_, _, matching = induced_end_correspondence(g, 3)
print("matched components per level:", [len(level) for level in matching])
