"""End trees of truncated infinite surfaces.

The ends of an infinite surface are read off a truncation by watching how
the graph falls apart outside growing balls.  Fix a base vertex and a ball
schedule (radius ``stride * k`` at level ``k``).  The level-k nodes of the
end tree are the *live* components of the graph minus the ball: those still
containing a frontier mark, hence still connected to the unbounded part of
the surface.  A live component at level k+1 lies inside a unique live
component at level k, its parent.  Dead components are finite pockets and
are dropped.

The same construction runs on two graphs: the pants graph of the
decomposition (marks are the frontier-carrying pants) and the adjacency
graph A(P) (marks are the curves lying on such pants).  For a decomposition
of an infinite surface the two trees are isomorphic, and
:func:`induced_end_correspondence` exhibits the bijection level by level.

A finite surface has no marks, every component is dead, and the tree is
empty at every level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import networkx as nx

from .errors import BijectionFailure, DepthExceedsTruncation, DepthMismatch, UnknownCurve
from .pants_graphs import AdjacencyGraph, adjacency_graph

DEFAULT_STRIDE = 2


@dataclass(frozen=True)
class EndTreeNode:
    """One live component: its level, sorted member vertices, and the index
    of its parent in the previous level (None at level 0)."""

    level: int
    members: tuple[str, ...]
    parent: int | None


@dataclass(frozen=True)
class EndTree:
    """Levelled forest of live components around ``base``.

    ``levels[k]`` lists the level-k nodes in deterministic order.  The tree
    of a surface with no frontier has every level empty.
    """

    base: str | None
    stride: int
    levels: tuple[tuple[EndTreeNode, ...], ...]

    @property
    def depth(self):
        return len(self.levels) - 1

    @property
    def has_ends(self):
        return any(self.levels)

    def leaf_counts(self):
        """Number of live components at each level."""
        return tuple(len(lv) for lv in self.levels)

    def canonical(self):
        """Canonical bracket string of the forest, invariant under
        relabelling (children are sorted recursively)."""
        labels = [["" for _ in lv] for lv in self.levels]
        for k in range(len(self.levels) - 1, -1, -1):
            children = [[] for _ in self.levels[k]]
            if k + 1 < len(self.levels):
                for node, lab in zip(self.levels[k + 1], labels[k + 1]):
                    children[node.parent].append(lab)
            for i in range(len(self.levels[k])):
                labels[k][i] = "(" + "".join(sorted(children[i])) + ")"
        return "(" + "".join(sorted(labels[0])) + ")"


def _nearest_mark_distances(h, marks):
    live_marks = [m for m in marks if m in h]
    if not live_marks:
        return {}
    return nx.multi_source_dijkstra_path_length(h, set(live_marks))


def default_base(h, marks):
    """The vertex farthest from every mark (maximin distance), ties broken
    by name.  With no marks any vertex does; the smallest is returned."""
    if h.number_of_nodes() == 0:
        return None
    dist = _nearest_mark_distances(h, marks)
    return min(h.nodes, key=lambda v: (-dist.get(v, math.inf), v))


def _end_tree(h, marks, depth, base, stride):
    if depth < 0:
        raise ValueError(f"depth must be nonnegative, got {depth}")
    if stride < 1:
        raise ValueError(f"stride must be positive, got {stride}")
    marks = set(m for m in marks if m in h)
    if base is None:
        base = default_base(h, marks)
    elif base not in h:
        raise ValueError(f"base {base!r} is not a vertex of this graph")

    if base is not None:
        reach = nx.single_source_shortest_path_length(h, base, cutoff=stride * depth)
        inner = [m for m in marks if reach.get(m, math.inf) <= stride * depth]
        if inner:
            raise DepthExceedsTruncation(
                f"frontier mark {min(inner)!r} lies within distance "
                f"{stride * depth} of base {base!r}; deepen the truncation"
            )

    levels = []
    prev_index = {}
    for k in range(depth + 1):
        ball = (
            set(nx.single_source_shortest_path_length(h, base, cutoff=stride * k))
            if base is not None
            else set()
        )
        outside = h.subgraph(v for v in h.nodes if v not in ball)
        nodes = []
        index = {}
        for comp in nx.connected_components(outside):
            if comp & marks:
                nodes.append((tuple(sorted(comp)), comp))
        nodes.sort(key=lambda t: t[0])
        built = []
        for i, (members, comp) in enumerate(nodes):
            parent = None
            if k > 0:
                parent = prev_index[next(iter(comp))]
            built.append(EndTreeNode(level=k, members=members, parent=parent))
            for v in comp:
                index[v] = i
        levels.append(tuple(built))
        prev_index = index
    return EndTree(base=base, stride=stride, levels=tuple(levels))


def end_tree(a, depth, base=None, stride=DEFAULT_STRIDE):
    """End tree of an adjacency graph ``a`` (an :class:`AdjacencyGraph`).

    Raises :class:`DepthExceedsTruncation` when some mark falls inside the
    deepest ball, since then the truncation is too shallow for the requested
    depth and deeper levels would be artifacts of the cut.
    """
    return _end_tree(a.to_networkx(), set(a.marks), depth, base, stride)


def surface_end_tree(g, depth, base=None, stride=DEFAULT_STRIDE):
    """End tree of the pants graph of ``g``, marks at frontier pants."""
    h = nx.Graph()
    h.add_nodes_from(g.pants)
    for c in g.curves:
        if not c.is_frontier and not c.is_self_gluing:
            h.add_edge(c.ends[0].pants, c.ends[1].pants)
    return _end_tree(h, set(g.frontier_pants), depth, base, stride)


def end_trees_isomorphic(t1, t2):
    """Whether two end trees are isomorphic as levelled rooted forests.

    Raises :class:`DepthMismatch` when they were computed to different
    depths, since the comparison would be meaningless.
    """
    if t1.depth != t2.depth:
        raise DepthMismatch(f"tree depths differ: {t1.depth} vs {t2.depth}")
    return t1.canonical() == t2.canonical()


def induced_end_correspondence(g, depth, base=None, stride=DEFAULT_STRIDE):
    """Match the A(P) end tree of ``g`` with its pants-graph end tree.

    Every level-k component of curves is sent to the unique live pants
    component meeting the supports of its curves, after discarding pants
    inside the level-k ball and pants in dead components.  ``base``, when
    given, names the pants anchoring the pants-graph tree; the curve tree
    is then anchored at the smallest ordinary curve on that pants.  Returns
    ``(curve_tree, pants_tree, mapping)`` where ``mapping[k][i] = j`` matches
    node i of the curve tree to node j of the pants tree at level k.  Raises
    :class:`BijectionFailure` if any assignment is ambiguous, the level maps
    fail to be bijections, or parents do not match.
    """
    a = adjacency_graph(g)
    curve_base = None
    if base is not None:
        if base not in set(g.pants):
            raise UnknownCurve(f"no pants named {base!r}")
        anchors = [cid for cid in g.curves_at[base] if not g.curve_by_id[cid].is_frontier]
        if not anchors:
            raise BijectionFailure(f"pants {base!r} carries no ordinary curve to anchor at")
        curve_base = min(anchors)
    ct = end_tree(a, depth, base=curve_base, stride=stride)
    pt = surface_end_tree(g, depth, base=base, stride=stride)

    hp = nx.Graph()
    hp.add_nodes_from(g.pants)
    for c in g.curves:
        if not c.is_frontier and not c.is_self_gluing:
            hp.add_edge(c.ends[0].pants, c.ends[1].pants)
    mapping = []
    for k in range(depth + 1):
        ball = (
            set(nx.single_source_shortest_path_length(hp, pt.base, cutoff=stride * k))
            if pt.base is not None
            else set()
        )
        live_pants = {}
        for j, node in enumerate(pt.levels[k]):
            for p in node.members:
                live_pants[p] = j
        level_map = {}
        for i, node in enumerate(ct.levels[k]):
            targets = set()
            for v in node.members:
                for p in g.pants_of_curve(v):
                    if p in ball:
                        continue
                    if p in live_pants:
                        targets.add(live_pants[p])
            if len(targets) != 1:
                raise BijectionFailure(
                    f"level {k}: curve component {i} meets {len(targets)} live pants components"
                )
            level_map[i] = targets.pop()
        if sorted(level_map.values()) != list(range(len(pt.levels[k]))):
            raise BijectionFailure(
                f"level {k}: map over {len(ct.levels[k])} curve components is not a "
                f"bijection onto {len(pt.levels[k])} pants components"
            )
        if k > 0:
            for i, node in enumerate(ct.levels[k]):
                want = mapping[k - 1][node.parent]
                got = pt.levels[k][level_map[i]].parent
                if want != got:
                    raise BijectionFailure(
                        f"level {k}: component {i} maps inconsistently with its parent"
                    )
        mapping.append(level_map)
    return ct, pt, mapping
