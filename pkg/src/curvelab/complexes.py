"""Finite pieces of curve graphs and constructive diameter witnesses.

Three graphs on a curve inventory matter here: the curve complex skeleton
(edges = disjointness), its restriction to nonseparating curves, and the
unit-intersection graph (edges = curves crossing exactly once, vertices
nonseparating).  Only finite inventories are built, and only pairs whose
intersection number is defined contribute; the rest are recorded, never
guessed.

The witness constructions back the small-diameter statements: any two
inventory curves admit a common disjoint pants curve (a length-2 path in
the disjointness graph), and any two handle curves are joined by a
length-4 path in the unit-intersection graph threaded through a third
handle by dual chains.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .curves import (
    DualChain,
    PantsCurve,
    WindowCurve,
    format_ref,
    global_intersection,
    resolve_ref,
    window_around,
    window_curve_separates,
)
from .errors import NoRoom, UnknownCurve
from .pants_graphs import CurveClass, adjacency_graph, classify_curve

_RELATIONS = {"c": "disjointness", "n": "disjointness", "g": "unit_intersection"}


@dataclass(frozen=True)
class LocalCurveGraph:
    """A finite relation graph over curve references.

    ``mode`` is one of "c" (disjointness, all curves), "n" (disjointness,
    nonseparating curves) or "g" (unit intersection, nonseparating curves).
    ``undefined_pairs`` lists vertex pairs whose intersection number the
    arithmetic table does not cover.
    """

    vertices: tuple
    edges: tuple
    mode: str
    undefined_pairs: tuple

    @property
    def relation(self):
        return _RELATIONS[self.mode]


def _is_nonseparating(g, ref):
    if isinstance(ref, PantsCurve):
        return classify_curve(g, ref.id) is CurveClass.NONSEPARATING
    if isinstance(ref, WindowCurve):
        w = window_around(g, ref.center)
        return not window_curve_separates(g, w, ref.slope)
    if isinstance(ref, DualChain):
        # a chain crosses its endpoint handles once; odd intersection with
        # anything rules out separating
        return True
    raise UnknownCurve(f"unsupported reference {ref!r}")


def local_graph(g, inventory, mode):
    """Relation graph over ``inventory`` in the given mode.

    Vertices keep inventory order (duplicates dropped); in modes "n" and
    "g" separating curves are filtered out.  An edge appears when
    global_intersection is defined and equals the mode's target value (0
    for disjointness, 1 for unit intersection); undefined pairs are
    reported in ``undefined_pairs``.
    """
    if mode not in _RELATIONS:
        raise ValueError(f"mode must be one of c, n, g; got {mode!r}")
    seen = []
    for ref in inventory:
        resolve_ref(g, ref)
        if ref not in seen:
            seen.append(ref)
    if mode in ("n", "g"):
        seen = [ref for ref in seen if _is_nonseparating(g, ref)]
    want = 0 if _RELATIONS[mode] == "disjointness" else 1
    edges = []
    undefined = []
    for i, u in enumerate(seen):
        for v in seen[i + 1 :]:
            val = global_intersection(g, u, v)
            if val is None:
                undefined.append((u, v))
            elif val == want:
                edges.append((u, v))
    return LocalCurveGraph(
        vertices=tuple(seen), edges=tuple(edges), mode=mode,
        undefined_pairs=tuple(undefined),
    )


def disjointness_witness(g, c1, c2):
    """A pants curve disjoint from both inputs, giving the 2-step path
    c1 - witness - c2 in the disjointness graph.

    Scans decomposition curves in id order, so the witness is deterministic.
    Raises :class:`NoRoom` when no decomposition curve avoids both inputs;
    that means the truncation is too small to show the path and should be
    deepened.
    """
    resolve_ref(g, c1)
    resolve_ref(g, c2)
    for c in g.curves:
        if c.is_frontier:
            continue
        cand = PantsCurve(c.id)
        if cand == c1 or cand == c2:
            continue
        if global_intersection(g, cand, c1) == 0 and global_intersection(g, cand, c2) == 0:
            return cand
    raise NoRoom(
        f"no pants curve avoids both {format_ref(c1)} and {format_ref(c2)}; "
        "deepen the truncation"
    )


def _bfs_path(adj, start, goal):
    """Shortest path with lexicographic tie-breaking; None if unreachable."""
    if start == goal:
        return [start]
    parent = {start: None}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj.get(u, ()):
            if v not in parent:
                parent[v] = u
                if v == goal:
                    path = [v]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                queue.append(v)
    return None


def _adjacency_lists(g):
    a = adjacency_graph(g)
    adj = {v: set() for v in a.vertices}
    for u, v in a.edges:
        adj[u].add(v)
        adj[v].add(u)
    return {v: sorted(nbrs) for v, nbrs in adj.items()}


def schmutz_path(g, h1, h2):
    """A path of length at most 4 between two handle curves in the
    unit-intersection graph: [h1, chain, third handle, chain, h2].

    Every consecutive pair intersects exactly once by the dual-chain rules.
    The third handle is the smallest handle curve distinct from both
    endpoints; :class:`NoRoom` when none exists or no connecting chain path
    exists in the adjacency graph.
    """
    for h in (h1, h2):
        if not isinstance(h, PantsCurve):
            raise UnknownCurve(f"{format_ref(h)} is not a pants curve reference")
        if not resolve_ref(g, h).is_self_gluing:
            raise UnknownCurve(f"curve {h.id!r} is not a handle curve")
    if h1 == h2:
        return [h1]
    third = None
    for c in g.curves:
        if c.is_self_gluing and c.id not in (h1.id, h2.id):
            third = c.id
            break
    if third is None:
        raise NoRoom("no third handle curve available; deepen the truncation")
    adj = _adjacency_lists(g)
    legs = []
    for a, b in ((h1.id, third), (third, h2.id)):
        path = _bfs_path(adj, a, b)
        if path is None:
            raise NoRoom(f"no chain path from {a!r} to {b!r} in the adjacency graph")
        legs.append(DualChain(path[0], path[-1], tuple(path[1:-1])))
    return [h1, legs[0], PantsCurve(third), legs[1], h2]
