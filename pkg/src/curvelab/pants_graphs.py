"""Adjacency graphs of pants decompositions and curve classification.

The adjacency graph A(P) of a decomposition P has one vertex per ordinary
decomposition curve, with an edge whenever two curves lie on a common pants.
Frontier curves of a truncation are not vertices; instead the curves on a
frontier-carrying pants are *marked*, since an unbounded part of the surface
is attached there.

Every curve of a pants decomposition is one of three kinds: nonseparating,
outer separating (it cuts off a single pants all of whose other circles are
boundary), or non-outer separating.  On the adjacency graph the last kind is
exactly the cut vertices, which is what makes A(P) useful: separation
properties of curves become pure graph theory.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

import networkx as nx

from .errors import DisconnectedGraph, UnknownCurve
from .surface import Curve, GluingGraph, PantsSlot


class CurveClass(str, enum.Enum):
    NONSEPARATING = "Nonseparating"
    OUTER = "OuterSeparating"
    NON_OUTER = "NonOuterSeparating"


@dataclass(frozen=True)
class AdjacencyGraph:
    """A(P) together with the frontier marks inherited from the truncation.

    ``vertices`` are ordinary (two-ended) curve ids, ``edges`` unordered
    pairs, ``marks`` the vertices lying on a pants that touches the frontier.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    marks: tuple[str, ...]

    def to_networkx(self):
        h = nx.Graph()
        h.add_nodes_from(self.vertices)
        h.add_edges_from(self.edges)
        return h


def adjacency_graph(g):
    """The adjacency graph of the decomposition encoded by ``g``."""
    vertices = sorted(c.id for c in g.curves if not c.is_frontier)
    vertex_set = set(vertices)
    edges = set()
    for p in g.pants:
        here = sorted(set(g.curves_at[p]) & vertex_set)
        for i, u in enumerate(here):
            for v in here[i + 1 :]:
                edges.add((u, v))
    marks = sorted(
        v
        for v in vertices
        if any(p in g.frontier_pants for p in g.pants_of_curve(v))
    )
    return AdjacencyGraph(tuple(vertices), tuple(sorted(edges)), tuple(marks))


def _require_ordinary(g, curve_id):
    c = g.curve_by_id.get(curve_id)
    if c is None:
        raise UnknownCurve(f"no curve {curve_id!r} in this decomposition")
    if c.is_frontier:
        raise UnknownCurve(f"curve {curve_id!r} is a frontier curve")
    return c


def classify_curve(g, curve_id):
    """Classify one decomposition curve of ``g``.

    A curve is nonseparating exactly when it is not a bridge of the pants
    multigraph (self-gluings and doubled edges never separate).  A separating
    curve is outer when one of its sides is a single pants whose remaining
    two circles are all surface boundary or frontier; cutting there removes a
    pair of pants with no further topology, not a genuine piece.
    """
    c = _require_ordinary(g, curve_id)
    if c.is_self_gluing:
        return CurveClass.NONSEPARATING
    m = g.pants_multigraph()
    u, v = c.ends[0].pants, c.ends[1].pants
    m.remove_edge(u, v, key=curve_id)
    if nx.has_path(m, u, v):
        return CurveClass.NONSEPARATING
    for side in (u, v):
        if m.degree(side) == 0 and _bare_pants(g, side, curve_id):
            return CurveClass.OUTER
    return CurveClass.NON_OUTER


def _bare_pants(g, pants, curve_id):
    """True when every circle of ``pants`` other than ``curve_id`` is surface
    boundary or frontier."""
    others = [cid for cid in g.curves_at[pants] if cid != curve_id]
    return all(g.curve_by_id[cid].is_frontier for cid in others)


def classify_all(g):
    """Map each ordinary curve id to its :class:`CurveClass`."""
    return {c.id: classify_curve(g, c.id) for c in g.curves if not c.is_frontier}


def cut_vertices(a):
    """Cut vertices of an adjacency graph, sorted.

    Raises :class:`DisconnectedGraph` when A(P) is not connected, since cut
    vertices of a disconnected graph do not mean what callers expect.
    """
    h = a.to_networkx()
    if h.number_of_nodes() and not nx.is_connected(h):
        sizes = sorted(len(c) for c in nx.connected_components(h))
        raise DisconnectedGraph(f"adjacency graph has components of sizes {sizes}")
    return tuple(sorted(nx.articulation_points(h)))


def outer_degree_check(g, classes=None):
    """Verify degree bounds in A(P) kind by kind.

    Every vertex of A(P) has degree at most 4 (two pants sides, at most two
    neighbours each).  Outer separating curves have at most 2 (one side is a
    bare pants).  Accepts a precomputed ``classes`` map so that a deliberately
    wrong classification can be fed in to watch the check fail.  Returns a
    tuple of (curve, degree, bound) violations, empty when all bounds hold.
    """
    if classes is None:
        classes = classify_all(g)
    a = adjacency_graph(g)
    h = a.to_networkx()
    violations = []
    for v in a.vertices:
        bound = 2 if classes.get(v) is CurveClass.OUTER else 4
        d = h.degree(v)
        if d > bound:
            violations.append((v, d, bound))
    return tuple(violations)


def peripheral_pairs(g):
    """Pairs of nonseparating curves that together cut off an annular
    neighbourhood of a boundary circle: both lie on a common pants whose
    third circle is surface boundary.  Returned as a sorted tuple of
    sorted pairs."""
    boundary_pants = {}
    for s in g.boundary:
        boundary_pants[s.pants] = boundary_pants.get(s.pants, 0) + 1
    pairs = set()
    for p, nmarks in boundary_pants.items():
        if nmarks != 1:
            continue
        here = [cid for cid in g.curves_at[p] if not g.curve_by_id[cid].is_frontier]
        if len(here) != 2 or here[0] == here[1]:
            continue
        if all(classify_curve(g, cid) is CurveClass.NONSEPARATING for cid in here):
            pairs.add(tuple(sorted(here)))
    return tuple(sorted(pairs))


def random_gluing_graph(n_pants, rng=None, boundary_bias=0.25):
    """A random valid connected gluing graph on ``n_pants`` pants.

    Grows a random spanning tree of pants, then closes remaining slots by
    random matching; each leftover slot independently becomes boundary with
    probability ``boundary_bias``, and an odd leftover forces one more
    boundary mark.  Deterministic for a given ``rng``.
    """
    if n_pants < 1:
        raise ValueError("need at least one pants")
    rng = rng or random.Random()
    names = [f"p{i}" for i in range(n_pants)]
    free = {p: [0, 1, 2] for p in names}
    curves = []
    counter = 0

    def take(p):
        return free[p].pop(rng.randrange(len(free[p])))

    attached = [names[0]]
    for p in names[1:]:
        anchor = rng.choice([q for q in attached if free[q]])
        curves.append(Curve(f"e{counter}", (PantsSlot(anchor, take(anchor)), PantsSlot(p, take(p)))))
        counter += 1
        attached.append(p)

    loose = [PantsSlot(p, s) for p in names for s in free[p]]
    rng.shuffle(loose)
    boundary = []
    while loose:
        s = loose.pop()
        if not loose or rng.random() < boundary_bias:
            boundary.append(s)
        else:
            t = loose.pop()
            curves.append(Curve(f"e{counter}", (s, t)))
            counter += 1
    return GluingGraph(names, curves, boundary)
