"""Curve maps between surfaces and the cut-and-glue constructions.

A vertex map is a finite injective assignment of curve references on a
source surface to curve references on a target surface.  The property
checked here is superinjectivity: disjointness agrees in both directions,
i.e. a pair is disjoint exactly when its image is.

The main construction cuts a surface along a separating decomposition
curve and glues a gadget surface into the cut, then writes down the
induced map on a finite curve inventory.  With a one-ended gadget the
result is a superinjective map whose image misses an explicit list of
curves, and the two surfaces can fail to be homeomorphic, which the end
invariants detect.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .curves import (
    DualChain,
    PantsCurve,
    WindowCurve,
    format_ref,
    global_intersection,
    make_slope,
    resolve_ref,
    slopes_up_to,
    window_around,
)
from .complexes import _adjacency_lists, _bfs_path
from .ends import DEFAULT_STRIDE, end_trees_isomorphic, surface_end_tree
from .errors import GadgetTooSmall, NotSeparating, UnknownCurve
from .pants_graphs import CurveClass, classify_curve
from .surface import Curve, GluingGraph, InfiniteModel, PantsSlot, build_truncation, signature

ZERO_ONE = (0, 1)


@dataclass(frozen=True)
class VertexMap:
    """A finite injective assignment of curve references.

    ``assoc`` is a tuple of (source reference, target reference) pairs;
    injectivity is checked at construction time.
    """

    source: GluingGraph = field(repr=False)
    target: GluingGraph = field(repr=False)
    assoc: tuple
    provenance: str = ""

    def __post_init__(self):
        values = [img for _, img in self.assoc]
        if len(set(values)) != len(values):
            raise ValueError("vertex map is not injective")
        keys = [ref for ref, _ in self.assoc]
        if len(set(keys)) != len(keys):
            raise ValueError("vertex map assigns a reference twice")

    @cached_property
    def _table(self):
        return dict(self.assoc)

    @property
    def domain(self):
        return tuple(ref for ref, _ in self.assoc)

    def apply(self, ref):
        try:
            return self._table[ref]
        except KeyError:
            raise UnknownCurve(f"{format_ref(ref)} is outside the map's domain") from None


def check_superinjective(m, pairs):
    """Test disjointness agreement of ``m`` on the given reference pairs.

    Returns a report dict with the number of pairs checked, the list of
    violating pairs with their intersection numbers on both sides, and the
    pairs skipped because an intersection number was undefined.
    """
    checked = 0
    violations = []
    skipped = []
    for x, y in pairs:
        i_src = global_intersection(m.source, x, y)
        i_tgt = global_intersection(m.target, m.apply(x), m.apply(y))
        if i_src is None or i_tgt is None:
            skipped.append((format_ref(x), format_ref(y)))
            continue
        checked += 1
        if (i_src == 0) != (i_tgt == 0):
            violations.append(
                {
                    "pair": [format_ref(x), format_ref(y)],
                    "source_intersection": i_src,
                    "target_intersection": i_tgt,
                }
            )
    return {"checked": checked, "violations": violations, "skipped": skipped}


@dataclass(frozen=True)
class CutGlueResult:
    """Outcome of gluing a gadget into a cut along a separating curve."""

    target: GluingGraph = field(repr=False)
    map: VertexMap
    witnesses: tuple

    def __post_init__(self):
        image = {img for _, img in self.map.assoc}
        clash = [w for w in self.witnesses if w in image]
        if clash:
            raise ValueError(f"witnesses meet the image: {clash!r}")


_ARM_GADGETS = ("ladder", "ladder_arm", "loch_ness")
_STUB_GADGETS = ("cantor", "cantor_stub", "cantor_tree")
_FINITE_GADGETS = ("s12", "genus1_two_boundary")


def _gadget_name(gadget):
    if isinstance(gadget, InfiniteModel):
        gadget = gadget.value
    if isinstance(gadget, tuple):
        raise GadgetTooSmall(
            "a finite gadget adds no end, so the glued surface stays "
            "homeomorphic to the original"
        )
    if gadget in _FINITE_GADGETS:
        return "s12"
    if gadget in _ARM_GADGETS:
        return "arm"
    if gadget in _STUB_GADGETS:
        return "stub"
    raise ValueError(f"unknown gadget {gadget!r}")


def _fresh(name, used):
    while name in used:
        name = name + "x"
    return name


def _gadget_pieces(kind, used_pants, used_curves):
    """Pants and curves of the gadget, minus the two splice slots.

    Every gadget presents slot 0 of its pants ``gp0`` to the cut curve and
    hangs the curve ``gs`` from slot 2 of ``gp0``; the caller wires the
    free end of ``gs`` into the cut.  Returns (pants ids, curve list,
    splice pants id, gs id, handle id).
    """
    names = (
        "gp0", "gp1", "gc", "gh", "gs", "ga0", "at1", "ah1", "ga1",
        "as1", "gb0", "gb1", "abp1", "acp1", "ahp1",
    )
    taken = used_pants | used_curves
    n = {name: _fresh(name, taken) for name in names}
    gp0 = n["gp0"]
    if kind == "s12":
        gp1 = n["gp1"]
        pants = [gp0, gp1]
        curves = [
            Curve(n["gc"], (PantsSlot(gp0, 1), PantsSlot(gp1, 0))),
            Curve(n["gh"], (PantsSlot(gp1, 1), PantsSlot(gp1, 2))),
        ]
    elif kind == "arm":
        acp1, ahp1 = n["acp1"], n["ahp1"]
        pants = [gp0, acp1, ahp1]
        curves = [
            Curve(n["ga0"], (PantsSlot(gp0, 1), PantsSlot(acp1, 0))),
            Curve(n["at1"], (PantsSlot(acp1, 1), PantsSlot(ahp1, 0))),
            Curve(n["ah1"], (PantsSlot(ahp1, 1), PantsSlot(ahp1, 2))),
            Curve(n["ga1"], (PantsSlot(acp1, 2),)),
        ]
    elif kind == "stub":
        acp1, ahp1, abp1 = n["acp1"], n["ahp1"], n["abp1"]
        pants = [gp0, acp1, ahp1, abp1]
        curves = [
            Curve(n["ga0"], (PantsSlot(gp0, 1), PantsSlot(acp1, 0))),
            Curve(n["at1"], (PantsSlot(acp1, 1), PantsSlot(ahp1, 0))),
            Curve(n["ah1"], (PantsSlot(ahp1, 1), PantsSlot(ahp1, 2))),
            Curve(n["as1"], (PantsSlot(acp1, 2), PantsSlot(abp1, 0))),
            Curve(n["gb0"], (PantsSlot(abp1, 1),)),
            Curve(n["gb1"], (PantsSlot(abp1, 2),)),
        ]
    else:
        raise ValueError(f"unknown gadget kind {kind!r}")
    handle = n["gh"] if kind == "s12" else n["ah1"]
    return pants, curves, gp0, n["gs"], handle


def _window_centers(g, bound):
    """Window curve references with coordinates up to ``bound`` at every
    curve admitting a window."""
    refs = []
    for c in g.curves:
        if c.is_frontier:
            continue
        try:
            window_around(g, c.id)
        except UnknownCurve:
            continue
        for s in slopes_up_to(bound):
            if (s.p, s.q) == ZERO_ONE:
                continue
            refs.append(WindowCurve(c.id, s))
    return refs


def _handle_chains(g):
    """One shortest dual chain per unordered handle pair, found by
    breadth-first search in the adjacency graph."""
    handles = [c.id for c in g.curves if c.is_self_gluing]
    adj = _adjacency_lists(g)
    chains = []
    for i, a in enumerate(handles):
        for b in handles[i + 1 :]:
            path = _bfs_path(adj, a, b)
            if path is not None:
                chains.append(DualChain(path[0], path[-1], tuple(path[1:-1])))
    return chains


def _alpha_side(g, curve_id, p_side, q_side):
    pants = set(g.pants_of_curve(curve_id))
    on_p = p_side in pants
    on_q = q_side in pants
    if on_p and on_q:
        raise NotSeparating(f"curve {curve_id!r} runs parallel to the cut curve")
    if on_p:
        return "p"
    if on_q:
        return "q"
    raise UnknownCurve(f"curve {curve_id!r} does not meet the cut curve's pants")


def _reroute_chain(g, chain, alpha, gs_id, p_side, q_side):
    """Image of a dual chain under the cut-and-glue map.

    Each crossing of the cut curve becomes a pass through the gadget's
    splice pants, so the occurrence of the cut curve in the chain's path
    is rewritten according to which side the path approaches and leaves
    from: entering and leaving on the splice side keeps the cut curve,
    entering and leaving on the far side replaces it with the gluing
    curve, and a through crossing inserts the gluing curve next to it.
    """
    path = list(chain.path)
    if alpha not in path:
        return chain
    i = path.index(alpha)
    before = _alpha_side(g, path[i - 1], p_side, q_side)
    after = _alpha_side(g, path[i + 1], p_side, q_side)
    if before == "p" and after == "p":
        new_path = path
    elif before == "q" and after == "q":
        new_path = path[:i] + [gs_id] + path[i + 1 :]
    elif before == "q":
        new_path = path[:i] + [gs_id, alpha] + path[i + 1 :]
    else:
        new_path = path[:i] + [alpha, gs_id] + path[i + 1 :]
    return DualChain(new_path[0], new_path[-1], tuple(new_path[1:-1]))


def cut_and_glue(g, alpha, gadget="genus1_two_boundary", slope_bound=2):
    """Cut along a separating decomposition curve and glue in a gadget.

    ``alpha`` must be a separating ordinary curve (its removal must
    disconnect the pants graph).  The gadget's two splice points absorb
    the two cut ends: the side of the cut containing the lexicographically
    first slot keeps ``alpha`` as its gluing curve, the other side
    receives the fresh curve ``gs``.

    Returns a :class:`CutGlueResult` whose map covers the ordinary
    decomposition curves, window curves with coordinates up to
    ``slope_bound`` at every window of the source, and one dual chain per
    handle pair; the witnesses are curves of the glued gadget that no
    source curve maps to.
    """
    kind = _gadget_name(gadget)
    curve = g.curve_by_id.get(alpha)
    if curve is None or curve.is_frontier:
        raise UnknownCurve(f"no ordinary curve named {alpha!r}")
    if classify_curve(g, alpha) is CurveClass.NONSEPARATING:
        raise NotSeparating(f"curve {alpha!r} does not separate")
    p_end, q_end = curve.ends
    used_pants = set(g.pants)
    used_curves = set(g.curve_by_id)
    pieces, gadget_curves, gp0, gs_id, handle = _gadget_pieces(kind, used_pants, used_curves)
    new_curves = [c for c in g.curves if c.id != alpha]
    new_curves.extend(gadget_curves)
    new_curves.append(Curve(alpha, (p_end, PantsSlot(gp0, 0))))
    new_curves.append(Curve(gs_id, (PantsSlot(gp0, 2), q_end)))
    target = GluingGraph(
        pants=tuple(g.pants) + tuple(pieces),
        curves=tuple(new_curves),
        boundary=g.boundary,
    )

    assoc = []
    for c in g.curves:
        if not c.is_frontier:
            assoc.append((PantsCurve(c.id), PantsCurve(c.id)))
    for ref in _window_centers(g, slope_bound):
        assoc.append((ref, ref))
    for chain in _handle_chains(g):
        image = _reroute_chain(g, chain, alpha, gs_id, p_end.pants, q_end.pants)
        resolve_ref(target, image)
        assoc.append((chain, image))

    witnesses = (
        PantsCurve(handle),
        WindowCurve(handle, make_slope(1, 0)),
        WindowCurve(handle, make_slope(1, 1)),
    )
    for w in witnesses:
        resolve_ref(target, w)
    m = VertexMap(
        source=g,
        target=target,
        assoc=tuple(assoc),
        provenance=f"cut at {alpha!r}, glue {kind}",
    )
    return CutGlueResult(target=target, map=m, witnesses=witnesses)


def surfaces_homeomorphic(g1, g2, depth, stride=DEFAULT_STRIDE):
    """Decide homeomorphism at the resolution the truncations allow.

    Compares real boundary counts, finiteness, genus when both surfaces
    are finite, and the canonical end trees at the given depth.  A True
    answer means no invariant distinguishes the surfaces at this depth.
    """
    if len(g1.boundary) != len(g2.boundary):
        return False
    inf1 = bool(g1.frontier)
    inf2 = bool(g2.frontier)
    if inf1 != inf2:
        return False
    if not inf1:
        sig1 = signature(g1)
        sig2 = signature(g2)
        if sig1.genus != sig2.genus:
            return False
        return True
    t1 = surface_end_tree(g1, depth, stride=stride)
    t2 = surface_end_tree(g2, depth, stride=stride)
    return end_trees_isomorphic(t1, t2)


def nonhomeomorphic_counterexample(gadget, trunc_depth=4, alpha=None):
    """A superinjective curve map between non-homeomorphic surfaces.

    Cuts a truncated one-ended chain surface at a separating chain curve
    and glues in a one-ended gadget, creating a second end that the end
    trees detect.  Returns (source, target, map).  Finite gadgets raise
    :class:`GadgetTooSmall` since they cannot change the end space.
    """
    kind = _gadget_name(gadget)
    if kind == "s12":
        raise GadgetTooSmall(
            "the two-boundary genus-1 gadget is finite; the glued surface "
            "remains homeomorphic to the original"
        )
    g = build_truncation(InfiniteModel.LOCH_NESS, trunc_depth)
    if alpha is None:
        alpha = f"c{max(trunc_depth // 2, 1)}"
    result = cut_and_glue(g, alpha, gadget=gadget)
    return g, result.target, result.map
