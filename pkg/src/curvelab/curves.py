"""Slope arithmetic in windows and the global intersection table.

A window is an embedded subsurface spanned by one decomposition curve: a
self-glued pants gives a one-holed torus, a curve joining two otherwise
unrelated pants spans a four-holed sphere.  Curves inside a window are named
by coprime slopes (p, q), with the window's center curve at (0, 1) and the
dual curve at (1, 0).  Intersection numbers inside a window are determinant
formulas: |p1*q2 - q1*p2| on the torus, twice that on the sphere.  The sign
conventions (slope normalization, twist direction) are fixed once by drawing
line classes on the square torus; everything downstream inherits them.

Besides window curves the inventory has plain decomposition curves and dual
chains, which cross a path of decomposition curves between two handles.
``global_intersection`` evaluates exactly the pairings the rest of the
package needs and returns None for pairs outside its table.  None means
undefined, not zero; callers must branch on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx
import numpy as np

from .errors import (
    CountAnomaly,
    FormatError,
    IntersectionTooSmall,
    NotTorusWindow,
    UndefinedPair,
    UnknownCurve,
    WrongIntersection,
    ZeroSlope,
)
from .surface import PantsSlot


@dataclass(frozen=True, order=True)
class Slope:
    """A coprime pair naming a curve in a window; q > 0, or (p,q) = (1,0)."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 0 or (self.q == 0 and self.p != 1):
            raise ValueError(f"slope ({self.p}, {self.q}) is not sign-normalized")
        if math.gcd(abs(self.p), self.q) != 1:
            raise ValueError(f"slope ({self.p}, {self.q}) is not reduced")

    def __str__(self):
        return f"{self.p}/{self.q}"


def make_slope(p, q):
    """Reduce and sign-normalize an integer pair into a Slope.

    Raises :class:`ZeroSlope` on (0, 0), which names no curve.
    """
    if p == 0 and q == 0:
        raise ZeroSlope("the pair (0, 0) names no curve")
    d = math.gcd(abs(p), abs(q))
    p, q = p // d, q // d
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return Slope(p, q)


def _det(a, b):
    return a.p * b.q - a.q * b.p


def slopes_up_to(bound):
    """All normalized slopes with |p|, |q| <= bound, sorted."""
    if bound < 1:
        raise ValueError(f"bound must be at least 1, got {bound}")
    out = [Slope(1, 0)]
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if math.gcd(abs(p), q) == 1:
                out.append(Slope(p, q))
    return sorted(out)


# ---------------------------------------------------------------------------
# windows


@dataclass(frozen=True)
class Window:
    """A one-holed-torus or four-holed-sphere neighbourhood of a curve.

    ``cuff_slots`` are the pants slots along which the window meets the rest
    of the surface (one for a torus window, four for a sphere window, in
    support order); ``frontier`` lists the curves occupying those slots.
    """

    kind: str
    center: str
    support: tuple[str, ...]
    cuff_slots: tuple[PantsSlot, ...]
    frontier: tuple[str, ...]

    @property
    def scale(self):
        """Intersection-number multiplier: 1 on the torus, 2 on the sphere."""
        return 1 if self.kind == "torus" else 2

    @property
    def dual(self):
        return Slope(1, 0)


def abstract_window(kind):
    """A detached window for pure slope arithmetic with no ambient surface."""
    if kind not in ("torus", "sphere"):
        raise ValueError(f"window kind must be torus or sphere, got {kind!r}")
    return Window(kind=kind, center="window", support=(), cuff_slots=(), frontier=())


def window_around(g, center_id):
    """The window spanned by a decomposition curve of ``g``.

    A self-gluing curve spans a torus window on its pants.  A curve joining
    two distinct pants spans a sphere window provided the union really is a
    four-holed sphere: the two pants share no second curve and neither
    carries a self-gluing.  Raises :class:`UnknownCurve` otherwise.
    """
    c = g.curve_by_id.get(center_id)
    if c is None:
        raise UnknownCurve(f"no curve {center_id!r} in this decomposition")
    if c.is_frontier:
        raise UnknownCurve(f"curve {center_id!r} is a frontier curve")
    if c.is_self_gluing:
        p = c.ends[0].pants
        third = ({0, 1, 2} - {c.ends[0].slot, c.ends[1].slot}).pop()
        cuffs = (PantsSlot(p, third),)
        support = (p,)
        kind = "torus"
    else:
        support = (c.ends[0].pants, c.ends[1].pants)
        for pid in support:
            for cid in set(g.curves_at[pid]):
                other = g.curve_by_id[cid]
                if other.is_self_gluing:
                    raise UnknownCurve(
                        f"no sphere window around {center_id!r}: pants {pid!r} "
                        f"carries the self-gluing {cid!r}"
                    )
                if cid != center_id and not other.is_frontier and set(
                    g.pants_of_curve(cid)
                ) == set(support):
                    raise UnknownCurve(
                        f"no sphere window around {center_id!r}: {cid!r} also "
                        f"joins its two pants"
                    )
        cuffs = tuple(
            PantsSlot(end.pants, k)
            for end in c.ends
            for k in range(3)
            if k != end.slot
        )
        kind = "sphere"
    frontier = tuple(
        g.slot_occupant[(s.pants, s.slot)]
        for s in cuffs
        if (s.pants, s.slot) in g.slot_occupant
    )
    return Window(kind=kind, center=center_id, support=support,
                  cuff_slots=cuffs, frontier=frontier)


class WindowSet:
    """Window registry enforcing the support discipline: any two registered
    windows either coincide or have disjoint supports."""

    def __init__(self, g):
        self.g = g
        self._by_center = {}

    def add(self, center_id):
        if center_id in self._by_center:
            return self._by_center[center_id]
        w = window_around(self.g, center_id)
        for other in self._by_center.values():
            if set(other.support) & set(w.support):
                raise ValueError(
                    f"window at {center_id!r} overlaps the window at {other.center!r}"
                )
        self._by_center[center_id] = w
        return w

    def windows(self):
        return [self._by_center[k] for k in sorted(self._by_center)]


def window_intersection(w, s1, s2):
    """Geometric intersection number of two slope curves in one window."""
    return w.scale * abs(_det(s1, s2))


def twist(w, along, s, direction=1):
    """Dehn twist of slope ``s`` along slope ``along`` in window ``w``.

    The action is s + direction * det(s, along) * along, which fixes
    ``along`` and preserves every pairwise window intersection number.  The
    window argument only fixes the ambient naming; the formula does not
    depend on its kind.
    """
    if direction not in (1, -1):
        raise ValueError(f"direction must be +1 or -1, got {direction!r}")
    d = _det(s, along)
    return make_slope(s.p + direction * d * along.p, s.q + direction * d * along.q)


def is_triple(w, a, b, c):
    """Whether three slopes are pairwise distinct and pairwise intersect
    once in the torus window ``w``."""
    if w.kind != "torus":
        raise NotTorusWindow(f"triples live in torus windows, not {w.kind}")
    if len({a, b, c}) != 3:
        return False
    return (
        abs(_det(a, b)) == 1 and abs(_det(b, c)) == 1 and abs(_det(a, c)) == 1
    )


def _bezout(p, q):
    """Coefficients (u, v) with u*p + v*q = 1 for coprime (p, q)."""
    old_r, r = p, q
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_u, u = u, old_u - k * u
        old_v, v = v, old_v - k * v
    if old_r < 0:
        old_u, old_v = -old_u, -old_v
    return old_u, old_v


def triple_completion(w, a, b):
    """Complete two slopes crossing >= 2 times to a triple through ``a``.

    Returns (g, g2) with {a, g, g2} a triple, i(a,b) = i(b,g) + i(b,g2),
    both summands positive, and g2 the positive twist of g along a.  Works
    by moving a to (0,1) with a unimodular map; against (0,1) the two Farey
    neighbours of b are read off the division b.q = s*b.p + t.
    """
    if w.kind != "torus":
        raise NotTorusWindow(f"triple completion needs a torus window, not {w.kind}")
    n = abs(_det(a, b))
    if n < 2:
        raise IntersectionTooSmall(f"i(a, b) = {n}; completion needs at least 2")
    u, v = _bezout(a.p, a.q)
    # the map [[a.q, -a.p], [u, v]] has determinant 1 and sends a to (0, 1)
    big_p = a.q * b.p - a.p * b.q
    big_q = u * b.p + v * b.q
    s, _ = divmod(big_q, big_p)
    g = make_slope(v + a.p * s, -u + a.q * s)
    g2 = make_slope(v + a.p * (s + 1), -u + a.q * (s + 1))
    return g, g2


@lru_cache(maxsize=4)
def _slope_grid(bound):
    p = np.arange(-bound, bound + 1, dtype=np.int64)
    q = np.arange(0, bound + 1, dtype=np.int64)
    return np.meshgrid(p, q, indexing="ij")


def sch04_common_neighbors(w, a, b, search_bound):
    """All slopes meeting both ``a`` and ``b`` twice in a sphere window.

    Enumerates every candidate with |p|, |q| <= search_bound.  For a valid
    input pair (sphere intersection exactly 2) there are exactly two such
    curves; :class:`CountAnomaly` reports any other count since it would
    mean the arithmetic model is broken.  The two solutions are the sum and
    the difference of the inputs, so any bound covering the coordinate sums
    makes the enumeration complete.
    """
    if w.kind != "sphere":
        raise ValueError(f"common-neighbor counting needs a sphere window, not {w.kind}")
    i = window_intersection(w, a, b)
    if i != 2:
        raise WrongIntersection(f"i(a, b) = {i}, need exactly 2")
    need = max(abs(a.p) + abs(b.p), a.q + b.q)
    if search_bound < need:
        raise ValueError(f"search_bound {search_bound} is below the safe bound {need}")
    pg, qg = _slope_grid(search_bound)
    mask = (np.abs(pg * a.q - qg * a.p) == 1) & (np.abs(pg * b.q - qg * b.p) == 1)
    found = set()
    for pi, qi in np.argwhere(mask):
        found.add(make_slope(int(pg[pi, qi]), int(qg[pi, qi])))
    if len(found) != 2:
        raise CountAnomaly(
            f"{len(found)} common neighbors of {a} and {b} within {search_bound}, expected 2"
        )
    return found


# ---------------------------------------------------------------------------
# curve references


@dataclass(frozen=True)
class PantsCurve:
    """A decomposition curve, referenced by id."""

    id: str


@dataclass(frozen=True)
class WindowCurve:
    """The slope curve of the window centered at a decomposition curve.

    Slope (0, 1) is the center itself and must be referenced as a
    PantsCurve instead.
    """

    center: str
    slope: Slope


@dataclass(frozen=True)
class DualChain:
    """A curve crossing each of two handles once and each interior path
    curve twice.  Stored with endpoints in sorted order so equal chains
    compare equal."""

    handle_a: str
    handle_b: str
    interior: tuple[str, ...]

    def __post_init__(self):
        if self.handle_b < self.handle_a:
            a, b = self.handle_a, self.handle_b
            object.__setattr__(self, "handle_a", b)
            object.__setattr__(self, "handle_b", a)
            object.__setattr__(self, "interior", tuple(reversed(self.interior)))

    @property
    def path(self):
        return (self.handle_a,) + self.interior + (self.handle_b,)


def parse_ref(text):
    """Parse ``pants:ID``, ``win:ID:p/q`` or ``chain:H1:H2:ID,ID,...``."""
    parts = text.split(":")
    if parts[0] == "pants" and len(parts) == 2 and parts[1]:
        return PantsCurve(parts[1])
    if parts[0] == "win" and len(parts) == 3 and parts[1]:
        try:
            p_text, q_text = parts[2].split("/")
            slope = make_slope(int(p_text), int(q_text))
        except (ValueError, ZeroSlope) as exc:
            raise FormatError(f"bad slope in {text!r}: {exc}") from exc
        if slope == Slope(0, 1):
            raise FormatError(
                f"slope 0/1 is the window center; write pants:{parts[1]}"
            )
        return WindowCurve(parts[1], slope)
    if parts[0] == "chain" and len(parts) == 4 and parts[1] and parts[2]:
        interior = tuple(x for x in parts[3].split(",") if x)
        return DualChain(parts[1], parts[2], interior)
    raise FormatError(f"unrecognized curve reference {text!r}")


def format_ref(ref):
    if isinstance(ref, PantsCurve):
        return f"pants:{ref.id}"
    if isinstance(ref, WindowCurve):
        return f"win:{ref.center}:{ref.slope}"
    if isinstance(ref, DualChain):
        return f"chain:{ref.handle_a}:{ref.handle_b}:" + ",".join(ref.interior)
    raise TypeError(f"not a curve reference: {ref!r}")


def _ordinary_curve(g, curve_id):
    c = g.curve_by_id.get(curve_id)
    if c is None:
        raise UnknownCurve(f"no curve {curve_id!r} in this decomposition")
    if c.is_frontier:
        raise UnknownCurve(f"curve {curve_id!r} is a frontier curve")
    return c


def resolve_ref(g, ref):
    """Validate a reference against ``g``.

    Returns the Window for a WindowCurve, the full path for a DualChain and
    the curve record for a PantsCurve.  Raises :class:`UnknownCurve` with
    the failing condition otherwise.
    """
    if isinstance(ref, PantsCurve):
        return _ordinary_curve(g, ref.id)
    if isinstance(ref, WindowCurve):
        if ref.slope == Slope(0, 1):
            raise UnknownCurve(
                f"slope 0/1 duplicates the center; use pants:{ref.center}"
            )
        return window_around(g, ref.center)
    if isinstance(ref, DualChain):
        if ref.handle_a == ref.handle_b:
            raise UnknownCurve("a dual chain needs two distinct handles")
        for h in (ref.handle_a, ref.handle_b):
            if not _ordinary_curve(g, h).is_self_gluing:
                raise UnknownCurve(f"chain endpoint {h!r} is not a handle curve")
        path = ref.path
        if len(set(path)) != len(path):
            raise UnknownCurve(f"chain path {path} repeats a curve")
        for cid in ref.interior:
            _ordinary_curve(g, cid)
        for u, w_ in zip(path, path[1:]):
            if not set(g.pants_of_curve(u)) & set(g.pants_of_curve(w_)):
                raise UnknownCurve(
                    f"chain path breaks between {u!r} and {w_!r}: no common pants"
                )
        return path
    raise UnknownCurve(f"unsupported reference {ref!r}")


def ref_support(g, ref):
    """The pants supporting a reference (the region the curve lives in)."""
    if isinstance(ref, PantsCurve):
        return set(g.pants_of_curve(ref.id))
    if isinstance(ref, WindowCurve):
        return set(window_around(g, ref.center).support)
    if isinstance(ref, DualChain):
        out = set()
        for cid in ref.path:
            out.update(g.pants_of_curve(cid))
        return out
    raise UnknownCurve(f"unsupported reference {ref!r}")


def _rank(ref):
    return {PantsCurve: 0, WindowCurve: 1, DualChain: 2}[type(ref)]


def global_intersection(g, c1, c2):
    """Geometric intersection number for the supported pairings, else None.

    The defined table: pants curves are pairwise disjoint (0); a window
    curve meets its center |p| (torus) or 2|p| (sphere) times and no other
    pants curve (any other curve near the window is one of its boundary
    circles); two curves of one window use the determinant formula; curves
    of windows with disjoint supports are disjoint; a dual chain meets each
    endpoint handle once, each interior path curve twice and every other
    pants curve not at all; chains against window curves or other chains are
    only defined when supports are disjoint (0) or the refs are equal (0).
    None is a value meaning "outside the table", never an error.
    """
    resolve_ref(g, c1)
    resolve_ref(g, c2)
    if _rank(c1) > _rank(c2):
        c1, c2 = c2, c1
    if isinstance(c2, PantsCurve):
        return 0
    if isinstance(c1, PantsCurve) and isinstance(c2, WindowCurve):
        w = window_around(g, c2.center)
        return w.scale * abs(c2.slope.p) if c1.id == c2.center else 0
    if isinstance(c1, PantsCurve):
        if c1.id in (c2.handle_a, c2.handle_b):
            return 1
        return 2 if c1.id in c2.interior else 0
    if isinstance(c1, WindowCurve) and isinstance(c2, WindowCurve):
        if c1.center == c2.center:
            return window_intersection(window_around(g, c1.center), c1.slope, c2.slope)
        if ref_support(g, c1) & ref_support(g, c2):
            return None
        return 0
    if c1 == c2:
        return 0
    return None if ref_support(g, c1) & ref_support(g, c2) else 0


def dt_vector(g, c, coords):
    """Intersection numbers of ``c`` against a coordinate family, in order.

    Returns a tuple of (formatted coordinate ref, value) pairs.  Raises
    :class:`UndefinedPair` when any pairing falls outside the defined
    domain, since a coordinate vector with holes identifies nothing.
    """
    out = []
    for coord in coords:
        val = global_intersection(g, c, coord)
        if val is None:
            raise UndefinedPair(
                f"i({format_ref(c)}, {format_ref(coord)}) is undefined"
            )
        out.append((format_ref(coord), val))
    return tuple(out)


def dt_uniqueness_check(w, bound):
    """Search for two slopes with equal coordinates against (0,1), (1,0), (1,1).

    Returns None when the coordinate map is injective on all normalized
    slopes with |p|, |q| <= bound, otherwise the first colliding pair.
    """
    basis = (Slope(0, 1), Slope(1, 0), Slope(1, 1))
    seen = {}
    for s in slopes_up_to(bound):
        key = tuple(window_intersection(w, s, d) for d in basis)
        if key in seen:
            return (seen[key], s)
        seen[key] = s
    return None


# Which pairs of cuffs (by position in Window.cuff_slots) end up on a common
# side of a sphere-window curve, keyed by the slope's parity class.
_CUFF_PAIRINGS = {
    (0, 1): ((0, 1), (2, 3)),
    (1, 0): ((0, 2), (1, 3)),
    (1, 1): ((0, 3), (1, 2)),
}


def window_curve_separates(g, w, s):
    """Whether the window curve with slope ``s`` separates the whole surface.

    Torus window curves never separate.  A sphere window curve splits the
    window's four cuffs two against two according to the slope's parity
    class; it separates the surface exactly when no path outside the window
    reconnects the two cuff groups.  Cuffs on surface boundary or frontier
    reconnect nothing.
    """
    if w.kind == "torus":
        return False
    outside = nx.Graph()
    support = set(w.support)
    outside.add_nodes_from(p for p in g.pants if p not in support)
    for c in g.curves:
        if len(c.ends) == 2:
            u, v = c.ends[0].pants, c.ends[1].pants
            if u not in support and v not in support:
                outside.add_edge(u, v)
    comp_of = {}
    for idx, comp in enumerate(nx.connected_components(outside)):
        for p in comp:
            comp_of[p] = idx
    sides = []
    for group in _CUFF_PAIRINGS[(s.p % 2, s.q % 2)]:
        labels = set()
        for k in group:
            slot = w.cuff_slots[k]
            cid = g.slot_occupant.get((slot.pants, slot.slot))
            if cid is None:
                continue
            c = g.curve_by_id[cid]
            if c.is_frontier:
                continue
            other = next(e for e in c.ends if (e.pants, e.slot) != (slot.pants, slot.slot))
            labels.add(comp_of[other.pants])
        sides.append(labels)
    return not (sides[0] & sides[1])
