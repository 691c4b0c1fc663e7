"""Pants-gluing graphs and the surfaces they encode.

A surface with a pants decomposition is recorded as a :class:`GluingGraph`:
pants are nodes, decomposition curves are edges between pants slots, and
unglued slots are boundary components.  Each pants has exactly three slots
(0, 1, 2).  A curve may glue two slots of the same pants; such a self-gluing
is a handle block, the basic genus-carrying piece.

Infinite surfaces enter through finite truncations.  A truncation keeps a
finite portion of an infinite gluing pattern and marks the curves along which
the surface continues as *frontier* curves.  A frontier curve occupies a
single slot; its far side is not part of the truncation.  Deepening the
truncation completes the frontier curve into an ordinary two-ended curve
under the same identifier, so the depth-d graph is an induced subgraph of the
depth-(d+1) graph.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .errors import ComplexityTooLow, FormatError, NonIntegralGenus

SLOTS_PER_PANTS = 3


@dataclass(frozen=True)
class PantsSlot:
    """One of the three boundary circles of a pants, addressed by index."""

    pants: str
    slot: int

    def as_pair(self):
        return [self.pants, self.slot]


@dataclass(frozen=True)
class Curve:
    """A decomposition curve.

    ``ends`` has two entries for an ordinary curve (possibly on the same
    pants, which makes it a self-gluing) and one entry for a frontier curve
    of a truncation.
    """

    id: str
    ends: tuple[PantsSlot, ...]

    @property
    def is_frontier(self):
        return len(self.ends) == 1

    @property
    def is_self_gluing(self):
        return len(self.ends) == 2 and self.ends[0].pants == self.ends[1].pants


def _sorted_ends(ends):
    return tuple(sorted(ends, key=lambda s: (s.pants, s.slot)))


@dataclass(frozen=True)
class GluingGraph:
    """A pants decomposition of a surface, finite or truncated-infinite.

    The constructor normalizes ordering so that equal decompositions compare
    and serialize identically; it does not check well-formedness.  Use
    :func:`validate` for that.
    """

    pants: tuple[str, ...]
    curves: tuple[Curve, ...]
    boundary: tuple[PantsSlot, ...]

    def __init__(self, pants, curves, boundary=()):
        object.__setattr__(self, "pants", tuple(sorted(pants)))
        object.__setattr__(
            self,
            "curves",
            tuple(
                sorted(
                    (Curve(c.id, _sorted_ends(c.ends)) for c in curves),
                    key=lambda c: c.id,
                )
            ),
        )
        object.__setattr__(
            self, "boundary", tuple(sorted(boundary, key=lambda s: (s.pants, s.slot)))
        )

    @cached_property
    def curve_by_id(self):
        return {c.id: c for c in self.curves}

    @property
    def frontier(self):
        """Ids of the frontier curves, sorted."""
        return tuple(c.id for c in self.curves if c.is_frontier)

    @cached_property
    def frontier_pants(self):
        """Pants that carry at least one frontier half slot."""
        return frozenset(c.ends[0].pants for c in self.curves if c.is_frontier)

    @cached_property
    def curves_at(self):
        """Map pants id -> tuple of curve ids on that pants (with multiplicity)."""
        at = {p: [] for p in self.pants}
        for c in self.curves:
            for end in c.ends:
                if end.pants in at:
                    at[end.pants].append(c.id)
        return {p: tuple(ids) for p, ids in at.items()}

    @cached_property
    def slot_occupant(self):
        """Map (pants, slot) -> id of the curve whose end sits there.
        Boundary-marked slots are absent."""
        return {
            (end.pants, end.slot): c.id for c in self.curves for end in c.ends
        }

    def pants_of_curve(self, curve_id):
        """The pants touched by a curve (one or two ids, deduplicated)."""
        c = self.curve_by_id[curve_id]
        return tuple(dict.fromkeys(end.pants for end in c.ends))

    def pants_multigraph(self):
        """The pants-node multigraph: nodes are pants, keyed edges are the
        two-ended curves.  Frontier half edges do not appear."""
        m = nx.MultiGraph()
        m.add_nodes_from(self.pants)
        for c in self.curves:
            if not c.is_frontier:
                m.add_edge(c.ends[0].pants, c.ends[1].pants, key=c.id)
        return m


@dataclass(frozen=True)
class SurfaceSignature:
    """Topological type (genus, boundary count) of a compact surface."""

    genus: int
    boundary: int

    @property
    def complexity(self):
        """Number of curves in any pants decomposition, 3g - 3 + b."""
        return 3 * self.genus - 3 + self.boundary

    @property
    def euler(self):
        return 2 - 2 * self.genus - self.boundary


class InfiniteModel(str, enum.Enum):
    """The built-in infinite-type gluing patterns.

    * ``loch_ness``: a one-way chain of handle blocks; one end.
    * ``ladder``: a two-way chain with a central block; two ends.
    * ``cantor_tree``: a binary tree of handle segments; a Cantor set of ends.

    Every scaffold segment of every model carries a handle block, so genus
    accumulates toward every end.
    """

    LOCH_NESS = "loch_ness"
    LADDER = "ladder"
    CANTOR_TREE = "cantor_tree"


def _as_model(model):
    if isinstance(model, InfiniteModel):
        return model
    try:
        return InfiniteModel(model)
    except ValueError:
        names = ", ".join(m.value for m in InfiniteModel)
        raise ValueError(f"unknown model {model!r}; expected one of {names}") from None


@dataclass(frozen=True)
class Violation:
    """One well-formedness failure found by :func:`validate`."""

    kind: str
    detail: str


def signature(g):
    """Genus and boundary count of the surface encoded by ``g``.

    Each pants contributes -1 to the Euler characteristic, so
    2 - 2*genus - boundary = -|pants|.  Frontier curves count as boundary
    here: the truncation, taken as a surface in its own right, is bounded by
    them.  Raises :class:`NonIntegralGenus` when the counts cannot come from
    a surface.
    """
    n = len(g.pants)
    b = len(g.boundary) + len(g.frontier)
    two_genus = 2 - b + n
    if two_genus < 0 or two_genus % 2 != 0:
        raise NonIntegralGenus(
            f"{n} pants with {b} boundary circles give 2g = {two_genus}"
        )
    return SurfaceSignature(genus=two_genus // 2, boundary=b)


def validate(g):
    """Check well-formedness and return a tuple of violations (empty if ok).

    Checks identifier uniqueness, exact slot usage (every slot of every pants
    is used by exactly one curve end or one boundary mark) and connectivity
    of the pants graph.  This reports rather than raises so that a malformed
    graph can be inspected.
    """
    violations = []
    seen = set()
    for p in g.pants:
        if p in seen:
            violations.append(Violation("DuplicateId", f"pants id {p!r} repeated"))
        seen.add(p)
    for c in g.curves:
        if c.id in seen:
            violations.append(Violation("DuplicateId", f"curve id {c.id!r} repeated or collides"))
        seen.add(c.id)

    pants_set = set(g.pants)
    usage = {}

    def use(slot, what):
        if slot.pants not in pants_set:
            violations.append(
                Violation("SlotCountError", f"{what} references unknown pants {slot.pants!r}")
            )
            return
        if not 0 <= slot.slot < SLOTS_PER_PANTS:
            violations.append(
                Violation("SlotCountError", f"{what} uses invalid slot index {slot.slot}")
            )
            return
        usage.setdefault((slot.pants, slot.slot), []).append(what)

    for c in g.curves:
        if len(c.ends) not in (1, 2):
            violations.append(
                Violation("SlotCountError", f"curve {c.id!r} has {len(c.ends)} ends")
            )
        for end in c.ends:
            use(end, f"curve {c.id!r}")
        if len(c.ends) == 2 and c.ends[0] == c.ends[1]:
            violations.append(
                Violation("SlotCountError", f"curve {c.id!r} glues a slot to itself")
            )
    for slot in g.boundary:
        use(slot, "boundary mark")

    for p in g.pants:
        for k in range(SLOTS_PER_PANTS):
            users = usage.get((p, k), [])
            if len(users) == 0:
                violations.append(Violation("SlotCountError", f"slot ({p!r}, {k}) is unused"))
            elif len(users) > 1:
                violations.append(
                    Violation(
                        "SlotCountError",
                        f"slot ({p!r}, {k}) used {len(users)} times: " + ", ".join(users),
                    )
                )

    if len(g.pants) > 1:
        m = g.pants_multigraph()
        if m.number_of_nodes() and not nx.is_connected(m):
            parts = sorted(len(c) for c in nx.connected_components(m))
            violations.append(
                Violation("ConnectivityError", f"pants graph splits into parts of sizes {parts}")
            )
    return tuple(violations)


# ---------------------------------------------------------------------------
# generators


def build_finite_surface(genus, boundary):
    """Canonical pants decomposition of the compact surface S_{genus,boundary}.

    The decomposition is a chain: self-glued handle blocks for the genus,
    connector pants between them, boundary legs at the tail.  When genus >= 1
    and boundary >= 2 the first boundary circle sits on a cuff of two pants
    glued along two curves, so that some pants carries slots (curve, curve,
    boundary) with both curves nonseparating.

    Raises :class:`ComplexityTooLow` when 3*genus - 3 + boundary < 1, since
    such surfaces have no curve to decompose along.
    """
    if genus < 0 or boundary < 0:
        raise ValueError("genus and boundary must be nonnegative")
    if 3 * genus - 3 + boundary < 1:
        raise ComplexityTooLow(
            f"S_({genus},{boundary}) has complexity {3 * genus - 3 + boundary}"
        )

    pants = []
    curves = []
    bmarks = []

    def slot(p, k):
        return PantsSlot(p, k)

    if genus == 0:
        # pure boundary chain, boundary >= 4
        n = boundary - 2
        pants.extend(f"tp{0}" if i == 0 else (f"tp{1}" if i == n - 1 else f"mp{i}") for i in range(n))
        first, last = pants[0], pants[-1]
        bmarks += [slot(first, 0), slot(first, 1), slot(last, 1), slot(last, 2)]
        for i in range(n - 1):
            left, right = pants[i], pants[i + 1]
            curves.append(Curve(f"s{i + 1}", (slot(left, 2), slot(right, 0))))
            if 0 < i:
                bmarks.append(slot(left, 1))
        return GluingGraph(pants, curves, bmarks)

    # genus >= 1: open_slot walks the free right end of the chain
    if genus >= 1 and boundary >= 2:
        pants += ["xp", "yp"]
        bmarks.append(slot("xp", 0))
        curves.append(Curve("a", (slot("xp", 1), slot("yp", 0))))
        curves.append(Curve("b", (slot("xp", 2), slot("yp", 1))))
        open_slot = slot("yp", 2)
        handles = range(1, genus)
        legs = boundary - 2
    else:
        pants.append("hp0")
        curves.append(Curve("h0", (slot("hp0", 1), slot("hp0", 2))))
        open_slot = slot("hp0", 0)
        handles = range(1, genus) if boundary >= 1 else range(1, genus - 1)
        legs = max(boundary - 1, 0)

    for k in handles:
        cp, hp = f"cp{k}", f"hp{k}"
        pants += [cp, hp]
        curves.append(Curve(f"c{k}", (open_slot, slot(cp, 0))))
        curves.append(Curve(f"t{k}", (slot(cp, 1), slot(hp, 0))))
        curves.append(Curve(f"h{k}", (slot(hp, 1), slot(hp, 2))))
        open_slot = slot(cp, 2)

    for j in range(1, legs + 1):
        mp = f"mp{j}"
        pants.append(mp)
        curves.append(Curve(f"s{j}", (open_slot, slot(mp, 0))))
        bmarks.append(slot(mp, 1))
        open_slot = slot(mp, 2)

    if boundary >= 1:
        bmarks.append(open_slot)
    else:
        # close the chain with a terminal handle block
        hp = f"hp{genus - 1}"
        pants.append(hp)
        curves.append(Curve(f"c{genus - 1}", (open_slot, slot(hp, 0))))
        curves.append(Curve(f"h{genus - 1}", (slot(hp, 1), slot(hp, 2))))
    return GluingGraph(pants, curves, bmarks)


def _loch_ness(depth):
    pants = ["hp0"]
    curves = [Curve("h0", (PantsSlot("hp0", 1), PantsSlot("hp0", 2)))]
    open_slot = PantsSlot("hp0", 0)
    for k in range(1, depth):
        cp, hp = f"cp{k}", f"hp{k}"
        pants += [cp, hp]
        curves.append(Curve(f"c{k}", (open_slot, PantsSlot(cp, 0))))
        curves.append(Curve(f"t{k}", (PantsSlot(cp, 1), PantsSlot(hp, 0))))
        curves.append(Curve(f"h{k}", (PantsSlot(hp, 1), PantsSlot(hp, 2))))
        open_slot = PantsSlot(cp, 2)
    curves.append(Curve(f"c{depth}", (open_slot,)))
    return GluingGraph(pants, curves)


def _ladder(depth):
    pants = ["cp0", "hp0"]
    curves = [
        Curve("t0", (PantsSlot("cp0", 0), PantsSlot("hp0", 0))),
        Curve("h0", (PantsSlot("hp0", 1), PantsSlot("hp0", 2))),
    ]
    for side, start in (("l", PantsSlot("cp0", 1)), ("r", PantsSlot("cp0", 2))):
        open_slot = start
        for k in range(1, depth):
            cp, hp = f"cp{side}{k}", f"hp{side}{k}"
            pants += [cp, hp]
            curves.append(Curve(f"c{side}{k}", (open_slot, PantsSlot(cp, 0))))
            curves.append(Curve(f"t{side}{k}", (PantsSlot(cp, 1), PantsSlot(hp, 0))))
            curves.append(Curve(f"h{side}{k}", (PantsSlot(hp, 1), PantsSlot(hp, 2))))
            open_slot = PantsSlot(cp, 2)
        curves.append(Curve(f"c{side}{depth}", (open_slot,)))
    return GluingGraph(pants, curves)


def _cantor_tree(depth):
    pants = ["bp", "hp"]
    curves = [
        Curve("t", (PantsSlot("bp", 0), PantsSlot("hp", 0))),
        Curve("h", (PantsSlot("hp", 1), PantsSlot("hp", 2))),
    ]
    # bp{a} offers child slots 1 and 2 for addresses a+"0" and a+"1"
    child_slot = {"0": PantsSlot("bp", 1), "1": PantsSlot("bp", 2)}
    level = ["0", "1"]
    for _ in range(depth - 1):
        next_level = []
        for a in level:
            cp, hp, bp = f"cp{a}", f"hp{a}", f"bp{a}"
            pants += [cp, hp, bp]
            curves.append(Curve(f"c{a}", (child_slot.pop(a), PantsSlot(cp, 0))))
            curves.append(Curve(f"t{a}", (PantsSlot(cp, 1), PantsSlot(hp, 0))))
            curves.append(Curve(f"h{a}", (PantsSlot(hp, 1), PantsSlot(hp, 2))))
            curves.append(Curve(f"s{a}", (PantsSlot(cp, 2), PantsSlot(bp, 0))))
            child_slot[a + "0"] = PantsSlot(bp, 1)
            child_slot[a + "1"] = PantsSlot(bp, 2)
            next_level += [a + "0", a + "1"]
        level = next_level
    for a in level:
        curves.append(Curve(f"c{a}", (child_slot.pop(a),)))
    return GluingGraph(pants, curves)


_GENERATORS = {
    InfiniteModel.LOCH_NESS: _loch_ness,
    InfiniteModel.LADDER: _ladder,
    InfiniteModel.CANTOR_TREE: _cantor_tree,
}


def build_truncation(model, depth):
    """Depth-``depth`` truncation of one of the built-in infinite models.

    The result is a valid GluingGraph whose frontier curves mark where the
    infinite surface continues.  Truncations nest: the depth-d graph is an
    induced subgraph of the depth-(d+1) graph and identifiers are stable, so
    a frontier curve keeps its id when deepening completes it.
    """
    if depth < 1:
        raise ValueError(f"depth must be at least 1, got {depth}")
    return _GENERATORS[_as_model(model)](depth)


# ---------------------------------------------------------------------------
# JSON


def surface_to_json(g):
    """Plain-dict form of a gluing graph, with deterministic ordering."""
    return {
        "pants": list(g.pants),
        "curves": [
            {"id": c.id, "ends": [end.as_pair() for end in c.ends]} for c in g.curves
        ],
        "boundary": [s.as_pair() for s in g.boundary],
        "frontier": list(g.frontier),
    }


def surface_from_json(doc):
    """Rebuild a GluingGraph from its dict form.

    Raises :class:`FormatError` on schema problems, including a ``frontier``
    list inconsistent with the one-ended curves.
    """
    try:
        pants = [str(p) for p in doc["pants"]]
        curves = []
        for rec in doc["curves"]:
            ends = tuple(PantsSlot(str(p), int(k)) for p, k in rec["ends"])
            if not 1 <= len(ends) <= 2:
                raise FormatError(f"curve {rec.get('id')!r} has {len(ends)} ends")
            curves.append(Curve(str(rec["id"]), ends))
        boundary = [PantsSlot(str(p), int(k)) for p, k in doc["boundary"]]
        declared = sorted(str(i) for i in doc.get("frontier", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed surface document: {exc}") from exc
    g = GluingGraph(pants, curves, boundary)
    if declared != sorted(g.frontier):
        raise FormatError(
            f"frontier list {declared} does not match one-ended curves {sorted(g.frontier)}"
        )
    return g


def dumps_surface(g):
    """Serialize to a stable JSON string (byte-reproducible)."""
    return json.dumps(surface_to_json(g), ensure_ascii=False) + "\n"


def loads_surface(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not JSON: {exc}") from exc
    return surface_from_json(doc)
