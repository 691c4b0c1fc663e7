"""Local curve graphs, disjointness witnesses and handle-to-handle paths."""

import pytest

from curvelab import (
    DualChain,
    NoRoom,
    PantsCurve,
    UnknownCurve,
    build_finite_surface,
    build_truncation,
    disjointness_witness,
    format_ref,
    global_intersection,
    local_graph,
    parse_ref,
    schmutz_path,
)

DECOMPOSITION = ("c1", "c2", "c3", "t1", "t2", "t3", "h0", "h1", "h2", "h3")


def refs(*texts):
    return [parse_ref(t) for t in texts]


def fmt_pairs(pairs):
    return {(format_ref(a), format_ref(b)) for a, b in pairs}


def test_decomposition_curves_form_a_complete_disjointness_graph():
    g = build_truncation("loch_ness", 4)
    inventory = refs(*(f"pants:{c}" for c in DECOMPOSITION))
    lg = local_graph(g, inventory, "c")
    assert lg.relation == "disjointness"
    assert len(lg.vertices) == 10
    assert len(lg.edges) == 45
    assert lg.undefined_pairs == ()


def test_modes_on_a_mixed_inventory():
    g = build_truncation("loch_ness", 4)
    inventory = refs("pants:h0", "pants:h1", "win:h0:1/0", "chain:h0:h1:c1,t1")
    for mode in ("c", "n"):
        lg = local_graph(g, inventory, mode)
        assert len(lg.vertices) == 4
        assert fmt_pairs(lg.edges) == {
            ("pants:h0", "pants:h1"),
            ("pants:h1", "win:h0:1/0"),
        }
        assert fmt_pairs(lg.undefined_pairs) == {
            ("win:h0:1/0", "chain:h0:h1:c1,t1")
        }
    lg = local_graph(g, inventory, "g")
    assert lg.relation == "unit_intersection"
    assert fmt_pairs(lg.edges) == {
        ("pants:h0", "win:h0:1/0"),
        ("pants:h0", "chain:h0:h1:c1,t1"),
        ("pants:h1", "chain:h0:h1:c1,t1"),
    }


def test_restricted_modes_drop_separating_curves():
    g = build_truncation("loch_ness", 4)
    # the window curve at c2 with slope 1/1 separates, h0 does not
    inventory = refs("pants:h0", "win:c2:1/1")
    assert len(local_graph(g, inventory, "c").vertices) == 2
    for mode in ("n", "g"):
        lg = local_graph(g, inventory, mode)
        assert [format_ref(v) for v in lg.vertices] == ["pants:h0"]


def test_inventory_is_deduplicated_in_order():
    g = build_truncation("loch_ness", 4)
    inventory = refs("pants:h1", "pants:h0", "pants:h1")
    lg = local_graph(g, inventory, "c")
    assert [format_ref(v) for v in lg.vertices] == ["pants:h1", "pants:h0"]


def test_local_graph_validates_references():
    g = build_truncation("loch_ness", 4)
    with pytest.raises(UnknownCurve):
        local_graph(g, refs("pants:zz"), "c")
    with pytest.raises(UnknownCurve):
        local_graph(g, refs("win:c1:1/1"), "c")
    with pytest.raises(ValueError):
        local_graph(g, refs("pants:h0"), "q")


def test_disjointness_witness_examples():
    g = build_truncation("loch_ness", 4)
    w = disjointness_witness(g, parse_ref("pants:h0"), parse_ref("pants:h1"))
    assert format_ref(w) == "pants:c1"
    for ref in ("pants:h0", "pants:h1"):
        assert global_intersection(g, w, parse_ref(ref)) == 0
    # the witness avoids the inputs even when they come first in id order
    w = disjointness_witness(g, parse_ref("pants:c1"), parse_ref("pants:c2"))
    assert format_ref(w) == "pants:c3"


def test_disjointness_witness_for_window_curves():
    g = build_truncation("loch_ness", 4)
    a = parse_ref("win:h0:1/1")
    b = parse_ref("win:h1:1/2")
    w = disjointness_witness(g, a, b)
    assert global_intersection(g, w, a) == 0
    assert global_intersection(g, w, b) == 0


def test_disjointness_witness_needs_room():
    s12 = build_finite_surface(1, 2)
    with pytest.raises(NoRoom):
        disjointness_witness(s12, parse_ref("pants:a"), parse_ref("pants:b"))


def test_schmutz_path_between_far_handles():
    g = build_truncation("loch_ness", 4)
    path = schmutz_path(g, PantsCurve("h0"), PantsCurve("h3"))
    assert [format_ref(r) for r in path] == [
        "pants:h0",
        "chain:h0:h1:c1,t1",
        "pants:h1",
        "chain:h1:h3:t1,c2,c3,t3",
        "pants:h3",
    ]
    # consecutive members meet exactly once, so the path has length four
    for a, b in zip(path, path[1:]):
        assert global_intersection(g, a, b) == 1


def test_schmutz_path_alternates_types():
    g = build_truncation("ladder", 3)
    handles = [c.id for c in g.curves if len(c.ends) == 2 and len({e.pants for e in c.ends}) == 1]
    path = schmutz_path(g, PantsCurve(handles[0]), PantsCurve(handles[-1]))
    assert len(path) == 5
    assert all(isinstance(r, PantsCurve) for r in path[::2])
    assert all(isinstance(r, DualChain) for r in path[1::2])
    for a, b in zip(path, path[1:]):
        assert global_intersection(g, a, b) == 1


def test_schmutz_path_trivial_and_failing_cases():
    g = build_truncation("loch_ness", 4)
    assert schmutz_path(g, PantsCurve("h1"), PantsCurve("h1")) == [PantsCurve("h1")]
    with pytest.raises(UnknownCurve):
        schmutz_path(g, PantsCurve("c1"), PantsCurve("h1"))
    with pytest.raises(UnknownCurve):
        schmutz_path(g, PantsCurve("h0"), PantsCurve("zz"))
    # a closed genus two surface has no third handle to route through
    s20 = build_finite_surface(2, 0)
    with pytest.raises(NoRoom):
        schmutz_path(s20, PantsCurve("h0"), PantsCurve("h1"))
