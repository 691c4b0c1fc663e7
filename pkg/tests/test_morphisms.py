"""Vertex maps, superinjectivity checks and the cut-and-glue construction."""

import pytest

from curvelab import (
    CutGlueResult,
    DualChain,
    GadgetTooSmall,
    NotSeparating,
    PantsCurve,
    UnknownCurve,
    VertexMap,
    WindowCurve,
    build_finite_surface,
    build_truncation,
    check_superinjective,
    cut_and_glue,
    format_ref,
    global_intersection,
    make_slope,
    nonhomeomorphic_counterexample,
    parse_ref,
    resolve_ref,
    surfaces_homeomorphic,
    validate,
)


def identity_map(g, ids):
    assoc = tuple((PantsCurve(i), PantsCurve(i)) for i in ids)
    return VertexMap(g, g, assoc)


# --- vertex maps -------------------------------------------------------------


def test_vertex_map_apply_and_domain():
    g = build_truncation("loch_ness", 3)
    m = identity_map(g, ("c1", "c2", "h0"))
    assert m.apply(PantsCurve("c2")) == PantsCurve("c2")
    assert set(m.domain) == {PantsCurve("c1"), PantsCurve("c2"), PantsCurve("h0")}
    with pytest.raises(UnknownCurve):
        m.apply(PantsCurve("h1"))


def test_vertex_map_requires_injectivity():
    g = build_truncation("loch_ness", 3)
    assoc = ((PantsCurve("c1"), PantsCurve("h0")), (PantsCurve("c2"), PantsCurve("h0")))
    with pytest.raises(ValueError):
        VertexMap(g, g, assoc)
    repeated = ((PantsCurve("c1"), PantsCurve("h0")), (PantsCurve("c1"), PantsCurve("h1")))
    with pytest.raises(ValueError):
        VertexMap(g, g, repeated)


def test_identity_is_superinjective():
    g = build_truncation("loch_ness", 4)
    ids = ("c1", "c2", "c3", "h0", "h1", "h2")
    m = identity_map(g, ids)
    pairs = [(PantsCurve(a), PantsCurve(b)) for a in ids for b in ids if a < b]
    report = check_superinjective(m, pairs)
    assert report["checked"] == len(pairs)
    assert report["violations"] == []
    assert report["skipped"] == []


def test_superinjectivity_violation_is_detected():
    g = build_truncation("loch_ness", 4)
    # send c1 onto a curve crossing the image of h0
    assoc = (
        (PantsCurve("h0"), PantsCurve("h0")),
        (PantsCurve("c1"), WindowCurve("h0", make_slope(1, 0))),
    )
    m = VertexMap(g, g, assoc)
    report = check_superinjective(m, [(PantsCurve("c1"), PantsCurve("h0"))])
    assert len(report["violations"]) == 1
    v = report["violations"][0]
    assert v["source_intersection"] == 0
    assert v["target_intersection"] == 1


def test_superinjectivity_check_skips_undefined_pairs():
    g = build_truncation("loch_ness", 5)
    # both windows survive untouched, but their intersection is undefined
    a = WindowCurve("c2", make_slope(1, 0))
    b = WindowCurve("c3", make_slope(1, 1))
    m = VertexMap(g, g, ((a, a), (b, b)))
    report = check_superinjective(m, [(a, b)])
    assert report["checked"] == 0
    assert len(report["skipped"]) == 1


# --- cut and glue ------------------------------------------------------------


def test_cut_and_glue_s12_shape():
    g = build_truncation("loch_ness", 4)
    res = cut_and_glue(g, "c2", gadget="s12")
    assert validate(res.target) == ()
    assert len(res.target.pants) == len(g.pants) + 2
    assert len(res.target.curves) == len(g.curves) + 3
    assert set(res.target.pants) - set(g.pants) == {"gp0", "gp1"}
    new = {c.id for c in res.target.curves} - {c.id for c in g.curves}
    assert new == {"gc", "gh", "gs"}
    assert res.map.provenance == "cut at 'c2', glue s12"


def test_cut_and_glue_adds_one_handle():
    from curvelab import signature

    g = build_finite_surface(3, 1)
    res = cut_and_glue(g, "c1", gadget="s12")
    sig = signature(res.target)
    assert (sig.genus, sig.boundary) == (4, 1)


def test_cut_and_glue_reroutes_chains_through_the_seam():
    g = build_truncation("loch_ness", 4)
    res = cut_and_glue(g, "c2", gadget="s12")
    moved = {
        format_ref(src): format_ref(dst)
        for src, dst in res.map.assoc
        if format_ref(src) != format_ref(dst)
    }
    assert moved == {
        "chain:h0:h2:c1,c2,t2": "chain:h0:h2:c1,c2,gs,t2",
        "chain:h0:h3:c1,c2,c3,t3": "chain:h0:h3:c1,c2,gs,c3,t3",
        "chain:h1:h2:t1,c2,t2": "chain:h1:h2:t1,c2,gs,t2",
        "chain:h1:h3:t1,c2,c3,t3": "chain:h1:h3:t1,c2,gs,c3,t3",
    }
    # chains on one side of the cut are untouched
    assert (parse_ref("chain:h0:h1:c1,t1"), parse_ref("chain:h0:h1:c1,t1")) in res.map.assoc


def test_cut_and_glue_map_is_superinjective_on_decomposition_pairs():
    g = build_truncation("loch_ness", 4)
    res = cut_and_glue(g, "c2", gadget="s12")
    curves = [r for r in res.map.domain if isinstance(r, PantsCurve)]
    pairs = [(a, b) for i, a in enumerate(curves) for b in curves[i + 1 :]]
    report = check_superinjective(res.map, pairs)
    assert report["violations"] == []


def test_cut_and_glue_witnesses():
    g = build_truncation("loch_ness", 4)
    res = cut_and_glue(g, "c2", gadget="s12")
    assert [format_ref(w) for w in res.witnesses] == [
        "pants:gh",
        "win:gh:1/0",
        "win:gh:1/1",
    ]
    image = {res.map.apply(r) for r in res.map.domain}
    for w in res.witnesses:
        resolve_ref(res.target, w)
        assert w not in image
    # the witnesses cross each other, so they sit in the new handle rather
    # than being image vertices under new names
    a, b, c = res.witnesses
    assert global_intersection(res.target, a, b) == 1
    assert global_intersection(res.target, b, c) == 1
    assert global_intersection(res.target, a, c) == 1


def test_cut_glue_result_rejects_witnesses_in_the_image():
    g = build_truncation("loch_ness", 4)
    res = cut_and_glue(g, "c2", gadget="s12")
    with pytest.raises(ValueError):
        CutGlueResult(res.target, res.map, (PantsCurve("c1"),))


def test_cut_and_glue_input_validation():
    g = build_truncation("loch_ness", 4)
    with pytest.raises(NotSeparating):
        cut_and_glue(g, "h0")
    with pytest.raises(UnknownCurve):
        cut_and_glue(g, "c4")  # frontier
    with pytest.raises(UnknownCurve):
        cut_and_glue(g, "zz")
    with pytest.raises(ValueError):
        cut_and_glue(g, "c2", gadget="mystery")


# --- homeomorphism checks ----------------------------------------------------


def test_surfaces_homeomorphic_on_models():
    l4 = build_truncation("loch_ness", 4)
    assert surfaces_homeomorphic(l4, build_truncation("loch_ness", 6), 1)
    assert not surfaces_homeomorphic(l4, build_truncation("ladder", 4), 1)
    # one end against two: already distinct at depth one; the ladder and
    # the binary tree first differ at depth two, given deep truncations
    assert surfaces_homeomorphic(
        build_truncation("ladder", 6), build_truncation("cantor_tree", 6), 1
    )
    assert not surfaces_homeomorphic(
        build_truncation("ladder", 6), build_truncation("cantor_tree", 6), 2
    )


def test_surfaces_homeomorphic_on_finite_surfaces():
    s21 = build_finite_surface(2, 1)
    assert surfaces_homeomorphic(s21, build_finite_surface(2, 1), 1)
    assert not surfaces_homeomorphic(s21, build_finite_surface(3, 1), 1)
    assert not surfaces_homeomorphic(s21, build_finite_surface(2, 2), 1)
    assert not surfaces_homeomorphic(s21, build_truncation("loch_ness", 4), 1)


def test_gluing_a_handle_preserves_the_end_structure():
    g = build_truncation("loch_ness", 4)
    res = cut_and_glue(g, "c2", gadget="s12")
    assert surfaces_homeomorphic(g, res.target, 1)


def test_nonhomeomorphic_counterexample():
    for gadget in ("ladder", "cantor"):
        src, tgt, m = nonhomeomorphic_counterexample(gadget, trunc_depth=4)
        assert not surfaces_homeomorphic(src, tgt, 1)
        assert m.source is src and m.target is tgt
        curves = [r for r in m.domain if isinstance(r, PantsCurve)]
        pairs = [(a, b) for i, a in enumerate(curves) for b in curves[i + 1 :]]
        assert check_superinjective(m, pairs)["violations"] == []


def test_counterexample_needs_an_end_changing_gadget():
    with pytest.raises(GadgetTooSmall):
        nonhomeomorphic_counterexample("s12")
    with pytest.raises(GadgetTooSmall):
        nonhomeomorphic_counterexample(("genus", 1))
    with pytest.raises(ValueError):
        nonhomeomorphic_counterexample("mystery")
