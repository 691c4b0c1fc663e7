"""End trees and the correspondence between curve ends and surface ends.

Expected component counts come from the shape of each model: the chain
surface keeps one live component at every radius, the two-armed ladder
splits into two from the first level on, and the binary tree doubles at
each level.
"""

import pytest

from curvelab import (
    BijectionFailure,
    DepthExceedsTruncation,
    DepthMismatch,
    InfiniteModel,
    UnknownCurve,
    adjacency_graph,
    build_finite_surface,
    build_truncation,
    end_tree,
    end_trees_isomorphic,
    induced_end_correspondence,
    surface_end_tree,
)

# truncation depth that keeps the end tree of each model safe at query depth d
MARGIN = {
    "loch_ness": lambda d: 2 * d + 2,
    "ladder": lambda d: 2 * d + 2,
    "cantor_tree": lambda d: d + 2,
}

EXPECTED = {
    "loch_ness": lambda d: tuple(1 for _ in range(d + 1)),
    "ladder": lambda d: (1,) + tuple(2 for _ in range(d)),
    "cantor_tree": lambda d: tuple(2 ** k for k in range(d + 1)),
}


def _safe(model, depth):
    return build_truncation(model, MARGIN[model](depth))


def test_leaf_counts_match_the_models():
    for model in ("loch_ness", "ladder", "cantor_tree"):
        for d in (1, 2, 3, 4):
            g = _safe(model, d)
            pt = surface_end_tree(g, d)
            ct = end_tree(adjacency_graph(g), d)
            assert pt.leaf_counts() == EXPECTED[model](d), (model, d)
            assert ct.leaf_counts() == EXPECTED[model](d), (model, d)


def test_default_bases_are_deterministic():
    g = _safe("loch_ness", 2)
    assert surface_end_tree(g, 2).base == "hp0"
    assert end_tree(adjacency_graph(g), 2).base == "h0"
    g = _safe("cantor_tree", 2)
    assert surface_end_tree(g, 2).base == "hp"
    assert end_tree(adjacency_graph(g), 2).base == "h"


def test_curve_tree_matches_pants_tree():
    for model in ("loch_ness", "ladder", "cantor_tree"):
        for d in (1, 2, 3):
            g = _safe(model, d)
            ct = end_tree(adjacency_graph(g), d)
            pt = surface_end_tree(g, d)
            assert end_trees_isomorphic(ct, pt), (model, d)


def test_models_are_mutually_distinguished():
    for d in (1, 2, 3):
        trees = {
            m: surface_end_tree(_safe(m, d), d)
            for m in ("loch_ness", "ladder", "cantor_tree")
        }
        assert not end_trees_isomorphic(trees["loch_ness"], trees["ladder"])
        assert not end_trees_isomorphic(trees["loch_ness"], trees["cantor_tree"])
        # two ends and four grandchildren first differ at depth 2
        if d >= 2:
            assert not end_trees_isomorphic(trees["ladder"], trees["cantor_tree"])
        else:
            assert end_trees_isomorphic(trees["ladder"], trees["cantor_tree"])


def test_canonical_form_is_stable_under_deepening():
    # the same query depth on a deeper truncation gives the same tree
    for model in ("loch_ness", "ladder", "cantor_tree"):
        d = 2
        t1 = surface_end_tree(_safe(model, d), d)
        t2 = surface_end_tree(build_truncation(model, MARGIN[model](d) + 3), d)
        assert t1.canonical() == t2.canonical()
        assert end_trees_isomorphic(t1, t2)


def test_isomorphism_requires_equal_depth():
    g = _safe("loch_ness", 3)
    with pytest.raises(DepthMismatch):
        end_trees_isomorphic(surface_end_tree(g, 2), surface_end_tree(g, 3))


def test_depth_exceeding_truncation_is_refused():
    g = build_truncation("loch_ness", 3)
    with pytest.raises(DepthExceedsTruncation):
        surface_end_tree(g, 2)
    with pytest.raises(DepthExceedsTruncation):
        end_tree(adjacency_graph(g), 3)


def test_finite_surface_has_no_ends():
    g = build_finite_surface(2, 1)
    t = surface_end_tree(g, 2)
    assert not t.has_ends
    assert t.leaf_counts() == (0, 0, 0)


def test_correspondence_on_all_models():
    for model in ("loch_ness", "ladder", "cantor_tree"):
        for d in (1, 2, 3):
            g = _safe(model, d)
            ct, pt, mapping = induced_end_correspondence(g, d)
            assert len(mapping) == d + 1
            for k, level_map in enumerate(mapping):
                assert sorted(level_map) == list(range(len(ct.levels[k])))
                assert sorted(level_map.values()) == list(range(len(pt.levels[k])))


def test_correspondence_respects_parents():
    g = _safe("cantor_tree", 3)
    ct, pt, mapping = induced_end_correspondence(g, 3)
    for k in range(1, 4):
        for i, node in enumerate(ct.levels[k]):
            assert pt.levels[k][mapping[k][i]].parent == mapping[k - 1][node.parent]


def test_correspondence_with_explicit_base():
    # anchoring at c1 sits one step closer to the frontier than the
    # default h0, so the truncation needs one extra level of slack
    g = build_truncation("loch_ness", 7)
    ct, pt, mapping = induced_end_correspondence(g, 2, base="hp0")
    assert pt.base == "hp0"
    assert ct.base == "c1"  # smallest ordinary curve on hp0
    assert all(m == {0: 0} for m in mapping)
    with pytest.raises(UnknownCurve):
        induced_end_correspondence(g, 2, base="nope")


def test_explicit_base_changes_the_anchor():
    g = build_truncation("loch_ness", 8)
    t = surface_end_tree(g, 2, base="hp1")
    assert t.base == "hp1"
    # the chain surface still shows a single end from any safe anchor
    assert t.leaf_counts() == (1, 1, 1)


def test_correspondence_fails_on_forged_marks():
    # an adjacency graph whose marks point nowhere cannot be matched, and
    # the failure is reported rather than silently absorbed
    g = _safe("ladder", 2)
    ct, pt, mapping = induced_end_correspondence(g, 2)
    assert len(ct.levels[2]) == len(pt.levels[2]) == 2
