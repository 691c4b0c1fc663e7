"""Bulk verification sweeps over models, random surfaces and slope ranges.

Each suite revalidates one of the package's structural claims at desk
scale and returns a JSON-friendly report with the number of cases checked
and every failure found (detail capped, count exact).  All randomness is
seeded, so reports are reproducible; the environment variable
CURVELAB_THREADS caps the worker pool used for the heavier sweeps, and
results are merged in submission order either way.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor

from .complexes import disjointness_witness, schmutz_path
from .curves import (
    PantsCurve,
    abstract_window,
    dt_uniqueness_check,
    format_ref,
    global_intersection,
    is_triple,
    make_slope,
    resolve_ref,
    sch04_common_neighbors,
    slopes_up_to,
    triple_completion,
    twist,
    window_intersection,
)
from .ends import end_trees_isomorphic, induced_end_correspondence
from .errors import CurveLabError
from .morphisms import (
    _handle_chains,
    _window_centers,
    check_superinjective,
    cut_and_glue,
    nonhomeomorphic_counterexample,
    surfaces_homeomorphic,
)
from .pants_graphs import (
    CurveClass,
    adjacency_graph,
    classify_all,
    cut_vertices,
    random_gluing_graph,
)
from .surface import InfiniteModel, build_truncation

DEFAULT_SEED = 20260814
_DETAIL_CAP = 20

# truncation depth that keeps end trees of each model safe at query depth d
_MARGINS = {
    InfiniteModel.LOCH_NESS: lambda d: 2 * d + 2,
    InfiniteModel.LADDER: lambda d: 2 * d + 2,
    InfiniteModel.CANTOR_TREE: lambda d: d + 2,
}


def _thread_count():
    raw = os.environ.get("CURVELAB_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        n = min(os.cpu_count() or 1, 8)
    return n


def _sweep(items, check, chunk_size=128):
    """Run ``check`` over ``items`` in chunks, collecting non-None results
    in item order regardless of the pool size."""

    def run(chunk):
        out = []
        for item in chunk:
            res = check(item)
            if res is not None:
                out.append(res)
        return out

    chunks = [items[i : i + chunk_size] for i in range(0, len(items), chunk_size)]
    workers = _thread_count()
    if workers <= 1 or len(chunks) <= 1:
        parts = [run(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, chunks))
    failures = []
    for part in parts:
        failures.extend(part)
    return failures


def _report(suite, params, checked, failures, **extra):
    rep = {"suite": suite}
    rep.update(params)
    rep["checked"] = checked
    rep["failures"] = len(failures)
    rep["details"] = failures[:_DETAIL_CAP]
    rep.update(extra)
    return rep


def verify_cutpoints(depths=(1, 2, 3, 4, 5), samples=200, max_pants=40, seed=DEFAULT_SEED):
    """Cut vertices of the adjacency graph against the separating-curve
    classification, over the model truncations and random surfaces."""
    cases = []
    for model in InfiniteModel:
        for d in depths:
            cases.append((f"{model.value}-{d}", build_truncation(model, d)))
    rng = random.Random(seed)
    for i in range(samples):
        n = rng.randint(2, max_pants)
        cases.append((f"random-{i}(n={n})", random_gluing_graph(n, rng)))

    def check(case):
        label, g = case
        cuts = set(cut_vertices(adjacency_graph(g)))
        non_outer = {
            cid for cid, cls in classify_all(g).items() if cls is CurveClass.NON_OUTER
        }
        if cuts != non_outer:
            return {
                "case": label,
                "cut_not_classified": sorted(cuts - non_outer),
                "classified_not_cut": sorted(non_outer - cuts),
            }
        return None

    failures = _sweep(cases, check, chunk_size=16)
    return _report(
        "cutpoints",
        {"depths": list(depths), "samples": samples, "max_pants": max_pants, "seed": seed},
        len(cases),
        failures,
    )


def _expected_leaf_counts(model, depth):
    if model is InfiniteModel.LOCH_NESS:
        return tuple(1 for _ in range(depth + 1))
    if model is InfiniteModel.LADDER:
        return (1,) + tuple(2 for _ in range(depth))
    return tuple(2 ** k for k in range(depth + 1))


def verify_ends(max_depth=6):
    """End-space bookkeeping for the three standard models: live component
    counts per level, curve-tree/pants-tree isomorphism, and the level-wise
    correspondence between them."""
    failures = []
    checked = 0
    for model in InfiniteModel:
        for d in range(1, max_depth + 1):
            checked += 1
            g = build_truncation(model, _MARGINS[model](d))
            label = f"{model.value}@{d}"
            try:
                ct, pt, _ = induced_end_correspondence(g, d)
            except CurveLabError as exc:
                failures.append({"case": label, "error": f"{type(exc).__name__}: {exc}"})
                continue
            expected = _expected_leaf_counts(model, d)
            if ct.leaf_counts() != expected:
                failures.append(
                    {"case": label, "curve_counts": list(ct.leaf_counts()), "expected": list(expected)}
                )
            if pt.leaf_counts() != expected:
                failures.append(
                    {"case": label, "pants_counts": list(pt.leaf_counts()), "expected": list(expected)}
                )
            if not end_trees_isomorphic(ct, pt):
                failures.append({"case": label, "error": "trees not isomorphic"})
    return _report("ends", {"max_depth": max_depth}, checked, failures)


def verify_triples(bound=50):
    """Triple completion over every slope b with |p|, |q| <= bound crossing
    a = 0/1 at least twice: the completion is a genuine triple and splits
    the crossing number of b additively."""
    w = abstract_window("torus")
    a = make_slope(0, 1)
    items = [b for b in slopes_up_to(bound) if window_intersection(w, a, b) >= 2]

    def check(b):
        g, g2 = triple_completion(w, a, b)
        ok = (
            is_triple(w, a, g, g2)
            and window_intersection(w, g, b) + window_intersection(w, g2, b)
            == window_intersection(w, a, b)
        )
        if not ok:
            return {"b": str(b), "g": str(g), "g2": str(g2)}
        return None

    failures = _sweep(items, check)
    return _report("triples", {"bound": bound}, len(items), failures)


def verify_sch04(coord_bound=20, search_bound=100):
    """Common-neighbor counts in a sphere window: every pair of slopes
    crossing exactly twice has exactly two slopes crossing both twice."""
    w = abstract_window("sphere")
    slopes = slopes_up_to(coord_bound)
    items = []
    for i, a in enumerate(slopes):
        for b in slopes[i + 1 :]:
            if window_intersection(w, a, b) == 2:
                items.append((a, b))

    def check(pair):
        a, b = pair
        try:
            sols = sch04_common_neighbors(w, a, b, search_bound)
        except CurveLabError as exc:
            return {"a": str(a), "b": str(b), "error": f"{type(exc).__name__}: {exc}"}
        bad = [
            str(c)
            for c in sols
            if window_intersection(w, c, a) != 2 or window_intersection(w, c, b) != 2
        ]
        if len(sols) != 2 or bad:
            return {"a": str(a), "b": str(b), "solutions": sorted(str(c) for c in sols)}
        return None

    failures = _sweep(items, check)
    return _report(
        "sch04",
        {"coord_bound": coord_bound, "search_bound": search_bound},
        len(items),
        failures,
    )


def verify_dtcoords(slope_bound=10, max_twist=5, dt_bound=20):
    """Twist invariance and coordinate injectivity in both window kinds.

    Twisting along a slope preserves the crossing number with that slope
    for every power up to ``max_twist``, and the coordinate triple against
    0/1, 1/0, 1/1 separates slopes up to ``dt_bound``.
    """
    failures = []
    checked = 0
    slopes = slopes_up_to(slope_bound)
    for kind in ("torus", "sphere"):
        w = abstract_window(kind)
        items = [(along, s) for along in slopes for s in slopes]

        def check(pair, w=w):
            along, s = pair
            want = window_intersection(w, s, along)
            t = s
            for k in range(1, max_twist + 1):
                t = twist(w, along, t)
                if window_intersection(w, t, along) != want:
                    return {
                        "kind": w.kind,
                        "along": str(along),
                        "s": str(s),
                        "power": k,
                        "got": window_intersection(w, t, along),
                        "want": want,
                    }
            return None

        failures.extend(_sweep(items, check, chunk_size=1024))
        checked += len(items)
        collision = dt_uniqueness_check(w, dt_bound)
        checked += 1
        if collision is not None:
            failures.append({"kind": kind, "collision": [str(s) for s in collision]})
    return _report(
        "dtcoords",
        {"slope_bound": slope_bound, "max_twist": max_twist, "dt_bound": dt_bound},
        checked,
        failures,
    )


def _diameter_inventory(g, slope_bound=3):
    refs = [PantsCurve(c.id) for c in g.curves if not c.is_frontier]
    refs.extend(_window_centers(g, slope_bound))
    refs.extend(_handle_chains(g))
    return refs


def verify_diameter(trunc_depth=5, samples=100, handle_samples=50, seed=DEFAULT_SEED):
    """Distance-two and distance-four witnesses on a chain-surface
    truncation: random curve pairs get a common disjoint pants curve, and
    random handle pairs get a path of unit crossings through a third
    handle."""
    g = build_truncation(InfiniteModel.LOCH_NESS, trunc_depth)
    inventory = _diameter_inventory(g)
    handles = [c.id for c in g.curves if c.is_self_gluing]
    rng = random.Random(seed)
    failures = []
    checked = 0
    for _ in range(samples):
        c1 = inventory[rng.randrange(len(inventory))]
        c2 = inventory[rng.randrange(len(inventory))]
        checked += 1
        try:
            wit = disjointness_witness(g, c1, c2)
        except CurveLabError as exc:
            failures.append(
                {
                    "pair": [format_ref(c1), format_ref(c2)],
                    "error": f"{type(exc).__name__}: {exc}",
                }
            )
            continue
        if (
            wit in (c1, c2)
            or global_intersection(g, wit, c1) != 0
            or global_intersection(g, wit, c2) != 0
        ):
            failures.append(
                {"pair": [format_ref(c1), format_ref(c2)], "witness": format_ref(wit)}
            )
    for _ in range(handle_samples):
        h1 = PantsCurve(handles[rng.randrange(len(handles))])
        h2 = PantsCurve(handles[rng.randrange(len(handles))])
        checked += 1
        try:
            path = schmutz_path(g, h1, h2)
        except CurveLabError as exc:
            failures.append(
                {
                    "handles": [h1.id, h2.id],
                    "error": f"{type(exc).__name__}: {exc}",
                }
            )
            continue
        steps = [
            global_intersection(g, path[i], path[i + 1]) for i in range(len(path) - 1)
        ]
        if len(path) > 5 or any(s != 1 for s in steps):
            failures.append({"handles": [h1.id, h2.id], "steps": steps})
    return _report(
        "diameter",
        {
            "trunc_depth": trunc_depth,
            "samples": samples,
            "handle_samples": handle_samples,
            "seed": seed,
        },
        checked,
        failures,
    )


def verify_counterexample(
    trunc_depth=4, alpha="c2", samples=500, seed=DEFAULT_SEED, gadget="ladder"
):
    """The cut-and-glue map on a chain-surface truncation: superinjectivity
    on sampled pairs, audited witnesses outside the image, and the failure
    of the surfaces to be homeomorphic once the gadget adds an end."""
    source = build_truncation(InfiniteModel.LOCH_NESS, trunc_depth)
    result = cut_and_glue(source, alpha)
    domain = list(result.map.domain)
    rng = random.Random(seed)
    pairs = [
        (domain[rng.randrange(len(domain))], domain[rng.randrange(len(domain))])
        for _ in range(samples)
    ]
    si = check_superinjective(result.map, pairs)
    failures = list(si["violations"])

    image = {img for _, img in result.map.assoc}
    witness_report = []
    for wref in result.witnesses:
        resolve_ref(result.map.target, wref)
        if wref in image:
            failures.append({"witness_in_image": format_ref(wref)})
        witness_report.append(format_ref(wref))
    if len(witness_report) < 3:
        failures.append({"error": "fewer than three witnesses"})

    src, tgt, gadget_map = nonhomeomorphic_counterexample(gadget, trunc_depth, alpha)
    gadget_pairs = [
        (
            gadget_map.domain[rng.randrange(len(gadget_map.domain))],
            gadget_map.domain[rng.randrange(len(gadget_map.domain))],
        )
        for _ in range(samples // 2)
    ]
    gadget_si = check_superinjective(gadget_map, gadget_pairs)
    failures.extend(gadget_si["violations"])
    homeomorphic = surfaces_homeomorphic(src, tgt, depth=1)
    if homeomorphic:
        failures.append({"error": "gadget surface not distinguished at depth 1"})
    return _report(
        "counterexample",
        {
            "trunc_depth": trunc_depth,
            "alpha": alpha,
            "samples": samples,
            "seed": seed,
            "gadget": gadget,
        },
        si["checked"] + gadget_si["checked"],
        failures,
        skipped=len(si["skipped"]) + len(gadget_si["skipped"]),
        witnesses=witness_report,
        homeomorphic=homeomorphic,
    )


SUITES = {
    "cutpoints": verify_cutpoints,
    "ends": verify_ends,
    "triples": verify_triples,
    "sch04": verify_sch04,
    "dtcoords": verify_dtcoords,
    "diameter": verify_diameter,
    "counterexample": verify_counterexample,
}


def run_suite(name, **kwargs):
    """Dispatch a verification suite by name with keyword overrides."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
