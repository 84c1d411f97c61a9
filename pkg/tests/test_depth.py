"""Depth counting tests: frozen examples, counters, and cross-checks."""

from fractions import Fraction
from random import Random

import pytest

from colourdepth.depth import (
    ColourfulConfiguration,
    CoreSampleError,
    antipodal_cone_count,
    colourful_depth,
    core_membership,
    min_core_depth_estimate,
    monochrome_depth,
    zero_containing_count,
)
from colourdepth.exact import InputError, origin, pt
from colourdepth.sampling import random_core_class, random_points


def config(dim, *classes):
    return ColourfulConfiguration.from_lists(dim, classes)


TRIANGLE = [pt(1, 0), pt(-1, 1), pt(-1, -1)]


def random_core_config(rng, d, size):
    return config(d, *(random_core_class(rng, size, d, bound=50) for _ in range(d + 1)))


# ------------------------------------------------------------------ monochrome


def test_monochrome_1d_segments():
    rep = monochrome_depth([pt(-1), pt(2), pt(5)], pt(0), "open")
    assert rep.count == 2  # segments (-1,2) and (-1,5)


def test_monochrome_outside_hull_is_zero():
    S = [pt(1, 0), pt(2, 0), pt(1, 1), pt(3, 2)]
    assert monochrome_depth(S, pt(-5, 0), "open").count == 0
    assert monochrome_depth(S, pt(-5, 0), "closed").count == 0


def test_monochrome_requires_enough_points():
    with pytest.raises(InputError):
        monochrome_depth([pt(0, 0), pt(1, 0)], pt(0, 0), "open")


def test_monochrome_witnesses_sorted_and_counted():
    S = [pt(-2), pt(-1), pt(1), pt(2)]
    rep = monochrome_depth(S, pt(0), "open", want_witnesses=True)
    assert rep.count == len(rep.witnesses) == 4
    assert list(rep.witnesses) == sorted(rep.witnesses)


def test_monochrome_open_le_closed_random():
    rng = Random(5)
    for _ in range(120):
        S = random_points(rng, 6, 2, bound=12)
        p = random_points(rng, 1, 2, bound=12)[0]
        ro = monochrome_depth(S, p, "open")
        rc = monochrome_depth(S, p, "closed")
        assert ro.count <= rc.count


def test_monochrome_boundary_counter():
    S = [pt(0, 0), pt(2, 0), pt(0, 2), pt(5, 5)]
    rep = monochrome_depth(S, pt(1, 0), "closed")  # on an edge
    assert rep.boundary >= 1


# ------------------------------------------------------------------- colourful


def test_identical_triangle_classes_give_factorial():
    cfg = config(2, TRIANGLE, TRIANGLE, TRIANGLE)
    for mode in ("open", "closed"):
        assert colourful_depth(cfg, pt(0, 0), mode).count == 6


def test_colourful_outside_every_hull_zero():
    cls = [pt(1, 0), pt(2, 1), pt(2, -1)]  # all x >= 1
    cfg = config(2, cls, cls, cls)
    assert colourful_depth(cfg, pt(0, 0), "open").count == 0


def test_colourful_needs_enough_colours():
    cfg = config(2, TRIANGLE, TRIANGLE)
    with pytest.raises(InputError):
        colourful_depth(cfg, pt(0, 0), "open")


def test_colourful_more_colours_than_needed():
    # r = 4 colours in d = 2: simplices choose 3 distinct colours
    cfg = config(2, TRIANGLE, TRIANGLE, TRIANGLE, TRIANGLE)
    rep = colourful_depth(cfg, pt(0, 0), "open", want_witnesses=True)
    assert rep.count == 4 * 6  # C(4,3) colour choices, 6 containing each
    for w in rep.witnesses:
        colours = [c for c, _ in w]
        assert colours == sorted(colours) and len(set(colours)) == 3


def test_colourful_witness_order_lexicographic():
    cfg = config(2, TRIANGLE, TRIANGLE, TRIANGLE)
    rep = colourful_depth(cfg, pt(0, 0), "open", want_witnesses=True)
    assert list(rep.witnesses) == sorted(rep.witnesses)
    assert rep.count == len(rep.witnesses)


def test_translation_invariance_of_count():
    rng = Random(9)
    cfg = random_core_config(rng, 2, 3)
    q = pt(Fraction(1, 7), Fraction(-2, 9))
    shifted = cfg.translated(q)
    a = colourful_depth(cfg, pt(0, 0), "open").count
    b = colourful_depth(shifted, q, "open").count
    assert a == b


# ------------------------------------------------------------------------ core


def test_core_membership_identical_config():
    cfg = config(2, TRIANGLE, TRIANGLE, TRIANGLE)
    assert core_membership(cfg, pt(0, 0), strict=True)


def test_core_membership_fails_on_shifted_class():
    right = [pt(1, 0), pt(2, 1), pt(2, -1)]
    cfg = config(2, TRIANGLE, TRIANGLE, right)
    assert not core_membership(cfg, pt(0, 0))


# ------------------------------------------------- zero counts and cone counts


def test_zero_count_decomposition_by_colour():
    rng = Random(21)
    for d in (2, 3):
        for _ in range(12):
            cfg = random_core_config(rng, d, d + 1)
            total = colourful_depth(cfg, origin(d), "open").count
            for j in range(d + 1):
                s = sum(
                    zero_containing_count(cfg, j, k, "open")
                    for k in range(len(cfg.classes[j]))
                )
                assert s == total


def test_zero_count_equals_antipodal_cone_count():
    rng = Random(22)
    for d in (2, 3):
        for _ in range(12):
            cfg = random_core_config(rng, d, d + 1)
            for j in range(d + 1):
                for k, v in enumerate(cfg.classes[j]):
                    z = zero_containing_count(cfg, j, k, "open")
                    cc = antipodal_cone_count(cfg, j, v)
                    assert cc.degenerate == 0
                    assert z == cc.count


def test_antipodal_cone_count_1d_example():
    cfg = config(1, [pt(-1), pt(1)], [pt(-2), pt(2)])
    # colour 2 (index 1), v = 2: cones from colour 1 containing -2: ray of -1
    assert antipodal_cone_count(cfg, 1, pt(2)).count == 1


def test_zero_count_is_zero_when_antipode_uncovered():
    # the antipode of (1,) lies outside every cone of the other colour
    cfg = config(1, [pt(-1), pt(1)], [pt(1), pt(2)])
    assert zero_containing_count(cfg, 0, 1, "open") == 0
    assert antipodal_cone_count(cfg, 0, pt(1)).count == 0


def test_antipodal_requires_nonzero():
    cfg = config(1, [pt(-1), pt(1)], [pt(-2), pt(2)])
    with pytest.raises(InputError):
        antipodal_cone_count(cfg, 0, pt(0))


def test_zero_count_index_errors():
    cfg = config(1, [pt(-1), pt(1)], [pt(-2), pt(2)])
    with pytest.raises(InputError):
        zero_containing_count(cfg, 2, 0)
    with pytest.raises(InputError):
        zero_containing_count(cfg, 0, 5)


# ------------------------------------------------------------ core depth bound


def test_min_core_depth_1d_example():
    cfg = config(1, [pt(-1), pt(1)], [pt(-2), pt(2)])
    est, witness = min_core_depth_estimate(cfg, samples=8, seed=1)
    assert est == 2
    assert witness.dim == 1


def test_min_core_depth_identical_config():
    cfg = config(2, TRIANGLE, TRIANGLE, TRIANGLE)
    est, _ = min_core_depth_estimate(cfg, samples=6, seed=3)
    assert est == 6


def test_min_core_depth_deterministic():
    rng = Random(31)
    cfg = random_core_config(rng, 2, 3)
    a = min_core_depth_estimate(cfg, samples=10, seed=42)
    b = min_core_depth_estimate(cfg, samples=10, seed=42)
    assert a == b


def test_min_core_depth_empty_core_error():
    right = [pt(1, 0), pt(2, 1), pt(2, -1)]
    left = [pt(-1, 0), pt(-2, 1), pt(-2, -1)]
    up = [pt(0, 1), pt(1, 2), pt(-1, 2)]
    cfg = config(2, right, left, up)
    with pytest.raises(CoreSampleError):
        min_core_depth_estimate(cfg, samples=5, seed=0)


def test_strict_core_point_depth_at_least_two_d():
    rng = Random(33)
    for d in (2, 3):
        for _ in range(8):
            cfg = random_core_config(rng, d, d + 1)
            rep = colourful_depth(cfg, origin(d), "open")
            if rep.degenerate == 0 and rep.boundary == 0:
                assert rep.count >= 2 * d
