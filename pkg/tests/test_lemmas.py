"""Exhaustive sweeps of the structural facts, one test per fact."""
import pytest

import sweeps
from conftest import pure_covering
from unionclosed import find_isomorphisms, hyperisomorphic

CHECKS = [
    sweeps.check_homomorphisms_are_monotone,
    sweeps.check_homomorphic_images_are_union_closed,
    sweeps.check_injective_homomorphisms_are_isomorphisms,
    sweeps.check_isomorphisms_strictly_monotone,
    sweeps.check_removing_minimal_keeps_closure,
    sweeps.check_isomorphisms_preserve_minimality,
    sweeps.check_unique_minimum_of_pure_family_is_empty,
    sweeps.check_pure_stars_are_distinct,
    sweeps.check_star_intersections_cover_their_elements,
    sweeps.check_star_intersection_equality,
    sweeps.check_star_images_match_unique_star,
]


@pytest.mark.parametrize("check", CHECKS, ids=lambda c: c.__name__[len("check_"):])
def test_sweep(check):
    count, bad = check()
    assert count > 0
    assert bad == []


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_isomorphic_pure_families_are_relabelings(n):
    fams = pure_covering(n)
    for a in fams:
        for b in fams:
            assert bool(find_isomorphisms(a, b, limit=1)) == hyperisomorphic(a, b)
