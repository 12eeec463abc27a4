from itertools import permutations

import pytest
from hypothesis import given

from unionclosed import (
    FamilyMap,
    NotAHomomorphism,
    SetFamily,
    SourceNotUnionClosed,
    compose,
    find_isomorphisms,
    image_family,
    inverse,
    is_homomorphism,
    is_isomorphism,
    make_family,
    mask_of,
    strip_map,
    union_closure,
)
from conftest import union_closed_upto
from oracles import bijection_isomorphisms, fs
from test_family import families


def m(*elems):
    return mask_of(elems)


def swap_map(F1, F2):
    return FamilyMap.from_pairs(F1, F2, [(m(), m()), (m(1), m(2)), (m(1, 2), m(1, 2))])


def test_homomorphism_examples(F1, F2):
    assert is_homomorphism(FamilyMap.identity(F1))
    assert is_homomorphism(swap_map(F1, F2))
    bad = FamilyMap.from_pairs(F1, F1, [(m(), m(1, 2)), (m(1), m(1)), (m(1, 2), m())])
    assert not is_homomorphism(bad)


def test_homomorphism_needs_union_closed_source():
    src = make_family(2, [[1], [2]])
    with pytest.raises(SourceNotUnionClosed):
        is_homomorphism(FamilyMap.identity(src))


def test_isomorphism_examples(F1, F2):
    assert is_isomorphism(FamilyMap.identity(F1))
    assert is_isomorphism(swap_map(F1, F2))
    const = FamilyMap.from_function(F1, make_family(2, [[]]), lambda a: 0)
    assert is_homomorphism(const)
    assert not is_isomorphism(const)


def test_image_family_examples(F1, F2):
    assert image_family(FamilyMap.identity(F1)) == F1
    assert image_family(swap_map(F1, F2)) == F2
    fam = make_family(2, [[1], [1, 2]])
    assert image_family(strip_map(fam, 1)).sets() == [[], [2]]
    bad = FamilyMap.from_pairs(F1, F1, [(m(), m(1, 2)), (m(1), m(1)), (m(1, 2), m())])
    with pytest.raises(NotAHomomorphism):
        image_family(bad)


def test_family_map_validation(F1):
    with pytest.raises(ValueError):
        FamilyMap(F1, F1, (0, 1))
    with pytest.raises(ValueError):
        FamilyMap(F1, F1, (0, 1, 3))


def test_find_isomorphisms_examples(F1, F2):
    found = find_isomorphisms(F1, F2)
    assert found == [swap_map(F1, F2)]
    assert find_isomorphisms(F1, F1) == [FamilyMap.identity(F1)]
    assert find_isomorphisms(make_family(2, [[1], [2], [1, 2]]), F1) == []


def test_find_isomorphisms_limit():
    boolean = make_family(2, [[], [1], [2], [1, 2]])
    assert len(find_isomorphisms(boolean, boolean)) == 2
    assert len(find_isomorphisms(boolean, boolean, limit=1)) == 1
    with pytest.raises(ValueError):
        find_isomorphisms(boolean, boolean, limit=0)


def test_find_isomorphisms_empty_families():
    empty = SetFamily(2)
    assert find_isomorphisms(empty, SetFamily(1)) == [FamilyMap(empty, SetFamily(1), ())]


def _brute(f1, f2):
    """Every member bijection filtered by is_isomorphism."""
    if len(f1) != len(f2):
        return []
    out = []
    for perm in permutations(range(len(f2))):
        h = FamilyMap(f1, f2, perm)
        if is_isomorphism(h):
            out.append(h)
    return sorted(out, key=lambda h: h.assignment)


def test_find_isomorphisms_matches_brute_force():
    fams = [f for f in union_closed_upto(3) if len(f) <= 6 and f.ground_size == 3]
    by_size = {}
    for f in fams:
        by_size.setdefault(len(f), []).append(f)
    pairs = 0
    for group in by_size.values():
        for a in group:
            for b in group:
                assert find_isomorphisms(a, b) == _brute(a, b)
                pairs += 1
    assert pairs > 1000


def test_is_isomorphism_agrees_with_frozenset_oracle():
    for f in union_closed_upto(2):
        for g in union_closed_upto(2):
            ours = {tuple(sorted(h.items())) for h in find_isomorphisms(f, g)}
            ref = bijection_isomorphisms(fs(f), fs(g))
            assert len(ours) == len(ref)


@given(families(max_ground=3, max_members=6))
def test_composition_and_inverse_of_isomorphisms(fam):
    fam = union_closure(fam)
    autos = find_isomorphisms(fam, fam)
    for h in autos:
        assert is_isomorphism(inverse(h))
        assert compose(h, inverse(h)) == FamilyMap.identity(fam)
        for g in autos[:3]:
            assert is_isomorphism(compose(h, g))
