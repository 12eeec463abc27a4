import pytest

from unionclosed import (
    FamilyMap,
    GroundMap,
    ImageNotInTarget,
    NotAnIsomorphism,
    NotPure,
    UnionMismatch,
    UnionTooLarge,
    brute_force_hyperisomorphism,
    extract_hyperisomorphism,
    induced_map,
    is_hyperisomorphism,
    make_family,
    mask_of,
    strip_map,
    verify_cardinality_theorem,
)
from conftest import pure_covering
from unionclosed import find_isomorphisms


def swap():
    return GroundMap.from_dict({1: 2, 2: 1})


def test_ground_map_validation():
    with pytest.raises(ValueError):
        GroundMap(mask_of([1, 2]), mask_of([1, 2]), ((1, 1), (2, 1)))
    with pytest.raises(ValueError):
        GroundMap(mask_of([1, 2]), mask_of([1, 2]), ((1, 1),))
    assert GroundMap.from_dict({2: 1, 1: 2}).pairs == ((1, 2), (2, 1))


def test_induced_map_examples(F1, F2):
    assert induced_map(GroundMap.identity(F1.union), F1, F1) == FamilyMap.identity(F1)
    h = induced_map(swap(), F1, F2)
    assert [(sorted_(a), sorted_(b)) for a, b in h.items()] == [([], []), ([1], [2]), ([1, 2], [1, 2])]
    with pytest.raises(ImageNotInTarget) as err:
        induced_map(GroundMap.identity(F1.union), F1, F2)
    assert err.value.member == [1]
    with pytest.raises(UnionMismatch):
        induced_map(GroundMap.from_dict({1: 1}), F1, F2)


def sorted_(mask):
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def test_is_hyperisomorphism_examples(F1, F2):
    assert is_hyperisomorphism(GroundMap.identity(F1.union), F1, F1)
    assert is_hyperisomorphism(swap(), F1, F2)
    assert not is_hyperisomorphism(swap(), F1, F1)


def test_extract_examples(F1, F2):
    assert extract_hyperisomorphism(FamilyMap.identity(F1)) == GroundMap.identity(F1.union)
    h = induced_map(swap(), F1, F2)
    assert extract_hyperisomorphism(h).as_dict() == {1: 2, 2: 1}


def test_extract_rejects_impure_and_non_isomorphisms(F1):
    fam = make_family(2, [[1], [1, 2]])
    with pytest.raises(NotPure) as err:
        extract_hyperisomorphism(strip_map(fam, 1))
    assert err.value.side == "source"
    const = FamilyMap.from_function(F1, F1, lambda a: 0)
    with pytest.raises(NotAnIsomorphism):
        extract_hyperisomorphism(const)


def test_brute_force_examples(F1, F2):
    assert brute_force_hyperisomorphism(FamilyMap.identity(F1)) == [GroundMap.identity(F1.union)]
    assert brute_force_hyperisomorphism(induced_map(swap(), F1, F2)) == [swap()]
    base = make_family(0, [[]])
    assert brute_force_hyperisomorphism(FamilyMap.identity(base)) == [GroundMap(0, 0, ())]
    assert extract_hyperisomorphism(FamilyMap.identity(base)) == GroundMap(0, 0, ())


def test_brute_force_cap():
    chain = make_family(9, [list(range(1, k + 1)) for k in range(10)])
    with pytest.raises(UnionTooLarge):
        brute_force_hyperisomorphism(FamilyMap.identity(chain))
    assert len(brute_force_hyperisomorphism(FamilyMap.identity(chain), cap=9)) == 1


def test_brute_force_mismatched_unions():
    a = make_family(2, [[], [1, 2]])
    b = make_family(2, [[], [1]])
    h = FamilyMap(a, b, (0, 1))
    assert brute_force_hyperisomorphism(h) == []


def test_cardinality_report_examples(F1, F2):
    report = verify_cardinality_theorem(FamilyMap.identity(F1))
    assert report.passed and report.failures() == []
    report = verify_cardinality_theorem(induced_map(swap(), F1, F2))
    assert report.passed
    assert report.member_sizes == ((0, 0), (1, 1), (2, 2))
    assert report.union_sizes == (2, 2)
    assert len(report.pairs) == 9


def test_cardinality_sweep_n3():
    for n in range(4):
        fams = pure_covering(n)
        for a in fams:
            for b in fams:
                for h in find_isomorphisms(a, b):
                    assert verify_cardinality_theorem(h).passed
