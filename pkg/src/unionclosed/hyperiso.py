"""Ground-set bijections behind family isomorphisms.

For pure union-closed families every member isomorphism ``h`` is induced by
a bijection ``H`` between the ground unions, ``h(A) = {H(a) : a in A}``.
``extract_hyperisomorphism`` builds that ``H`` directly from ``h``: element
``i`` goes to the unique ``j`` whose star in the target is the image of the
star of ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Mapping

from .errors import (
    ImageNotInTarget,
    InternalContradiction,
    NotAnIsomorphism,
    NotPure,
    SourceNotUnionClosed,
    UnionMismatch,
    UnionTooLarge,
)
from .family import MemberSet, SetFamily, elements_of, format_member, mask_of
from .morphism import FamilyMap, is_isomorphism
from .purification import is_pure

DEFAULT_BRUTE_FORCE_CAP = 8


@dataclass(frozen=True)
class GroundMap:
    """A bijection between two ground unions, stored as sorted ``(i, j)`` pairs."""

    source_union: MemberSet
    target_union: MemberSet
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        srcs = [i for i, _ in self.pairs]
        dsts = [j for _, j in self.pairs]
        if mask_of(srcs) != self.source_union or len(set(srcs)) != len(srcs):
            raise ValueError("GroundMap must be total on its source union")
        if mask_of(dsts) != self.target_union or len(set(dsts)) != len(dsts):
            raise ValueError("GroundMap must be a bijection onto its target union")
        if list(self.pairs) != sorted(self.pairs):
            object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))

    @classmethod
    def from_dict(cls, mapping: Mapping[int, int]) -> "GroundMap":
        return cls(mask_of(mapping.keys()), mask_of(mapping.values()),
                   tuple(sorted(mapping.items())))

    @classmethod
    def identity(cls, union: MemberSet) -> "GroundMap":
        return cls(union, union, tuple((i, i) for i in elements_of(union)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __call__(self, i: int) -> int:
        return self.as_dict()[i]

    def apply(self, member: MemberSet) -> MemberSet:
        table = self.as_dict()
        return mask_of(table[a] for a in elements_of(member))


def induced_map(H: GroundMap, f1: SetFamily, f2: SetFamily) -> FamilyMap:
    """The member map ``A -> H[A]``; raises ImageNotInTarget on the first miss."""
    if H.source_union != f1.union or H.target_union != f2.union:
        raise UnionMismatch("ground map unions do not match the families")
    table = H.as_dict()
    assignment = []
    for a in f1.members:
        image = mask_of(table[x] for x in elements_of(a))
        if image not in f2:
            raise ImageNotInTarget(elements_of(a), elements_of(image))
        assignment.append(f2.index(image))
    return FamilyMap(f1, f2, tuple(assignment))


def is_hyperisomorphism(H: GroundMap, f1: SetFamily, f2: SetFamily) -> bool:
    try:
        return is_isomorphism(induced_map(H, f1, f2))
    except (ImageNotInTarget, UnionMismatch, SourceNotUnionClosed):
        return False


def _require_pure_isomorphism(h: FamilyMap) -> None:
    if not is_pure(h.source):
        raise NotPure("source")
    if not is_pure(h.target):
        raise NotPure("target")
    try:
        ok = is_isomorphism(h)
    except SourceNotUnionClosed:
        ok = False
    if not ok:
        raise NotAnIsomorphism("map is not an isomorphism between union-closed families")


def extract_hyperisomorphism(h: FamilyMap) -> GroundMap:
    """Recover the ground bijection that induces the isomorphism ``h``.

    Both families must be pure. For each ``i`` in the source union, the stars
    ``{A : i in A}`` are pushed through ``h``; the unique target element whose
    star equals that image is ``H(i)``. Candidates are drawn only from the
    intersection of the image star.
    """
    _require_pure_isomorphism(h)
    f1, f2 = h.source, h.target
    image = [f2.members[t] for t in h.assignment]

    target_stars: dict[int, frozenset[int]] = {}
    for j in elements_of(f2.union):
        bit = 1 << (j - 1)
        target_stars[j] = frozenset(b for b in f2.members if b & bit)

    pairs = []
    for i in elements_of(f1.union):
        bit = 1 << (i - 1)
        star_image = frozenset(image[k] for k, a in enumerate(f1.members) if a & bit)
        common = f2.union
        for b in star_image:
            common &= b
        matches = [j for j in elements_of(common) if target_stars[j] == star_image]
        if len(matches) != 1:
            raise InternalContradiction(
                f"element {i}: expected exactly one matching target element, found {matches}")
        pairs.append((i, matches[0]))

    if len({j for _, j in pairs}) != len(pairs) or mask_of(j for _, j in pairs) != f2.union:
        raise InternalContradiction(f"extracted map {pairs} is not a bijection of the unions")
    H = GroundMap(f1.union, f2.union, tuple(pairs))
    if induced_map(H, f1, f2) != h:
        raise InternalContradiction("extracted ground map does not induce the given isomorphism")
    return H


def brute_force_hyperisomorphism(h: FamilyMap, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> list[GroundMap]:
    """Every bijection of the unions whose induced map is exactly ``h``."""
    f1, f2 = h.source, h.target
    dom = elements_of(f1.union)
    cod = elements_of(f2.union)
    if len(dom) != len(cod):
        return []
    if len(dom) > cap:
        raise UnionTooLarge(f"|union| = {len(dom)} exceeds the cap of {cap}")
    wanted = [f2.members[t] for t in h.assignment]
    out = []
    for perm in permutations(cod):
        table = dict(zip(dom, perm))
        if all(mask_of(table[x] for x in elements_of(a)) == b
               for a, b in zip(f1.members, wanted)):
            out.append(GroundMap(f1.union, f2.union, tuple(zip(dom, perm))))
    return out


@dataclass(frozen=True)
class PairRecord:
    first: MemberSet
    second: MemberSet
    union: tuple[int, int]
    intersection: tuple[int, int]
    difference: tuple[int, int]

    @property
    def ok(self) -> bool:
        return all(x == y for x, y in (self.union, self.intersection, self.difference))


@dataclass(frozen=True)
class CardinalityReport:
    member_sizes: tuple[tuple[int, int], ...]
    union_sizes: tuple[int, int]
    pairs: tuple[PairRecord, ...]
    complement_sizes: tuple[tuple[int, int], ...]

    @property
    def passed(self) -> bool:
        return (all(x == y for x, y in self.member_sizes)
                and self.union_sizes[0] == self.union_sizes[1]
                and all(p.ok for p in self.pairs)
                and all(x == y for x, y in self.complement_sizes))

    def failures(self) -> list[str]:
        out = [f"|A|={x} vs |h(A)|={y}" for x, y in self.member_sizes if x != y]
        if self.union_sizes[0] != self.union_sizes[1]:
            out.append(f"union sizes {self.union_sizes}")
        out += [f"pair {format_member(p.first)},{format_member(p.second)}"
                for p in self.pairs if not p.ok]
        out += [f"complement {x} vs {y}" for x, y in self.complement_sizes if x != y]
        return out


def verify_cardinality_theorem(h: FamilyMap) -> CardinalityReport:
    """Compare sizes of members, unions, intersections, differences and complements."""
    _require_pure_isomorphism(h)
    f1, f2 = h.source, h.target
    u1, u2 = f1.union, f2.union
    image = [f2.members[t] for t in h.assignment]
    members = f1.members
    pairs = []
    for k, a in enumerate(members):
        for l, b in enumerate(members):
            ha, hb = image[k], image[l]
            pairs.append(PairRecord(
                a, b,
                ((a | b).bit_count(), (ha | hb).bit_count()),
                ((a & b).bit_count(), (ha & hb).bit_count()),
                ((a & ~b).bit_count(), (ha & ~hb).bit_count()),
            ))
    return CardinalityReport(
        member_sizes=tuple((a.bit_count(), b.bit_count()) for a, b in zip(members, image)),
        union_sizes=(u1.bit_count(), u2.bit_count()),
        pairs=tuple(pairs),
        complement_sizes=tuple(((u1 & ~a).bit_count(), (u2 & ~b).bit_count())
                               for a, b in zip(members, image)),
    )
