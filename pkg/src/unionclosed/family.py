"""Finite set families over a ground set ``1..n``.

Members are stored as integer bit-vectors: element ``i`` lives in bit ``i - 1``.
Python integers are unbounded, so there is no word-size limit on ``n``.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateMember, ElementOutOfRange, NotAMember

MemberSet = int


def mask_of(elements: Iterable[int]) -> MemberSet:
    mask = 0
    for e in elements:
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: MemberSet) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def member_key(mask: MemberSet) -> tuple[int, int]:
    """Canonical sort key: cardinality first, then numeric bit-vector value."""
    return (mask.bit_count(), mask)


def format_member(mask: MemberSet) -> str:
    if not mask:
        return "∅"
    return "{" + ",".join(map(str, elements_of(mask))) + "}"


class SetFamily:
    """An immutable family of distinct subsets of ``[ground_size]``.

    Members are kept in canonical order (cardinality, then bit-vector value),
    so iteration and every list-valued query are deterministic.
    """

    def __init__(self, ground_size: int, members: Iterable[MemberSet] = ()):
        if ground_size < 0:
            raise ValueError("ground_size must be non-negative")
        limit = (1 << ground_size) - 1
        seen = set()
        for m in members:
            if m < 0 or m & ~limit:
                bad = max(elements_of(m)) if m > 0 else m
                raise ElementOutOfRange(bad, ground_size)
            if m in seen:
                raise DuplicateMember(elements_of(m))
            seen.add(m)
        self.ground_size = ground_size
        self.members: tuple[MemberSet, ...] = tuple(sorted(seen, key=member_key))

    @cached_property
    def _index(self) -> dict[MemberSet, int]:
        return {m: k for k, m in enumerate(self.members)}

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[MemberSet]:
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.ground_size == other.ground_size and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.ground_size, self.members))

    def __repr__(self) -> str:
        body = ", ".join(format_member(m) for m in self.members)
        return f"SetFamily({self.ground_size}, {{{body}}})"

    def index(self, mask: MemberSet) -> int:
        try:
            return self._index[mask]
        except KeyError:
            raise NotAMember(f"{format_member(mask)} is not a member") from None

    def sets(self) -> list[list[int]]:
        """Members as ascending element lists."""
        return [elements_of(m) for m in self.members]

    def sort_key(self) -> tuple:
        """Order on families: member count, then member keys lexicographically."""
        return (len(self.members), tuple(member_key(m) for m in self.members))

    @cached_property
    def union(self) -> MemberSet:
        u = 0
        for m in self.members:
            u |= m
        return u


def make_family(ground_size: int, members: Sequence[Iterable[int]]) -> SetFamily:
    """Build a family from element lists, e.g. ``make_family(2, [[], [1], [1, 2]])``."""
    masks = []
    for elems in members:
        elems = list(elems)
        for e in elems:
            if not 1 <= e <= ground_size:
                raise ElementOutOfRange(e, ground_size)
        masks.append(mask_of(elems))
    return SetFamily(ground_size, masks)


def is_union_closed(family: SetFamily) -> bool:
    members = family.members
    for k, a in enumerate(members):
        for b in members[k + 1:]:
            if (a | b) not in family:
                return False
    return True


def union_closure(family: SetFamily) -> SetFamily:
    closed = set(family.members)
    frontier = list(closed)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(closed):
                c = a | b
                if c not in closed:
                    closed.add(c)
                    fresh.append(c)
        frontier = fresh
    return SetFamily(family.ground_size, closed)


def family_union(family: SetFamily) -> MemberSet:
    return family.union


def _check_element(family: SetFamily, i: int) -> None:
    if not 1 <= i <= family.ground_size:
        raise ElementOutOfRange(i, family.ground_size)


def member_star(family: SetFamily, i: int) -> SetFamily:
    """The subfamily of members containing element ``i``."""
    _check_element(family, i)
    bit = 1 << (i - 1)
    return SetFamily(family.ground_size, (m for m in family.members if m & bit))


def star_intersection(family: SetFamily, i: int) -> MemberSet:
    """Intersection of the members containing ``i``.

    When no member contains ``i`` the empty intersection is taken to be the
    ambient union of the family.
    """
    _check_element(family, i)
    bit = 1 << (i - 1)
    acc = family.union
    for m in family.members:
        if m & bit:
            acc &= m
    return acc


def minimal_members(family: SetFamily) -> list[MemberSet]:
    members = family.members
    out = []
    for x in members:
        # canonical order puts every proper subset of x before it
        if not any(a & x == a for a in members if a.bit_count() < x.bit_count()):
            out.append(x)
    return out


def remove_member(family: SetFamily, x: MemberSet) -> SetFamily:
    if x not in family:
        raise NotAMember(f"{format_member(x)} is not a member")
    return SetFamily(family.ground_size, (m for m in family.members if m != x))
