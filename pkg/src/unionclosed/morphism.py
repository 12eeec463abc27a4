"""Member-to-member maps between families and isomorphism search."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .errors import NotAHomomorphism, NotAMember, SourceNotUnionClosed
from .family import (
    MemberSet,
    SetFamily,
    format_member,
    is_union_closed,
    minimal_members,
)


@dataclass(frozen=True)
class FamilyMap:
    """A total map from the members of ``source`` to members of ``target``.

    ``assignment[k]`` is the target index of ``source.members[k]``.
    """

    source: SetFamily
    target: SetFamily
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != len(self.source):
            raise ValueError("assignment must cover every source member")
        n = len(self.target)
        for t in self.assignment:
            if not 0 <= t < n:
                raise ValueError(f"target index {t} out of range")

    @classmethod
    def from_function(cls, source: SetFamily, target: SetFamily,
                      fn: Callable[[MemberSet], MemberSet]) -> "FamilyMap":
        return cls(source, target, tuple(target.index(fn(a)) for a in source.members))

    @classmethod
    def from_pairs(cls, source: SetFamily, target: SetFamily,
                   pairs: Iterable[tuple[MemberSet, MemberSet]]) -> "FamilyMap":
        table = dict(pairs)
        missing = [a for a in source.members if a not in table]
        if missing:
            raise NotAMember(f"no image given for {format_member(missing[0])}")
        return cls.from_function(source, target, table.__getitem__)

    @classmethod
    def identity(cls, family: SetFamily) -> "FamilyMap":
        return cls(family, family, tuple(range(len(family))))

    def __call__(self, member: MemberSet) -> MemberSet:
        return self.target.members[self.assignment[self.source.index(member)]]

    def items(self) -> list[tuple[MemberSet, MemberSet]]:
        tm = self.target.members
        return [(a, tm[t]) for a, t in zip(self.source.members, self.assignment)]

    def is_bijective(self) -> bool:
        return len(self.source) == len(self.target) == len(set(self.assignment))


def is_homomorphism(h: FamilyMap) -> bool:
    """True iff ``h(A | B) == h(A) | h(B)`` for every pair of source members."""
    src = h.source
    if not is_union_closed(src):
        raise SourceNotUnionClosed("homomorphisms need a union-closed source")
    image = [h.target.members[t] for t in h.assignment]
    idx = src._index
    members = src.members
    for k, a in enumerate(members):
        for l in range(k, len(members)):
            if image[idx[a | members[l]]] != image[k] | image[l]:
                return False
    return True


def is_isomorphism(h: FamilyMap) -> bool:
    return is_homomorphism(h) and h.is_bijective()


def image_family(h: FamilyMap) -> SetFamily:
    if not is_homomorphism(h):
        raise NotAHomomorphism("image_family needs a homomorphism")
    out = SetFamily(h.target.ground_size, {h.target.members[t] for t in h.assignment})
    # the image of a homomorphism is always union-closed
    assert is_union_closed(out)
    return out


def compose(first: FamilyMap, second: FamilyMap) -> FamilyMap:
    """``second ∘ first``; requires ``first.target == second.source``."""
    if first.target != second.source:
        raise ValueError("maps do not compose")
    return FamilyMap(first.source, second.target,
                     tuple(second.assignment[t] for t in first.assignment))


def inverse(h: FamilyMap) -> FamilyMap:
    if not h.is_bijective():
        raise ValueError("only bijective maps have an inverse")
    back = [0] * len(h.assignment)
    for k, t in enumerate(h.assignment):
        back[t] = k
    return FamilyMap(h.target, h.source, tuple(back))


def find_isomorphisms(f1: SetFamily, f2: SetFamily, limit: Optional[int] = None) -> list[FamilyMap]:
    """Isomorphisms ``f1 -> f2`` by backtracking, sorted by assignment.

    Source members are assigned in decreasing cardinality. Pruning:
    equal family sizes; minimal members only pair with minimal members;
    every union among assigned members must be preserved; and, when both
    families are pure, ``|A| == |h(A)|``.
    """
    from .purification import is_pure

    if not is_union_closed(f1) or not is_union_closed(f2):
        raise SourceNotUnionClosed("isomorphism search needs union-closed families")
    if len(f1) != len(f2):
        return []
    if limit is not None and limit < 1:
        raise ValueError("limit must be positive")

    min1 = set(minimal_members(f1))
    min2 = set(minimal_members(f2))
    if len(min1) != len(min2):
        return []
    both_pure = is_pure(f1) and is_pure(f2)
    if both_pure:
        sizes1 = Counter(a.bit_count() for a in f1.members)
        sizes2 = Counter(b.bit_count() for b in f2.members)
        if sizes1 != sizes2:
            return []

    order = sorted(range(len(f1)), key=lambda k: (-f1.members[k].bit_count(), -f1.members[k]))
    src = f1.members
    tgt = f2.members
    candidates = []
    for k in order:
        a = src[k]
        cands = []
        for t, b in enumerate(tgt):
            if (a in min1) != (b in min2):
                continue
            if both_pure and a.bit_count() != b.bit_count():
                continue
            cands.append(t)
        if not cands:
            return []
        candidates.append(cands)

    idx1 = f1._index
    assign: dict[int, int] = {}  # source index -> target index
    used = [False] * len(f2)
    found: list[tuple[int, ...]] = []

    def consistent(k: int, t: int) -> bool:
        a = src[k]
        b = tgt[t]
        for k2, t2 in assign.items():
            u = idx1[a | src[k2]]
            tu = t if u == k else assign.get(u)
            if tu is None:
                continue
            if tgt[tu] != b | tgt[t2]:
                return False
        return True

    def search(depth: int) -> bool:
        if depth == len(order):
            found.append(tuple(assign[k] for k in range(len(f1))))
            return limit is not None and len(found) >= limit
        k = order[depth]
        for t in candidates[depth]:
            if used[t] or not consistent(k, t):
                continue
            assign[k] = t
            used[t] = True
            if search(depth + 1):
                return True
            used[t] = False
            del assign[k]
        return False

    if len(f1) == 0:
        found.append(())
    else:
        search(0)
    found.sort()
    return [FamilyMap(f1, f2, a) for a in found]
