"""Redundant elements, reduced collections and purification."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .errors import ElementNotInUnion, NotRedundant
from .family import SetFamily, elements_of, format_member

RemovalPolicy = Union[str, Callable[[SetFamily, Sequence[int]], int]]


def _strip(members, z: int) -> list[int]:
    keep = ~(1 << (z - 1))
    return [m & keep for m in members]


def _require_in_union(family: SetFamily, z: int) -> None:
    if not (z >= 1 and family.union >> (z - 1) & 1):
        raise ElementNotInUnion(f"element {z} is not in the union {format_member(family.union)}")


def is_redundant(family: SetFamily, z: int) -> bool:
    """True iff deleting ``z`` from every member keeps all members distinct."""
    _require_in_union(family, z)
    return len(set(_strip(family.members, z))) == len(family)


def redundant_elements(family: SetFamily) -> list[int]:
    return [z for z in elements_of(family.union) if is_redundant(family, z)]


def reduce(family: SetFamily, z: int) -> SetFamily:
    """The reduced collection with ``z`` deleted from every member.

    The ground size is kept, so element identities stay stable across a
    purification trace.
    """
    _require_in_union(family, z)
    stripped = _strip(family.members, z)
    if len(set(stripped)) != len(stripped):
        raise NotRedundant(f"element {z} is not redundant")
    return SetFamily(family.ground_size, stripped)


def is_pure(family: SetFamily) -> bool:
    return not any(is_redundant(family, z) for z in elements_of(family.union))


@dataclass(frozen=True)
class PurificationStep:
    removed: int
    before: SetFamily
    after: SetFamily


@dataclass(frozen=True)
class PurificationTrace:
    steps: tuple[PurificationStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def removed(self) -> list[int]:
        return [s.removed for s in self.steps]

    def isomorphism(self, family: SetFamily):
        """The composed strip maps ``family -> purified family`` as one FamilyMap."""
        from .morphism import FamilyMap, compose

        h = FamilyMap.identity(family)
        for s in self.steps:
            if s.before != h.target:
                raise ValueError("trace does not start at the given family")
            h = compose(h, strip_map(s.before, s.removed))
        return h


def strip_map(family: SetFamily, z: int):
    """The isomorphism ``A -> A \\ {z}`` onto ``reduce(family, z)``."""
    from .morphism import FamilyMap

    keep = ~(1 << (z - 1))
    return FamilyMap.from_function(family, reduce(family, z), lambda a: a & keep)


def _choose(policy: RemovalPolicy, family: SetFamily, candidates: list[int]) -> int:
    if policy == "smallest":
        return candidates[0]
    if policy == "largest":
        return candidates[-1]
    if callable(policy):
        z = policy(family, candidates)
        if z not in candidates:
            raise ValueError(f"policy chose {z}, which is not redundant")
        return z
    raise ValueError(f"unknown removal policy {policy!r}")


def purify(family: SetFamily, policy: RemovalPolicy = "smallest") -> tuple[SetFamily, PurificationTrace]:
    """Delete redundant elements one at a time until none is left.

    ``policy`` picks which redundant element goes next: ``"smallest"``,
    ``"largest"``, or a callable ``(family, candidates) -> element``.
    Non-union-closed input is processed mechanically; only union-closed input
    carries the guarantee that every outcome is isomorphic to the input.
    """
    steps = []
    current = family
    while True:
        candidates = redundant_elements(current)
        if not candidates:
            break
        z = _choose(policy, current, candidates)
        after = reduce(current, z)
        steps.append(PurificationStep(z, current, after))
        current = after
    return current, PurificationTrace(tuple(steps))


def all_purifications(family: SetFamily) -> set[SetFamily]:
    """Every pure family reachable under some removal order."""
    seen: set[SetFamily] = set()
    results: set[SetFamily] = set()
    stack = [family]
    while stack:
        f = stack.pop()
        if f in seen:
            continue
        seen.add(f)
        candidates = redundant_elements(f)
        if not candidates:
            results.add(f)
        for z in candidates:
            stack.append(reduce(f, z))
    return results
