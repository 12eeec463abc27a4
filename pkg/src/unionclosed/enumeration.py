"""Exhaustive generation of union-closed families and relabeling-invariant forms."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .errors import GroundTooLarge, UnionTooLarge
from .family import SetFamily, elements_of, member_key
from .purification import is_pure

DIRECT_MAX_GROUND = 4
GENERATOR_MAX_GROUND = 6
CANONICAL_MAX_UNION = 8


def _subsets(n: int) -> list[int]:
    return sorted(range(1 << n), key=member_key)


def _closed(masks: tuple[int, ...]) -> bool:
    present = set(masks)
    return all((a | b) in present for k, a in enumerate(masks) for b in masks[k + 1:])


def _direct(n: int) -> Iterator[SetFamily]:
    # combinations over canonically sorted subsets come out in family order
    subsets = _subsets(n)
    for k in range(len(subsets) + 1):
        for combo in combinations(subsets, k):
            if _closed(combo):
                yield SetFamily(n, combo)


def _closure_bits(bits: int, subsets: list[int], index: dict[int, int]) -> int:
    members = [subsets[k] for k in range(len(subsets)) if bits >> k & 1]
    closed = set(members)
    frontier = members
    while frontier:
        fresh = []
        for a in frontier:
            for b in tuple(closed):
                c = a | b
                if c not in closed:
                    closed.add(c)
                    fresh.append(c)
        frontier = fresh
    out = 0
    for c in closed:
        out |= 1 << index[c]
    return out


def _generator(n: int) -> Iterator[SetFamily]:
    """Next-Closure over the closure system of union-closed families.

    Items are the subsets of ``[n]``; each closed item set is a union-closed
    family and is produced exactly once, in lectic order.
    """
    subsets = _subsets(n)
    index = {s: k for k, s in enumerate(subsets)}
    size = len(subsets)
    current = _closure_bits(0, subsets, index)
    while True:
        yield SetFamily(n, (subsets[k] for k in range(size) if current >> k & 1))
        for i in reversed(range(size)):
            bit = 1 << i
            if current & bit:
                current &= ~bit
                continue
            candidate = _closure_bits(current | bit, subsets, index)
            if not (candidate & ~current) & (bit - 1):
                current = candidate
                break
        else:
            return


def enumerate_union_closed(n: int, require_empty: bool = False,
                           method: str = "direct") -> Iterator[SetFamily]:
    """Every union-closed family over ``[n]``, once each, in family order.

    ``method="direct"`` filters all ``2**(2**n)`` candidate families and
    streams lazily. ``method="generator"`` runs Next-Closure and buffers the
    result to sort it into the same order.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if method == "direct":
        if n > DIRECT_MAX_GROUND:
            raise GroundTooLarge(f"direct enumeration supports n <= {DIRECT_MAX_GROUND}")
        stream = _direct(n)
    elif method == "generator":
        if n > GENERATOR_MAX_GROUND:
            raise GroundTooLarge(f"generator enumeration supports n <= {GENERATOR_MAX_GROUND}")
        stream = iter(sorted(_generator(n), key=SetFamily.sort_key))
    else:
        raise ValueError(f"unknown method {method!r}")
    for family in stream:
        if require_empty and 0 not in family:
            continue
        yield family


def enumerate_pure(n: int, method: str = "direct") -> Iterator[SetFamily]:
    """Pure union-closed families whose union is all of ``[n]``."""
    full = (1 << n) - 1
    for family in enumerate_union_closed(n, method=method):
        if family.union == full and is_pure(family):
            yield family


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Smallest member encoding over all relabelings of the family's union.

    ``fingerprint`` is ``(|union|, members)`` with members relabeled onto
    ``1..|union|`` and listed in canonical member order.
    """

    fingerprint: tuple


def canonical_form(family: SetFamily) -> CanonicalForm:
    elems = elements_of(family.union)
    k = len(elems)
    if k > CANONICAL_MAX_UNION:
        raise UnionTooLarge(f"|union| = {k} exceeds {CANONICAL_MAX_UNION}")
    positions = {e: p for p, e in enumerate(elems)}
    compressed = [[positions[e] for e in elements_of(m)] for m in family.members]
    best = None
    for perm in permutations(range(k)):
        bits = [1 << p for p in perm]
        encoded = []
        for pos in compressed:
            m = 0
            for p in pos:
                m |= bits[p]
            encoded.append(m)
        encoded = tuple(sorted(encoded, key=member_key))
        if best is None or encoded < best:
            best = encoded
    return CanonicalForm((k, best if best is not None else ()))


def hyperisomorphic(f1: SetFamily, f2: SetFamily) -> bool:
    return canonical_form(f1) == canonical_form(f2)
