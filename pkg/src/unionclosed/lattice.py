"""The inclusion lattice of a union-closed family, and Frankl abundance."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoNonemptyMember, NotUnionClosed, NoUniqueBottom
from .family import (
    MemberSet,
    SetFamily,
    elements_of,
    format_member,
    is_union_closed,
    minimal_members,
)


@dataclass(frozen=True)
class Lattice:
    """Inclusion order on a family's members, indexed in canonical member order.

    ``cover_edges`` holds ``(lower, upper)`` index pairs of the Hasse diagram.
    """

    family: SetFamily
    cover_edges: tuple[tuple[int, int], ...]
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    @property
    def elements(self) -> tuple[MemberSet, ...]:
        return self.family.members

    def __len__(self) -> int:
        return len(self.family)

    def meet(self, a: MemberSet, b: MemberSet) -> MemberSet:
        idx = self.family.index
        return self.elements[self.meet_table[idx(a)][idx(b)]]

    def join(self, a: MemberSet, b: MemberSet) -> MemberSet:
        idx = self.family.index
        return self.elements[self.join_table[idx(a)][idx(b)]]


def to_lattice(family: SetFamily) -> Lattice:
    """Build the lattice of a union-closed family with a unique minimal member.

    Join is union. Meet of ``a`` and ``b`` is the union of all members inside
    ``a & b``, which is itself a member by union-closure.
    """
    if not is_union_closed(family):
        raise NotUnionClosed("lattice construction needs a union-closed family")
    mins = minimal_members(family)
    if len(mins) != 1:
        raise NoUniqueBottom(f"family has {len(mins)} minimal members")

    members = family.members
    index = family._index
    n = len(members)
    join = tuple(tuple(index[a | b] for b in members) for a in members)
    meet_rows = []
    for a in members:
        row = []
        for b in members:
            common = a & b
            lower = 0
            for c in members:
                if c & common == c:
                    lower |= c
            row.append(index[lower])
        meet_rows.append(tuple(row))

    edges = []
    for lo in range(n):
        a = members[lo]
        uppers = [hi for hi in range(n) if hi != lo and members[hi] & a == a]
        for hi in uppers:
            b = members[hi]
            between = any(members[m] != b and b & members[m] == members[m]
                          for m in uppers)
            if not between:
                edges.append((lo, hi))

    return Lattice(family, tuple(sorted(edges)), tuple(meet_rows), join,
                   bottom=index[mins[0]], top=index[family.union])


def meet(lattice: Lattice, a: MemberSet, b: MemberSet) -> MemberSet:
    return lattice.meet(a, b)


def join(lattice: Lattice, a: MemberSet, b: MemberSet) -> MemberSet:
    return lattice.join(a, b)


def verify_lattice_laws(lattice: Lattice) -> bool:
    """Commutativity, associativity, idempotence and both absorption laws."""
    m, j = lattice.meet_table, lattice.join_table
    r = range(len(lattice))
    for a in r:
        if m[a][a] != a or j[a][a] != a:
            return False
        for b in r:
            if m[a][b] != m[b][a] or j[a][b] != j[b][a]:
                return False
            if m[a][j[a][b]] != a or j[a][m[a][b]] != a:
                return False
            for c in r:
                if m[m[a][b]][c] != m[a][m[b][c]] or j[j[a][b]][c] != j[a][j[b][c]]:
                    return False
    return True


def frankl_counts(family: SetFamily) -> list[tuple[int, int]]:
    """``(element, number of members containing it)`` for each element of the union."""
    return [(i, sum(1 for m in family.members if m >> (i - 1) & 1))
            for i in elements_of(family.union)]


def frankl_abundant_elements(family: SetFamily) -> list[int]:
    """Elements lying in at least half of the members, compared exactly."""
    if not is_union_closed(family):
        raise NotUnionClosed("Frankl abundance is defined for union-closed families")
    if not family.union:
        raise NoNonemptyMember("family has no nonempty member")
    half = Fraction(len(family), 2)
    return [i for i, count in frankl_counts(family) if count >= half]


def export_dot(lattice: Lattice) -> str:
    """Render the Hasse diagram as a DOT digraph, bottom to top.

    Nodes follow canonical member order and edges are sorted, so equal
    lattices give byte-identical text. Minimal members are filled red.
    """
    members = lattice.elements
    minimal = set(minimal_members(lattice.family))
    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=circle];"]
    for k, m in enumerate(members):
        attrs = f'label="{format_member(m)}"'
        if m in minimal:
            attrs += ', style=filled, fillcolor="#ff000080", color=red'
        lines.append(f"  n{k} [{attrs}];")
    for lo, hi in lattice.cover_edges:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"

