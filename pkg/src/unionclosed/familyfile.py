"""Plain-text family files.

::

    # comment
    ground: 3
    {}
    1
    1 2

An optional ``ground: <n>`` header comes before any member. Each later
nonblank line is one member: ascending positive integers separated by
spaces, or ``{}`` for the empty set. ``#`` starts a comment. Without a header
the ground size is the largest element mentioned.
"""
from __future__ import annotations

from pathlib import Path
from typing import Union

from .family import SetFamily, elements_of, mask_of


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


def parse_family(text: str) -> SetFamily:
    ground = None
    members: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ground"):
            key, sep, value = line.partition(":")
            if key.strip() != "ground" or not sep:
                raise ParseError(f"malformed header {line!r}", lineno)
            if ground is not None:
                raise ParseError("repeated ground header", lineno)
            if members:
                raise ParseError("ground header must precede members", lineno)
            try:
                ground = int(value.strip())
            except ValueError:
                raise ParseError(f"ground size {value.strip()!r} is not an integer", lineno) from None
            if ground < 0:
                raise ParseError("ground size must be non-negative", lineno)
            continue
        if line == "{}":
            members.append((lineno, []))
            continue
        elems = []
        for token in line.split():
            if not (token.isascii() and token.isdigit()):
                raise ParseError(f"{token!r} is not a positive integer", lineno)
            value = int(token)
            if value < 1:
                raise ParseError("elements start at 1", lineno)
            if elems and value <= elems[-1]:
                raise ParseError("elements must be strictly ascending", lineno)
            elems.append(value)
        members.append((lineno, elems))

    if ground is None:
        ground = max((e[-1] for _, e in members if e), default=0)
    seen: dict[int, int] = {}
    for lineno, elems in members:
        if elems and elems[-1] > ground:
            raise ParseError(f"element {elems[-1]} exceeds ground size {ground}", lineno)
        mask = mask_of(elems)
        if mask in seen:
            raise ParseError(f"duplicate member (first on line {seen[mask]})", lineno)
        seen[mask] = lineno
    return SetFamily(ground, seen)


def format_family(family: SetFamily) -> str:
    lines = [f"ground: {family.ground_size}"]
    for m in family.members:
        lines.append(" ".join(map(str, elements_of(m))) if m else "{}")
    return "\n".join(lines) + "\n"


def read_family(path: Union[str, Path]) -> SetFamily:
    return parse_family(Path(path).read_text(encoding="utf-8"))


def write_family(family: SetFamily, path: Union[str, Path]) -> None:
    Path(path).write_text(format_family(family), encoding="utf-8")
