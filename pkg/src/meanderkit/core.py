"""Canonical meander representation.

A meander of order n is a planar graph on vertices v_1..v_n determined by a
pair of compositions of n (the *top* and *bottom* block sizes).  Each block of
size k spanning positions p..p+k-1 contributes the nested arcs
(p+i, p+k-1-i) for 0 <= i < k//2, drawn above the vertex line for top blocks
and below it for bottom blocks.  Every vertex meets at most one top arc and
at most one bottom arc, so every connected component is a simple path or a
simple cycle, and the index of the meander is

    2 * (number of cycles) + (number of paths) - 1.

This module owns the textual format ``a1|a2|...|ak / b1|...|bm`` used by the
whole package and the definition-level index computation that every other
computation is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "Composition",
    "MeanderType",
    "MeanderGraph",
    "ComponentSummary",
    "MeanderError",
    "ParseError",
    "PreconditionError",
    "NotFrobeniusError",
    "ConsistencyError",
    "parse_type",
    "build_graph",
    "components",
    "index_naive",
]

# A composition is an ordered tuple of positive block sizes.  The empty tuple
# is the (top or bottom of the) empty meander.
Composition = tuple[int, ...]


class MeanderError(ValueError):
    """Base class for all meanderkit errors."""


class ParseError(MeanderError):
    """Malformed meander text, move text, or config input."""


class PreconditionError(MeanderError):
    """An operation was applied outside its domain."""


class NotFrobeniusError(PreconditionError):
    """Operation requires a Frobenius (index zero) meander."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class ConsistencyError(MeanderError):
    """Two routes that must agree did not; always a bug."""


def _check_composition(parts: Composition, side: str) -> None:
    for p in parts:
        if not isinstance(p, int) or p < 1:
            raise ParseError(f"{side} composition has a non-positive part: {parts}")


@dataclass(frozen=True)
class MeanderType:
    """A pair of compositions with equal sums; the identity of a meander."""

    top: Composition
    bottom: Composition

    def __post_init__(self) -> None:
        top = tuple(self.top)
        bottom = tuple(self.bottom)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)
        _check_composition(top, "top")
        _check_composition(bottom, "bottom")
        if sum(top) != sum(bottom):
            raise ParseError(
                f"top and bottom sums differ: {sum(top)} != {sum(bottom)}"
            )

    @property
    def n(self) -> int:
        return sum(self.top)

    def flip(self) -> "MeanderType":
        """The meander with top and bottom exchanged."""
        return MeanderType(self.bottom, self.top)

    def __str__(self) -> str:
        return format_type(self)


@dataclass(frozen=True)
class MeanderGraph:
    """Arc diagram of a meander.

    Stored as two partner arrays indexed 1..n (entry 0 is padding): the
    vertex each v is tied to by its top arc and by its bottom arc, 0 when
    there is none.
    """

    n: int
    top_partner: tuple[int, ...]
    bottom_partner: tuple[int, ...]

    def edges(self) -> set[tuple[int, int, str]]:
        """All arcs as (u, v, side) with u < v, side in {'top', 'bottom'}."""
        out: set[tuple[int, int, str]] = set()
        for v in range(1, self.n + 1):
            t = self.top_partner[v]
            if t > v:
                out.add((v, t, "top"))
            b = self.bottom_partner[v]
            if b > v:
                out.add((v, b, "bottom"))
        return out


@dataclass(frozen=True)
class ComponentSummary:
    cycles: int
    paths: int


def parse_type(text: str) -> MeanderType:
    """Parse ``comp "/" comp`` where ``comp := int ("|" int)*``.

    Whitespace around tokens is ignored.  Raises ParseError on malformed
    text, a zero or negative part, or a top/bottom sum mismatch.
    """
    if text.count("/") != 1:
        raise ParseError(f"expected exactly one '/': {text!r}")
    top_text, bottom_text = text.split("/")

    def comp(part_text: str, side: str) -> Composition:
        items = part_text.split("|")
        parts = []
        for item in items:
            item = item.strip()
            if not item.isdigit():
                raise ParseError(f"bad {side} part {item!r} in {text!r}")
            value = int(item)
            if value < 1:
                raise ParseError(f"zero part in {side} of {text!r}")
            parts.append(value)
        return tuple(parts)

    return MeanderType(comp(top_text, "top"), comp(bottom_text, "bottom"))


def format_type(m: MeanderType) -> str:
    return "|".join(map(str, m.top)) + "/" + "|".join(map(str, m.bottom))


# ---------------------------------------------------------------------------
# Graph construction and component analysis.  The private tuple-level
# functions are the hot path for exhaustive scans; the public operations
# wrap them in the domain types.
# ---------------------------------------------------------------------------


def _partners(top: Composition, bottom: Composition, n: int) -> tuple[list[int], list[int]]:
    tp = [0] * (n + 1)
    bp = [0] * (n + 1)
    pos = 1
    for k in top:
        last = pos + k - 1
        for d in range(k // 2):
            u = pos + d
            v = last - d
            tp[u] = v
            tp[v] = u
        pos += k
    pos = 1
    for k in bottom:
        last = pos + k - 1
        for d in range(k // 2):
            u = pos + d
            v = last - d
            bp[u] = v
            bp[v] = u
        pos += k
    return tp, bp


def _summary(top: Composition, bottom: Composition) -> tuple[int, int]:
    """(cycles, paths) of the realized arc diagram."""
    n = sum(top)
    tp, bp = _partners(top, bottom, n)
    seen = bytearray(n + 1)
    cycles = 0
    paths = 0
    for v0 in range(1, n + 1):
        if seen[v0]:
            continue
        seen[v0] = 1
        # Walk away from v0 in both directions; a component is a cycle
        # exactly when the walk returns to v0.
        is_cycle = False
        for start in (tp[v0], bp[v0]):
            if is_cycle or not start or seen[start]:
                continue
            prev = v0
            cur = start
            while True:
                seen[cur] = 1
                nxt = tp[cur] if tp[cur] != prev else bp[cur]
                if not nxt:
                    break
                if nxt == v0:
                    is_cycle = True
                    break
                prev, cur = cur, nxt
        if is_cycle:
            cycles += 1
        else:
            paths += 1
    return cycles, paths


def _index(top: Composition, bottom: Composition) -> int:
    cycles, paths = _summary(top, bottom)
    return 2 * cycles + paths - 1


def build_graph(m: MeanderType) -> MeanderGraph:
    """Arc diagram of m per the block construction."""
    tp, bp = _partners(m.top, m.bottom, m.n)
    return MeanderGraph(m.n, tuple(tp), tuple(bp))


def components(g: MeanderGraph) -> ComponentSummary:
    """Count connected components, classified as cycles or paths.

    A component is a cycle when every vertex in it has both arcs; anything
    else, including an isolated vertex, is a path.
    """
    seen = bytearray(g.n + 1)
    tp = g.top_partner
    bp = g.bottom_partner
    cycles = 0
    paths = 0
    for v0 in range(1, g.n + 1):
        if seen[v0]:
            continue
        seen[v0] = 1
        is_cycle = False
        for start in (tp[v0], bp[v0]):
            if is_cycle or not start or seen[start]:
                continue
            prev = v0
            cur = start
            while True:
                seen[cur] = 1
                nxt = tp[cur] if tp[cur] != prev else bp[cur]
                if not nxt:
                    break
                if nxt == v0:
                    is_cycle = True
                    break
                prev, cur = cur, nxt
        if is_cycle:
            cycles += 1
        else:
            paths += 1
    return ComponentSummary(cycles, paths)


def index_naive(m: MeanderType) -> int:
    """Definition-level index: 2*cycles + paths - 1.

    The empty meander is assigned index -1 by convention, consistent with
    the signature formula (sum of elimination parameters minus one).
    """
    if m.n == 0:
        return -1
    return _index(m.top, m.bottom)


def _compositions(n: int) -> list[Composition]:
    """All compositions of n in lexicographic order."""
    if n == 0:
        return [()]
    out: list[Composition] = []
    stack: list[int] = []

    def rec(rem: int) -> None:
        if rem == 0:
            out.append(tuple(stack))
            return
        for first in range(1, rem + 1):
            stack.append(first)
            rec(rem - first)
            stack.pop()

    rec(n)
    return out


def _iter_pairs(n: int) -> Iterator[tuple[Composition, Composition]]:
    comps = _compositions(n)
    for t in comps:
        for b in comps:
            yield t, b
