"""Winding-down reductions, signatures, and winding-up constructors.

Two deterministic reduction systems act on a non-empty meander with first
top block a1 and first bottom block b1:

* simplified moves  F0, C0(c), B0, R0, P0
* refined moves     F, C(c), B, R, IC(c), IB, IR, P

Shared cases (both alphabets):

    a1 < b1        Flip            exchange top and bottom
    a1 = b1        C(a1)           drop both first blocks (removes components)
    a1 = 2*b1      Block elim      top (b1, a2, ...),        bottom (b2, ...)
    b1 < a1 < 2b1  Rotation        top (b1, a2, ...),        bottom (2b1-a1, b2, ...)

For a1 > 2*b1 the simplified system always applies the pure contraction

    P0:  top (a1-2b1, b1, a2, ...), bottom (b2, ...)

while the refined system looks at the bottom block around the center of the
first top block (the point (a1+1)/2, kept exact by doubling coordinates):

    IC(c)  some bottom block B_i is centered exactly on the center of A1;
           remove B_i (c = b_i), top becomes a1 - b_i.  Like C, this is the
           only refined move that removes components.
    IB     a1 even and a bottom block B_i ends exactly at a1/2; remove B_i,
           top becomes a1 - b_i.
    IR     otherwise, with B_i the block containing the center: let r be the
           shortest distance from an end of B_i to the center and s = 2r+1;
           replace b_i by s and the top by a1 - b_i + s.
    P      when B_i pokes so far past A1 that the IR rewrite would not leave
           a positive first top block (a1 - b_i + s < 1), the pure
           contraction is applied instead.

Every move except a Flip strictly reduces the order, every move except a
component elimination (C, IC) preserves the component structure, and a Flip
is never applicable twice in a row, so the reduction reaches the empty
meander in finitely many steps.  The resulting move sequence is the
meander's signature; the index is the sum of the elimination parameters
minus one, and the multiset of those parameters is the plane homotopy type.

Each down-step has an exact inverse up-move (hatted, written with a ``~``
prefix: ``~C0(2) ~B0 ...``), so replaying a reversed signature from the
empty meander rebuilds the meander.  The up-moves double as free
constructors, which is how ``generate_frobenius`` manufactures index-zero
meanders of any size.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import (
    Composition,
    MeanderType,
    ParseError,
    PreconditionError,
    _compositions,
)

__all__ = [
    "Move",
    "UpMove",
    "RefinedStep",
    "HomotopySymbol",
    "PlaneHomotopyType",
    "WindUpError",
    "step_simplified",
    "signature_simplified",
    "step_refined",
    "step_refined_full",
    "signature_refined",
    "index_from_signature",
    "is_frobenius",
    "homotopy_type",
    "wind_up",
    "apply_up_move",
    "hat_reversed",
    "enumerate_meanders",
    "generate_frobenius",
    "signature_to_text",
    "parse_signature",
    "up_moves_to_text",
    "parse_up_moves",
]

SIMPLIFIED_TAGS = ("F0", "C0", "B0", "R0", "P0")
REFINED_TAGS = ("F", "C", "B", "R", "P", "IC", "IB", "IR")
_PARAMETRIC = {"C0", "C", "IC"}


@dataclass(frozen=True)
class Move:
    """One winding-down move; ``c`` is the elimination parameter."""

    tag: str
    c: int | None = None

    def __post_init__(self) -> None:
        if self.tag not in SIMPLIFIED_TAGS and self.tag not in REFINED_TAGS:
            raise ParseError(f"unknown move tag {self.tag!r}")
        if (self.c is not None) != (self.tag in _PARAMETRIC):
            raise ParseError(f"move {self.tag} parameter mismatch: {self.c!r}")
        if self.c is not None and self.c < 1:
            raise ParseError(f"move parameter must be positive: {self.c}")

    def __str__(self) -> str:
        return self.tag if self.c is None else f"{self.tag}({self.c})"


@dataclass(frozen=True)
class UpMove:
    """One winding-up move.

    ``c`` is the size parameter of ~C0/~C/~IC.  ``block`` is the 1-based
    bottom-block index targeted by ~IB (the block the new block is created
    in front of) and, optionally, by ~IR (the block to expand; when omitted
    it defaults to the block containing the center of the first top block).
    """

    tag: str
    c: int | None = None
    block: int | None = None

    def __str__(self) -> str:
        if self.c is not None:
            return f"{self.tag}({self.c})"
        if self.block is not None:
            return f"{self.tag}({self.block})"
        return self.tag


@dataclass(frozen=True)
class RefinedStep:
    move: Move
    result: MeanderType
    undo: UpMove


class WindUpError(PreconditionError):
    """An up-move's precondition failed; carries the 1-based step index."""

    def __init__(self, step: int, move: UpMove | None, reason: str):
        name = str(move) if move is not None else "?"
        super().__init__(f"step {step} ({name}): {reason}")
        self.step = step
        self.reason = reason


# ---------------------------------------------------------------------------
# Winding down
# ---------------------------------------------------------------------------


def _step_simplified_raw(
    top: Composition, bottom: Composition
) -> tuple[str, int | None, Composition, Composition]:
    a1 = top[0]
    b1 = bottom[0]
    if a1 < b1:
        return "F0", None, bottom, top
    if a1 == b1:
        return "C0", a1, top[1:], bottom[1:]
    if a1 == 2 * b1:
        return "B0", None, (b1,) + top[1:], bottom[1:]
    if a1 < 2 * b1:
        return "R0", None, (b1,) + top[1:], (2 * b1 - a1,) + bottom[1:]
    return "P0", None, (a1 - 2 * b1, b1) + top[1:], bottom[1:]


def step_simplified(m: MeanderType) -> tuple[Move, MeanderType]:
    """One simplified winding-down move; the case is forced by (a1, b1)."""
    if m.n == 0:
        raise PreconditionError("cannot wind down the empty meander")
    tag, c, nt, nb = _step_simplified_raw(m.top, m.bottom)
    return Move(tag, c), MeanderType(nt, nb)


def signature_simplified(m: MeanderType) -> list[Move]:
    """Reduce m to the empty meander; the unique simplified signature."""
    if m.n == 0:
        raise PreconditionError("the empty meander has the empty signature")
    top, bottom = m.top, m.bottom
    sig = []
    while top:
        tag, c, top, bottom = _step_simplified_raw(top, bottom)
        sig.append(Move(tag, c))
    return sig


def _block_spans(comp: Composition) -> list[tuple[int, int]]:
    spans = []
    pos = 1
    for k in comp:
        spans.append((pos, pos + k - 1))
        pos += k
    return spans


def _step_refined_raw(
    top: Composition, bottom: Composition
) -> tuple[str, int | None, Composition, Composition, tuple]:
    """Returns (tag, c, new_top, new_bottom, undo) at tuple level.

    undo encodes the inverting up-move as (tag, c, block).
    """
    a1 = top[0]
    b1 = bottom[0]
    if a1 < b1:
        return "F", None, bottom, top, ("~F", None, None)
    if a1 == b1:
        return "C", a1, top[1:], bottom[1:], ("~C", a1, None)
    if a1 == 2 * b1:
        return "B", None, (b1,) + top[1:], bottom[1:], ("~B", None, None)
    if a1 < 2 * b1:
        nt = (b1,) + top[1:]
        nb = (2 * b1 - a1,) + bottom[1:]
        return "R", None, nt, nb, ("~R", None, None)

    # a1 > 2*b1: locate the bottom block around the center of A1.
    # Doubled coordinates: vertex v sits at 2v, the center at c2 = a1 + 1.
    c2 = a1 + 1
    pos = 1
    i = 0
    p = q = 0
    found = False
    for k in bottom:
        p, q = pos, pos + k - 1
        if 2 * p <= c2 <= 2 * q:
            found = True
            break
        pos += k
        i += 1
    if not found:
        # a1 even and the center gap is a gap between bottom blocks:
        # remove the block ending at a1/2.
        half = a1 // 2
        pos = 1
        for i, k in enumerate(bottom):
            if pos + k - 1 == half:
                nt = (a1 - k,) + top[1:]
                nb = bottom[:i] + bottom[i + 1 :]
                # reinsert in front of the block that now has index i+1
                return "IB", None, nt, nb, ("~IB", None, i + 1)
            pos += k
        raise AssertionError("refined dispatch: no block at the center gap")

    bi = bottom[i]
    if p + q == a1 + 1:
        nt = (a1 - bi,) + top[1:]
        nb = bottom[:i] + bottom[i + 1 :]
        return "IC", bi, nt, nb, ("~IC", bi, None)
    r2 = min(abs(2 * p - c2), abs(2 * q - c2))
    s = r2 + 1
    delta = bi - s
    if a1 - delta < 1:
        # the center block extends too far past A1 for the rotation
        # rewrite; contract purely instead
        nt = (a1 - 2 * b1, b1) + top[1:]
        nb = bottom[1:]
        return "P", None, nt, nb, ("~P", None, None)
    nt = (a1 - delta,) + top[1:]
    nb = bottom[:i] + (s,) + bottom[i + 1 :]
    return "IR", None, nt, nb, ("~IR", None, i + 1)


def step_refined(m: MeanderType) -> tuple[Move, MeanderType]:
    """One refined winding-down move; see the module docstring for cases."""
    if m.n == 0:
        raise PreconditionError("cannot wind down the empty meander")
    tag, c, nt, nb, _ = _step_refined_raw(m.top, m.bottom)
    return Move(tag, c), MeanderType(nt, nb)


def step_refined_full(m: MeanderType) -> RefinedStep:
    """Like step_refined, also returning the exact inverting up-move."""
    if m.n == 0:
        raise PreconditionError("cannot wind down the empty meander")
    tag, c, nt, nb, (utag, uc, ublock) = _step_refined_raw(m.top, m.bottom)
    return RefinedStep(Move(tag, c), MeanderType(nt, nb), UpMove(utag, uc, ublock))


def signature_refined(m: MeanderType) -> list[Move]:
    """Reduce m to the empty meander over the refined alphabet."""
    if m.n == 0:
        raise PreconditionError("the empty meander has the empty signature")
    top, bottom = m.top, m.bottom
    sig = []
    while top:
        tag, c, top, bottom, _ = _step_refined_raw(top, bottom)
        sig.append(Move(tag, c))
    return sig


def index_from_signature(sig: Sequence[Move]) -> int:
    """Sum of all elimination parameters minus one; -1 for the empty list."""
    return sum(mv.c for mv in sig if mv.c is not None) - 1


def is_frobenius(sig: Sequence[Move]) -> bool:
    """True iff the only elimination move is the final one, with parameter 1."""
    if not sig:
        return False
    for mv in sig[:-1]:
        if mv.c is not None:
            return False
    return sig[-1].c == 1


# ---------------------------------------------------------------------------
# Plane homotopy type
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HomotopySymbol:
    """The compressed picture of one eliminated component.

    Eliminating a block pair of size c leaves c//2 nested circles plus a
    center point when c is odd.
    """

    c: int

    @property
    def nested_cycles(self) -> int:
        return self.c // 2

    @property
    def has_center_path(self) -> bool:
        return self.c % 2 == 1

    def __str__(self) -> str:
        return "(" + "o" * self.nested_cycles + ("." if self.has_center_path else "") + ")"


@dataclass(frozen=True)
class PlaneHomotopyType:
    """Multiset of symbols; stored sorted by descending parameter."""

    symbols: tuple[HomotopySymbol, ...]

    @classmethod
    def from_parameters(cls, params: Iterable[int]) -> "PlaneHomotopyType":
        return cls(tuple(HomotopySymbol(c) for c in sorted(params, reverse=True)))

    def parameters(self) -> tuple[int, ...]:
        return tuple(s.c for s in self.symbols)

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.symbols)


def homotopy_type(m: MeanderType) -> PlaneHomotopyType:
    """One symbol per component-elimination move of the simplified signature."""
    sig = signature_simplified(m)
    return PlaneHomotopyType.from_parameters(mv.c for mv in sig if mv.c is not None)


# ---------------------------------------------------------------------------
# Winding up
# ---------------------------------------------------------------------------


def _apply_up_raw(
    tag: str,
    c: int | None,
    block: int | None,
    top: Composition,
    bottom: Composition,
) -> tuple[Composition, Composition]:
    """Apply one up-move to (top, bottom); raises PreconditionError."""
    if tag in ("~C", "~C0"):
        if c is None or c < 1:
            raise PreconditionError("component creation needs a positive size")
        return (c,) + top, (c,) + bottom
    if tag in ("~F", "~F0"):
        if not top:
            raise PreconditionError("cannot flip the empty meander")
        return bottom, top
    if not top:
        raise PreconditionError("only component creation applies to the empty meander")
    a1 = top[0]
    b1 = bottom[0]
    if tag in ("~B", "~B0"):
        return (2 * a1,) + top[1:], (a1,) + bottom
    if tag in ("~R", "~R0"):
        if a1 <= b1:
            raise PreconditionError("rotation expansion requires a1 > b1")
        return (2 * a1 - b1,) + top[1:], (a1,) + bottom[1:]
    if tag in ("~P", "~P0"):
        if len(top) < 2:
            raise PreconditionError("pure creation requires at least two top blocks")
        return (top[0] + 2 * top[1],) + top[2:], (top[1],) + bottom
    if tag == "~IC":
        if c is None or c < 1:
            raise PreconditionError("~IC needs a positive size")
        if a1 % 2:
            raise PreconditionError("~IC requires an even first top block")
        half = a1 // 2
        pos = 1
        for j, k in enumerate(bottom):
            end = pos + k - 1
            if end == half:
                nb = bottom[: j + 1] + (c,) + bottom[j + 1 :]
                return (a1 + c,) + top[1:], nb
            if end > half:
                break
            pos += k
        raise PreconditionError(
            "~IC requires the vertex a1/2 to end a bottom block"
        )
    if tag == "~IB":
        if block is None:
            raise PreconditionError("~IB needs a target block index")
        if block < 2 or block > len(bottom):
            raise PreconditionError(f"~IB block index {block} out of range")
        k_start = 1 + sum(bottom[: block - 1])
        size = a1 - 2 * (k_start - 1)
        if size < 1:
            raise PreconditionError(
                f"~IB target block starts too far right (would create size {size})"
            )
        nb = bottom[: block - 1] + (size,) + bottom[block - 1 :]
        return (a1 + size,) + top[1:], nb
    if tag == "~IR":
        spans = _block_spans(bottom)
        if block is not None:
            if block < 1 or block > len(bottom):
                raise PreconditionError(f"~IR block index {block} out of range")
            j = block
        else:
            c2 = a1 + 1
            j = 0
            for jj, (p, q) in enumerate(spans, start=1):
                if 2 * p <= c2 <= 2 * q:
                    j = jj
                    break
            if not j:
                raise PreconditionError(
                    "~IR: no bottom block contains the center of the first top block"
                )
        p, _ = spans[j - 1]
        bj = bottom[j - 1]
        delta = a1 + 2 - 2 * p - bj
        if delta < 0:
            delta = -delta
        if delta == 0:
            raise PreconditionError("~IR: target block would be centered (use ~IC)")
        nt = (a1 + delta,) + top[1:]
        nb = bottom[: j - 1] + (bj + delta,) + bottom[j:]
        # the expansion is valid exactly when it inverts a refined IR step
        tag2, _, st, sb, undo = _step_refined_raw(nt, nb)
        if tag2 != "IR" or st != top or sb != bottom or undo[2] != j:
            raise PreconditionError(
                "~IR: expanding this block does not invert a rotation contraction"
            )
        return nt, nb
    raise PreconditionError(f"unknown up-move tag {tag!r}")


def apply_up_move(move: UpMove, m: MeanderType) -> MeanderType:
    """Apply one up-move to a meander (the empty meander is MeanderType((), ()))."""
    nt, nb = _apply_up_raw(move.tag, move.c, move.block, m.top, m.bottom)
    return MeanderType(nt, nb)


def wind_up(seq: Iterable[UpMove]) -> MeanderType:
    """Build a meander from the empty meander by a sequence of up-moves.

    The first move must be a component creation.  Each move's precondition
    is checked at application time; violations raise WindUpError carrying
    the 1-based step index.
    """
    top: Composition = ()
    bottom: Composition = ()
    step = 0
    for move in seq:
        step += 1
        if step == 1 and move.tag not in ("~C", "~C0"):
            raise WindUpError(step, move, "the first move must create a component")
        try:
            top, bottom = _apply_up_raw(move.tag, move.c, move.block, top, bottom)
        except PreconditionError as exc:
            raise WindUpError(step, move, str(exc)) from exc
    if step == 0:
        raise WindUpError(0, None, "empty up-move sequence")
    return MeanderType(top, bottom)


_HAT = {"F0": "~F0", "C0": "~C0", "B0": "~B0", "R0": "~R0", "P0": "~P0"}


def hat_reversed(sig: Sequence[Move]) -> list[UpMove]:
    """Reverse a simplified signature into the up-sequence that rebuilds it."""
    out = []
    for mv in reversed(sig):
        if mv.tag not in _HAT:
            raise PreconditionError(
                f"hat_reversed takes a simplified signature, got {mv.tag}"
            )
        out.append(UpMove(_HAT[mv.tag], mv.c))
    return out


# ---------------------------------------------------------------------------
# Enumeration and random construction
# ---------------------------------------------------------------------------


def enumerate_meanders(n: int) -> Iterator[MeanderType]:
    """All 4**(n-1) meanders of order n, lexicographic, top-major."""
    if n < 1:
        raise PreconditionError(f"order must be >= 1, got {n}")
    comps = _compositions(n)
    for top in comps:
        for bottom in comps:
            yield MeanderType(top, bottom)


_GENERATOR_TAGS = ("~F", "~B", "~R", "~IB", "~IR")


def _valid_up_moves(top: Composition, bottom: Composition) -> list[UpMove]:
    """All Frobenius-preserving up-moves applicable to (top, bottom)."""
    a1 = top[0]
    out = [UpMove("~F"), UpMove("~B")]
    if a1 > bottom[0]:
        out.append(UpMove("~R"))
    for b in range(2, len(bottom) + 1):
        k_start = 1 + sum(bottom[: b - 1])
        if a1 - 2 * (k_start - 1) >= 1:
            out.append(UpMove("~IB", block=b))
    for j in range(1, len(bottom) + 1):
        try:
            _apply_up_raw("~IR", None, j, top, bottom)
        except PreconditionError:
            continue
        out.append(UpMove("~IR", block=j))
    return out


def generate_frobenius(moves: int, seed: int) -> MeanderType:
    """Random Frobenius meander: ~C(1) followed by `moves` random up-moves.

    Draws uniformly from the applicable Frobenius-preserving moves
    (flip, block/rotation expansion, and the internal creations with every
    valid target block).  Deterministic for a given seed.
    """
    if moves < 0:
        raise PreconditionError("moves must be >= 0")
    rng = random.Random(seed)
    top: Composition = (1,)
    bottom: Composition = (1,)
    for _ in range(moves):
        choice = rng.choice(_valid_up_moves(top, bottom))
        top, bottom = _apply_up_raw(choice.tag, choice.c, choice.block, top, bottom)
    return MeanderType(top, bottom)


# ---------------------------------------------------------------------------
# Textual form (the golden-test format)
# ---------------------------------------------------------------------------

_MOVE_RE = re.compile(r"^(~?[A-Z]+0?)(?:\((\d+)\))?$")


def signature_to_text(sig: Sequence[Move]) -> str:
    return " ".join(str(mv) for mv in sig)


def parse_signature(text: str) -> list[Move]:
    out = []
    for token in text.split():
        m = _MOVE_RE.match(token)
        if not m or m.group(1).startswith("~"):
            raise ParseError(f"bad move token {token!r}")
        tag, param = m.group(1), m.group(2)
        out.append(Move(tag, int(param) if param else None))
    return out


def up_moves_to_text(seq: Sequence[UpMove]) -> str:
    return " ".join(str(mv) for mv in seq)


_UP_TAGS = frozenset(
    ["~F", "~C", "~B", "~R", "~P", "~IC", "~IB", "~IR", "~F0", "~C0", "~B0", "~R0", "~P0"]
)


def parse_up_moves(text: str) -> list[UpMove]:
    out = []
    for token in text.split():
        m = _MOVE_RE.match(token)
        if not m or not m.group(1).startswith("~"):
            raise ParseError(f"bad up-move token {token!r}")
        tag, param = m.group(1), m.group(2)
        if tag not in _UP_TAGS:
            raise ParseError(f"unknown up-move {tag!r}")
        if tag in ("~C", "~C0", "~IC"):
            if param is None:
                raise ParseError(f"{tag} needs a size parameter: {token!r}")
            out.append(UpMove(tag, c=int(param)))
        elif tag == "~IB":
            if param is None:
                raise ParseError(f"{tag} needs a block index: {token!r}")
            out.append(UpMove(tag, block=int(param)))
        elif tag == "~IR":
            out.append(UpMove(tag, block=int(param) if param else None))
        elif param is not None:
            raise ParseError(f"up-move {tag} takes no parameter: {token!r}")
        else:
            out.append(UpMove(tag))
    return out
