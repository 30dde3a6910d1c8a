"""Eigenvalues of a Frobenius meander, computed graph-theoretically.

Orient every top arc leftward (toward the smaller vertex) and every bottom
arc rightward.  The *measure* of an ordered vertex pair in a common path
component is the number of forward arcs minus the number of backward arcs
met when walking from the first vertex to the second.

A pair (i, j) is *admissible* when i < j and both lie in the same bottom
block, or i >= j and both lie in the same top block (so each diagonal pair
is counted once, through its top block).  The admissible pairs number
(sum a_k^2 + sum b_k^2) / 2, the dimension of the matching seaweed
subalgebra of gl(n).

For a Frobenius meander (a single path, so every measure is defined) the
multiset of measures over all admissible pairs, with the multiplicity of 0
reduced by one, is the spectrum of the adjoint of the principal element of
the corresponding seaweed subalgebra of sl(n).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Composition,
    MeanderType,
    NotFrobeniusError,
    PreconditionError,
    _index,
    _partners,
)

__all__ = [
    "Spectrum",
    "SpectrumFlags",
    "admissible_pairs",
    "measure",
    "spectrum",
    "classify",
    "block_measures",
    "spectrum_to_json",
]

# eigenvalue -> dimension of its eigenspace
Spectrum = dict[int, int]


@dataclass(frozen=True)
class SpectrumFlags:
    symmetric: bool
    unbroken: bool
    unimodal: bool
    strictly_unimodal: bool


def _block_spans(comp: Composition) -> list[tuple[int, int]]:
    spans = []
    pos = 1
    for k in comp:
        spans.append((pos, pos + k - 1))
        pos += k
    return spans


def admissible_pairs(m: MeanderType) -> list[tuple[int, int]]:
    """All admissible pairs, top-block pairs (i >= j) then bottom (i < j)."""
    out = []
    for p, q in _block_spans(m.top):
        for i in range(p, q + 1):
            for j in range(p, i + 1):
                out.append((i, j))
    for p, q in _block_spans(m.bottom):
        for i in range(p, q + 1):
            for j in range(i + 1, q + 1):
                out.append((i, j))
    return out


def _potentials(top: Composition, bottom: Composition) -> tuple[list[int | None], list[int]]:
    """Per-vertex potential phi with phi(head) = phi(tail) + 1 along each arc.

    Returns (phi, cycle_mark) where phi[v] is the potential within v's
    component (each path component is normalized from one of its ends) and
    cycle_mark[v] flags vertices on cycle components, where no potential is
    assigned.
    """
    n = sum(top)
    tp, bp = _partners(top, bottom, n)
    phi: list[int | None] = [None] * (n + 1)
    on_cycle = [0] * (n + 1)
    seen = bytearray(n + 1)
    for v0 in range(1, n + 1):
        if seen[v0]:
            continue
        # find an end of the component, or detect a cycle
        prev, cur = 0, v0
        steps = 0
        start = v0
        while True:
            nxt = tp[cur] if tp[cur] != prev else bp[cur]
            if not nxt:
                start = cur
                break
            if nxt == v0 and prev != 0:
                start = -1  # cycle
                break
            prev, cur = cur, nxt
            steps += 1
            if steps > n:
                start = -1
                break
        if start == -1:
            prev, cur = 0, v0
            while not seen[cur]:
                seen[cur] = 1
                on_cycle[cur] = 1
                nxt = tp[cur] if tp[cur] != prev else bp[cur]
                prev, cur = cur, nxt
            continue
        phi[start] = 0
        seen[start] = 1
        prev, cur = 0, start
        while True:
            t, b = tp[cur], bp[cur]
            if t and t != prev and not seen[t]:
                # top arcs point leftward
                phi[t] = phi[cur] + (1 if t < cur else -1)
                nxt = t
            elif b and b != prev and not seen[b]:
                # bottom arcs point rightward
                phi[b] = phi[cur] + (1 if b > cur else -1)
                nxt = b
            else:
                break
            seen[nxt] = 1
            prev, cur = cur, nxt
    return phi, on_cycle


def measure(m: MeanderType, i: int, j: int) -> int:
    """Forward minus backward arcs along the unique path from v_i to v_j.

    Raises PreconditionError when the vertices live in different components
    or their component is a cycle (no unique route).
    """
    n = m.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise PreconditionError(f"vertex out of range 1..{n}: ({i}, {j})")
    phi, on_cycle = _potentials(m.top, m.bottom)
    if on_cycle[i] or on_cycle[j]:
        raise PreconditionError("measure undefined on a cycle component")
    if i != j and not _same_component(m, i, j):
        raise PreconditionError(f"v{i} and v{j} lie in different components")
    return phi[j] - phi[i]  # type: ignore[operator]


def _same_component(m: MeanderType, i: int, j: int) -> bool:
    tp, bp = _partners(m.top, m.bottom, m.n)
    for start in (tp[i], bp[i]):
        prev, cur = i, start
        while cur:
            if cur == j:
                return True
            nxt = tp[cur] if tp[cur] != prev else bp[cur]
            prev, cur = cur, nxt
    return False


def _spectrum_raw(top: Composition, bottom: Composition) -> Spectrum:
    """Spectrum of a known-Frobenius meander at tuple level (no checks)."""
    phi, _ = _potentials(top, bottom)
    dims: Spectrum = {}
    get = dims.get
    pos = 1
    for k in top:
        q = pos + k
        for i in range(pos, q):
            fi = phi[i]
            for j in range(pos, i + 1):
                e = phi[j] - fi
                dims[e] = get(e, 0) + 1
        pos = q
    pos = 1
    for k in bottom:
        q = pos + k
        for i in range(pos, q):
            fi = phi[i]
            for j in range(i + 1, q):
                e = phi[j] - fi
                dims[e] = get(e, 0) + 1
        pos = q
    dims[0] -= 1
    if dims[0] == 0:
        del dims[0]
    return dims


def spectrum(m: MeanderType) -> Spectrum:
    """Measure multiset over admissible pairs, 0-multiplicity reduced by one.

    Defined only for Frobenius meanders; anything else raises
    NotFrobeniusError.
    """
    if m.n == 0:
        raise PreconditionError("spectrum of the empty meander is undefined")
    ix = _index(m.top, m.bottom)
    if ix != 0:
        raise NotFrobeniusError(f"not Frobenius (index {ix})", ix)
    return _spectrum_raw(m.top, m.bottom)


def classify(s: Spectrum) -> SpectrumFlags:
    """Shape flags of a spectrum.

    symmetric: the range is -a..a+1 and dim(e) == dim(1-e) throughout.
    unbroken: the eigenvalues form a contiguous integer interval.
    unimodal: dimensions never decrease up to 0 and never increase from 1.
    strictly_unimodal: strict versions, the 0/1 pair exempt.

    The empty spectrum satisfies all four vacuously.
    """
    if not s:
        return SpectrumFlags(True, True, True, True)
    lo = min(s)
    hi = max(s)
    d = s.get
    unbroken = all(e in s for e in range(lo, hi + 1))
    symmetric = hi == 1 - lo and all(d(e, 0) == d(1 - e, 0) for e in range(lo, hi + 1))
    unimodal = all(d(e, 0) <= d(e + 1, 0) for e in range(lo, 0)) and all(
        d(e, 0) >= d(e + 1, 0) for e in range(1, hi)
    )
    strictly = all(d(e, 0) < d(e + 1, 0) for e in range(lo, 0)) and all(
        d(e, 0) > d(e + 1, 0) for e in range(1, hi)
    )
    return SpectrumFlags(symmetric, unbroken, unimodal, strictly)


def _block_measures_raw(
    top: Composition, bottom: Composition, side: str, k: int
) -> tuple[int, ...]:
    comp = top if side == "top" else bottom
    if not (1 <= k <= len(comp)):
        raise PreconditionError(f"no {side} block {k}")
    phi, _ = _potentials(top, bottom)
    p, q = _block_spans(comp)[k - 1]
    out = [0] * ((q - p + 1) // 2)
    for i in range(p, q + 1):
        fi = phi[i]
        rng = range(p, i) if side == "top" else range(i + 1, q + 1)
        for j in rng:
            out.append(phi[j] - fi)
    return tuple(sorted(out))


def block_measures(m: MeanderType, side: str, k: int) -> tuple[int, ...]:
    """Measures contributed inside one block of a Frobenius meander.

    Strict pairs are taken right-to-left in top blocks and left-to-right in
    bottom blocks, and 0 is included with multiplicity floor(size/2) for the
    diagonal pairs the block accounts for.  Sorted ascending.
    """
    if side not in ("top", "bottom"):
        raise PreconditionError(f"side must be 'top' or 'bottom', got {side!r}")
    ix = _index(m.top, m.bottom)
    if ix != 0:
        raise NotFrobeniusError(f"not Frobenius (index {ix})", ix)
    return _block_measures_raw(m.top, m.bottom, side, k)


def spectrum_to_json(s: Spectrum) -> dict:
    """The documented JSON shape: sorted eigenvalues plus the shape flags."""
    flags = classify(s)
    return {
        "eigenvalues": [{"e": e, "dim": s[e]} for e in sorted(s)],
        "symmetric": flags.symmetric,
        "unbroken": flags.unbroken,
        "unimodal": flags.unimodal,
        "strictly_unimodal": flags.strictly_unimodal,
    }
