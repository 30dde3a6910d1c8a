"""Desk-scale empirical scans.

Three batteries back the open questions around gcd classification and
spectrum shape:

* search_gcd_conditions: exhausts coefficient pairs (alpha, beta) with
  entries bounded by max_coef, looking for a single relatively-prime
  condition gcd(alpha . sizes, beta . sizes) = 1 that separates five-block
  Frobenius meanders from non-Frobenius ones.  Expected outcome at desk
  scale: no survivor.
* scan_unimodality: collects Frobenius spectra whose dimension sequences
  fail (strict) unimodality.  These scans back unproven conjectures, so
  counterexamples are reported, not raised.
* scan_block_measures: checks that the per-block measure multisets of every
  Frobenius meander are symmetric about one half and unbroken.  This one is
  a proven fact, so a counterexample is a bug in this package.

All scans are exhaustive over their stated range and produce reports that
are reproducible bit for bit given the same parameters (wall-clock time is
carried separately and excluded from comparisons).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import product
from math import gcd

from .core import MeanderType, ParseError, PreconditionError, _compositions, _index
from .spectrum import _block_measures_raw, _spectrum_raw, classify

__all__ = [
    "GcdCondition",
    "ScanReport",
    "five_block_meanders",
    "search_gcd_conditions",
    "scan_unimodality",
    "scan_block_measures",
    "load_config",
]


@dataclass(frozen=True)
class GcdCondition:
    """A candidate classifier gcd(alpha . s, beta . s) = 1 on block sizes s."""

    alpha: tuple[int, int, int, int, int]
    beta: tuple[int, int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.alpha) != 5 or len(self.beta) != 5:
            raise PreconditionError("coefficient vectors must have 5 entries")
        if not any(self.alpha) and not any(self.beta):
            raise PreconditionError("coefficient vectors cannot both be zero")

    def holds(self, sizes: tuple[int, ...]) -> bool:
        x = sum(a * s for a, s in zip(self.alpha, sizes))
        y = sum(b * s for b, s in zip(self.beta, sizes))
        return gcd(abs(x), abs(y)) == 1


@dataclass(frozen=True)
class ScanReport:
    """Outcome of one scan; `payload()` is the reproducible part."""

    kind: str
    parameters: dict
    survivors: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    checked: int = 0
    elapsed: float = 0.0

    def payload(self) -> dict:
        return {
            "kind": self.kind,
            "parameters": self.parameters,
            "survivors": self.survivors,
            "counterexamples": self.counterexamples,
            "checked": self.checked,
        }

    def to_json(self) -> str:
        data = dict(self.payload())
        data["elapsed_seconds"] = round(self.elapsed, 3)
        return json.dumps(data, sort_keys=True)


def five_block_meanders(n_max: int) -> tuple[list[MeanderType], list[MeanderType]]:
    """(frobenius, non_frobenius) meanders with exactly five blocks, order <= n_max."""
    frob: list[MeanderType] = []
    nonfrob: list[MeanderType] = []
    for n in range(1, n_max + 1):
        by_len: dict[int, list] = {}
        for comp in _compositions(n):
            by_len.setdefault(len(comp), []).append(comp)
        for top_len in range(1, 5):
            bottom_len = 5 - top_len
            for top in by_len.get(top_len, ()):
                for bottom in by_len.get(bottom_len, ()):
                    m = MeanderType(top, bottom)
                    (frob if _index(top, bottom) == 0 else nonfrob).append(m)
    return frob, nonfrob


def _size_vectors(meanders: list[MeanderType]) -> list[tuple[int, ...]]:
    """Distinct block-size vectors, top blocks then bottom blocks."""
    return sorted({m.top + m.bottom for m in meanders})


def _canonical_vectors(max_coef: int) -> list[tuple[int, ...]]:
    """Coefficient vectors with first nonzero entry positive, plus zero."""
    out = []
    for vec in product(range(-max_coef, max_coef + 1), repeat=5):
        first = next((x for x in vec if x), 0)
        if first >= 0:
            out.append(vec)
    return out


def _scan_slice(
    args: tuple[list[tuple[int, ...]], int, int, list[tuple[int, ...]], list[tuple[int, ...]]],
) -> tuple[list[dict], int]:
    """Worker over a disjoint slice of first-vector indices."""
    vectors, lo, hi, frob_vecs, non_vecs = args
    survivors: list[dict] = []
    checked = 0
    for ai in range(lo, hi):
        alpha = vectors[ai]
        for bi in range(ai, len(vectors)):
            beta = vectors[bi]
            if not any(alpha) and not any(beta):
                continue
            checked += 1
            ok = True
            for s in frob_vecs:
                x = (
                    alpha[0] * s[0] + alpha[1] * s[1] + alpha[2] * s[2]
                    + alpha[3] * s[3] + alpha[4] * s[4]
                )
                y = (
                    beta[0] * s[0] + beta[1] * s[1] + beta[2] * s[2]
                    + beta[3] * s[3] + beta[4] * s[4]
                )
                if gcd(x if x >= 0 else -x, y if y >= 0 else -y) != 1:
                    ok = False
                    break
            if not ok:
                continue
            for s in non_vecs:
                x = (
                    alpha[0] * s[0] + alpha[1] * s[1] + alpha[2] * s[2]
                    + alpha[3] * s[3] + alpha[4] * s[4]
                )
                y = (
                    beta[0] * s[0] + beta[1] * s[1] + beta[2] * s[2]
                    + beta[3] * s[3] + beta[4] * s[4]
                )
                if gcd(x if x >= 0 else -x, y if y >= 0 else -y) == 1:
                    ok = False
                    break
            if ok:
                survivors.append({"alpha": list(alpha), "beta": list(beta)})
    return survivors, checked


def search_gcd_conditions(
    max_coef: int,
    sample: list[MeanderType],
    non_sample: list[MeanderType],
    seed: int = 0,
    sample_size: int | None = None,
    workers: int = 1,
) -> ScanReport:
    """Exhaust all bounded coefficient pairs against the two sample sets.

    A condition survives when it evaluates to gcd 1 on every Frobenius
    sample and to gcd != 1 on every non-Frobenius sample.  Sign flips of a
    whole vector and swapping the two vectors do not change the condition,
    so only canonical representatives are enumerated.  When sample_size is
    given, each sample list is reduced to a seeded random subsample.
    Workers split the first-vector index range; the merged result does not
    depend on the worker count.
    """
    if max_coef < 1:
        raise PreconditionError("max_coef must be >= 1")
    if not sample or not non_sample:
        raise PreconditionError("both sample sets must be nonempty")
    for m in sample + non_sample:
        if len(m.top) + len(m.bottom) != 5:
            raise PreconditionError(f"not a five-block meander: {m}")
    for m in sample:
        if _index(m.top, m.bottom) != 0:
            raise PreconditionError(f"sample meander is not Frobenius: {m}")
    for m in non_sample:
        if _index(m.top, m.bottom) == 0:
            raise PreconditionError(f"non-sample meander is Frobenius: {m}")

    t0 = time.monotonic()
    if sample_size is not None:
        rng = random.Random(seed)
        sample = rng.sample(sample, min(sample_size, len(sample)))
        non_sample = rng.sample(non_sample, min(sample_size, len(non_sample)))
    frob_vecs = _size_vectors(sample)
    non_vecs = _size_vectors(non_sample)
    vectors = _canonical_vectors(max_coef)
    if workers > 1:
        from multiprocessing import Pool

        bounds = [
            (len(vectors) * w // workers, len(vectors) * (w + 1) // workers)
            for w in range(workers)
        ]
        with Pool(workers) as pool:
            parts = pool.map(
                _scan_slice,
                [(vectors, lo, hi, frob_vecs, non_vecs) for lo, hi in bounds],
            )
        survivors = [s for part, _ in parts for s in part]
        checked = sum(c for _, c in parts)
    else:
        survivors, checked = _scan_slice((vectors, 0, len(vectors), frob_vecs, non_vecs))
    survivors.sort(key=lambda d: (d["alpha"], d["beta"]))
    return ScanReport(
        kind="gcd-conditions",
        parameters={
            "max_coef": max_coef,
            "frobenius_samples": len(sample),
            "non_frobenius_samples": len(non_sample),
            "distinct_frobenius_vectors": len(frob_vecs),
            "distinct_non_frobenius_vectors": len(non_vecs),
            "seed": seed,
            "sample_size": sample_size,
        },
        survivors=survivors,
        checked=checked,
        elapsed=time.monotonic() - t0,
    )


def scan_unimodality(n_max: int) -> ScanReport:
    """Spectra of all Frobenius meanders with order <= n_max, shape-checked.

    Counterexamples to unimodality or strict unimodality are collected in
    the report; symmetry or unbrokenness failures are impossible for correct
    code and therefore raise.
    """
    if n_max < 1:
        raise PreconditionError("n_max must be >= 1")
    t0 = time.monotonic()
    counterexamples = []
    checked = 0
    for n in range(1, n_max + 1):
        comps = _compositions(n)
        for top in comps:
            for bottom in comps:
                if _index(top, bottom) != 0:
                    continue
                checked += 1
                dims = _spectrum_raw(top, bottom)
                flags = classify(dims)
                if not (flags.symmetric and flags.unbroken):
                    raise AssertionError(
                        f"symmetric/unbroken violated at {top}/{bottom}: {dims}"
                    )
                if not (flags.unimodal and flags.strictly_unimodal):
                    counterexamples.append(
                        {
                            "meander": str(MeanderType(top, bottom)),
                            "spectrum": {str(e): d for e, d in sorted(dims.items())},
                            "unimodal": flags.unimodal,
                            "strictly_unimodal": flags.strictly_unimodal,
                        }
                    )
    return ScanReport(
        kind="unimodality",
        parameters={"n_max": n_max},
        counterexamples=counterexamples,
        checked=checked,
        elapsed=time.monotonic() - t0,
    )


def scan_block_measures(n_max: int) -> ScanReport:
    """Per-block measures of all Frobenius meanders with order <= n_max.

    Each block's multiset must be unbroken and symmetric about one half.
    This is a proven fact; the report is expected empty and the caller may
    treat any counterexample as fatal.
    """
    if n_max < 1:
        raise PreconditionError("n_max must be >= 1")
    t0 = time.monotonic()
    counterexamples = []
    checked = 0
    for n in range(1, n_max + 1):
        comps = _compositions(n)
        for top in comps:
            for bottom in comps:
                if _index(top, bottom) != 0:
                    continue
                checked += 1
                for side, comp in (("top", top), ("bottom", bottom)):
                    for k in range(1, len(comp) + 1):
                        ms = _block_measures_raw(top, bottom, side, k)
                        if not ms:
                            continue
                        lo, hi = ms[0], ms[-1]
                        counts: dict[int, int] = {}
                        for e in ms:
                            counts[e] = counts.get(e, 0) + 1
                        symmetric = hi == 1 - lo and all(
                            counts.get(e, 0) == counts.get(1 - e, 0)
                            for e in range(lo, hi + 1)
                        )
                        unbroken = all(e in counts for e in range(lo, hi + 1))
                        if not (symmetric and unbroken):
                            counterexamples.append(
                                {
                                    "meander": str(MeanderType(top, bottom)),
                                    "side": side,
                                    "block": k,
                                    "measures": list(ms),
                                }
                            )
    return ScanReport(
        kind="block-measures",
        parameters={"n_max": n_max},
        counterexamples=counterexamples,
        checked=checked,
        elapsed=time.monotonic() - t0,
    )


_CONFIG_KEYS = {"max_coef": int, "n_max": int, "sample_size": int, "seed": int}


def load_config(text: str) -> dict:
    """Parse `key = value` lines; '#' starts a comment, blank lines ignored."""
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"config line {lineno}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _CONFIG_KEYS:
            raise ParseError(f"config line {lineno}: unknown key {key!r}")
        try:
            out[key] = _CONFIG_KEYS[key](value)
        except ValueError as exc:
            raise ParseError(f"config line {lineno}: bad value {value!r}") from exc
    return out
