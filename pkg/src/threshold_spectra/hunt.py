"""Exhaustive search over all connected threshold graphs of a fixed order.

Every sequence gets an exact energy enclosure; sequences whose enclosures
overlap (transitively) are grouped into classes with a union-find pass over
the intervals sorted by lower endpoint.  Classes holding two members with
different exact characteristic polynomials are reported as noncospectral
equienergetic candidates: the distinct-spectrum half of the claim is exact,
the equal-energy half is certified to the working precision, and where the
nontrivial factors differ only by integer linear terms it is upgraded to an
exact equality via the shared-factor bookkeeping.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import get_context
from typing import Optional, Union

from .families import exact_energy_equal
from .intpoly import Poly, mul, mul_xk, poly_pow
from .sequences import Bits, nth_connected, to_blocks
from .spectra import _energy_from_parts, _nontrivial_parts

Rational = Union[int, Fraction]

JOBS_ENV_VAR = "THRESHOLD_SPECTRA_JOBS"
DEFAULT_MAX_ORDER = 24


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by rank."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1


@dataclass(frozen=True)
class EnergyClass:
    """Sequences whose energy enclosures overlap transitively."""

    energy_lo: Fraction
    energy_hi: Fraction
    members: tuple[tuple[Bits, Poly], ...]

    @property
    def char_polys(self) -> set[Poly]:
        return {poly for _, poly in self.members}


@dataclass(frozen=True)
class HuntResult:
    n: int
    classes: tuple[EnergyClass, ...]
    borderenergetic: tuple[Bits, ...]
    stats: dict


@dataclass(frozen=True)
class _ScanRecord:
    bits: Bits
    poly: Poly
    lo: Fraction
    hi: Fraction


def _resolve_jobs(processes: Optional[int]) -> int:
    if processes is not None:
        return max(1, processes)
    env = os.environ.get(JOBS_ENV_VAR)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _check_order(n: int, allow_large: bool) -> None:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n > DEFAULT_MAX_ORDER and not allow_large:
        raise ValueError(
            f"n = {n} exceeds the default guard of {DEFAULT_MAX_ORDER}; "
            "pass allow_large=True to override"
        )


def _scan_range(args: tuple[int, int, int, Fraction]) -> list[tuple[int, Poly, Fraction, Fraction]]:
    """Energies for one contiguous slice of the enumeration (worker-safe)."""
    n, start, stop, precision = args
    cache: dict[Poly, tuple[Fraction, Fraction]] = {}
    out = []
    for idx in range(start, stop):
        bits = nth_connected(n, idx)
        blocks = to_blocks(bits)
        m0, m1, rest = _nontrivial_parts(blocks)
        cached = cache.get(rest)
        if cached is None:
            lo, hi, _ = _energy_from_parts(0, rest, precision)
            cache[rest] = (lo, hi)
        else:
            lo, hi = cached
        full = mul_xk(mul(rest, poly_pow((1, 1), m1)), m0)
        out.append((idx, full, lo + m1, hi + m1))
    return out


def _scan(n: int, precision: Fraction, processes: Optional[int],
          allow_large: bool) -> list[_ScanRecord]:
    _check_order(n, allow_large)
    total = 1 << (n - 2)
    jobs = _resolve_jobs(processes)
    if jobs <= 1 or total < 64:
        raw = _scan_range((n, 0, total, precision))
    else:
        step = -(-total // jobs)
        chunks = [(n, k, min(k + step, total), precision)
                  for k in range(0, total, step)]
        with get_context("fork").Pool(jobs) as pool:
            parts = pool.map(_scan_range, chunks)
        raw = [item for part in parts for item in part]
        raw.sort(key=lambda rec: rec[0])
    return [_ScanRecord(nth_connected(n, idx), poly, lo, hi)
            for idx, poly, lo, hi in raw]


def _group(records: list[_ScanRecord]) -> list[EnergyClass]:
    order = sorted(range(len(records)),
                   key=lambda k: (records[k].lo, records[k].hi, records[k].bits))
    uf = UnionFind(len(records))
    prev = -1
    reach = Fraction(0)
    for k in order:
        rec = records[k]
        if prev >= 0 and rec.lo <= reach:
            uf.union(prev, k)
            reach = max(reach, rec.hi)
        else:
            reach = rec.hi
        prev = k
    buckets: dict[int, list[int]] = {}
    for k in range(len(records)):
        buckets.setdefault(uf.find(k), []).append(k)
    classes = []
    for indices in buckets.values():
        members = tuple(sorted((records[k].bits, records[k].poly)
                               for k in indices))
        lo = min(records[k].lo for k in indices)
        hi = max(records[k].hi for k in indices)
        classes.append(EnergyClass(energy_lo=lo, energy_hi=hi, members=members))
    classes.sort(key=lambda c: (c.energy_lo, c.energy_hi, c.members[0][0]))
    return classes


@dataclass(frozen=True)
class SequenceRecord:
    """Per-sequence scan output: exact char poly and energy enclosure."""

    bits: Bits
    char_poly: Poly
    energy_lo: Fraction
    energy_hi: Fraction


def full_scan(n: int, precision: Rational, processes: Optional[int] = None,
              allow_large: bool = False) -> tuple[list[SequenceRecord],
                                                  list[EnergyClass],
                                                  HuntResult]:
    """One full scan: per-sequence records, the complete energy partition,
    and the filtered hunt result."""
    prec = Fraction(precision)
    if prec <= 0:
        raise ValueError(f"precision must be positive, got {precision}")
    started = time.perf_counter()
    records = _scan(n, prec, processes, allow_large)
    classes = _group(records)
    interesting = tuple(c for c in classes if len(c.char_polys) >= 2)
    target = Fraction(2 * n - 2)
    complete = (0,) + (1,) * (n - 1)
    border = tuple(rec.bits for rec in records
                   if rec.lo <= target <= rec.hi and rec.bits != complete)
    exact_pairs = 0
    for cls in interesting:
        seqs = [bits for bits, _ in cls.members]
        for a in range(len(seqs)):
            for b in range(a + 1, len(seqs)):
                if cls.members[a][1] != cls.members[b][1]:
                    if exact_energy_equal(to_blocks(seqs[a]), to_blocks(seqs[b])):
                        exact_pairs += 1
    stats = {
        "graphs": len(records),
        "distinct_char_polys": len({rec.poly for rec in records}),
        "classes_total": len(classes),
        "equienergetic_classes": len(interesting),
        "noncospectral_pairs_exactly_equal": exact_pairs,
        "borderenergetic_candidates": len(border),
        "elapsed_seconds": round(time.perf_counter() - started, 3),
    }
    result = HuntResult(n=n, classes=interesting, borderenergetic=border,
                        stats=stats)
    out = [SequenceRecord(rec.bits, rec.poly, rec.lo, rec.hi)
           for rec in records]
    return out, classes, result


def classify_and_find(n: int, precision: Rational, processes: Optional[int] = None,
                      allow_large: bool = False) -> tuple[list[EnergyClass], HuntResult]:
    """The complete energy partition plus the filtered hunt result."""
    _, classes, result = full_scan(n, precision, processes, allow_large)
    return classes, result


def classify_by_energy(n: int, precision: Rational, processes: Optional[int] = None,
                       allow_large: bool = False) -> list[EnergyClass]:
    """Partition all connected sequences of order n by overlapping energy."""
    classes, _ = classify_and_find(n, precision, processes, allow_large)
    return classes


def find_equienergetic_pairs(n: int, precision: Rational,
                             processes: Optional[int] = None,
                             allow_large: bool = False) -> HuntResult:
    """Classes containing at least two noncospectral members.

    Membership means energy-equal within the working precision; spectra
    are compared exactly.
    """
    _, result = classify_and_find(n, precision, processes, allow_large)
    return result


def find_borderenergetic(n: int, precision: Rational,
                         processes: Optional[int] = None,
                         allow_large: bool = False) -> list[Bits]:
    """Sequences whose energy enclosure contains 2n - 2, except the complete
    graph itself.  Containment is necessary, not sufficient: candidates."""
    _, result = classify_and_find(n, precision, processes, allow_large)
    return list(result.borderenergetic)


__all__ = [
    "EnergyClass",
    "HuntResult",
    "SequenceRecord",
    "UnionFind",
    "classify_and_find",
    "classify_by_energy",
    "find_borderenergetic",
    "find_equienergetic_pairs",
    "full_scan",
]
