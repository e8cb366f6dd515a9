"""Spectral invariants of threshold graphs straight from the block form.

The multiplicities of the eigenvalues 0 and -1 are read off the block
counts.  The remaining spectrum comes from a degree-B companion factor
built out of parity-alternating index sequences: with B = 2m + r0,
r1 = 1 - r0 and y = x + 1,

    Q_B(x) = x^r0 * sum_{k=0}^{m}    (-1)^(m-k) (xy)^k gamma_B(B - 2k - r0)
           + x^r1 * sum_{k=0}^{m-r1} (-1)^(m-k) (xy)^k gamma_B(B - 2k - r1)

where gamma_B(l) sums, over all increasing parity-alternating index
sequences of length l in [1, B] whose last term has the parity of B, the
products of the indexed block counts.  The full characteristic polynomial
is then x^s0 (x+1)^s1 Q_B(x) with s0, s1 the surplus counts of the 0- and
1-blocks; when the first block is a single 0 the final (x+1) of the total
multiplicity surfaces inside Q_B itself.  Everything here is normalized
monic and verified against the determinant route in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .intpoly import (
    Poly,
    degree,
    divide_exact,
    format_poly,
    mul,
    mul_scalar,
    mul_xk,
    normalize,
    poly_pow,
    to_coeff_list,
)
from .roots import RootEnclosure, isolate_real_roots
from .sequences import (
    Bits,
    Blocks,
    block_counts,
    check_blocks,
    format_sequence,
    to_blocks,
)
from .util import decimal_lower, decimal_upper, fraction_str

Rational = Union[int, Fraction]

_Y: Poly = (1, 1)
_XY: Poly = (0, 1, 1)


def _require_connected(blocks: Blocks) -> None:
    check_blocks(blocks)
    if blocks[-1][0] != 1:
        raise ValueError("block form is disconnected (must end in a 1-block)")


def multiplicity_zero(blocks: Blocks) -> int:
    """Multiplicity of eigenvalue 0: surplus of the 0-blocks."""
    _require_connected(blocks)
    counts = block_counts(blocks)
    return sum(c - 1 for c in counts[0::2])


def multiplicity_minus_one(blocks: Blocks) -> int:
    """Multiplicity of eigenvalue -1: surplus of the 1-blocks, plus one
    when the leading 0-block is a single vertex."""
    _require_connected(blocks)
    counts = block_counts(blocks)
    total = sum(c - 1 for c in counts[1::2])
    if counts[0] == 1:
        total += 1
    return total


@lru_cache(maxsize=None)
def _index_seqs(b: int, length: int) -> tuple[tuple[int, ...], ...]:
    if length == 0:
        return ((),)
    out: list[tuple[int, ...]] = []

    def extend(pos: int, start: int, prefix: tuple[int, ...]) -> None:
        if pos == length:
            out.append(prefix)
            return
        parity = (b + (length - 1 - pos)) % 2
        first = start if start % 2 == parity else start + 1
        for v in range(first, b + 1, 2):
            extend(pos + 1, v + 1, prefix + (v,))

    extend(0, 1, ())
    return tuple(out)


def index_sequences(b: int, length: int) -> set[tuple[int, ...]]:
    """All increasing, parity-alternating index sequences of the given
    length in [1, b] whose last term has the parity of b.

    Length 0 yields the singleton containing the empty sequence.
    """
    if b < 1:
        raise ValueError(f"need a positive block count, got {b}")
    if not 0 <= length <= b:
        raise ValueError(f"length must lie in [0, {b}], got {length}")
    return set(_index_seqs(b, length))


def gamma(blocks: Blocks, length: int) -> int:
    """Sum over the index sequences of the products of indexed block counts."""
    counts = block_counts(blocks)
    b = len(counts)
    if not 0 <= length <= b:
        raise ValueError(f"length must lie in [0, {b}], got {length}")
    total = 0
    for seq in _index_seqs(b, length):
        prod = 1
        for idx in seq:
            prod *= counts[idx - 1]
        total += prod
    return total


def q_polynomial(blocks: Blocks) -> Poly:
    """The monic degree-B companion factor of a connected block form."""
    _require_connected(blocks)
    counts = block_counts(blocks)
    b = len(counts)
    if b < 2:
        raise ValueError("need at least two blocks")
    return _q_from_counts(counts)


def _q_from_counts(counts: tuple[int, ...]) -> Poly:
    b = len(counts)
    r0 = b % 2
    m = (b - r0) // 2
    r1 = 1 - r0

    def g(length: int) -> int:
        total = 0
        for seq in _index_seqs(b, length):
            prod = 1
            for idx in seq:
                prod *= counts[idx - 1]
            total += prod
        return total

    xyk: Poly = (1,)
    # first sum, shifted by x^r0
    terms: list[Poly] = []
    for k in range(m + 1):
        coeff = (-1) ** (m - k) * g(b - 2 * k - r0)
        terms.append(mul_xk(mul_scalar(xyk, coeff), r0))
        if k < m:
            xyk = mul(xyk, _XY)
    # second sum, shifted by x^r1
    xyk = (1,)
    for k in range(m - r1 + 1):
        coeff = (-1) ** (m - k) * g(b - 2 * k - r1)
        terms.append(mul_xk(mul_scalar(xyk, coeff), r1))
        if k < m - r1:
            xyk = mul(xyk, _XY)
    width = max(len(t) for t in terms)
    acc = [0] * width
    for t in terms:
        for idx, c in enumerate(t):
            acc[idx] += c
    return normalize(acc)


def _surplus(counts: tuple[int, ...]) -> tuple[int, int]:
    s0 = sum(c - 1 for c in counts[0::2])
    s1 = sum(c - 1 for c in counts[1::2])
    return s0, s1


def char_poly(blocks: Blocks) -> Poly:
    """Monic characteristic polynomial assembled from the block form."""
    _require_connected(blocks)
    counts = block_counts(blocks)
    s0, s1 = _surplus(counts)
    return mul_xk(mul(_q_from_counts(counts), poly_pow(_Y, s1)), s0)


def _strip_trailing_zeros(bits: Bits) -> tuple[Bits, int]:
    n = len(bits)
    k = n
    while k and bits[k - 1] == 0:
        k -= 1
    return bits[:k], n - k


def char_poly_of_sequence(bits: Bits) -> Poly:
    """Characteristic polynomial of any creation sequence.

    Trailing isolated vertices contribute plain factors of x.
    """
    if not bits:
        raise ValueError("empty sequence")
    core, isolated = _strip_trailing_zeros(bits)
    if not core:
        return mul_xk((1,), isolated)
    return mul_xk(char_poly(to_blocks(core)), isolated)


def is_cospectral(bits_a: Bits, bits_b: Bits) -> bool:
    """True iff the exact monic characteristic polynomials coincide."""
    return char_poly_of_sequence(bits_a) == char_poly_of_sequence(bits_b)


def _nontrivial_parts(blocks: Blocks) -> tuple[int, int, Poly]:
    """Total multiplicities of 0 and -1 plus the factor free of both.

    The companion factor can carry at most a single extra root at -1
    (exactly when the leading 0-block is a single vertex); both kinds of
    extra factors are divided out here so the remainder is nonzero at 0
    and at -1.
    """
    counts = block_counts(blocks)
    s0, s1 = _surplus(counts)
    q = _q_from_counts(counts)
    extra0 = 0
    while q and q[0] == 0:
        q = normalize(q[1:])
        extra0 += 1
    extra1 = 0
    while True:
        quotient = divide_exact(q, _Y)
        if quotient is None:
            break
        q = quotient
        extra1 += 1
    return s0 + extra0, s1 + extra1, q


def _eigen_enclosures(rest: Poly, width: Fraction) -> list[RootEnclosure]:
    """Enclosures of the roots of `rest`, each strictly avoiding 0 and -1.

    Isolating x(x+1)*rest and dropping the two known point roots forces
    the remaining enclosures away from both special eigenvalues.
    """
    if degree(rest) < 1:
        return []
    padded = mul(rest, (0, 1, 1))
    out = []
    for enc in isolate_real_roots(padded, width):
        if enc.is_point and enc.lo in (0, -1):
            continue
        out.append(enc)
    return out


def _abs_interval(lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    if lo >= 0:
        return lo, hi
    if hi <= 0:
        return -hi, -lo
    return Fraction(0), max(-lo, hi)


def _energy_from_parts(m_minus1: int, rest: Poly,
                       precision: Fraction) -> tuple[Fraction, Fraction,
                                                     list[RootEnclosure]]:
    lo = Fraction(m_minus1)
    hi = Fraction(m_minus1)
    d = degree(rest)
    encs: list[RootEnclosure] = []
    if d >= 1:
        encs = _eigen_enclosures(rest, precision / d)
        for enc in encs:
            alo, ahi = _abs_interval(enc.lo, enc.hi)
            lo += enc.multiplicity * alo
            hi += enc.multiplicity * ahi
    return lo, hi, encs


def energy(bits: Bits, precision: Rational) -> tuple[Fraction, Fraction]:
    """Interval of width <= precision certified to contain the graph energy.

    The 0 and -1 eigenvalues contribute exactly; the rest contribute
    through exact root enclosures summed with outward endpoints.
    """
    if not bits:
        raise ValueError("empty sequence")
    prec = Fraction(precision)
    if prec <= 0:
        raise ValueError(f"precision must be positive, got {precision}")
    core, _ = _strip_trailing_zeros(bits)
    if not core:
        return Fraction(0), Fraction(0)
    _, m1, rest = _nontrivial_parts(to_blocks(core))
    lo, hi, _ = _energy_from_parts(m1, rest, prec)
    return lo, hi


@dataclass(frozen=True)
class SpectralSummary:
    """Complete exact spectral data for one connected threshold graph."""

    sequence: Bits
    n: int
    m0: int
    m_minus1: int
    char_poly: Poly
    nontrivial_factor: Poly
    roots: tuple[RootEnclosure, ...]
    energy_lo: Fraction
    energy_hi: Fraction

    def to_record(self) -> dict:
        return {
            "sequence": format_sequence(self.sequence),
            "n": self.n,
            "m0": self.m0,
            "m_minus1": self.m_minus1,
            "char_poly": to_coeff_list(self.char_poly),
            "char_poly_text": format_poly(self.char_poly),
            "nontrivial_factor": to_coeff_list(self.nontrivial_factor),
            "nontrivial_factor_text": format_poly(self.nontrivial_factor),
            "roots": [
                {
                    "lo": fraction_str(r.lo),
                    "hi": fraction_str(r.hi),
                    "multiplicity": r.multiplicity,
                }
                for r in self.roots
            ],
            "energy": {
                "lo": decimal_lower(self.energy_lo),
                "hi": decimal_upper(self.energy_hi),
            },
        }


def spectral_summary(bits: Bits, precision: Rational) -> SpectralSummary:
    """Multiplicities, exact characteristic polynomial, root enclosures and
    an energy interval of width <= precision, for a connected sequence."""
    if not bits:
        raise ValueError("empty sequence")
    if bits[-1] != 1:
        raise ValueError("sequence is disconnected (must end in 1)")
    prec = Fraction(precision)
    if prec <= 0:
        raise ValueError(f"precision must be positive, got {precision}")
    blocks = to_blocks(bits)
    m0, m1, rest = _nontrivial_parts(blocks)
    full = mul_xk(mul(rest, poly_pow(_Y, m1)), m0)
    e_lo, e_hi, encs = _energy_from_parts(m1, rest, prec)
    enclosures: list[RootEnclosure] = []
    if m0:
        enclosures.append(RootEnclosure(Fraction(0), Fraction(0), m0))
    if m1:
        enclosures.append(RootEnclosure(Fraction(-1), Fraction(-1), m1))
    enclosures.extend(encs)
    enclosures.sort(key=lambda r: (r.lo, r.hi))
    return SpectralSummary(
        sequence=bits,
        n=len(bits),
        m0=m0,
        m_minus1=m1,
        char_poly=full,
        nontrivial_factor=rest,
        roots=tuple(enclosures),
        energy_lo=e_lo,
        energy_hi=e_hi,
    )
