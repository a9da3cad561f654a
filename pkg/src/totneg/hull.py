"""Entrywise interval hulls of matrix pairs and their class certification.

The hull of (A, B) is the set of matrices whose (i, j) entry lies between
a_ij and b_ij.  Checkerboard sign words select distinguished members: two of
them decide total negativity of the whole hull, and the full sign-word family
decides total non-positivity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .checks import (
    TN,
    TNP,
    ClassQuery,
    Violation,
    check_by_contiguous_minors,
    check_by_minor_definition,
)
from .errors import DimensionError, ResourceLimitError
from .matrix import ExactMatrix
from .signs import alternating_signature

SignWord = tuple[int, ...]

#: Hard cap on m + n for the exhaustive 2^(m+n) sign-word sweep.
MAX_SWEEP_EXPONENT = 24


def _check_sign_word(z: Sequence[int], length: int, what: str) -> SignWord:
    word = tuple(int(v) for v in z)
    if len(word) != length:
        raise DimensionError(f"{what} must have length {length}, got {len(word)}")
    if any(v not in (1, -1) for v in word):
        raise ValueError(f"{what} must consist of +1/-1 entries")
    return word


@dataclass(frozen=True)
class IntervalHull:
    """Ordered pair (A, B) of equal-shape matrices spanning an entrywise hull."""

    a: ExactMatrix
    b: ExactMatrix

    def __post_init__(self) -> None:
        if self.a.shape != self.b.shape:
            raise DimensionError("hull endpoints must have equal shapes")

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def contains(self, c: ExactMatrix) -> bool:
        """Exact entrywise membership test."""
        if c.shape != self.shape:
            return False
        for x, y, v in zip(self.a.entries, self.b.entries, c.entries):
            lo, hi = (x, y) if x <= y else (y, x)
            if not lo <= v <= hi:
                return False
        return True


@dataclass(frozen=True)
class HullVerdict:
    holds: bool
    method: str
    failing_sign_words: tuple[SignWord, SignWord] | None = None
    witness: Violation | None = None

    def __post_init__(self) -> None:
        if not self.holds and (self.failing_sign_words is None or self.witness is None):
            raise ValueError("a failing hull verdict needs the sign words and a violation")


def i_matrix(h: IntervalHull, z: Sequence[int], zt: Sequence[int]) -> ExactMatrix:
    """The hull member (A+B)/2 - D_z |A-B|/2 D_zt for sign words z, zt."""
    m, n = h.shape
    zw = _check_sign_word(z, m, "row sign word")
    ztw = _check_sign_word(zt, n, "column sign word")
    half = Fraction(1, 2)
    flat = []
    for i in range(m):
        for j in range(n):
            a = h.a.entries[i * n + j]
            b = h.b.entries[i * n + j]
            flat.append((a + b) * half - zw[i] * ztw[j] * abs(a - b) * half)
    return ExactMatrix(m, n, tuple(flat))


def c_plus_minus(h: IntervalHull) -> tuple[ExactMatrix, ExactMatrix]:
    """The two checkerboard members testing hull-wide total negativity."""
    m, n = h.shape
    d_m = alternating_signature(m)
    d_n = alternating_signature(n)
    c_plus = i_matrix(h, d_m, d_n)
    c_minus = i_matrix(h, d_m, tuple(-v for v in d_n))
    return c_plus, c_minus


def hull_is_totally_negative(h: IntervalHull, k: int) -> HullVerdict:
    """The entire hull is totally negative of order k iff both checkerboard members are."""
    if not 1 <= k <= min(h.shape):
        raise ValueError(f"order {k} out of range [1, {min(h.shape)}]")
    m, n = h.shape
    d_m = alternating_signature(m)
    d_n = alternating_signature(n)
    for zt in (d_n, tuple(-v for v in d_n)):
        member = i_matrix(h, d_m, zt)
        verdict = check_by_contiguous_minors(member, ClassQuery(TN, k))
        if not verdict.holds:
            return HullVerdict(False, "hull_tn", (d_m, zt), verdict.witness)
    return HullVerdict(True, "hull_tn")


def _gray_words(m: int, n: int):
    """Deterministic Gray-code enumeration of all (z, zt) sign-word pairs."""
    total = m + n
    for idx in range(1 << total):
        g = idx ^ (idx >> 1)
        bits = [1 if (g >> p) & 1 == 0 else -1 for p in range(total)]
        yield tuple(bits[:m]), tuple(bits[m:])


def hull_is_totally_nonpositive(h: IntervalHull, k: int) -> HullVerdict:
    """The hull is totally non-positive of order k iff every sign-word member is."""
    if not 1 <= k <= min(h.shape):
        raise ValueError(f"order {k} out of range [1, {min(h.shape)}]")
    m, n = h.shape
    if m + n > MAX_SWEEP_EXPONENT:
        raise ResourceLimitError(
            f"sign-word sweep needs 2^{m + n} members; cap is 2^{MAX_SWEEP_EXPONENT}"
        )
    for z, zt in _gray_words(m, n):
        member = i_matrix(h, z, zt)
        verdict = check_by_minor_definition(member, ClassQuery(TNP, k))
        if not verdict.holds:
            return HullVerdict(False, "hull_tnp", (z, zt), verdict.witness)
    return HullVerdict(True, "hull_tnp")


def sample_member(h: IntervalHull, seed: int) -> ExactMatrix:
    """A deterministic hull member with independent rational mixing weights."""
    rng = random.Random(seed)
    m, n = h.shape
    flat = []
    for i in range(m * n):
        den = rng.randint(1, 16)
        t = Fraction(rng.randint(0, den), den)
        flat.append(t * h.a.entries[i] + (1 - t) * h.b.entries[i])
    return ExactMatrix(m, n, tuple(flat))


def rohn_inequality_check(h: IntervalHull, c: ExactMatrix, x: Sequence[Fraction]) -> bool:
    """Coordinatewise comparison against the sign-matched diagonal member.

    With z_i = +1 where x_i >= 0 and -1 otherwise, every hull member C obeys
    x_i (C x)_i >= x_i (I_{z,z} x)_i; the check returns whether that holds here
    (it should always be True, and is used as a property test).
    """
    m, n = h.shape
    if m != n:
        raise DimensionError("the comparison needs square matrices")
    if len(x) != n:
        raise DimensionError("vector length does not match")
    if not h.contains(c):
        raise ValueError("matrix is not a member of the hull")
    z = tuple(1 if v >= 0 else -1 for v in x)
    t = i_matrix(h, z, z)
    cx = c.matvec(x)
    tx = t.matvec(x)
    return all(xi * ci >= xi * ti for xi, ci, ti in zip(x, cx, tx))
