"""Certification of total negativity / total non-positivity of order k.

Each decision procedure returns a :class:`Verdict` whose witness, when the
verdict is negative, can be re-checked from the matrix alone: an offending
minor, a vector whose sign pattern is reversed, or a vector whose variation
count grows.  Preconditions on the matrix sign (entrywise negative for the
strict class, entrywise non-positive for the weak one) are folded into the
verdict as size-1 minor witnesses rather than raised, so callers always get a
certificate.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Literal, Sequence

from .errors import DimensionError, ResourceLimitError
from .matrix import (
    ExactMatrix,
    RationalLike,
    adjugate,
    contiguous_minors_up_to,
    minors_up_to,
    to_fraction,
)
from .signs import SignProfile, is_mixed_orthant, s_minus, sign_profile

TN = "tn"
TNP = "tnp"
MatrixClass = Literal["tn", "tnp"]
EndMode = Literal["nonzero", "literal"]

#: Hard cap on the largest matrix dimension for sweeps over all square
#: submatrices (their count grows exponentially).  Beyond it we refuse.
MAX_ALL_SUBMATRIX_DIM = 12


class ViolationKind(str, Enum):
    NONNEGATIVE_MINOR = "nonnegative_minor"
    POSITIVE_MINOR = "positive_minor"
    SIGN_REVERSAL = "sign_reversal"
    VARIATION_INCREASE = "variation_increase"
    EQUALITY_SIGN_CLAUSE = "equality_sign_clause"
    LCP_SOLUTION_MISMATCH = "lcp_solution_mismatch"


@dataclass(frozen=True)
class Violation:
    """A re-checkable certificate that a class membership fails.

    ``rows``/``cols`` are 1-based index sets naming the submatrix involved;
    ``vector`` carries the test vector for reversal/variation witnesses and
    ``detail`` the offending minor value where applicable.
    """

    kind: ViolationKind
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    vector: tuple[Fraction, ...] | None = None
    detail: Fraction | None = None

    @property
    def size(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    method: str
    witness: Violation | None = None

    def __post_init__(self) -> None:
        if not self.holds and self.witness is None:
            raise ValueError("a failing verdict requires a witness")


@dataclass(frozen=True)
class ClassQuery:
    matrix_class: MatrixClass
    order: int

    def __post_init__(self) -> None:
        if self.matrix_class not in (TN, TNP):
            raise ValueError(f"unknown matrix class {self.matrix_class!r}")
        if self.order < 1:
            raise ValueError("order must be at least 1")


@dataclass(frozen=True)
class AlphaChoice:
    """Magnitudes and a global sign for the alternating test coefficients.

    The realized coefficient vector of length r is
    ``global_sign * (a_1, -a_2, ..., (-1)^(r-1) a_r)`` with the magnitudes
    cycled to length r.
    """

    magnitudes: tuple[Fraction, ...]
    global_sign: int = 1

    def __post_init__(self) -> None:
        if not self.magnitudes:
            raise ValueError("alpha needs at least one magnitude")
        if any(m < 0 for m in self.magnitudes):
            raise ValueError("alpha magnitudes must be non-negative")
        if not any(self.magnitudes):
            raise ValueError("alpha magnitudes must not all be zero")
        if self.global_sign not in (1, -1):
            raise ValueError("global sign must be +1 or -1")

    @classmethod
    def of(cls, magnitudes: Sequence[RationalLike], global_sign: int = 1) -> "AlphaChoice":
        return cls(tuple(to_fraction(m) for m in magnitudes), global_sign)

    @property
    def strictly_positive(self) -> bool:
        return all(m > 0 for m in self.magnitudes)

    def realized(self, r: int) -> tuple[Fraction, ...]:
        mags = [self.magnitudes[i % len(self.magnitudes)] for i in range(r)]
        if not any(mags):
            raise ValueError(f"alpha pattern collapses to the zero vector at size {r}")
        return tuple(self.global_sign * (m if i % 2 == 0 else -m) for i, m in enumerate(mags))


DEFAULT_ALPHA = AlphaChoice((Fraction(1),), 1)


def _validate_order(a: ExactMatrix, k: int) -> None:
    if not 1 <= k <= min(a.rows, a.cols):
        raise ValueError(f"order {k} out of range [1, {min(a.rows, a.cols)}]")


def _entry_violation(a: ExactMatrix, strict: bool) -> Violation | None:
    hit = a.first_entry_violating(strict)
    if hit is None:
        return None
    kind = ViolationKind.NONNEGATIVE_MINOR if strict else ViolationKind.POSITIVE_MINOR
    return Violation(kind, (hit[0],), (hit[1],), detail=hit[2])


def _contiguous_windows(m: int, n: int, r: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for i in range(m - r + 1):
        for j in range(n - r + 1):
            yield tuple(range(i, i + r)), tuple(range(j, j + r))


def _all_windows(m: int, n: int, r: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for rows in itertools.combinations(range(m), r):
        for cols in itertools.combinations(range(n), r):
            yield rows, cols


def _take(a: ExactMatrix, rows0: Sequence[int], cols0: Sequence[int]) -> ExactMatrix:
    flat = tuple(a.entries[i * a.cols + j] for i in rows0 for j in cols0)
    return ExactMatrix(len(rows0), len(cols0), flat)


def _one_based(idx: Sequence[int]) -> tuple[int, ...]:
    return tuple(i + 1 for i in idx)


def check_by_minor_definition(a: ExactMatrix, query: ClassQuery) -> Verdict:
    """Decide the class by enumerating every minor of size at most the order."""
    _validate_order(a, query.order)
    strict = query.matrix_class == TN
    for rec in minors_up_to(a, query.order):
        bad = rec.value >= 0 if strict else rec.value > 0
        if bad:
            kind = ViolationKind.NONNEGATIVE_MINOR if strict else ViolationKind.POSITIVE_MINOR
            return Verdict(False, "minor_definition", Violation(kind, rec.rows, rec.cols, detail=rec.value))
    return Verdict(True, "minor_definition")


def check_by_contiguous_minors(a: ExactMatrix, query: ClassQuery) -> Verdict:
    """Decide total negativity from contiguous minors only.

    The contiguous reduction is an equivalence for the strictly negative class;
    for the non-positive class it is merely necessary, so that mode delegates
    to the full minor enumeration instead of claiming an equivalence.
    """
    _validate_order(a, query.order)
    if query.matrix_class == TNP:
        return check_by_minor_definition(a, query)
    for rec in contiguous_minors_up_to(a, query.order):
        if rec.value >= 0:
            return Verdict(
                False,
                "contiguous_minors",
                Violation(ViolationKind.NONNEGATIVE_MINOR, rec.rows, rec.cols, detail=rec.value),
            )
    return Verdict(True, "contiguous_minors")


def sign_non_reversal(a: ExactMatrix, x: Sequence[Fraction], strict: bool) -> tuple[bool, int | None]:
    """Does a coordinate keep its sign through multiplication by ``a``?

    Strict: some i has x_i (Ax)_i > 0.  Non-strict: some i has x_i != 0 and
    x_i (Ax)_i >= 0.  Returns the smallest such 1-based coordinate.
    """
    if not a.is_square:
        raise DimensionError("sign non-reversal needs a square matrix")
    if len(x) != a.cols:
        raise DimensionError("vector length does not match matrix size")
    if all(v == 0 for v in x):
        raise ValueError("sign non-reversal is undefined for the zero vector")
    y = a.matvec(x)
    for i, (xi, yi) in enumerate(zip(x, y)):
        if strict:
            if xi * yi > 0:
                return True, i + 1
        else:
            if xi != 0 and xi * yi >= 0:
                return True, i + 1
    return False, None


def check_tn_snr_single_vector(
    a: ExactMatrix, k: int, alpha: AlphaChoice | None = None
) -> Verdict:
    """Single-test-vector sign non-reversal decision for total negativity of order k.

    Checks that the matrix is entrywise negative, then that each contiguous
    square submatrix of size 2..k does not reverse the sign of
    adj(submatrix) @ alpha.  At k = 1 this degenerates to the entry check.
    """
    _validate_order(a, k)
    alpha = alpha or DEFAULT_ALPHA
    method = "snr_single_vector"
    bad = _entry_violation(a, strict=True)
    if bad is not None:
        return Verdict(False, method, bad)
    for r in range(2, k + 1):
        alpha_vec = alpha.realized(r)
        for rows0, cols0 in _contiguous_windows(a.rows, a.cols, r):
            sub = _take(a, rows0, cols0)
            x = adjugate(sub).matvec(alpha_vec)
            if all(v == 0 for v in x):
                return Verdict(
                    False,
                    method,
                    Violation(ViolationKind.SIGN_REVERSAL, _one_based(rows0), _one_based(cols0), vector=x),
                )
            ok, _ = sign_non_reversal(sub, x, strict=True)
            if not ok:
                return Verdict(
                    False,
                    method,
                    Violation(ViolationKind.SIGN_REVERSAL, _one_based(rows0), _one_based(cols0), vector=x),
                )
    return Verdict(True, method)


def _random_positive(rng: random.Random, num_max: int = 20, den_max: int = 8) -> Fraction:
    return Fraction(rng.randint(1, num_max), rng.randint(1, den_max))


def _sample_mixed_vector(rng: random.Random, r: int, allow_zeros: bool = True) -> tuple[Fraction, ...]:
    """Random vector with at least one positive and one negative coordinate."""
    while True:
        vec = []
        for _ in range(r):
            if allow_zeros and rng.random() < 0.15:
                vec.append(Fraction(0))
            else:
                vec.append(_random_positive(rng) * rng.choice((1, -1)))
        if any(v > 0 for v in vec) and any(v < 0 for v in vec):
            return tuple(vec)


def _sample_alternating_vector(rng: random.Random, r: int) -> tuple[Fraction, ...]:
    lead = rng.choice((1, -1))
    return tuple(_random_positive(rng) * (lead if i % 2 == 0 else -lead) for i in range(r))


def _mixed_sign_patterns(r: int) -> list[tuple[Fraction, ...]]:
    out = []
    for bits in itertools.product((1, -1), repeat=r):
        if any(b > 0 for b in bits) and any(b < 0 for b in bits):
            out.append(tuple(Fraction(b) for b in bits))
    return out


def _alternating_patterns(r: int) -> list[tuple[Fraction, ...]]:
    plus = tuple(Fraction(1 if i % 2 == 0 else -1) for i in range(r))
    return [plus, tuple(-v for v in plus)]


def check_tn_snr_all_vectors(
    a: ExactMatrix,
    k: int,
    mode: Literal["all_submatrices_pn", "contiguous_alt"] = "contiguous_alt",
    trials: int = 32,
    seed: int = 0,
    max_dim: int = MAX_ALL_SUBMATRIX_DIM,
) -> Verdict:
    """Randomized falsifier for the sign non-reversal characterizations.

    Exhausts the +/-1 patterns of the relevant orthant family and additionally
    samples ``trials`` rational vectors per submatrix.  A True verdict only
    means no reversal was found; the decision procedure is the single-vector
    test.
    """
    if k < 2:
        raise ValueError("sign non-reversal sweeps need order k >= 2")
    _validate_order(a, k)
    method = f"snr_falsifier_{mode}"
    bad = _entry_violation(a, strict=True)
    if bad is not None:
        return Verdict(False, method, bad)
    rng = random.Random(seed)
    if mode == "all_submatrices_pn" and max(a.rows, a.cols) > max_dim:
        raise ResourceLimitError(
            f"all-submatrix sweep refused for dimensions beyond {max_dim}"
        )
    for r in range(2, k + 1):
        if mode == "all_submatrices_pn":
            windows = _all_windows(a.rows, a.cols, r)
            patterns = _mixed_sign_patterns(r)
            sampler = _sample_mixed_vector
        else:
            windows = _contiguous_windows(a.rows, a.cols, r)
            patterns = _alternating_patterns(r)
            sampler = lambda g, rr: _sample_alternating_vector(g, rr)  # noqa: E731
        for rows0, cols0 in windows:
            sub = _take(a, rows0, cols0)
            vectors = itertools.chain(patterns, (sampler(rng, r) for _ in range(trials)))
            for x in vectors:
                ok, _ = sign_non_reversal(sub, x, strict=True)
                if not ok:
                    return Verdict(
                        False,
                        method,
                        Violation(
                            ViolationKind.SIGN_REVERSAL, _one_based(rows0), _one_based(cols0), vector=tuple(x)
                        ),
                    )
    return Verdict(True, method)


def _end_reference_sign(
    x: Sequence[Fraction], profile_in: SignProfile, which: str, end_mode: EndMode
) -> int | None:
    if end_mode == "nonzero":
        return profile_in.first_nonzero_sign if which == "first" else profile_in.last_nonzero_sign
    v = x[0] if which == "first" else x[-1]
    return None if v == 0 else (1 if v > 0 else -1)


def _tn_equality_clause_holds(
    x: Sequence[Fraction], profile_in: SignProfile, profile_out: SignProfile, end_mode: EndMode
) -> bool:
    for which, sset in (("first", profile_out.first_signs_at_max), ("last", profile_out.last_signs_at_max)):
        if len(sset) != 1:
            return False
        ref = _end_reference_sign(x, profile_in, which, end_mode)
        if ref is None or next(iter(sset)) != ref:
            return False
    return True


def vd_check(
    a: ExactMatrix, x: Sequence[Fraction], end_mode: EndMode = "nonzero"
) -> tuple[bool, SignProfile, SignProfile]:
    """Variation-diminution test of one vector with mixed signs.

    Satisfied iff s_plus(Ax) <= s_minus(x), and in the equality case with
    Ax != 0 the end signs of Ax at the maximum are forced and agree with the
    end signs of x.  ``end_mode`` picks between comparing against the first /
    last nonzero coordinate of x (default) or the literal first / last
    coordinate.
    """
    if len(x) != a.cols:
        raise DimensionError("vector length does not match column count")
    if not is_mixed_orthant(x):
        raise ValueError("variation test vector must have both positive and negative coordinates")
    y = a.matvec(x)
    profile_in = sign_profile(x)
    profile_out = sign_profile(y)
    if profile_out.s_plus < profile_in.s_minus:
        return True, profile_in, profile_out
    if profile_out.s_plus > profile_in.s_minus:
        return False, profile_in, profile_out
    if all(v == 0 for v in y):
        return True, profile_in, profile_out
    ok = _tn_equality_clause_holds(x, profile_in, profile_out, end_mode)
    return ok, profile_in, profile_out


def check_tn_vd_single_vector(
    a: ExactMatrix,
    alpha: AlphaChoice | None = None,
    k: int | None = None,
    end_mode: EndMode = "nonzero",
) -> Verdict:
    """Single-test-vector variation-diminution decision for total negativity.

    With the default ``k = min(m, n)`` this decides full total negativity;
    passing a smaller k restricts the sweep to contiguous submatrices of size
    at most k and decides total negativity of that order.
    """
    if a.rows < 1 or a.cols < 1:
        raise DimensionError("empty matrix")
    kmax = min(a.rows, a.cols)
    if k is None:
        k = kmax
    _validate_order(a, k)
    alpha = alpha or DEFAULT_ALPHA
    method = "vd_single_vector"
    bad = _entry_violation(a, strict=True)
    if bad is not None:
        return Verdict(False, method, bad)
    for r in range(2, k + 1):
        alpha_vec = alpha.realized(r)
        for rows0, cols0 in _contiguous_windows(a.rows, a.cols, r):
            sub = _take(a, rows0, cols0)
            x = adjugate(sub).matvec(alpha_vec)
            rows1, cols1 = _one_based(rows0), _one_based(cols0)
            if not is_mixed_orthant(x):
                # degenerate adjugate: cannot happen while all smaller
                # contiguous minors are negative, so this already certifies failure
                return Verdict(
                    False, method, Violation(ViolationKind.VARIATION_INCREASE, rows1, cols1, vector=x)
                )
            ok, profile_in, profile_out = vd_check(sub, x, end_mode)
            if not ok:
                kind = (
                    ViolationKind.VARIATION_INCREASE
                    if profile_out.s_plus > profile_in.s_minus
                    else ViolationKind.EQUALITY_SIGN_CLAUSE
                )
                return Verdict(False, method, Violation(kind, rows1, cols1, vector=x))
    return Verdict(True, method)


def check_tnp_snr(
    a: ExactMatrix,
    k: int,
    mode: Literal["single_vector", "all_pn", "all_alt"] = "single_vector",
    alpha: AlphaChoice | None = None,
    trials: int = 32,
    seed: int = 0,
    max_dim: int = MAX_ALL_SUBMATRIX_DIM,
) -> Verdict:
    """Non-strict sign non-reversal tests for total non-positivity of order k.

    ``single_vector`` is the decision procedure: it sweeps every square
    submatrix of size 2..k (not only contiguous ones) and tests the vector
    adj(submatrix) @ alpha, where alpha must have strictly positive magnitudes.
    The other modes are falsifiers over sampled vectors.
    """
    _validate_order(a, k)
    method = f"tnp_snr_{mode}"
    bad = _entry_violation(a, strict=False)
    if bad is not None:
        return Verdict(False, method, bad)
    if k == 1:
        return Verdict(True, method)
    if max(a.rows, a.cols) > max_dim:
        raise ResourceLimitError(f"all-submatrix sweep refused for dimensions beyond {max_dim}")
    rng = random.Random(seed)
    alpha = alpha or DEFAULT_ALPHA
    if mode == "single_vector" and not alpha.strictly_positive:
        raise ValueError("the single-vector non-positive test needs strictly positive alpha magnitudes")
    for r in range(2, k + 1):
        patterns: Sequence[tuple[Fraction, ...]]
        if mode == "single_vector":
            patterns = ()
        elif mode == "all_pn":
            patterns = _mixed_sign_patterns(r)
        else:
            patterns = _alternating_patterns(r)
        alpha_vec = alpha.realized(r) if mode == "single_vector" else None
        for rows0, cols0 in _all_windows(a.rows, a.cols, r):
            sub = _take(a, rows0, cols0)
            if mode == "single_vector":
                x = adjugate(sub).matvec(alpha_vec)
                if all(v == 0 for v in x):
                    continue  # nothing to test at the zero vector
                vectors: Sequence[Sequence[Fraction]] = (x,)
            elif mode == "all_pn":
                vectors = list(patterns) + [_sample_mixed_vector(rng, r) for _ in range(trials)]
            else:
                vectors = list(patterns) + [_sample_alternating_vector(rng, r) for _ in range(trials)]
            for x in vectors:
                ok, _ = sign_non_reversal(sub, x, strict=False)
                if not ok:
                    return Verdict(
                        False,
                        method,
                        Violation(
                            ViolationKind.SIGN_REVERSAL, _one_based(rows0), _one_based(cols0), vector=tuple(x)
                        ),
                    )
    return Verdict(True, method)


def _tnp_vd_failure(
    sub: ExactMatrix, x: Sequence[Fraction]
) -> ViolationKind | None:
    """Weak-variation test: s_minus(Ax) <= s_minus(x) plus the end-sign clause."""
    y = sub.matvec(x)
    smx = s_minus(x)
    smy = s_minus(y)
    if smy > smx:
        return ViolationKind.VARIATION_INCREASE
    if smy < smx or all(v == 0 for v in y):
        return None
    pin = sign_profile(x)
    pout = sign_profile(y)
    if pin.first_nonzero_sign != pout.first_nonzero_sign or pin.last_nonzero_sign != pout.last_nonzero_sign:
        return ViolationKind.EQUALITY_SIGN_CLAUSE
    return None


def check_tnp_vd(
    a: ExactMatrix,
    mode: Literal["single_vector", "all_pn"] = "single_vector",
    alpha: AlphaChoice | None = None,
    k: int | None = None,
    trials: int = 64,
    seed: int = 0,
    max_dim: int = MAX_ALL_SUBMATRIX_DIM,
) -> Verdict:
    """Weak variation-diminution tests for total non-positivity.

    ``single_vector`` sweeps all square submatrices of sizes 2..k with the
    vector adj(submatrix) @ alpha and decides total non-positivity of order k
    (full order by default).  ``all_pn`` samples mixed-sign vectors against
    the whole matrix as a falsifier.
    """
    kmax = min(a.rows, a.cols)
    if k is None:
        k = kmax
    _validate_order(a, k)
    method = f"tnp_vd_{mode}"
    bad = _entry_violation(a, strict=False)
    if bad is not None:
        return Verdict(False, method, bad)
    if mode == "all_pn":
        rng = random.Random(seed)
        n = a.cols
        patterns = _mixed_sign_patterns(n) if n <= 10 else []
        vectors = patterns + [_sample_mixed_vector(rng, n) for _ in range(trials)]
        all_rows = tuple(range(a.rows))
        all_cols = tuple(range(a.cols))
        for x in vectors:
            kind = _tnp_vd_failure(a, x)
            if kind is not None:
                return Verdict(
                    False, method, Violation(kind, _one_based(all_rows), _one_based(all_cols), vector=tuple(x))
                )
        return Verdict(True, method)
    if k == 1:
        return Verdict(True, method)
    if max(a.rows, a.cols) > max_dim:
        raise ResourceLimitError(f"all-submatrix sweep refused for dimensions beyond {max_dim}")
    alpha = alpha or DEFAULT_ALPHA
    if not alpha.strictly_positive:
        raise ValueError("the single-vector non-positive test needs strictly positive alpha magnitudes")
    for r in range(2, k + 1):
        alpha_vec = alpha.realized(r)
        for rows0, cols0 in _all_windows(a.rows, a.cols, r):
            sub = _take(a, rows0, cols0)
            x = adjugate(sub).matvec(alpha_vec)
            if all(v == 0 for v in x):
                continue
            kind = _tnp_vd_failure(sub, x)
            if kind is not None:
                return Verdict(
                    False, method, Violation(kind, _one_based(rows0), _one_based(cols0), vector=x)
                )
    return Verdict(True, method)
