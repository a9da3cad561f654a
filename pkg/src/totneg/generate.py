"""Oracle-certified instance generation and the cross-validation harness.

Strictly negative-minor matrices are built exactly: take a totally positive
base (Pascal / Cauchy / Vandermonde with positive scalings), lower its corner
entry inside the exact interval that flips the determinant negative while all
proper minors stay positive, and conjugate the inverse by the alternating
diagonal.  By the complementary-minor identity every minor of the result is
negative; the full minor enumeration re-certifies each emitted instance, so
nothing is trusted to the construction.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .checks import (
    TN,
    TNP,
    AlphaChoice,
    ClassQuery,
    Verdict,
    Violation,
    _tnp_vd_failure,
    check_by_contiguous_minors,
    check_by_minor_definition,
    check_tn_snr_single_vector,
    check_tn_vd_single_vector,
    check_tnp_snr,
    check_tnp_vd,
    sign_non_reversal,
    vd_check,
)
from .errors import ResourceLimitError
from .lcp import TnpLcpStatus, lcp_single_vector_check, tnp_lcp_sufficient_check
from .matrix import ExactMatrix, det_of_rows, format_fraction, minors_up_to

Rows = list[list[Fraction]]


@dataclass(frozen=True)
class GeneratedInstance:
    matrix: ExactMatrix
    klass: str
    order: int
    seed: int
    attempts: int


def _pascal_rows(n: int) -> Rows:
    return [[Fraction(math.comb(i + j, i)) for j in range(n)] for i in range(n)]


def _cauchy_rows(n: int, rng: random.Random) -> Rows:
    xs: list[Fraction] = []
    v = Fraction(0)
    for _ in range(n):
        v += Fraction(rng.randint(1, 6), rng.randint(1, 2))
        xs.append(v)
    ys: list[Fraction] = []
    v = Fraction(rng.randint(1, 4), rng.randint(1, 2))
    for _ in range(n):
        ys.append(v)
        v += Fraction(rng.randint(1, 6), rng.randint(1, 2))
    return [[1 / (xs[i] + ys[j]) for j in range(n)] for i in range(n)]


def _vandermonde_rows(n: int, rng: random.Random) -> Rows:
    xs: list[Fraction] = []
    v = Fraction(rng.randint(1, 3), rng.randint(1, 2))
    for _ in range(n):
        xs.append(v)
        v += Fraction(rng.randint(1, 4), rng.randint(1, 3))
    return [[xs[i] ** j for j in range(n)] for i in range(n)]


def _random_tp_rows(n: int, rng: random.Random) -> Rows:
    base = rng.choice(("pascal", "cauchy", "vandermonde"))
    if base == "pascal":
        rows = _pascal_rows(n)
    elif base == "cauchy":
        rows = _cauchy_rows(n, rng)
    else:
        rows = _vandermonde_rows(n, rng)
    r = [Fraction(rng.randint(1, 4)) for _ in range(n)]
    c = [Fraction(rng.randint(1, 4)) for _ in range(n)]
    return [[r[i] * c[j] * rows[i][j] for j in range(n)] for i in range(n)]


def _sub_rows(rows: Rows, ridx: Sequence[int], cidx: Sequence[int]) -> Rows:
    return [[rows[i][j] for j in cidx] for i in ridx]


def _normalize_negative_rows(rows: Rows) -> Rows:
    """Positive row/column scalings keeping all minor signs: integerize, reduce,
    then pull magnitudes down by powers of two."""
    m, n = len(rows), len(rows[0])
    ints: list[list[int]] = []
    for r in rows:
        lcm = 1
        for x in r:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        ints.append([int(x * lcm) for x in r])
    for j in range(n):
        g = 0
        for i in range(m):
            g = math.gcd(g, ints[i][j])
        if g > 1:
            for i in range(m):
                ints[i][j] //= g
    out: Rows = []
    for r in ints:
        g = 0
        for x in r:
            g = math.gcd(g, x)
        if g > 1:
            r = [x // g for x in r]
        out.append([Fraction(x) for x in r])
    # scale rows then columns into a moderate magnitude band
    for i in range(m):
        top = max(abs(x) for x in out[i])
        if top > 64:
            s = Fraction(1, 2 ** (top.numerator.bit_length() - 6))
            out[i] = [x * s for x in out[i]]
    for j in range(n):
        top = max(abs(out[i][j]) for i in range(m))
        if top > 64:
            s = Fraction(1, 2 ** ((top.numerator // top.denominator).bit_length() - 6))
            for i in range(m):
                out[i][j] *= s
    return out


def _tn_square_rows(n: int, rng: random.Random, tries: int = 60) -> Rows | None:
    """An n x n matrix with every minor negative, or None if unlucky."""
    if n == 1:
        return [[-Fraction(rng.randint(1, 9), rng.randint(1, 4))]]
    for _ in range(tries):
        b = _random_tp_rows(n, rng)
        x0 = b[n - 1][n - 1]
        det_b = det_of_rows([r[:] for r in b])
        corner_cof = det_of_rows(_sub_rows(b, range(n - 1), range(n - 1)))
        if corner_cof <= 0 or det_b <= 0:
            continue
        x_det = x0 - det_b / corner_cof  # determinant crosses zero here
        lower: Fraction | None = None
        degenerate = False
        for s in range(1, n):
            for ridx in itertools.combinations(range(n), s):
                if ridx[-1] != n - 1:
                    continue
                for cidx in itertools.combinations(range(n), s):
                    if cidx[-1] != n - 1:
                        continue
                    cof = (
                        det_of_rows(_sub_rows(b, ridx[:-1], cidx[:-1]))
                        if s > 1
                        else Fraction(1)
                    )
                    if cof <= 0:
                        degenerate = True
                        break
                    w = det_of_rows(_sub_rows(b, ridx, cidx))
                    bound = x0 - w / cof  # this proper minor stays positive above
                    if lower is None or bound > lower:
                        lower = bound
                if degenerate:
                    break
            if degenerate:
                break
        if degenerate or lower is None or lower >= x_det:
            continue
        x = lower + (x_det - lower) * Fraction(rng.randint(2, 7), 16)
        b[n - 1][n - 1] = x
        new_det = det_of_rows([r[:] for r in b])
        assert new_det < 0
        # conjugated inverse: entry (i,j) = (-1)^(i+j) * cofactor(j,i) / det
        inv_scaled: Rows = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = det_of_rows(
                    _sub_rows(b, [r for r in range(n) if r != j], [c for c in range(n) if c != i])
                )
                row.append(minor / new_det)
            inv_scaled.append(row)
        return _normalize_negative_rows(inv_scaled)
    return None


def _verify_class(a: ExactMatrix, klass: str, k: int) -> bool:
    query = ClassQuery(TN if klass == TN else TNP, k)
    return check_by_minor_definition(a, query).holds


def generate_tn(shape: tuple[int, int], k: int, seed: int, budget: int = 2000) -> GeneratedInstance:
    """A matrix totally negative of order k, certified by full minor enumeration."""
    m, n = shape
    if not 1 <= k <= min(m, n):
        raise ValueError(f"order {k} out of range for shape {m}x{n}")
    rng = random.Random(seed)
    size = max(m, n)
    for attempt in range(1, budget + 1):
        rows = _tn_square_rows(size, rng)
        if rows is None:
            continue
        ridx = sorted(rng.sample(range(size), m))
        cidx = sorted(rng.sample(range(size), n))
        a = ExactMatrix.from_rows(_sub_rows(rows, ridx, cidx))
        if max(abs(e) for e in a.entries) > 10**8:
            continue
        if _verify_class(a, TN, min(m, n)):
            return GeneratedInstance(a, TN, k, seed, attempt)
    raise ResourceLimitError(f"no totally negative instance found in {budget} attempts")


def _dup_adjacent(rows: Rows, index: int, axis: int) -> Rows:
    if axis == 0:
        return rows[: index + 1] + [list(rows[index])] + rows[index + 1 :]
    return [r[: index + 1] + [r[index]] + r[index + 1 :] for r in rows]


def _insert_zero(rows: Rows, index: int, axis: int) -> Rows:
    if axis == 0:
        zero = [Fraction(0)] * len(rows[0])
        return rows[:index] + [zero] + rows[index:]
    return [r[:index] + [Fraction(0)] + r[index:] for r in rows]


def generate_tnp(shape: tuple[int, int], k: int, seed: int, budget: int = 2000) -> GeneratedInstance:
    """A matrix totally non-positive of order k, built by degrading a strict instance."""
    m, n = shape
    if not 1 <= k <= min(m, n):
        raise ValueError(f"order {k} out of range for shape {m}x{n}")
    rng = random.Random(seed)
    for attempt in range(1, budget + 1):
        strategies = ["tn", "rank1"]
        if m >= 2:
            strategies += ["dup_row", "zero_row"]
        if n >= 2:
            strategies += ["dup_col", "zero_col"]
        strat = rng.choice(strategies)
        rows: Rows | None
        if strat == "tn":
            rows = _tn_square_rows(max(m, n), rng)
            if rows is not None:
                ridx = sorted(rng.sample(range(len(rows)), m))
                cidx = sorted(rng.sample(range(len(rows)), n))
                rows = _sub_rows(rows, ridx, cidx)
        elif strat == "rank1":
            u = [Fraction(rng.randint(1, 9), rng.randint(1, 3)) for _ in range(m)]
            v = [Fraction(rng.randint(1, 9), rng.randint(1, 3)) for _ in range(n)]
            rows = [[-ui * vj for vj in v] for ui in u]
        else:
            axis = 0 if strat.endswith("row") else 1
            base_shape = (m - 1, n) if axis == 0 else (m, n - 1)
            base = _tn_square_rows(max(base_shape), rng)
            if base is None:
                continue
            ridx = sorted(rng.sample(range(len(base)), base_shape[0]))
            cidx = sorted(rng.sample(range(len(base)), base_shape[1]))
            rows = _sub_rows(base, ridx, cidx)
            pos = rng.randrange(base_shape[axis])
            if strat.startswith("dup"):
                rows = _dup_adjacent(rows, pos, axis)
            else:
                rows = _insert_zero(rows, rng.randrange(base_shape[axis] + 1), axis)
        if rows is None:
            continue
        a = ExactMatrix.from_rows(rows)
        if max(abs(e) for e in a.entries) > 10**8:
            continue
        if _verify_class(a, TNP, min(m, n)):
            return GeneratedInstance(a, TNP, k, seed, attempt)
    raise ResourceLimitError(f"no totally non-positive instance found in {budget} attempts")


def _minor_linear_coeff(rows: Rows, ridx: Sequence[int], cidx: Sequence[int], i: int, j: int) -> Fraction:
    """d det(window) / d entry(i,j) for (i,j) inside the window."""
    pi, pj = ridx.index(i), cidx.index(j)
    if len(ridx) == 1:
        return Fraction(1)
    rest = _sub_rows(rows, [r for r in ridx if r != i], [c for c in cidx if c != j])
    sign = 1 if (pi + pj) % 2 == 0 else -1
    return sign * det_of_rows(rest)


def generate_near_miss(shape: tuple[int, int], k: int, seed: int, budget: int = 4000) -> GeneratedInstance:
    """An entrywise-negative matrix violating order-k total negativity at one minor.

    Built by sliding a single entry of a certified instance to just past the
    first minor's sign crossing (for k = 1, one entry is zeroed instead).
    """
    m, n = shape
    if not 1 <= k <= min(m, n):
        raise ValueError(f"order {k} out of range for shape {m}x{n}")
    rng = random.Random(seed)
    for attempt in range(1, budget + 1):
        base = generate_tn(shape, min(m, n), rng.randrange(2**30))
        rows = base.matrix.row_list()
        if k == 1:
            i, j = rng.randrange(m), rng.randrange(n)
            rows[i][j] = Fraction(0)
            a = ExactMatrix.from_rows(rows)
            bad = [rec for rec in minors_up_to(a, k) if rec.value >= 0]
            if len(bad) == 1:
                return GeneratedInstance(a, "near_miss", k, seed, attempt)
            continue
        i, j = rng.randrange(m), rng.randrange(n)
        x0 = rows[i][j]
        crossings: list[Fraction] = []
        for s in range(2, k + 1):
            for ridx in itertools.combinations(range(m), s):
                if i not in ridx:
                    continue
                for cidx in itertools.combinations(range(n), s):
                    if j not in cidx:
                        continue
                    w = det_of_rows(_sub_rows(rows, ridx, cidx))
                    c = _minor_linear_coeff(rows, ridx, cidx, i, j)
                    if c == 0:
                        continue
                    root = x0 - w / c
                    if x0 < root < 0:
                        crossings.append(root)
        if not crossings:
            continue
        crossings.sort()
        first = crossings[0]
        nxt = min([c for c in crossings if c > first] + [Fraction(0)])
        target = (first + nxt) / 2
        if not x0 < target < 0:
            continue
        rows[i][j] = target
        a = ExactMatrix.from_rows(rows)
        if not a.is_entrywise_negative():
            continue
        bad = [rec for rec in minors_up_to(a, k) if rec.value >= 0]
        if len(bad) == 1:
            return GeneratedInstance(a, "near_miss", k, seed, attempt)
    raise ResourceLimitError(f"no near-miss instance found in {budget} attempts")


def generate_n_matrix(n: int, seed: int, budget: int = 4000) -> GeneratedInstance:
    """Entrywise negative with all principal minors negative (not necessarily all minors)."""
    rng = random.Random(seed)
    for attempt in range(1, budget + 1):
        rows = _tn_square_rows(n, rng)
        if rows is None:
            continue
        scale = rng.choice((Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)))
        perturbed = [
            [x * (1 + scale * Fraction(rng.randint(-8, 8), 9)) for x in row] for row in rows
        ]
        a = ExactMatrix.from_rows(perturbed)
        if not a.is_entrywise_negative():
            continue
        if max(abs(e) for e in a.entries) > 10**8:
            continue
        ok = True
        for size in range(1, n + 1):
            for idx in itertools.combinations(range(n), size):
                if det_of_rows(_sub_rows(perturbed, idx, idx)) >= 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return GeneratedInstance(a, "n_matrix", n, seed, attempt)
    raise ResourceLimitError(f"no principal-minor-negative instance found in {budget} attempts")


def random_rational_matrix(
    shape: tuple[int, int], seed: int, style: str = "any"
) -> ExactMatrix:
    """Random small-rational matrix; styles: any, negative, nonpositive."""
    rng = random.Random(seed)
    m, n = shape
    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            mag = Fraction(rng.randint(1, 9), rng.randint(1, 4))
            if style == "negative":
                row.append(-mag)
            elif style == "nonpositive":
                row.append(Fraction(0) if rng.random() < 0.2 else -mag)
            else:
                roll = rng.random()
                if roll < 0.1:
                    row.append(Fraction(0))
                elif roll < 0.75:
                    row.append(-mag)
                else:
                    row.append(mag)
        rows.append(row)
    return ExactMatrix.from_rows(rows)


def generate_tn_of_order(
    size: int, order: int, seed: int, positive_det: bool = False, budget: int = 400
) -> GeneratedInstance | None:
    """A size x size matrix totally negative of the given order.

    With ``positive_det`` the determinant is walked up through zero by exact
    single-entry moves that keep every minor of size <= order negative.
    Returns None when the search budget runs out (the caller records the gap).
    """
    if not 1 <= order <= size:
        raise ValueError("order out of range")
    rng = random.Random(seed)
    for attempt in range(1, budget + 1):
        rows = _tn_square_rows(size, rng)
        if rows is None:
            continue
        if not positive_det:
            a = ExactMatrix.from_rows(rows)
            if _verify_class(a, TN, order):
                return GeneratedInstance(a, TN, order, seed, attempt)
            continue
        walked = _walk_det_positive(rows, order, rng)
        if walked is None:
            continue
        a = ExactMatrix.from_rows(walked)
        if det_of_rows(walked) > 0 and _verify_class(a, TN, order):
            return GeneratedInstance(a, TN, order, seed, attempt)
    return None


def _walk_det_positive(rows: Rows, order: int, rng: random.Random, max_steps: int = 300) -> Rows | None:
    """Greedy exact walk raising the determinant while keeping small minors negative."""
    n = len(rows)
    cur = [r[:] for r in rows]
    for _ in range(max_steps):
        d = det_of_rows([r[:] for r in cur])
        if d > 0:
            return cur
        i, j = rng.randrange(n), rng.randrange(n)
        x0 = cur[i][j]
        full = tuple(range(n))
        slope = _minor_linear_coeff(cur, full, full, i, j)
        if slope == 0:
            continue
        lo: Fraction | None = None
        hi: Fraction | None = None
        for s in range(1, order + 1):
            for ridx in itertools.combinations(range(n), s):
                if i not in ridx:
                    continue
                for cidx in itertools.combinations(range(n), s):
                    if j not in cidx:
                        continue
                    w = det_of_rows(_sub_rows(cur, ridx, cidx))
                    c = _minor_linear_coeff(cur, ridx, cidx, i, j)
                    if c == 0:
                        if w >= 0:
                            return None
                        continue
                    bound = x0 - w / c  # minor hits zero here
                    if c > 0:
                        hi = bound if hi is None or bound < hi else hi
                    else:
                        lo = bound if lo is None or bound > lo else lo
        if lo is not None and hi is not None and lo >= hi:
            continue
        if slope > 0:
            wall = hi
            x1 = x0 + (wall - x0) * Fraction(3, 4) if wall is not None else x0 + 1 + abs(x0)
        else:
            wall = lo
            x1 = x0 + (wall - x0) * Fraction(3, 4) if wall is not None else x0 - 1 - abs(x0)
        if x1 == x0:
            continue
        cur[i][j] = x1
    return None


@dataclass(frozen=True)
class MethodOutcome:
    name: str
    holds: bool
    witness: Violation | None
    elapsed_ms: float


@dataclass(frozen=True)
class CrossValidationReport:
    order: int
    tn_methods: tuple[MethodOutcome, ...]
    tnp_methods: tuple[MethodOutcome, ...]
    tnp_lcp_status: str
    tn_agree: bool
    tnp_agree: bool
    lcp_condition_consistent: bool

    @property
    def tn_holds(self) -> bool:
        return self.tn_methods[0].holds

    @property
    def tnp_holds(self) -> bool:
        return self.tnp_methods[0].holds


def _timed(fn: Callable[[], Verdict]) -> MethodOutcome:
    start = time.perf_counter()
    verdict = fn()
    elapsed = (time.perf_counter() - start) * 1000
    return MethodOutcome(verdict.method, verdict.holds, verdict.witness, elapsed)


def cross_validate(
    a: ExactMatrix, k: int, alpha: AlphaChoice | None = None, seed: int = 0, include_tnp: bool = True
) -> CrossValidationReport:
    """Run every decision procedure at order k and compare the verdicts.

    All strict-class procedures must agree exactly, as must the non-positive
    ones; the one-directional complementarity condition must never certify a
    matrix the minor oracle rejects.
    """
    if not 1 <= k <= min(a.rows, a.cols):
        raise ValueError(f"order {k} out of range [1, {min(a.rows, a.cols)}]")
    tn_query = ClassQuery(TN, k)
    tn_methods = (
        _timed(lambda: check_by_minor_definition(a, tn_query)),
        _timed(lambda: check_by_contiguous_minors(a, tn_query)),
        _timed(lambda: check_tn_snr_single_vector(a, k, alpha)),
        _timed(lambda: check_tn_vd_single_vector(a, alpha, k=k)),
        _timed(lambda: lcp_single_vector_check(a, k)),
    )
    tn_agree = len({m.holds for m in tn_methods}) == 1
    tnp_methods: tuple[MethodOutcome, ...] = ()
    tnp_status = ""
    tnp_agree = True
    consistent = True
    if include_tnp:
        tnp_alpha = alpha if alpha is not None and alpha.strictly_positive else None
        tnp_query = ClassQuery(TNP, k)
        tnp_methods = (
            _timed(lambda: check_by_minor_definition(a, tnp_query)),
            _timed(lambda: check_tnp_snr(a, k, alpha=tnp_alpha)),
            _timed(lambda: check_tnp_vd(a, alpha=tnp_alpha, k=k)),
        )
        tnp_agree = len({m.holds for m in tnp_methods}) == 1
        report = tnp_lcp_sufficient_check(a, k)
        tnp_status = report.status.value
        consistent = report.status != TnpLcpStatus.SUFFICIENT or tnp_methods[0].holds
    return CrossValidationReport(
        order=k,
        tn_methods=tn_methods,
        tnp_methods=tnp_methods,
        tnp_lcp_status=tnp_status,
        tn_agree=tn_agree,
        tnp_agree=tnp_agree,
        lcp_condition_consistent=consistent,
    )


@dataclass(frozen=True)
class OrthantSuiteReport:
    size: int
    samples: int
    violations: tuple[str, ...]
    strict_pool: int
    positive_det_pool: int
    weak_pool: int

    @property
    def positive_det_found(self) -> bool:
        return self.positive_det_pool > 0


def _sample_blockwise_mixed(rng: random.Random, r: int) -> tuple[Fraction, ...]:
    """All-nonzero mixed-sign vector that is NOT alternating (needs r >= 3)."""
    while True:
        signs = [rng.choice((1, -1)) for _ in range(r)]
        mixed = any(s > 0 for s in signs) and any(s < 0 for s in signs)
        has_repeat = any(a == b for a, b in zip(signs, signs[1:]))
        if mixed and has_repeat:
            return tuple(
                Fraction(rng.randint(1, 20), rng.randint(1, 8)) * s for s in signs
            )


def orthant_impossibility_suite(r: int, trials: int, seed: int) -> OrthantSuiteReport:
    """Non-alternating all-nonzero mixed vectors cannot witness a failure.

    For matrices totally negative of order r-1 (both determinant signs when
    found), strict sign non-reversal and the variation bound with its equality
    clause must hold at every such vector; the non-strict analogues must hold
    for the weak class.  Returns the (expected-empty) violation list.
    """
    if r < 3:
        raise ValueError("the orthant suite needs size at least 3")
    rng = random.Random(seed)
    strict_pool: list[ExactMatrix] = []
    positive_det = 0
    for idx in range(4):
        inst = generate_tn_of_order(r, r - 1, seed=seed * 7 + idx)
        if inst is not None:
            strict_pool.append(inst.matrix)
    for idx in range(4):
        inst = generate_tn_of_order(r, r - 1, seed=seed * 13 + idx, positive_det=True)
        if inst is not None:
            strict_pool.append(inst.matrix)
            positive_det += 1
    weak_pool: list[ExactMatrix] = []
    for idx in range(4):
        inst = generate_tnp((r, r), r - 1, seed=seed * 29 + idx)
        weak_pool.append(inst.matrix)
    if not strict_pool or not weak_pool:
        raise ResourceLimitError("instance pools could not be generated")
    violations: list[str] = []
    samples = 0
    for t in range(trials):
        x = _sample_blockwise_mixed(rng, r)
        a = strict_pool[t % len(strict_pool)]
        samples += 2  # one strict-class and one weak-class (matrix, x) pair
        ok, _ = sign_non_reversal(a, x, strict=True)
        if not ok:
            violations.append(f"strict reversal at x={x} for:\n{a}")
        satisfied, _, _ = vd_check(a, x)
        if not satisfied:
            violations.append(f"variation clause failed at x={x} for:\n{a}")
        w = weak_pool[t % len(weak_pool)]
        ok, _ = sign_non_reversal(w, x, strict=False)
        if not ok:
            violations.append(f"non-strict reversal at x={x} for:\n{w}")
        if _tnp_vd_failure(w, x) is not None:
            violations.append(f"weak variation clause failed at x={x} for:\n{w}")
        if len(violations) > 8:
            break
    return OrthantSuiteReport(
        size=r,
        samples=samples,
        violations=tuple(violations),
        strict_pool=len(strict_pool),
        positive_det_pool=positive_det,
        weak_pool=len(weak_pool),
    )


def certificate_digest(a: ExactMatrix, k: int) -> str:
    """Digest of the full minor enumeration at order k (the instance certificate)."""
    h = hashlib.sha256()
    for rec in minors_up_to(a, k):
        h.update(f"{rec.rows}|{rec.cols}|{format_fraction(rec.value)}\n".encode())
    return h.hexdigest()
