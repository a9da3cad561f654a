"""Exact rational dense matrices: determinants, adjugates, and minor streams.

Everything here works over ``fractions.Fraction`` so that strict-sign tests
downstream never depend on a tolerance.  Matrices are immutable; indices in the
public API are 1-based (storage is row-major internally).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import DimensionError

RationalLike = Fraction | int | str | float


def to_fraction(value: RationalLike) -> Fraction:
    """Parse a rational from Fraction/int/str ("p/q", "3", "0.25") or float."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        # read the decimal literal, not the binary expansion
        return Fraction(str(value))
    raise TypeError(f"cannot interpret {value!r} as a rational")


def to_vector(values: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(to_fraction(v) for v in values)


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_vector(x: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_fraction(v) for v in x) + ")"


def check_index_set(indices: Sequence[int], bound: int, what: str = "index set") -> tuple[int, ...]:
    """Validate a strictly increasing 1-based index set within [1, bound]."""
    idx = tuple(int(i) for i in indices)
    if not idx:
        raise DimensionError(f"{what} must be nonempty")
    for a, b in zip(idx, idx[1:]):
        if a >= b:
            raise DimensionError(f"{what} must be strictly increasing, got {idx}")
    if idx[0] < 1 or idx[-1] > bound:
        raise DimensionError(f"{what} {idx} out of bounds [1, {bound}]")
    return idx


class MinorRecord(NamedTuple):
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Fraction


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable m x n matrix of exact rationals, stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise DimensionError(f"matrix shape must be positive, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries for {self.rows}x{self.cols}, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "ExactMatrix":
        if not rows or not rows[0]:
            raise DimensionError("matrix needs at least one row and one column")
        n = len(rows[0])
        flat: list[Fraction] = []
        for r in rows:
            if len(r) != n:
                raise DimensionError("ragged rows")
            flat.extend(to_fraction(v) for v in r)
        return cls(len(rows), n, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(Fraction(1 if i == j else 0) for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> Fraction:
        """1-based entry access."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise DimensionError(f"entry ({i},{j}) out of bounds for {self.rows}x{self.cols}")
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def row_list(self) -> list[list[Fraction]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> tuple[Fraction, ...]:
        if not 1 <= j <= self.cols:
            raise DimensionError(f"column {j} out of bounds")
        return tuple(self.entries[i * self.cols + (j - 1)] for i in range(self.rows))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def matvec(self, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(x) != self.cols:
            raise DimensionError(f"vector length {len(x)} does not match {self.cols} columns")
        c = self.cols
        return tuple(
            sum((self.entries[i * c + j] * x[j] for j in range(c)), Fraction(0))
            for i in range(self.rows)
        )

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionError("inner dimensions do not match")
        ot = other.transpose()
        flat = [
            sum((a * b for a, b in zip(self.entries[i * self.cols : (i + 1) * self.cols],
                                       ot.entries[j * ot.cols : (j + 1) * ot.cols])), Fraction(0))
            for i in range(self.rows)
            for j in range(other.cols)
        ]
        return ExactMatrix(self.rows, other.cols, tuple(flat))

    def scale(self, factor: RationalLike) -> "ExactMatrix":
        f = to_fraction(factor)
        return ExactMatrix(self.rows, self.cols, tuple(f * e for e in self.entries))

    def add(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in addition")
        return ExactMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def sub(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in subtraction")
        return ExactMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def entrywise_abs(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(abs(e) for e in self.entries))

    def is_entrywise_negative(self) -> bool:
        return all(e < 0 for e in self.entries)

    def is_entrywise_nonpositive(self) -> bool:
        return all(e <= 0 for e in self.entries)

    def first_entry_violating(self, strict: bool) -> tuple[int, int, Fraction] | None:
        """First (i, j, value) with value >= 0 (strict) or value > 0 (non-strict)."""
        for i in range(self.rows):
            for j in range(self.cols):
                v = self.entries[i * self.cols + j]
                if (v >= 0) if strict else (v > 0):
                    return (i + 1, j + 1, v)
        return None

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        for r in self.row_list():
            lines.append(" ".join(format_fraction(v) for v in r))
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return "\n".join(" ".join(format_fraction(v) for v in r) for r in self.row_list())


def submatrix(a: ExactMatrix, rows: Sequence[int], cols: Sequence[int]) -> ExactMatrix:
    """Submatrix on 1-based, strictly increasing row/column index sets."""
    ridx = check_index_set(rows, a.rows, "row index set")
    cidx = check_index_set(cols, a.cols, "column index set")
    flat = tuple(a.entries[(i - 1) * a.cols + (j - 1)] for i in ridx for j in cidx)
    return ExactMatrix(len(ridx), len(cidx), flat)


def _rows_as_scaled_ints(rows: list[list[Fraction]]) -> tuple[list[list[int]], Fraction]:
    """Clear denominators row by row; returns (integer rows, product of scalings)."""
    out: list[list[int]] = []
    scaling = Fraction(1)
    for r in rows:
        lcm = 1
        for x in r:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        scaling *= lcm
        out.append([int(x * lcm) for x in r])
    return out, scaling


def _det_int(m: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix (mutates m)."""
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        for i in range(k + 1, n):
            rik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pk - rik * row_k[j]) // prev
        prev = pk
    return sign * m[n - 1][n - 1]


def det_of_rows(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant of a small square matrix given as row lists."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    ints, scaling = _rows_as_scaled_ints(rows)
    return Fraction(_det_int(ints)) / scaling


def det(a: ExactMatrix) -> Fraction:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if not a.is_square:
        raise DimensionError(f"determinant needs a square matrix, got {a.rows}x{a.cols}")
    return det_of_rows(a.row_list())


def det_by_cofactor_expansion(a: ExactMatrix) -> Fraction:
    """Reference determinant by first-row cofactor expansion (test oracle)."""
    if not a.is_square:
        raise DimensionError("determinant needs a square matrix")

    def rec(rows: list[list[Fraction]]) -> Fraction:
        n = len(rows)
        if n == 1:
            return rows[0][0]
        total = Fraction(0)
        for j in range(n):
            if rows[0][j] == 0:
                continue
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = rows[0][j] * rec(minor)
            total += term if j % 2 == 0 else -term
        return total

    return rec(a.row_list())


def minor_det(a: ExactMatrix, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
    """Determinant of the (rows, cols) submatrix, 1-based index sets."""
    ridx = check_index_set(rows, a.rows, "row index set")
    cidx = check_index_set(cols, a.cols, "column index set")
    if len(ridx) != len(cidx):
        raise DimensionError("minor needs equally many rows and columns")
    sel = [[a.entries[(i - 1) * a.cols + (j - 1)] for j in cidx] for i in ridx]
    return det_of_rows(sel)


def cofactor_minor(a: ExactMatrix, i: int, j: int) -> Fraction:
    """Determinant after deleting row i and column j (1-based, unsigned).

    For a 1x1 matrix this returns -1: the empty-matrix determinant is set to -1
    by convention so that the LCP single-vector construction covers entries.
    """
    if not a.is_square:
        raise DimensionError("cofactor minors need a square matrix")
    n = a.rows
    if not (1 <= i <= n and 1 <= j <= n):
        raise DimensionError(f"({i},{j}) out of bounds for size {n}")
    if n == 1:
        return Fraction(-1)
    rows = [r for r in range(1, n + 1) if r != i]
    cols = [c for c in range(1, n + 1) if c != j]
    return minor_det(a, rows, cols)


def adjugate(a: ExactMatrix) -> ExactMatrix:
    """Adjugate matrix; satisfies a @ adj(a) = det(a) * I.  adj of 1x1 is [[1]]."""
    if not a.is_square:
        raise DimensionError("adjugate needs a square matrix")
    n = a.rows
    if n == 1:
        return ExactMatrix(1, 1, (Fraction(1),))
    rows = a.row_list()
    flat: list[Fraction] = []
    for i in range(n):
        for j in range(n):
            sel = [r[:i] + r[i + 1 :] for k, r in enumerate(rows) if k != j]
            m = det_of_rows(sel)
            flat.append(m if (i + j) % 2 == 0 else -m)
    return ExactMatrix(n, n, tuple(flat))


def minors_up_to(a: ExactMatrix, k: int) -> Iterator[MinorRecord]:
    """All minors of size 1..k, sizes ascending, index sets lexicographic."""
    if not 1 <= k <= min(a.rows, a.cols):
        raise ValueError(f"order {k} out of range [1, {min(a.rows, a.cols)}]")
    rows = a.row_list()
    for size in range(1, k + 1):
        for ridx in itertools.combinations(range(a.rows), size):
            sel_rows = [rows[i] for i in ridx]
            for cidx in itertools.combinations(range(a.cols), size):
                val = det_of_rows([[r[j] for j in cidx] for r in sel_rows])
                yield MinorRecord(tuple(i + 1 for i in ridx), tuple(j + 1 for j in cidx), val)


def contiguous_minors_up_to(a: ExactMatrix, k: int) -> Iterator[MinorRecord]:
    """Minors on consecutive row/column windows, sizes 1..k, window starts lexicographic."""
    if not 1 <= k <= min(a.rows, a.cols):
        raise ValueError(f"order {k} out of range [1, {min(a.rows, a.cols)}]")
    rows = a.row_list()
    for size in range(1, k + 1):
        for i0 in range(a.rows - size + 1):
            sel_rows = rows[i0 : i0 + size]
            for j0 in range(a.cols - size + 1):
                val = det_of_rows([r[j0 : j0 + size] for r in sel_rows])
                yield MinorRecord(
                    tuple(range(i0 + 1, i0 + size + 1)),
                    tuple(range(j0 + 1, j0 + size + 1)),
                    val,
                )


def parse_matrix(text: str) -> ExactMatrix:
    """Parse the shared text format: a header line "m n", then m rows of n rationals."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    return _parse_matrix_lines(lines)


def _parse_matrix_lines(lines: list[str]) -> ExactMatrix:
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"expected header 'm n', got {lines[0]!r}")
    try:
        m, n = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValueError(f"bad header {lines[0]!r}") from exc
    if m < 1 or n < 1:
        raise ValueError(f"matrix shape must be positive, got {m}x{n}")
    if len(lines) < 1 + m:
        raise ValueError(f"expected {m} data rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1 : 1 + m]:
        toks = ln.split()
        if len(toks) != n:
            raise ValueError(f"expected {n} entries per row, got {len(toks)} in {ln!r}")
        try:
            rows.append([Fraction(t) for t in toks])
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational in row {ln!r}: {exc}") from exc
    return ExactMatrix.from_rows(rows)


def parse_matrix_pair(text: str) -> tuple[ExactMatrix, ExactMatrix]:
    """Parse two matrices separated by a blank line (the hull input format)."""
    blocks: list[list[str]] = [[]]
    for raw in text.splitlines():
        line = raw.strip()
        if line:
            blocks[-1].append(line)
        elif blocks[-1]:
            blocks.append([])
    blocks = [b for b in blocks if b]
    if len(blocks) != 2:
        raise ValueError(f"hull input needs exactly two matrix blocks, found {len(blocks)}")
    return _parse_matrix_lines(blocks[0]), _parse_matrix_lines(blocks[1])


def parse_lcp_input(text: str) -> tuple[ExactMatrix, tuple[Fraction, ...]]:
    """Parse a matrix followed by a "q:" line carrying n rationals."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    q_at = next((i for i, ln in enumerate(lines) if ln.startswith("q:")), None)
    if q_at is None:
        raise ValueError("LCP input needs a 'q:' line")
    a = _parse_matrix_lines(lines[:q_at])
    toks = lines[q_at][2:].split()
    if not toks and q_at + 1 < len(lines):
        toks = lines[q_at + 1].split()
    if len(toks) != a.rows:
        raise ValueError(f"expected {a.rows} entries for q, got {len(toks)}")
    try:
        q = tuple(Fraction(t) for t in toks)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational in q: {exc}") from exc
    if not a.is_square:
        raise ValueError("LCP needs a square matrix")
    return a, q
