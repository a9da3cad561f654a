"""Sign-change counters, end-sign analysis, and orthant predicates.

Two counters drive the variation-diminution tests: ``s_minus`` counts sign
changes after dropping zeros, and ``s_plus`` is the maximum count over all
ways of assigning +1/-1 to the zero entries.  The all-zero vector of length n
is special-cased to s_plus = n and s_minus = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class SignProfile:
    """Result of analysing one vector.

    ``first_signs_at_max`` / ``last_signs_at_max`` hold the signs the first /
    last coordinate takes across all zero-assignments achieving the maximal
    sign-change count; a singleton set means that end sign is forced.
    """

    s_minus: int
    s_plus: int
    first_signs_at_max: frozenset[int]
    last_signs_at_max: frozenset[int]
    first_nonzero_sign: int | None
    last_nonzero_sign: int | None


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def s_minus(x: Sequence[Fraction]) -> int:
    """Number of sign changes in x after removing all zero entries."""
    if len(x) == 0:
        raise ValueError("sign-change count needs a nonempty vector")
    signs = [_sign(v) for v in x if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _allowed(v: Fraction) -> tuple[int, ...]:
    s = _sign(v)
    return (1, -1) if s == 0 else (s,)


def sign_profile(x: Sequence[Fraction]) -> SignProfile:
    """Full sign-change analysis of a vector (both counters plus end signs)."""
    n = len(x)
    if n == 0:
        raise ValueError("sign profile needs a nonempty vector")
    nonzero = [i for i, v in enumerate(x) if v != 0]
    if not nonzero:
        # conventions for the zero vector; every assignment attains the maximum
        return SignProfile(0, n, frozenset({1, -1}), frozenset({1, -1}), None, None)

    # forward[i][s]: max changes on x[0..i] with coordinate i assigned sign s
    def sweep(seq: Sequence[Fraction]) -> list[dict[int, int]]:
        table: list[dict[int, int]] = [{s: 0 for s in _allowed(seq[0])}]
        for v in seq[1:]:
            prev = table[-1]
            table.append(
                {s: max(c + (s != t) for t, c in prev.items()) for s in _allowed(v)}
            )
        return table

    forward = sweep(x)
    backward = sweep(list(reversed(x)))
    splus = max(forward[-1].values())
    last_at_max = frozenset(s for s, c in forward[-1].items() if c == splus)
    first_at_max = frozenset(s for s, c in backward[-1].items() if c == splus)
    return SignProfile(
        s_minus=s_minus(x),
        s_plus=splus,
        first_signs_at_max=first_at_max,
        last_signs_at_max=last_at_max,
        first_nonzero_sign=_sign(x[nonzero[0]]),
        last_nonzero_sign=_sign(x[nonzero[-1]]),
    )


def s_plus(x: Sequence[Fraction]) -> int:
    """Maximum sign-change count over all +/-1 assignments to zero entries."""
    return sign_profile(x).s_plus


def alternating_signature(n: int) -> tuple[int, ...]:
    """The vector (1, -1, 1, ..., (-1)^(n-1)) as +/-1 integers."""
    if n < 1:
        raise ValueError("length must be at least 1")
    return tuple(1 if i % 2 == 0 else -1 for i in range(n))


def is_alternating_orthant(x: Sequence[Fraction]) -> bool:
    """True iff all coordinates are nonzero with strictly alternating signs."""
    if len(x) == 0:
        raise ValueError("orthant test needs a nonempty vector")
    if any(v == 0 for v in x):
        return False
    return all(a * b < 0 for a, b in zip(x, x[1:]))


def is_mixed_orthant(x: Sequence[Fraction]) -> bool:
    """True iff x has at least one positive and one negative coordinate."""
    if len(x) == 0:
        raise ValueError("orthant test needs a nonempty vector")
    return any(v > 0 for v in x) and any(v < 0 for v in x)


def check_splus_sminus_duality(x: Sequence[Fraction]) -> bool:
    """Self-test identity s_plus(x) + s_minus(x~) = n - 1 for nonzero x,

    where x~ flips the sign of every even-position coordinate.
    """
    n = len(x)
    if n == 0 or all(v == 0 for v in x):
        raise ValueError("the identity requires a nonzero vector")
    flipped = [v if i % 2 == 0 else -v for i, v in enumerate(x)]
    return s_plus(x) + s_minus(flipped) == n - 1
