"""Characterization checks: frozen worked examples plus structural identities."""

import random
from fractions import Fraction

import pytest

from totneg import (
    AlphaChoice,
    ClassQuery,
    ExactMatrix,
    ViolationKind,
    adjugate,
    check_by_contiguous_minors,
    check_by_minor_definition,
    check_tn_snr_all_vectors,
    check_tn_snr_single_vector,
    check_tn_vd_single_vector,
    check_tnp_snr,
    check_tnp_vd,
    det,
    is_alternating_orthant,
    sign_non_reversal,
    submatrix,
    vd_check,
)

TN2 = ClassQuery("tn", 2)
TN3 = ClassQuery("tn", 3)


def fv(*values):
    return tuple(Fraction(v) for v in values)


def test_minor_definition_examples(n2, near_miss, zero_row_tnp):
    assert check_by_minor_definition(n2, TN2).holds
    v = check_by_minor_definition(near_miss, TN2)
    assert not v.holds
    assert v.witness.kind is ViolationKind.NONNEGATIVE_MINOR
    assert v.witness.rows == (1, 2) and v.witness.detail == Fraction(1)
    assert check_by_minor_definition(zero_row_tnp, ClassQuery("tnp", 3)).holds
    assert not check_by_minor_definition(zero_row_tnp, TN3).holds


def test_contiguous_examples(n3):
    assert check_by_contiguous_minors(n3, TN3).holds
    one = ExactMatrix.from_rows([[-5]])
    assert check_by_contiguous_minors(one, ClassQuery("tn", 1)).holds


def test_contiguous_agrees_with_full_enumeration_on_random_matrices():
    rng = random.Random(314)
    for _ in range(120):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = ExactMatrix.from_rows(
            [[-Fraction(rng.randint(1, 9), rng.randint(1, 3)) for _ in range(n)] for _ in range(m)]
        )
        for k in range(1, min(m, n) + 1):
            q = ClassQuery("tn", k)
            assert check_by_contiguous_minors(a, q).holds == check_by_minor_definition(a, q).holds


def test_tnp_mode_delegates_to_full_minors(zero_row_tnp):
    v = check_by_contiguous_minors(zero_row_tnp, ClassQuery("tnp", 3))
    assert v.holds and v.method == "minor_definition"


def test_sign_non_reversal_examples(n2, near_miss):
    assert sign_non_reversal(n2, fv(-3, 3), strict=True) == (True, 1)
    assert sign_non_reversal(near_miss, fv(-7, 3), strict=True) == (False, None)
    assert sign_non_reversal(ExactMatrix.identity(2), fv(1, 1), strict=True) == (True, 1)
    with pytest.raises(ValueError):
        sign_non_reversal(n2, fv(0, 0), strict=True)


def test_snr_single_vector_examples(n2, n3, near_miss):
    assert check_tn_snr_single_vector(n3, 3).holds
    v = check_tn_snr_single_vector(near_miss, 2)
    assert not v.holds
    assert v.witness.kind is ViolationKind.SIGN_REVERSAL
    assert v.witness.vector == fv(-7, 3)
    # a zero magnitude is allowed as long as the pattern stays nonzero
    assert check_tn_snr_single_vector(n2, 2, AlphaChoice.of([1, 0])).holds


def test_snr_single_vector_rejects_nonnegative_entry_first():
    a = ExactMatrix.from_rows([[-1, 0], [-2, -1]])
    v = check_tn_snr_single_vector(a, 2)
    assert not v.holds
    assert v.witness.kind is ViolationKind.NONNEGATIVE_MINOR
    assert v.witness.rows == (1,) and v.witness.cols == (2,)


def test_snr_all_vectors_examples(n2, near_miss):
    assert check_tn_snr_all_vectors(n2, 2, mode="contiguous_alt", trials=8, seed=0).holds
    v = check_tn_snr_all_vectors(near_miss, 2, mode="all_submatrices_pn", trials=400, seed=5)
    assert not v.holds
    assert v.witness.kind is ViolationKind.SIGN_REVERSAL
    one = ExactMatrix.from_rows([[-4]])
    with pytest.raises(ValueError):
        check_tn_snr_all_vectors(one, 2)


def test_vd_check_examples(n2):
    sat, _, _ = vd_check(n2, fv(1, -1))
    assert sat
    sat, pin, pout = vd_check(n2, fv(-3, 3))
    assert sat and pin.s_minus == 1 and pout.s_plus == 1
    with pytest.raises(ValueError):
        vd_check(ExactMatrix.identity(2), fv(1, 1))


def test_vd_single_vector_examples(n3, near_miss):
    assert check_tn_vd_single_vector(n3).holds
    v = check_tn_vd_single_vector(near_miss)
    assert not v.holds
    assert v.witness.kind is ViolationKind.EQUALITY_SIGN_CLAUSE
    singular = ExactMatrix.from_rows([[-1, -1], [-1, -1]])
    v2 = check_tn_vd_single_vector(singular)
    assert not v2.holds
    assert v2.witness.kind is ViolationKind.VARIATION_INCREASE
    assert v2.witness.vector == fv(-2, 2)


def test_vd_literal_end_mode_available(n3):
    assert check_tn_vd_single_vector(n3, end_mode="literal").holds


def test_test_vector_lies_in_alternating_orthant_with_exact_image(n3):
    alpha = AlphaChoice.of([1, "1/2", 3])
    for r in (2, 3):
        alpha_vec = alpha.realized(r)
        for i0 in range(3 - r + 1):
            for j0 in range(3 - r + 1):
                sub = submatrix(n3, tuple(range(i0 + 1, i0 + r + 1)), tuple(range(j0 + 1, j0 + r + 1)))
                x = adjugate(sub).matvec(alpha_vec)
                assert is_alternating_orthant(x)
                image = sub.matvec(x)
                d = det(sub)
                assert image == tuple(d * v for v in alpha_vec)


def test_alpha_choice_validation():
    with pytest.raises(ValueError):
        AlphaChoice.of([])
    with pytest.raises(ValueError):
        AlphaChoice.of([0, 0])
    with pytest.raises(ValueError):
        AlphaChoice.of([-1, 2])
    with pytest.raises(ValueError):
        AlphaChoice.of([1], global_sign=2)
    assert AlphaChoice.of([1, 0]).realized(3) == fv(1, 0, 1)
    assert AlphaChoice.of([1], global_sign=-1).realized(2) == fv(-1, 1)


def test_alpha_invariance_spot_check(n3, near_miss):
    rng = random.Random(21)
    for _ in range(10):
        mags = [Fraction(rng.randint(0, 6), rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
        if not any(mags):
            mags[0] = Fraction(1)
        alpha = AlphaChoice.of(mags, global_sign=rng.choice((1, -1)))
        assert check_tn_snr_single_vector(n3, 3, alpha).holds
        assert not check_tn_snr_single_vector(near_miss, 2, alpha).holds
        assert check_tn_vd_single_vector(n3, alpha).holds


def test_order_monotonicity(near_miss):
    # fails at order 2 but holds at order 1 (entries negative)
    assert check_tn_snr_single_vector(near_miss, 1).holds
    assert not check_tn_snr_single_vector(near_miss, 2).holds
    assert check_by_minor_definition(near_miss, ClassQuery("tn", 1)).holds


def test_tnp_snr_examples(n3, near_miss, zero_row_tnp):
    assert check_tnp_snr(zero_row_tnp, 3).holds
    assert check_tnp_snr(n3, 3).holds  # strict class sits inside the weak one
    v = check_tnp_snr(near_miss, 2)
    assert not v.holds and v.witness.kind is ViolationKind.SIGN_REVERSAL


def test_tnp_snr_alpha_must_be_strictly_positive(zero_row_tnp):
    with pytest.raises(ValueError):
        check_tnp_snr(zero_row_tnp, 3, alpha=AlphaChoice.of([1, 0]))


def test_tnp_snr_entry_precondition():
    a = ExactMatrix.from_rows([[0, 1], [-1, 0]])
    v = check_tnp_snr(a, 2)
    assert not v.holds
    assert v.witness.kind is ViolationKind.POSITIVE_MINOR
    assert v.witness.rows == (1,) and v.witness.cols == (2,)


def test_tnp_vd_examples(near_miss, zero_row_tnp):
    assert check_tnp_vd(zero_row_tnp).holds
    zero = ExactMatrix.from_rows([[0, 0], [0, 0]])
    assert check_tnp_vd(zero).holds
    assert not check_tnp_vd(near_miss).holds


def test_tnp_falsifier_modes(zero_row_tnp, near_miss):
    assert check_tnp_snr(zero_row_tnp, 3, mode="all_pn", trials=6, seed=2).holds
    assert check_tnp_snr(zero_row_tnp, 3, mode="all_alt", trials=6, seed=2).holds
    assert not check_tnp_snr(near_miss, 2, mode="all_pn", trials=200, seed=5).holds
    assert check_tnp_vd(zero_row_tnp, mode="all_pn", trials=40, seed=3).holds


def test_verdict_agreement_on_weak_class_families(zero_row_tnp):
    queries = [ClassQuery("tnp", k) for k in (1, 2, 3)]
    for q in queries:
        expect = check_by_minor_definition(zero_row_tnp, q).holds
        assert check_tnp_snr(zero_row_tnp, q.order).holds == expect
        assert check_tnp_vd(zero_row_tnp, k=q.order).holds == expect


def test_first_violation_size_is_consistent(near_miss):
    # all procedures place the first failure at size 2
    for verdict in (
        check_by_minor_definition(near_miss, TN2),
        check_by_contiguous_minors(near_miss, TN2),
        check_tn_snr_single_vector(near_miss, 2),
        check_tn_vd_single_vector(near_miss),
    ):
        assert not verdict.holds and verdict.witness.size == 2


def test_order_validation(n3):
    with pytest.raises(ValueError):
        check_tn_snr_single_vector(n3, 4)
    with pytest.raises(ValueError):
        check_by_minor_definition(n3, ClassQuery("tn", 4))
    with pytest.raises(ValueError):
        ClassQuery("tn", 0)
    with pytest.raises(ValueError):
        ClassQuery("positive", 1)
