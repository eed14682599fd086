import pytest

from score_lab import (
    InvalidInputError,
    binom,
    check_shift_equivalence,
    count_corners_p2,
    count_corners_p3,
    count_sc_d1,
    count_sc_p2,
    count_sc_p3,
    count_sc_pair,
    count_sym_motzkin,
    count_via_paths,
    multinom,
)


def test_kernel_guards():
    assert binom(4, 2) == 6
    assert binom(3, -1) == 0
    assert binom(-1, 0) == 0
    assert binom(2, 5) == 0
    assert multinom(2, (0, 1, 1)) == 2
    assert multinom(2, (1, 1, 1)) == 0  # parts do not sum to n
    assert multinom(3, (-1, 2, 2)) == 0


def test_three_term_progression_counts():
    assert count_sc_p2(3, 2).value == 2
    assert count_sc_p2(5, 1).value == 5
    for d in (1, 2, 3, 4, 5):
        assert count_sc_p2(1, d).value == 1
    with pytest.raises(InvalidInputError):
        count_sc_p2(4, 2)


def test_four_term_progression_counts():
    assert count_sc_p3(3, 2).value == 2
    for d in (1, 2, 3):
        assert count_sc_p3(1, d).value == 1


def test_unit_step_counts():
    assert count_sc_d1(5, 2).value == 5
    for p in (2, 3, 4, 7):
        assert count_sc_d1(1, p).value == 1
    with pytest.raises(InvalidInputError):
        count_sc_d1(5, 1)


def test_pair_counts():
    assert count_sc_pair(2, 3).value == 2
    for s in range(1, 12):
        assert count_sc_pair(s, s + 1).value == binom(s, s // 2)
    for t in (2, 3, 8):
        assert count_sc_pair(1, t).value == 1
    with pytest.raises(InvalidInputError):
        count_sc_pair(4, 6)


def test_symmetric_motzkin_counts():
    assert count_sym_motzkin(1).value == 1
    assert count_sym_motzkin(2).value == 2
    assert count_sym_motzkin(5).value == 5


def test_formula_identities_up_to_40():
    for s in range(1, 41):
        a = count_sc_p2(s, 1).value
        assert a == count_sym_motzkin(s).value
        assert a == count_sc_d1(s, 2).value


def test_corner_counts():
    assert count_corners_p2(5, 1).value == 2
    for s in (1, 4, 9, 16):
        assert count_corners_p2(s, 0).value == 1
    assert sum(count_corners_p2(5, m).value for m in range(6)) == 5
    for s in range(1, 41):
        total_p2 = sum(count_corners_p2(s, m).value for m in range(s + 2))
        assert total_p2 == count_sc_p2(s, 1).value
        total_p3 = sum(count_corners_p3(s, m).value for m in range(s + 2))
        assert total_p3 == count_sc_p3(s, 1).value
    with pytest.raises(InvalidInputError):
        count_corners_p2(5, -1)


def test_count_methods_tagged():
    assert count_sc_p2(3, 2).method == "formula-p2"
    assert count_sc_p3(3, 2).method == "formula-p3"
    assert count_sc_d1(3, 2).method == "formula-d1"
    assert count_sc_pair(2, 3).method == "formula-pair"
    assert count_sym_motzkin(3).method == "sym-motzkin"
    assert count_via_paths(3, 2, 2).method == "dp"
    assert count_sc_pair(2, 3).as_json() == {"value": "2", "method": "formula-pair"}


def test_dp_route_agrees_with_formulas():
    for (s, d) in ((3, 2), (5, 1), (7, 2), (9, 4), (8, 3)):
        assert count_via_paths(s, d, 2).value == count_sc_p2(s, d).value
        assert count_via_paths(s, d, 3).value == count_sc_p3(s, d).value


def test_shift_equivalence():
    assert check_shift_equivalence(2, 1, 2)
    assert check_shift_equivalence(4, 3, 2)
    assert check_shift_equivalence(10, 1, 4)
    with pytest.raises(InvalidInputError):
        check_shift_equivalence(2, 2, 2)  # d must be odd
    with pytest.raises(InvalidInputError):
        check_shift_equivalence(3, 1, 2)  # s must be even
    with pytest.raises(InvalidInputError):
        check_shift_equivalence(2, 1, 3)  # p must be even
    with pytest.raises(InvalidInputError):
        check_shift_equivalence(2, 3, 2)  # s+1 shares a factor with d


def test_counts_grow_without_overflow():
    # the closed forms must stay exact far beyond 64-bit range
    assert count_sc_pair(101, 102).value == binom(101, 50)
    assert count_sc_p2(121, 2).value > 2**64
