from math import gcd

import pytest

from score_lab import (
    EnumerationTask,
    InvalidPathError,
    NotACoreError,
    UnsupportedParametersError,
    constraints_for,
    corner_statistics,
    enumerate_md_sets,
    enumerate_paths,
    flat_count,
    phi,
    phi_context,
    phi_inverse,
    satisfies,
)
from score_lab.bijection import mapping_record

LAMBDA = (77, 41, 35, 27, 19, 11, 5, 3)
MU = (67, 65, 21, 19, 15, 13, 11, 9, 7, 3, 1)
NU = (65, 61, 21, 17, 15, 13, 11, 9, 5, 3)


def test_context_type():
    ctx = phi_context(21, 4, 4)
    assert (ctx.x, ctx.y) == (12, -2)
    assert phi_context(23, 3, 3).x == 13
    assert phi_context(22, 3, 3).moduli == (22, 25, 28, 31)


def test_phi_worked_examples():
    assert phi(LAMBDA, phi_context(21, 4, 4)) == "FDUFFUDDDDUF"
    assert phi(MU, phi_context(23, 3, 3)) == "FDUFFUDDDDUFF"
    assert phi(NU, phi_context(22, 3, 3)) == "FDUFFUDDDDUFF"
    assert phi((), phi_context(21, 4, 2)) == "FFDFFFFFDFFF"


def test_distinct_parameters_can_share_one_path():
    # The images of MU under (23, 3) and NU under (22, 3) coincide.
    assert phi(MU, phi_context(23, 3, 3)) == phi(NU, phi_context(22, 3, 3))


def test_phi_inverse_worked_examples():
    assert phi_inverse("FDUFFUDDDDUF", phi_context(21, 4, 4)) == LAMBDA
    assert phi_inverse("FDUFFUDDDDUFF", phi_context(22, 3, 3)) == NU
    assert phi_inverse("FDUFFUDDDDUFF", phi_context(23, 3, 3)) == MU
    assert phi_inverse("FFDFFFFFDFFF", phi_context(21, 4, 2)) == ()


def test_phi_rejects_non_cores():
    with pytest.raises(NotACoreError):
        phi((3,), phi_context(3, 2, 2))


def test_phi_inverse_rejects_bad_paths():
    ctx = phi_context(21, 4, 4)
    with pytest.raises(InvalidPathError):
        phi_inverse("UUU", ctx)  # wrong type
    with pytest.raises(InvalidPathError):
        phi_inverse("UDDDFFFFFFFF", ctx)  # right type, forbidden prefix U
    with pytest.raises(InvalidPathError):
        phi_inverse("FDUFFUDDDDFU", ctx)  # right type, forbidden suffix U


@pytest.mark.parametrize("s,d,p", [(5, 2, 2), (4, 3, 3), (7, 1, 2), (5, 3, 4), (8, 1, 3)])
def test_bijection_on_full_small_instances(s, d, p):
    ctx = phi_context(s, d, p)
    mds = enumerate_md_sets(EnumerationTask(s, d, p))
    images = [phi(md, ctx) for md in mds]
    assert len(set(images)) == len(images)
    assert set(images) == set(enumerate_paths(ctx.x, ctx.y, constraints_for(s, d, p)))
    for md, steps in zip(mds, images):
        assert phi_inverse(steps, ctx) == md


def test_corner_statistics_small():
    assert corner_statistics((), phi_context(5, 1, 2)) == (0, "D", 2)
    assert corner_statistics((1,), phi_context(5, 1, 2)) == (1, "F", 2)
    assert corner_statistics((3, 1), phi_context(5, 1, 2)) == (1, "F", 2)
    with pytest.raises(UnsupportedParametersError):
        corner_statistics((1,), phi_context(5, 2, 2))


@pytest.mark.parametrize("s,p", [(5, 2), (8, 2), (9, 3), (11, 3), (13, 2)])
def test_dropping_the_largest_hook_shifts_flats_by_zero_or_two(s, p):
    # For d = 1: removing the top diagonal hook keeps the flat count
    # when the top two hooks are adjacent (gap exactly 2) and adds two
    # flats otherwise.
    ctx = phi_context(s, 1, p)
    for md in enumerate_md_sets(EnumerationTask(s, 1, p)):
        if len(md) < 2:
            continue
        full = flat_count(phi(md, ctx))
        reduced = flat_count(phi(md[1:], ctx))
        if md[0] == md[1] + 2:
            assert full == reduced
        else:
            assert full == reduced - 2


def test_mapping_record_layout():
    record = mapping_record((1,), phi_context(5, 1, 2))
    assert record == {
        "md": [1],
        "s": 5,
        "d": 1,
        "p": 2,
        "path": "FDF",
        "x": 3,
        "y": -1,
        "corners": 1,
    }
    assert "corners" not in mapping_record((), phi_context(3, 2, 2))
