"""Shared helpers: small brute-force generators the tests trust blindly."""

from math import gcd

import pytest

from score_lab import verify_instance


def sc_partitions_up_to(n_max):
    """Every self-conjugate partition of size <= n_max, as diagonal hook tuples.

    Plain descending search over distinct odd summands; no core logic.
    """
    found = []

    def grow(md, total):
        found.append(tuple(md))
        start = md[-1] - 2 if md else (n_max if n_max % 2 else n_max - 1)
        for c in range(start, 0, -2):
            if total + c <= n_max:
                md.append(c)
                grow(md, total + c)
                md.pop()

    if n_max >= 0:
        grow([], 0)
    return found


# The full cross-check grid: coprime (s, d) with s + d <= 16, d <= 5,
# each with p = 2..5.
SWEEP_GRID = [
    (s, d, p)
    for d in range(1, 6)
    for s in range(1, 17 - d)
    if gcd(s, d) == 1
    for p in (2, 3, 4, 5)
]


@pytest.fixture(scope="session")
def sweep_reports():
    """One verification report per grid instance, computed once."""
    return {(s, d, p): verify_instance(s, d, p) for (s, d, p) in SWEEP_GRID}
