"""Free rational Motzkin paths with factor, prefix, and suffix constraints.

A free rational Motzkin path of type (x, y) is a word over the steps
U = (1, 1), D = (1, -1), F = (1, 0) of length x whose height changes
add up to y; "free" means the path may wander below its baseline.
Paths are plain strings over the alphabet ``UDF``.

The constraint sets produced by `constraints_for` describe the image of
the self-conjugate core encoding (see `score_lab.bijection`): the
forbidden patterns are always of the shapes ``UF^iU`` (factor),
``F^jU`` (prefix), and ``UF^k`` (suffix), with ranges depending on the
parities of s and d and on the progression length p.

Counting is available through two independent routes: exhaustive
generation (`enumerate_paths`) and a dynamic program over a small
automaton tracking the suffix shape (`count_paths_dp`).  They must
agree exactly, and the test suite enforces that.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import InvalidInputError, InvalidPathError

__all__ = [
    "PathConstraintSet",
    "constraints_for",
    "path_type",
    "flat_count",
    "last_step",
    "satisfies",
    "enumerate_paths",
    "count_paths_dp",
    "path_record",
    "path_csv_row",
]

_STEPS = ("U", "D", "F")
_HEIGHT = {"U": 1, "D": -1, "F": 0}


@dataclass(frozen=True)
class PathConstraintSet:
    """Forbidden factors/prefixes/suffixes for one parameter triple."""

    p: int
    parity_case: str  # one of "odd_even", "odd_odd", "even_odd"
    forbidden_factors: tuple[str, ...]
    forbidden_prefixes: tuple[str, ...]
    forbidden_suffixes: tuple[str, ...]


EMPTY_CONSTRAINTS = PathConstraintSet(2, "unconstrained", (), (), ())


@lru_cache(maxsize=None)
def constraints_for(s: int, d: int, p: int) -> PathConstraintSet:
    """Constraint set for self-conjugate (s, s+d, ..., s+pd)-cores.

    Factor bans ``UF^iU`` for i <= p-3 apply in every parity case.  The
    prefix range ``F^jU`` and suffix range ``UF^k`` depend on the
    parities of s and d; notably both odd-d cases forbid a bare trailing
    U already at p = 2.
    """
    _check_progression(s, d, p)
    if s % 2 == 1 and d % 2 == 0:
        case = "odd_even"
        prefix_top = (p - 4) // 2 if p >= 4 else -1
        suffix_top = (p - 3) // 2 if p >= 3 else -1
    elif s % 2 == 1:
        case = "odd_odd"
        prefix_top = (p - 4) // 2 if p >= 4 else -1
        suffix_top = p - 2
    else:
        case = "even_odd"
        prefix_top = (p - 3) // 2 if p >= 3 else -1
        suffix_top = p - 2
    factors = tuple("U" + "F" * i + "U" for i in range(p - 2))
    prefixes = tuple("F" * j + "U" for j in range(prefix_top + 1))
    suffixes = tuple("U" + "F" * k for k in range(suffix_top + 1))
    return PathConstraintSet(p, case, factors, prefixes, suffixes)


def _check_progression(s: int, d: int, p: int) -> None:
    if not (isinstance(s, int) and isinstance(d, int) and s >= 1 and d >= 1):
        raise InvalidInputError(f"s and d must be positive integers, got {s!r}, {d!r}")
    if gcd(s, d) != 1:
        raise InvalidInputError(f"s={s} and d={d} must be coprime")
    if not (isinstance(p, int) and p >= 2):
        raise InvalidInputError(f"progression length p must be an integer >= 2, got {p!r}")


def _validate_steps(steps: str) -> str:
    if not isinstance(steps, str) or any(c not in _HEIGHT for c in steps):
        raise InvalidPathError(f"steps must be a string over U/D/F, got {steps!r}")
    return steps


def path_type(steps: str) -> tuple[int, int]:
    """Endpoint (x, y) of the path: length and final height."""
    _validate_steps(steps)
    return len(steps), steps.count("U") - steps.count("D")


def flat_count(steps: str) -> int:
    """Number of F steps."""
    _validate_steps(steps)
    return steps.count("F")


def last_step(steps: str) -> str | None:
    """Final step letter, or None for the empty path."""
    _validate_steps(steps)
    return steps[-1] if steps else None


def satisfies(steps: str, constraints: PathConstraintSet, x: int, y: int) -> bool:
    """True when the path has type (x, y) and avoids every forbidden pattern."""
    _validate_steps(steps)
    if path_type(steps) != (x, y):
        return False
    if any(w in steps for w in constraints.forbidden_factors):
        return False
    if any(steps.startswith(w) for w in constraints.forbidden_prefixes):
        return False
    return not any(steps.endswith(w) for w in constraints.forbidden_suffixes)


def enumerate_paths(x: int, y: int, constraints: PathConstraintSet) -> list[str]:
    """All admissible paths of type (x, y), in U < D < F lexicographic order.

    Generates every type-(x, y) word (pruning only on height
    feasibility) and filters through `satisfies`, so the result is a
    constraint-logic-free oracle for `count_paths_dp`.
    """
    if not (isinstance(x, int) and x >= 0):
        raise InvalidInputError(f"path length must be a nonnegative integer, got {x!r}")
    if abs(y) > x:
        return []
    out: list[str] = []
    prefix: list[str] = []

    def grow(height: int) -> None:
        remaining = x - len(prefix)
        if remaining == 0:
            word = "".join(prefix)
            if satisfies(word, constraints, x, y):
                out.append(word)
            return
        for step in _STEPS:
            nxt = height + _HEIGHT[step]
            if abs(y - nxt) <= remaining - 1:
                prefix.append(step)
                grow(nxt)
                prefix.pop()

    grow(0)
    return out


def count_paths_dp(x: int, y: int, constraints: PathConstraintSet) -> int:
    """Number of admissible paths of type (x, y), by automaton DP.

    The automaton state records just enough of the recent past to spot
    the forbidden shapes: an all-flat prefix of t steps (``pre``, t,
    saturating), or a most recent non-flat step U followed by m flats
    (``u``, m, saturating), or anything ending in D (``idle``).  Counts
    are exact big integers.
    """
    if not (isinstance(x, int) and x >= 0):
        raise InvalidInputError(f"path length must be a nonnegative integer, got {x!r}")
    if abs(y) > x:
        return 0
    factor_top = max((len(w) - 2 for w in constraints.forbidden_factors), default=-1)
    prefix_top = max((len(w) - 1 for w in constraints.forbidden_prefixes), default=-1)
    suffix_top = max((len(w) - 1 for w in constraints.forbidden_suffixes), default=-1)
    ucap = max(factor_top, suffix_top) + 1
    pcap = prefix_top + 1

    PRE, UP, IDLE = 0, 1, 2
    layer: dict[tuple[int, int, int], int] = {(0, PRE, 0): 1}
    for pos in range(x):
        remaining = x - pos - 1
        nxt: dict[tuple[int, int, int], int] = {}
        for (height, kind, run), ways in layer.items():
            moves = []
            if kind == PRE:
                if run > prefix_top:
                    moves.append((1, UP, 0))
                moves.append((-1, IDLE, 0))
                moves.append((0, PRE, min(run + 1, pcap)))
            elif kind == UP:
                if run > factor_top:
                    moves.append((1, UP, 0))
                moves.append((-1, IDLE, 0))
                moves.append((0, UP, min(run + 1, ucap)))
            else:
                moves.append((1, UP, 0))
                moves.append((-1, IDLE, 0))
                moves.append((0, IDLE, 0))
            for dh, nkind, nrun in moves:
                h = height + dh
                if abs(y - h) <= remaining:
                    key = (h, nkind, nrun)
                    nxt[key] = nxt.get(key, 0) + ways
        layer = nxt

    total = 0
    for (height, kind, run), ways in layer.items():
        if height != y:
            continue
        if kind == UP and run <= suffix_top:
            continue
        total += ways
    return total


def path_record(steps: str) -> dict:
    """JSON-ready record for one path."""
    x, y = path_type(steps)
    return {"steps": steps, "x": x, "y": y, "flats": flat_count(steps)}


def path_csv_row(steps: str) -> str:
    """CSV row ``steps,x,y,flats,last`` for one path."""
    x, y = path_type(steps)
    return f"{steps},{x},{y},{flat_count(steps)},{last_step(steps) or '-'}"
