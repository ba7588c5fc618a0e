"""Permutations in one-line notation and their insertion-flavored statistics.

Permutations act on {1, 2, ...} and move only finitely many values; the
canonical form trims the fixed tail, so the identity is the empty tuple.
Schensted insertion here uses the decreasing convention: rows and columns
of a partial tableau decrease, and the word is inserted from its last
letter to its first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _iter_permutations
from typing import Iterable, Iterator, NamedTuple

Permutation = tuple[int, ...]


def canonical(w: Iterable[int]) -> Permutation:
    """Validate one-line notation and trim the fixed tail.

    >>> canonical((2, 1, 3, 4))
    (2, 1)
    """
    w = tuple(int(v) for v in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    while w and w[-1] == len(w):
        w = w[:-1]
    return w


def ambient(w: Iterable[int], n: int) -> Permutation:
    """Extend with fixed points up to length n."""
    w = canonical(w)
    if n < len(w):
        raise ValueError(f"permutation moves values beyond {n}")
    return w + tuple(range(len(w) + 1, n + 1))


def inverse(w: Iterable[int]) -> Permutation:
    w = tuple(w)
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All n! one-line tuples of S_n, in lexicographic order."""
    return _iter_permutations(range(1, n + 1))


def parse_one_line(text: str) -> Permutation:
    """Parse one-line notation: bare digits up to S_9, else comma-separated.

    >>> parse_one_line("3721564")[:3]
    (3, 7, 2)
    >>> parse_one_line("10,1,2,3,4,5,6,7,8,9")[0]
    10
    """
    text = text.strip()
    if "," in text:
        values = [int(part) for part in text.split(",")]
    else:
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        values = [int(ch) for ch in text]
    w = tuple(values)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{text!r} is not a permutation in one-line notation")
    return w


# -- inversion statistics ---------------------------------------------------


def inversions(w: Iterable[int]) -> frozenset[tuple[int, int]]:
    """Pairs (i, j) with i < j and w(i) > w(j)."""
    w = tuple(w)
    return frozenset(
        (i + 1, j + 1)
        for i in range(len(w))
        for j in range(i + 1, len(w))
        if w[i] > w[j]
    )


def invcode(w: Iterable[int]) -> tuple[int, ...]:
    """Inversions counted by their first index, trailing zeros trimmed."""
    w = tuple(w)
    code = [sum(1 for j in range(i + 1, len(w)) if w[i] > w[j]) for i in range(len(w))]
    while code and code[-1] == 0:
        code.pop()
    return tuple(code)


def inv(w: Iterable[int]) -> int:
    return sum(invcode(w))


def lis_from(w: Iterable[int], q: int) -> int:
    """Length of the longest increasing subsequence starting with the value q."""
    w = tuple(w)
    if q not in w:
        raise ValueError(f"value {q} does not occur in {w}")
    best = [1] * len(w)
    for i in range(len(w) - 1, -1, -1):
        longer = [best[j] for j in range(i + 1, len(w)) if w[j] > w[i]]
        best[i] = 1 + max(longer, default=0)
    return best[w.index(q)]


def rajcode(w: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    """Entry r is n + 1 - r minus the longest increasing subsequence length
    starting at w(r). The trimmed result does not depend on the ambient n."""
    w = canonical(w)
    if n is None:
        n = len(w)
    full = ambient(w, n)
    code = [n + 1 - r - lis_from(full, full[r - 1]) for r in range(1, n + 1)]
    while code and code[-1] == 0:
        code.pop()
    return tuple(code)


def raj(w: Iterable[int], n: int | None = None) -> int:
    return sum(rajcode(w, n))


# -- fireworks classification ------------------------------------------------


def decreasing_runs(seq: Iterable[int]) -> list[list[int]]:
    """Split into maximal decreasing runs.

    >>> decreasing_runs((3, 4, 2, 1))
    [[3], [4, 2, 1]]
    """
    runs: list[list[int]] = []
    for v in seq:
        if runs and v < runs[-1][-1]:
            runs[-1].append(v)
        else:
            runs.append([v])
    return runs


def is_fireworks(w: Iterable[int]) -> bool:
    """True when the initial elements of the decreasing runs increase."""
    heads = [run[0] for run in decreasing_runs(w)]
    return all(a < b for a, b in zip(heads, heads[1:]))


def is_inverse_fireworks(w: Iterable[int]) -> bool:
    return is_fireworks(inverse(tuple(w)))


# -- Schensted insertion ------------------------------------------------------


class RowOneEvent(NamedTuple):
    """What happened in row one when w(position) was inserted."""

    position: int
    value: int
    kind: str  # "append" or "bump"
    bumped: int | None
    column: int


def schensted(w: Iterable[int]) -> tuple[tuple[tuple[int, ...], ...], tuple[RowOneEvent, ...]]:
    """Insert w(n), ..., w(1) into the empty tableau, decreasing convention.

    Returns the final partial tableau (rows, left to right decreasing) and
    the trace of row-one events in insertion order. Inserting x bumps the
    largest row entry smaller than x, or is appended when none exists.
    """
    w = tuple(w)
    rows: list[list[int]] = []
    events: list[RowOneEvent] = []
    for position in range(len(w), 0, -1):
        x = w[position - 1]
        row_one_event: RowOneEvent | None = None
        depth = 0
        while True:
            if depth == len(rows):
                rows.append([x])
                if depth == 0:
                    row_one_event = RowOneEvent(position, x, "append", None, 1)
                break
            row = rows[depth]
            hit = next((k for k, v in enumerate(row) if v < x), None)
            if hit is None:
                row.append(x)
                if depth == 0:
                    row_one_event = RowOneEvent(position, x, "append", None, len(row))
                break
            bumped = row[hit]
            row[hit] = x
            if depth == 0:
                row_one_event = RowOneEvent(position, x, "bump", bumped, hit + 1)
            x = bumped
            depth += 1
        assert row_one_event is not None
        events.append(row_one_event)
    _check_partial(rows)
    return tuple(tuple(r) for r in rows), tuple(events)


def _check_partial(rows: list[list[int]]) -> None:
    seen: set[int] = set()
    for k, row in enumerate(rows):
        if any(a <= b for a, b in zip(row, row[1:])):
            raise AssertionError(f"row {k + 1} is not decreasing: {row}")
        if k + 1 < len(rows) and len(rows[k + 1]) > len(row):
            raise AssertionError("row lengths must weakly decrease")
        for j, v in enumerate(row):
            if k + 1 < len(rows) and j < len(rows[k + 1]) and rows[k + 1][j] >= v:
                raise AssertionError("columns must decrease downward")
            if v in seen:
                raise AssertionError(f"duplicate entry {v}")
            seen.add(v)


def row_one(w: Iterable[int]) -> tuple[int, ...]:
    rows, _ = schensted(w)
    return rows[0] if rows else ()


# -- Viennot shadow lines ------------------------------------------------------


@dataclass(frozen=True)
class ShadowLine:
    """One shadow line: points (i, w(i)) listed with i strictly decreasing."""

    points: tuple[tuple[int, int], ...]

    def turning_points(self) -> tuple[tuple[int, int], ...]:
        pts = self.points
        return tuple((pts[k + 1][0], pts[k][1]) for k in range(len(pts) - 1))


def shadow_lines(w: Iterable[int]) -> tuple[ShadowLine, ...]:
    """Shadow lines of the permutation, light shed from the southeast.

    A point lies in the shadow of another when both its coordinates are
    smaller or equal; each line collects the currently unshadowed points,
    which are then removed and the construction repeats.
    """
    w = tuple(w)
    remaining = {(i, v) for i, v in enumerate(w, start=1)}
    lines: list[ShadowLine] = []
    while remaining:
        maximal = {
            p
            for p in remaining
            if not any(q != p and p[0] <= q[0] and p[1] <= q[1] for q in remaining)
        }
        lines.append(ShadowLine(tuple(sorted(maximal, reverse=True))))
        remaining -= maximal
    return tuple(lines)


def turning_points(w: Iterable[int]) -> frozenset[tuple[int, int]]:
    """Turning points of all shadow lines."""
    return frozenset(
        p for line in shadow_lines(w) for p in line.turning_points()
    )
