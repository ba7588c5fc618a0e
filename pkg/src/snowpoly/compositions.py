"""Weak compositions: snowiness, rajcode equivalence and snowy representatives.

A weak composition is stored as a tuple of nonnegative integers with
trailing zeros trimmed, the canonical finite form of an eventually-zero
sequence.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable

from . import diagrams
from .diagrams import RookDiagram, key_diagram

Composition = tuple[int, ...]


def canonical(alpha: Iterable[int]) -> Composition:
    """Validate entries and trim trailing zeros.

    >>> canonical([0, 2, 1, 0])
    (0, 2, 1)
    """
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ValueError("weak composition entries must be nonnegative")
    while alpha and alpha[-1] == 0:
        alpha = alpha[:-1]
    return alpha


def size(alpha: Iterable[int]) -> int:
    return sum(alpha)


def is_snowy(alpha: Iterable[int]) -> bool:
    """True when the positive entries are pairwise distinct."""
    positives = [a for a in alpha if a > 0]
    return len(positives) == len(set(positives))


def rajcode(alpha: Iterable[int]) -> Composition:
    """rajcode of the key diagram of alpha."""
    return diagrams.rajcode(key_diagram(canonical(alpha)))


def raj(alpha: Iterable[int]) -> int:
    return sum(rajcode(alpha))


def rajcode_snowy_direct(alpha: Iterable[int]) -> Composition:
    """Closed formula for snowy alpha: entry r is alpha_r plus the number
    of later rows with a strictly larger entry."""
    alpha = canonical(alpha)
    if not is_snowy(alpha):
        raise ValueError("closed formula requires a snowy weak composition")
    return canonical(
        a + sum(1 for b in alpha[r + 1 :] if a < b) for r, a in enumerate(alpha)
    )


def dark_inverse(rook) -> Composition:
    """The snowy weak composition whose dark clouds are the given rooks."""
    if not isinstance(rook, RookDiagram):
        rook = RookDiagram(rook)
    if not rook.cells:
        return ()
    top = max(r for r, _ in rook.cells)
    cols = {r: c for r, c in rook.cells}
    return canonical(cols.get(r, 0) for r in range(1, top + 1))


def snowy_representative(alpha: Iterable[int]) -> Composition:
    """The unique snowy weak composition with the same rajcode as alpha."""
    return dark_inverse(diagrams.dark(key_diagram(canonical(alpha))))


def raj_equivalent(alpha: Iterable[int], gamma: Iterable[int]) -> bool:
    """True when the two weak compositions have equal rajcodes."""
    return rajcode(alpha) == rajcode(gamma)


def s_action(alpha: Iterable[int], i: int) -> Composition:
    """Swap entries i and i+1, padding with zeros as needed.

    >>> s_action((1,), 1)
    (0, 1)
    """
    if i < 1:
        raise ValueError("index must be positive")
    xs = list(canonical(alpha))
    while len(xs) < i + 1:
        xs.append(0)
    xs[i - 1], xs[i] = xs[i], xs[i - 1]
    return canonical(xs)


def in_cn(alpha: Iterable[int], n: int) -> bool:
    """Membership in the box: support within the first n-1 rows and
    entry r at most n - r."""
    alpha = canonical(alpha)
    if len(alpha) > n - 1:
        return False
    return all(a <= n - r for r, a in enumerate(alpha, start=1))


def enumerate_cn(n: int) -> list[Composition]:
    """All weak compositions with support in [n-1] and entry r at most n-r,
    in lexicographic order; there are n! of them."""
    if n < 1:
        raise ValueError("n must be positive")
    return [
        canonical(vec)
        for vec in product(*(range(n - r + 1) for r in range(1, n)))
    ]


def enumerate_snowy_cn(n: int) -> list[Composition]:
    """The snowy members of the box, in lexicographic order.

    Generated through the rook bijection (rooks in the staircase map to
    snowy weak compositions via dark_inverse); the brute-force filter of
    enumerate_cn is kept as a test oracle.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = [dark_inverse(placement) for placement in diagrams.rook_placements(n)]
    out.sort()
    return out


def snowy_from_rajcode(mu: Iterable[int]) -> Composition:
    """Recover the unique snowy weak composition with the given rajcode.

    Dark clouds are rebuilt row by row from the bottom: the rajcode entry of
    a row equals the number of columns already darkened below it, plus, when
    the row itself holds a dark cloud in the k-th free column, the index k.
    Raises ValueError when mu is not the rajcode of any weak composition.
    """
    mu = canonical(mu)
    darks: list[tuple[int, int]] = []
    taken: list[int] = []  # sorted dark columns strictly below the current row
    for r in range(len(mu), 0, -1):
        k = mu[r - 1] - len(taken)
        if k < 0:
            raise ValueError(f"{mu} is not a rajcode")
        if k > 0:
            col = 0
            free_seen = 0
            while free_seen < k:
                col += 1
                if col not in taken:
                    free_seen += 1
            darks.append((r, col))
            taken.append(col)
            taken.sort()
    alpha = dark_inverse(darks)
    if rajcode(alpha) != mu:
        raise ValueError(f"{mu} is not a rajcode")
    return alpha
