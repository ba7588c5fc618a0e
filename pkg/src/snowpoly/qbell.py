"""q-Stirling and q-Bell numbers, staircase rook statistics, and the Hilbert
series of the top spans.

Univariate q-polynomials are plain tuples of integer coefficients indexed
by q-exponent, with trailing zeros trimmed.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable

from . import compositions
from .compositions import dark_inverse
from .diagrams import RookDiagram, rook_placements, stair

QPolynomial = tuple[int, ...]


def qp_trim(coeffs: Iterable[int]) -> QPolynomial:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def qp_add(p: QPolynomial, q: QPolynomial) -> QPolynomial:
    n = max(len(p), len(q))
    return qp_trim(
        (p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0) for k in range(n)
    )


def qp_mul(p: QPolynomial, q: QPolynomial, degree_cap: int | None = None) -> QPolynomial:
    if not p or not q:
        return ()
    top = len(p) + len(q) - 2
    if degree_cap is not None:
        top = min(top, degree_cap)
    out = [0] * (top + 1)
    for i, a in enumerate(p):
        if a == 0 or i > top:
            continue
        for j, b in enumerate(q):
            if i + j > top:
                break
            out[i + j] += a * b
    return qp_trim(out)


def qp_degree(p: QPolynomial) -> int:
    """Degree of a trimmed q-polynomial; -1 for zero."""
    return len(p) - 1


def qp_rev(p: QPolynomial) -> QPolynomial:
    """Reverse the coefficient vector: q^deg * p(1/q)."""
    return qp_trim(reversed(p))


def q_int(n: int) -> QPolynomial:
    """The q-integer 1 + q + ... + q^(n-1)."""
    return (1,) * n


@lru_cache(maxsize=None)
def q_stirling(n: int, k: int) -> QPolynomial:
    """q-analogue of the Stirling number of the second kind."""
    if n < 0 or k < 0:
        return ()
    if n == 0:
        return (1,) if k == 0 else ()
    shifted = qp_mul((0,) * (k - 1) + (1,), q_stirling(n - 1, k - 1)) if k >= 1 else ()
    return qp_add(shifted, qp_mul(q_int(k), q_stirling(n - 1, k)))


def q_bell(n: int) -> QPolynomial:
    """Sum of the q-Stirling numbers over all part counts."""
    total: QPolynomial = ()
    for k in range(n + 1):
        total = qp_add(total, q_stirling(n, k))
    return total


@lru_cache(maxsize=None)
def stirling(n: int, k: int) -> int:
    """Stirling number of the second kind."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return stirling(n - 1, k - 1) + k * stirling(n - 1, k)


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Bell number, by the binomial recurrence."""
    if n == 0:
        return 1
    return sum(comb(n - 1, j) * bell(j) for j in range(n))


# -- rook statistics -----------------------------------------------------------


def enumerate_rook_n(n: int) -> list[RookDiagram]:
    """Non-attacking rook diagrams inside the staircase of size n."""
    return [RookDiagram(cells) for cells in rook_placements(n)]


def gr_stat(rook: RookDiagram, n: int) -> int:
    """Unmarked staircase cells after each rook marks its column upward and
    its row leftward."""
    board = stair(n).cells
    if not rook.cells <= board:
        raise ValueError(f"rook diagram is not contained in the staircase of size {n}")
    marked: set[tuple[int, int]] = set()
    for r, c in rook.cells:
        marked.update((rp, c) for rp in range(1, r + 1))
        marked.update((r, cp) for cp in range(1, c + 1))
    return len(board - marked)


def nw_stat(rook: RookDiagram) -> int:
    """Number of positions weakly above or weakly left of some rook,
    which is raj of the snowy weak composition with these dark clouds."""
    marked: set[tuple[int, int]] = set()
    for r, c in rook.cells:
        marked.update((rp, c) for rp in range(1, r + 1))
        marked.update((r, cp) for cp in range(1, c + 1))
    return len(marked)


# -- Hilbert series --------------------------------------------------------------


@lru_cache(maxsize=None)
def hilb_vn(n: int) -> QPolynomial:
    """Degree generating polynomial of the top span at level n.

    Computed three ways and checked to agree: raj over snowy box
    compositions, the northwest statistic over staircase rooks, and the
    reversed q-Bell polynomial.
    """
    if n < 1:
        raise ValueError("n must be positive")
    top = n * (n - 1) // 2
    by_raj = [0] * (top + 1)
    for placement in rook_placements(n):
        alpha = dark_inverse(placement)
        by_raj[compositions.raj(alpha)] += 1
    by_nw = [0] * (top + 1)
    for placement in rook_placements(n):
        by_nw[nw_stat(RookDiagram(placement))] += 1
    h1 = qp_trim(by_raj)
    h2 = qp_trim(by_nw)
    h3 = qp_rev(q_bell(n))
    if not (h1 == h2 == h3):
        raise ArithmeticError(
            f"Hilbert series routes disagree at n={n}: {h1} vs {h2} vs {h3}"
        )
    return h1


def hilb_v_truncated(n_degrees: int) -> QPolynomial:
    """Coefficients of the stable Hilbert series up to the given degree,
    from the product over m of (1 + q^m / (1 - q)) with 1/(1-q) expanded as
    a truncated geometric sum."""
    cap = n_degrees
    if cap < 0:
        raise ValueError("degree bound must be nonnegative")
    acc: QPolynomial = (1,)
    for m in range(1, cap + 1):
        factor = qp_trim([1] + [0] * (m - 1) + [1] * (cap - m + 1))
        acc = qp_mul(acc, factor, degree_cap=cap)
    return qp_trim((acc + (0,) * (cap + 1))[: cap + 1])


def hilb_v_stabilized(n_degrees: int) -> QPolynomial:
    """Degree-capped hilb_vn(n) once consecutive levels agree.

    Levels are increased until the truncations of two consecutive Hilbert
    polynomials coincide, with a hard cap of n_degrees + 2; failing to
    stabilize under the cap is an error, never silently accepted.
    """
    cap = n_degrees + 2

    def truncated(n: int) -> QPolynomial:
        return qp_trim(hilb_vn(n)[: n_degrees + 1])

    prev = truncated(1)
    for n in range(2, cap + 1):
        cur = truncated(n)
        if cur == prev:
            return cur
        prev = cur
    raise ArithmeticError(
        f"Hilbert series failed to stabilize below degree {n_degrees + 1} with n <= {cap}"
    )
