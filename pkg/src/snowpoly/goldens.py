"""Golden fixtures: the full expansion tables for S_4 and the matching box
of weak compositions.

Each row is (index, marker, terms) where terms is a list of
(coefficient, x-exponents, b-exponent) triples describing the whole
polynomial. The marker flags inverse fireworks permutations in the first
table and snowy weak compositions in the second; the top-degree layer of
each polynomial is recovered from the terms, so it is not stored twice.
"""

from __future__ import annotations

Term = tuple[int, tuple[int, ...], int]

# (one-line permutation, inverse fireworks, terms of the Grothendieck polynomial)
GROTHENDIECK_S4: list[tuple[tuple[int, ...], bool, list[Term]]] = [
    ((1, 2, 3, 4), True, [(1, (), 0)]),
    ((2, 1, 3, 4), True, [(1, (1,), 0)]),
    ((1, 3, 2, 4), True, [(1, (1,), 0), (1, (0, 1), 0), (1, (1, 1), 1)]),
    ((2, 3, 1, 4), False, [(1, (1, 1), 0)]),
    ((3, 1, 2, 4), True, [(1, (2,), 0)]),
    ((3, 2, 1, 4), True, [(1, (2, 1), 0)]),
    (
        (1, 2, 4, 3),
        True,
        [
            (1, (1,), 0),
            (1, (0, 1), 0),
            (1, (0, 0, 1), 0),
            (1, (1, 1), 1),
            (1, (1, 0, 1), 1),
            (1, (0, 1, 1), 1),
            (1, (1, 1, 1), 2),
        ],
    ),
    (
        (2, 1, 4, 3),
        True,
        [
            (1, (1, 1), 0),
            (1, (1, 0, 1), 0),
            (1, (2,), 0),
            (1, (1, 1, 1), 1),
            (1, (2, 1), 1),
            (1, (2, 0, 1), 1),
            (1, (2, 1, 1), 2),
        ],
    ),
    (
        (1, 3, 4, 2),
        False,
        [
            (1, (1, 1), 0),
            (1, (1, 0, 1), 0),
            (1, (0, 1, 1), 0),
            (2, (1, 1, 1), 1),
        ],
    ),
    (
        (1, 4, 2, 3),
        True,
        [
            (1, (2,), 0),
            (1, (0, 2), 0),
            (1, (1, 1), 0),
            (1, (2, 1), 1),
            (1, (1, 2), 1),
        ],
    ),
    ((2, 3, 4, 1), False, [(1, (1, 1, 1), 0)]),
    (
        (2, 4, 1, 3),
        True,
        [(1, (1, 2), 0), (1, (2, 1), 0), (1, (2, 2), 1)],
    ),
    (
        (3, 1, 4, 2),
        False,
        [(1, (2, 1), 0), (1, (2, 0, 1), 0), (1, (2, 1, 1), 1)],
    ),
    ((4, 1, 2, 3), True, [(1, (3,), 0)]),
    (
        (1, 4, 3, 2),
        True,
        [
            (1, (2, 1), 0),
            (1, (1, 2), 0),
            (1, (2, 0, 1), 0),
            (1, (1, 1, 1), 0),
            (1, (0, 2, 1), 0),
            (1, (2, 2), 1),
            (2, (2, 1, 1), 1),
            (2, (1, 2, 1), 1),
            (1, (2, 2, 1), 2),
        ],
    ),
    (
        (2, 4, 3, 1),
        False,
        [(1, (2, 1, 1), 0), (1, (1, 2, 1), 0), (1, (2, 2, 1), 1)],
    ),
    ((3, 2, 4, 1), False, [(1, (2, 1, 1), 0)]),
    ((3, 4, 1, 2), False, [(1, (2, 2), 0)]),
    (
        (4, 1, 3, 2),
        True,
        [(1, (3, 1), 0), (1, (3, 0, 1), 0), (1, (3, 1, 1), 1)],
    ),
    ((4, 2, 1, 3), True, [(1, (3, 1), 0)]),
    ((3, 4, 2, 1), False, [(1, (2, 2, 1), 0)]),
    ((4, 2, 3, 1), False, [(1, (3, 1, 1), 0)]),
    ((4, 3, 1, 2), True, [(1, (3, 2), 0)]),
    ((4, 3, 2, 1), True, [(1, (3, 2, 1), 0)]),
]

# (weak composition, snowy, terms of the Lascoux polynomial)
# Weakly decreasing indices, (2,1,1) among them, give bare monomials;
# the K-Kohnert enumeration confirms every row independently.
LASCOUX_C4: list[tuple[tuple[int, ...], bool, list[Term]]] = [
    ((), True, [(1, (), 0)]),
    ((1,), True, [(1, (1,), 0)]),
    ((0, 1), True, [(1, (1,), 0), (1, (0, 1), 0), (1, (1, 1), 1)]),
    ((1, 1), False, [(1, (1, 1), 0)]),
    ((2,), True, [(1, (2,), 0)]),
    ((2, 1), True, [(1, (2, 1), 0)]),
    (
        (0, 0, 1),
        True,
        [
            (1, (1,), 0),
            (1, (0, 1), 0),
            (1, (0, 0, 1), 0),
            (1, (1, 1), 1),
            (1, (1, 0, 1), 1),
            (1, (0, 1, 1), 1),
            (1, (1, 1, 1), 2),
        ],
    ),
    (
        (0, 1, 1),
        False,
        [
            (1, (1, 1), 0),
            (1, (1, 0, 1), 0),
            (1, (0, 1, 1), 0),
            (2, (1, 1, 1), 1),
        ],
    ),
    (
        (0, 2),
        True,
        [
            (1, (2,), 0),
            (1, (1, 1), 0),
            (1, (0, 2), 0),
            (1, (2, 1), 1),
            (1, (1, 2), 1),
        ],
    ),
    (
        (1, 0, 1),
        False,
        [(1, (1, 1), 0), (1, (1, 0, 1), 0), (1, (1, 1, 1), 1)],
    ),
    ((3,), True, [(1, (3,), 0)]),
    (
        (2, 0, 1),
        True,
        [(1, (2, 1), 0), (1, (2, 0, 1), 0), (1, (2, 1, 1), 1)],
    ),
    (
        (1, 2),
        True,
        [(1, (1, 2), 0), (1, (2, 1), 0), (1, (2, 2), 1)],
    ),
    (
        (0, 2, 1),
        True,
        [
            (1, (2, 1), 0),
            (1, (2, 0, 1), 0),
            (1, (1, 2), 0),
            (1, (1, 1, 1), 0),
            (1, (0, 2, 1), 0),
            (1, (2, 2), 1),
            (2, (2, 1, 1), 1),
            (2, (1, 2, 1), 1),
            (1, (2, 2, 1), 2),
        ],
    ),
    ((1, 1, 1), False, [(1, (1, 1, 1), 0)]),
    ((3, 1), True, [(1, (3, 1), 0)]),
    (
        (3, 0, 1),
        True,
        [(1, (3, 1), 0), (1, (3, 0, 1), 0), (1, (3, 1, 1), 1)],
    ),
    ((2, 2), False, [(1, (2, 2), 0)]),
    ((2, 1, 1), False, [(1, (2, 1, 1), 0)]),
    (
        (1, 2, 1),
        False,
        [(1, (2, 1, 1), 0), (1, (1, 2, 1), 0), (1, (2, 2, 1), 1)],
    ),
    ((3, 2), True, [(1, (3, 2), 0)]),
    ((3, 1, 1), False, [(1, (3, 1, 1), 0)]),
    ((2, 2, 1), False, [(1, (2, 2, 1), 0)]),
    ((3, 2, 1), True, [(1, (3, 2, 1), 0)]),
]
