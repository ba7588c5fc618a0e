"""Permutation statistics, insertion, and shadow lines."""

from itertools import combinations

import pytest

from snowpoly import diagrams
from snowpoly.diagrams import rothe_diagram
from snowpoly.permutations import (
    all_permutations,
    canonical,
    decreasing_runs,
    inv,
    invcode,
    inverse,
    inversions,
    is_fireworks,
    is_inverse_fireworks,
    lis_from,
    parse_one_line,
    raj,
    rajcode,
    row_one,
    schensted,
    shadow_lines,
    turning_points,
)

W = (3, 7, 2, 1, 5, 6, 4)


def brute_lis_from(w, q):
    """Oracle: enumerate all increasing subsequences starting at q."""
    start = w.index(q)
    tail = w[start + 1 :]
    best = 1
    for k in range(1, len(tail) + 1):
        for combo in combinations(tail, k):
            if all(a < b for a, b in zip((q,) + combo, combo)):
                best = max(best, k + 1)
    return best


def test_canonical_and_parse():
    assert canonical((2, 1, 3, 4)) == (2, 1)
    assert canonical((1, 2, 3)) == ()
    with pytest.raises(ValueError):
        canonical((1, 1, 2))
    assert parse_one_line("3721564") == W
    assert parse_one_line("10,2,3,4,5,6,7,8,9,1") == (10, 2, 3, 4, 5, 6, 7, 8, 9, 1)
    with pytest.raises(ValueError):
        parse_one_line("1234x")
    with pytest.raises(ValueError):
        parse_one_line("122")


def test_inversions_examples():
    assert inversions((4, 1, 5, 3, 2)) == {
        (1, 2), (1, 4), (1, 5), (3, 4), (3, 5), (4, 5),
    }
    assert invcode(()) == ()
    assert invcode((4, 1, 5, 3, 2)) == (3, 0, 2, 1)
    assert inv((4, 1, 5, 3, 2)) == 6


def test_lis_from_examples():
    assert lis_from(W, 2) == 3
    assert lis_from(tuple(range(1, 6)), 1) == 5
    assert lis_from(W, 7) == 1
    with pytest.raises(ValueError):
        lis_from(W, 9)


def test_lis_from_against_brute_force():
    for w in all_permutations(6):
        for q in w:
            assert lis_from(w, q) == brute_lis_from(w, q)


def test_rajcode_examples():
    assert rajcode(W, 7) == (4, 5, 2, 1, 1, 1)
    assert raj(W, 7) == 14
    assert rajcode((1, 2, 3), 3) == ()
    assert rajcode((1, 4, 3, 2), 4) == (2, 2, 1)


def test_rajcode_is_ambient_independent():
    for w in all_permutations(4):
        w = canonical(w)
        codes = {rajcode(w, n) for n in range(max(len(w), 1), len(w) + 4)}
        assert len(codes) == 1


def test_fireworks_examples():
    assert decreasing_runs((3, 4, 2, 1)) == [[3], [4, 2, 1]]
    assert is_inverse_fireworks((4, 3, 1, 2))
    assert not is_inverse_fireworks((2, 3, 4, 1))
    assert is_inverse_fireworks(())
    assert is_fireworks((2, 1, 3)) and not is_fireworks((3, 1, 2))


def test_schensted_final_tableaux():
    rows, _ = schensted(W)
    assert rows == ((7, 5, 3), (6, 2), (4, 1))
    rows, _ = schensted((1, 2, 3))
    assert rows == ((3, 2, 1),)
    rows, _ = schensted((2, 1))
    assert rows == ((2,), (1,))


def test_schensted_events():
    _, events = schensted(W)
    by_position = {e.position: e for e in events}
    assert by_position[4].kind == "append"
    assert by_position[4].value == 1
    assert by_position[4].column == 3
    assert by_position[6].kind == "bump"
    assert by_position[6].bumped == 4
    assert [e.position for e in events] == [7, 6, 5, 4, 3, 2, 1]


def test_insertion_column_is_lis():
    for w in all_permutations(5):
        for event in schensted(w)[1]:
            assert event.column == lis_from(w, event.value)


def test_shadow_example():
    assert turning_points(W) == {(3, 1), (1, 2), (6, 4), (2, 6)}
    lines = shadow_lines(W)
    assert len(lines) == 3
    assert lines[0].points == ((7, 4), (6, 6), (2, 7))
    assert turning_points((1, 2, 3, 4)) == frozenset()


def test_shadow_line_count_and_turning_count():
    for w in all_permutations(5):
        lines = shadow_lines(w)
        assert len(lines) == len(row_one(w))
        assert len(turning_points(w)) == len(w) - len(row_one(w))


def test_turning_points_are_dark_clouds():
    for n in range(1, 6):
        for w in all_permutations(n):
            assert turning_points(w) == diagrams.dark(rothe_diagram(w)).cells


def test_bumps_match_dark_clouds():
    for w in all_permutations(5):
        darks = dict(diagrams.dark(rothe_diagram(w)).cells)
        for event in schensted(w)[1]:
            if event.kind == "append":
                assert event.position not in darks
            else:
                assert darks.get(event.position) == event.bumped


def test_shadow_lines_trace_row_one_bump_chains():
    # inserting the later point of a shadow line bumps the earlier one
    for w in all_permutations(5):
        _, events = schensted(w)
        bump_of = {e.position: e.bumped for e in events if e.kind == "bump"}
        for line in shadow_lines(w):
            pts = line.points
            for k in range(len(pts) - 1):
                assert bump_of[pts[k + 1][0]] == pts[k][1]


def test_inverse_fireworks_rightmost_cells():
    w6 = list(all_permutations(6))
    for w in w6:
        rd = rothe_diagram(w).cells
        rightmost = {}
        for r, c in rd:
            rightmost[r] = max(rightmost.get(r, 0), c)
        fireworks = is_inverse_fireworks(w)
        if fireworks:
            for r, c in rightmost.items():
                assert c == w[r - 1] - 1
        # characterization: inverse fireworks iff rightmost cells occupy
        # distinct columns iff every rightmost cell is a dark cloud
        distinct = len(set(rightmost.values())) == len(rightmost)
        darks = diagrams.dark(rothe_diagram(w)).cells
        all_dark = all((r, c) in darks for r, c in rightmost.items())
        assert fireworks == distinct == all_dark


def test_inverse_fireworks_rajcode_count_formula():
    for w in all_permutations(5):
        if not is_inverse_fireworks(w):
            continue
        code = rajcode(w, 5)
        invset = inversions(w)
        nonempty_rows = {r for r, _ in invset}
        for r in range(1, 6):
            expected = sum(
                1
                for rp in range(r + 1, 6)
                if (r, rp) in invset
                or (w[rp - 1] > w[r - 1] and rp in nonempty_rows)
            )
            actual = code[r - 1] if r <= len(code) else 0
            assert actual == expected


def test_inverse_fireworks_count_is_bell():
    from snowpoly.qbell import bell

    for n in range(1, 7):
        count = sum(1 for w in all_permutations(n) if is_inverse_fireworks(w))
        assert count == bell(n)


def test_inverse_of_inverse():
    for w in all_permutations(5):
        assert inverse(inverse(w)) == w
