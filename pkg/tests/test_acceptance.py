"""Acceptance suite: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every check is exact (integer arithmetic throughout) and carries
the runtime budget it must meet.
"""

import time
from itertools import combinations

from snowpoly import compositions, diagrams, permutations, qbell, schubert
from snowpoly.compositions import enumerate_cn, is_snowy
from snowpoly.diagrams import key_diagram, rothe_diagram, snow
from snowpoly.goldens import GROTHENDIECK_S4, LASCOUX_C4
from snowpoly.kkohnert import enumerate_kkd, lascoux_via_kkd, witness_diagram
from snowpoly.permutations import (
    all_permutations,
    is_inverse_fireworks,
    lis_from,
    schensted,
    turning_points,
)
from snowpoly.polyring import (
    Polynomial,
    demazure,
    divided_difference,
    leading_monomial_taillex,
    swap_action,
    top_component,
)
from snowpoly.verify import is_scalar_multiple


class Budget:
    """Times a criterion and prints its pass line on a clean exit."""

    def __init__(self, number, seconds, label):
        self.number, self.seconds, self.label = number, seconds, label

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is None:
            assert elapsed < self.seconds, (
                f"criterion {self.number} took {elapsed:.2f}s, budget {self.seconds}s"
            )
            print(f"PASS criterion {self.number} ({elapsed:.2f}s): {self.label}")
        else:
            print(f"FAIL criterion {self.number} ({elapsed:.2f}s): {self.label}")
        return False


def test_criterion_01_golden_tables():
    with Budget(1, 1.0, "both golden tables reproduced exactly"):
        for w, marked, terms in GROTHENDIECK_S4:
            expected = Polynomial.from_terms(terms)
            assert schubert.grothendieck(w) == expected
            assert is_inverse_fireworks(w) == marked
            assert schubert.top_grothendieck(w) == top_component(expected)[1]
        for alpha, marked, terms in LASCOUX_C4:
            expected = Polynomial.from_terms(terms)
            assert schubert.lascoux(alpha) == expected
            assert is_snowy(alpha) == marked
            assert schubert.top_lascoux(alpha) == top_component(expected)[1]


def test_criterion_02_kkd_021_enumeration():
    from .test_kkohnert import KKD_021

    with Budget(2, 1.0, "the 11 ghost diagrams and the generating sum for (0,2,1)"):
        assert enumerate_kkd((0, 2, 1)) == frozenset(KKD_021)
        assert lascoux_via_kkd((0, 2, 1)) == schubert.lascoux((0, 2, 1))
        assert lascoux_via_kkd((0, 2, 1)) == Polynomial.from_terms(
            [
                (1, (0, 2, 1), 0),
                (1, (1, 1, 1), 0),
                (1, (2, 0, 1), 0),
                (1, (1, 2), 0),
                (1, (2, 1), 0),
                (2, (1, 2, 1), 1),
                (2, (2, 1, 1), 1),
                (1, (2, 2), 1),
                (1, (2, 2, 1), 2),
            ]
        )


def test_criterion_03_rajcode_equivalence():
    with Budget(3, 5.0, "rajcode agrees with the diagram statistic through S_6"):
        count = 0
        for n in range(1, 7):
            for w in all_permutations(n):
                count += 1
                assert permutations.rajcode(w, n) == diagrams.rajcode(rothe_diagram(w))
        assert count == 1 + 2 + 6 + 24 + 120 + 720


def test_criterion_04_top_grothendieck_statements():
    with Budget(4, 30.0, "leading monomials and classes of top layers over S_5"):
        perms = list(all_permutations(5))
        tops = {w: schubert.top_grothendieck(w) for w in perms}
        codes = {w: permutations.rajcode(w, 5) for w in perms}
        for w in perms:
            assert leading_monomial_taillex(tops[w])[0].xexp == codes[w]
        for u, w in combinations(perms, 2):
            assert is_scalar_multiple(tops[u], tops[w]) == (codes[u] == codes[w])
        fireworks = [w for w in perms if is_inverse_fireworks(w)]
        for w in fireworks:
            assert leading_monomial_taillex(tops[w])[1] == 1
        per_class = {}
        for w in fireworks:
            per_class[codes[w]] = per_class.get(codes[w], 0) + 1
        assert per_class.keys() == set(codes.values())
        assert all(v == 1 for v in per_class.values())


def test_criterion_05_top_lascoux_statements():
    with Budget(5, 30.0, "leading monomials and classes of top layers over the box"):
        comps = enumerate_cn(5)
        tops = {a: schubert.top_lascoux(a) for a in comps}
        codes = {a: compositions.rajcode(a) for a in comps}
        for a in comps:
            assert leading_monomial_taillex(tops[a])[0].xexp == codes[a]
        for a, b in combinations(comps, 2):
            assert is_scalar_multiple(tops[a], tops[b]) == (codes[a] == codes[b])
        snowy = [a for a in comps if is_snowy(a)]
        for a in snowy:
            assert leading_monomial_taillex(tops[a])[1] == 1
        per_class = {}
        for a in snowy:
            per_class[codes[a]] = per_class.get(codes[a], 0) + 1
        assert per_class.keys() == set(codes.values())
        assert all(v == 1 for v in per_class.values())


def test_criterion_06_kkd_formula():
    with Budget(6, 10.0, "K-Kohnert sums equal the recursion over the box for 4"):
        for alpha in enumerate_cn(4):
            assert lascoux_via_kkd(alpha) == schubert.lascoux(alpha)


def test_criterion_07_witness_construction():
    with Budget(7, 60.0, "lifted extreme diagrams realize rajcode over the box for 5"):
        for alpha in enumerate_cn(5):
            g = witness_diagram(alpha)
            assert g in enumerate_kkd(alpha)
            assert g.cells == snow(key_diagram(alpha)).cells
            assert g.weight() == compositions.rajcode(alpha)
            assert g.excess == compositions.raj(alpha) - sum(alpha)


def test_criterion_08_insertion_correspondences():
    with Budget(8, 10.0, "insertion, dark-cloud and shadow correspondences over S_6"):
        for w in all_permutations(6):
            darks = diagrams.dark(rothe_diagram(w)).cells
            dark_by_row = dict(darks)
            _, events = schensted(w)
            for event in events:
                assert event.column == lis_from(w, event.value)
                if event.kind == "append":
                    assert event.position not in dark_by_row
                else:
                    assert dark_by_row.get(event.position) == event.bumped
            assert turning_points(w) == darks


def test_criterion_09_dimension_counts():
    with Budget(9, 5.0, "inverse fireworks and snowy counts are Bell numbers"):
        expected = [1, 2, 5, 15, 52, 203]
        for n, value in zip(range(1, 7), expected):
            assert qbell.bell(n) == value
            fireworks = sum(1 for w in all_permutations(n) if is_inverse_fireworks(w))
            snowy = sum(1 for a in enumerate_cn(n) if is_snowy(a))
            assert fireworks == value
            assert snowy == value


def test_criterion_10_qbell_suite():
    with Budget(10, 10.0, "rook statistics match the q-Bell polynomials through n=7"):
        for n in range(1, 8):
            rooks = qbell.enumerate_rook_n(n)
            top = n * (n - 1) // 2
            gr_counts = [0] * (top + 1)
            for rook in rooks:
                g = qbell.gr_stat(rook, n)
                gr_counts[g] += 1
                assert g + qbell.nw_stat(rook) == top
            assert qbell.qp_trim(gr_counts) == qbell.q_bell(n)
            assert len(qbell.q_bell(n)) - 1 == top
            if n <= 7:
                assert qbell.hilb_vn(n) == qbell.qp_rev(qbell.q_bell(n))
        assert qbell.hilb_vn(3) == (1, 1, 2, 1)


def test_criterion_11_hilbert_product_formula():
    with Budget(11, 10.0, "stable Hilbert series matches the product formula"):
        product = qbell.hilb_v_truncated(8)
        assert product == qbell.hilb_v_stabilized(8)
        assert product[:4] == (1, 1, 2, 4)


def test_criterion_12_positive_expansions():
    with Budget(12, 60.0, "positive expansions into the snowy and Lascoux bases"):
        for w in all_permutations(5):
            top = schubert.top_grothendieck(w)
            coeffs = schubert.expand_top_into_snowy_basis(top, 5)
            rebuilt = Polynomial.zero()
            for alpha, c in coeffs.items():
                assert c > 0 and is_snowy(alpha)
                rebuilt = rebuilt + c * schubert.top_lascoux(alpha)
            assert rebuilt == top
        for w in all_permutations(4):
            coeffs = schubert.expand_grothendieck_into_lascoux(w, 4)
            rebuilt = Polynomial.zero()
            for alpha, g in coeffs.items():
                assert all(m.xexp == () and c > 0 for m, c in g.items())
                rebuilt = rebuilt + g * schubert.lascoux(alpha)
            assert rebuilt == schubert.grothendieck(w)


def test_criterion_13_operator_algebra():
    import random

    with Budget(13, 30.0, "operator identities and ascent-order independence"):
        rng = random.Random(1789)
        cases = 0
        while cases < 1000:
            terms = [
                (
                    rng.randint(-4, 4),
                    tuple(rng.randint(0, 5) for _ in range(rng.randint(0, 5))),
                    rng.randint(0, 2),
                )
                for _ in range(rng.randint(1, 6))
            ]
            f = Polynomial.from_terms(terms)
            i = rng.randint(1, 4)
            assert divided_difference(divided_difference(f, i), i).is_zero()
            assert demazure(demazure(f, i), i) == demazure(f, i)
            assert (Polynomial.x(i) - Polynomial.x(i + 1)) * divided_difference(
                f, i
            ) == f - swap_action(f, i)
            assert divided_difference(divided_difference(f, 1), 3) == divided_difference(
                divided_difference(f, 3), 1
            )
            assert divided_difference(
                divided_difference(divided_difference(f, 1), 2), 1
            ) == divided_difference(divided_difference(divided_difference(f, 2), 1), 2)
            assert demazure(demazure(demazure(f, 1), 2), 1) == demazure(
                demazure(demazure(f, 2), 1), 2
            )
            cases += 1
        from .test_schubert import groth_largest_ascent, lascoux_largest_ascent

        for w in all_permutations(4):
            assert schubert.grothendieck(w) == groth_largest_ascent(w)
        for alpha in enumerate_cn(4):
            assert schubert.lascoux(alpha) == lascoux_largest_ascent(alpha)
