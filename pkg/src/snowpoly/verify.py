"""Verification suites: the library-level identities checked exhaustively
at desk scale, reported one line per check.

The command-line `verify` subcommand runs these; the pytest suite covers
the same ground with finer-grained assertions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import compositions, diagrams, permutations, qbell, schubert
from .compositions import enumerate_cn, is_snowy
from .diagrams import key_diagram, rothe_diagram
from .goldens import GROTHENDIECK_S4, LASCOUX_C4
from .kkohnert import enumerate_kkd, lascoux_via_kkd, witness_diagram
from .permutations import all_permutations, is_inverse_fireworks, lis_from, schensted
from .polyring import Polynomial, leading_monomial_taillex, top_component


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _check(results: list[CheckResult], name: str, passed: bool, detail: str):
    results.append(CheckResult(name, bool(passed), detail))


def is_scalar_multiple(f: Polynomial, g: Polynomial) -> bool:
    """True when f = c * g for some nonzero rational c."""
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    monos = set(f.monomials())
    if monos != set(g.monomials()):
        return False
    mono = next(iter(monos))
    ratio = Fraction(
        f.coefficient(mono.xexp, mono.bexp), g.coefficient(mono.xexp, mono.bexp)
    )
    return all(
        Fraction(cf) == ratio * g.coefficient(m.xexp, m.bexp) for m, cf in f.items()
    )


# -- suites ---------------------------------------------------------------------


def suite_tables(scale: int | None = None) -> list[CheckResult]:
    """Both golden tables: exact polynomials, markers, and top layers."""
    results: list[CheckResult] = []
    ok = 0
    total = 0
    for w, marked, terms in GROTHENDIECK_S4:
        total += 1
        expected = Polynomial.from_terms(terms)
        good = (
            schubert.grothendieck(w) == expected
            and is_inverse_fireworks(w) == marked
            and schubert.top_grothendieck(w) == top_component(expected)[1]
        )
        ok += good
        if not good:
            _check(results, f"table row {w}", False, "mismatch")
    for alpha, marked, terms in LASCOUX_C4:
        total += 1
        expected = Polynomial.from_terms(terms)
        good = (
            schubert.lascoux(alpha) == expected
            and is_snowy(alpha) == marked
            and schubert.top_lascoux(alpha) == top_component(expected)[1]
        )
        ok += good
        if not good:
            _check(results, f"table row {alpha}", False, "mismatch")
    _check(results, "tables", ok == total, f"{ok}/{total} table rows match")
    return results


def suite_rajcode_equiv(scale: int = 6) -> list[CheckResult]:
    """rajcode from increasing subsequences equals rajcode of the
    inversion diagram, for every permutation up to the scale."""
    results: list[CheckResult] = []
    for n in range(1, scale + 1):
        count = 0
        bad = 0
        for w in all_permutations(n):
            count += 1
            if permutations.rajcode(w, n) != diagrams.rajcode(rothe_diagram(w)):
                bad += 1
        _check(
            results,
            f"rajcode-equiv S_{n}",
            bad == 0,
            f"{count} permutations checked" + ("" if bad == 0 else f", {bad} failed"),
        )
    return results


def suite_psw(scale: int = 5) -> list[CheckResult]:
    """Leading-monomial, proportionality and representative statements for
    top Grothendieck polynomials over a full symmetric group."""
    results: list[CheckResult] = []
    perms = list(all_permutations(scale))
    tops = {w: schubert.top_grothendieck(w) for w in perms}
    codes = {w: permutations.rajcode(w, scale) for w in perms}
    bad_lead = [
        w for w in perms if leading_monomial_taillex(tops[w])[0].xexp != codes[w]
    ]
    _check(
        results,
        "leading monomial is x^rajcode",
        not bad_lead,
        f"{len(perms)} permutations checked",
    )
    bad_pairs = sum(
        1
        for u, w in combinations(perms, 2)
        if is_scalar_multiple(tops[u], tops[w]) != (codes[u] == codes[w])
    )
    _check(
        results,
        "proportional iff equal rajcode",
        bad_pairs == 0,
        f"{len(perms) * (len(perms) - 1) // 2} pairs checked",
    )
    fireworks = [w for w in perms if is_inverse_fireworks(w)]
    bad_unit = [w for w in fireworks if leading_monomial_taillex(tops[w])[1] != 1]
    _check(
        results,
        "inverse fireworks leading coefficient 1",
        not bad_unit,
        f"{len(fireworks)} inverse fireworks permutations",
    )
    per_class: dict[tuple, int] = {}
    for w in fireworks:
        per_class[codes[w]] = per_class.get(codes[w], 0) + 1
    all_codes = set(codes.values())
    unique = per_class.keys() == all_codes and all(v == 1 for v in per_class.values())
    _check(
        results,
        "one inverse fireworks element per class",
        unique,
        f"{len(all_codes)} rajcode classes",
    )
    return results


def suite_top_las(scale: int = 5) -> list[CheckResult]:
    """The same three statements for top Lascoux polynomials over the box."""
    results: list[CheckResult] = []
    comps = enumerate_cn(scale)
    tops = {a: schubert.top_lascoux(a) for a in comps}
    codes = {a: compositions.rajcode(a) for a in comps}
    bad_lead = [
        a for a in comps if leading_monomial_taillex(tops[a])[0].xexp != codes[a]
    ]
    _check(
        results,
        "leading monomial is x^rajcode",
        not bad_lead,
        f"{len(comps)} compositions checked",
    )
    bad_pairs = sum(
        1
        for a, b in combinations(comps, 2)
        if is_scalar_multiple(tops[a], tops[b]) != (codes[a] == codes[b])
    )
    _check(
        results,
        "proportional iff equal rajcode",
        bad_pairs == 0,
        f"{len(comps) * (len(comps) - 1) // 2} pairs checked",
    )
    snowy = [a for a in comps if is_snowy(a)]
    bad_unit = [a for a in snowy if leading_monomial_taillex(tops[a])[1] != 1]
    _check(
        results,
        "snowy leading coefficient 1",
        not bad_unit,
        f"{len(snowy)} snowy compositions",
    )
    per_class: dict[tuple, int] = {}
    for a in snowy:
        per_class[codes[a]] = per_class.get(codes[a], 0) + 1
    all_codes = set(codes.values())
    unique = per_class.keys() == all_codes and all(v == 1 for v in per_class.values())
    _check(
        results, "one snowy element per class", unique, f"{len(all_codes)} rajcode classes"
    )
    recursive_ok = all(schubert.top_lascoux_recursive(a) == tops[a] for a in snowy)
    _check(
        results,
        "snowy top recursion agrees",
        recursive_ok,
        f"{len(snowy)} snowy compositions",
    )
    return results


def suite_kkohnert(scale: int = 4) -> list[CheckResult]:
    """K-Kohnert generating sums match the recursion, and the lifted
    extreme diagram realizes the rajcode weight."""
    results: list[CheckResult] = []
    comps = enumerate_cn(scale)
    bad_poly = [a for a in comps if lascoux_via_kkd(a) != schubert.lascoux(a)]
    _check(
        results,
        "K-Kohnert sum equals recursive Lascoux",
        not bad_poly,
        f"{len(comps)} compositions checked",
    )
    bad_witness = []
    for a in comps:
        g = witness_diagram(a)
        ok = (
            g in enumerate_kkd(a)
            and g.cells == diagrams.snow(key_diagram(a)).cells
            and g.weight() == compositions.rajcode(a)
            and g.excess == compositions.raj(a) - sum(a)
        )
        if not ok:
            bad_witness.append(a)
    _check(
        results,
        "witness diagram realizes rajcode",
        not bad_witness,
        f"{len(comps)} compositions checked",
    )
    return results


def suite_shadow(scale: int = 6) -> list[CheckResult]:
    """Insertion, shadow-line and dark-cloud correspondences over S_n."""
    results: list[CheckResult] = []
    count = 0
    bad = 0
    for n in range(1, scale + 1):
        for w in all_permutations(n):
            count += 1
            darks = diagrams.dark(rothe_diagram(w)).cells
            dark_by_row = {r: c for r, c in darks}
            _, events = schensted(w)
            ok = True
            for event in events:
                if event.column != lis_from(w, event.value):
                    ok = False
                if event.kind == "append":
                    ok = ok and event.position not in dark_by_row
                else:
                    ok = ok and dark_by_row.get(event.position) == event.bumped
            ok = ok and permutations.turning_points(w) == darks
            bad += not ok
    _check(
        results,
        "insertion and shadow correspondences",
        bad == 0,
        f"{count} permutations checked",
    )
    return results


def suite_qbell(scale: int = 7) -> list[CheckResult]:
    """q-Bell identities, rook statistics, dimension counts and the two
    Hilbert series formulas."""
    results: list[CheckResult] = []
    ok = True
    for n in range(1, scale + 1):
        rooks = qbell.enumerate_rook_n(n)
        gr_sum = [0] * (n * (n - 1) // 2 + 1)
        for rook in rooks:
            g = qbell.gr_stat(rook, n)
            gr_sum[g] += 1
            if g + qbell.nw_stat(rook) != n * (n - 1) // 2:
                ok = False
        if qbell.qp_trim(gr_sum) != qbell.q_bell(n):
            ok = False
        for k in range(n + 1):
            by_size = [0] * (n * (n - 1) // 2 + 1)
            for rook in rooks:
                if len(rook) == n - k:
                    by_size[qbell.gr_stat(rook, n)] += 1
            if qbell.qp_trim(by_size) != qbell.q_stirling(n, k):
                ok = False
        if len(rooks) != qbell.bell(n) or sum(qbell.q_bell(n)) != qbell.bell(n):
            ok = False
    _check(results, "rook statistics and q-Bell sums", ok, f"n up to {scale}")
    dims_ok = True
    for n in range(1, min(scale, 6) + 1):
        fireworks, snowy = schubert.vhat_basis(n)
        if len(fireworks) != qbell.bell(n) or len(snowy) != qbell.bell(n):
            dims_ok = False
    _check(results, "basis sizes are Bell numbers", dims_ok, f"n up to {min(scale, 6)}")
    try:
        hilb_ok = all(
            qbell.hilb_vn(n) == qbell.qp_rev(qbell.q_bell(n))
            for n in range(1, min(scale, 6) + 1)
        )
        hilb_msg = f"n up to {min(scale, 6)}"
    except ArithmeticError as err:
        hilb_ok, hilb_msg = False, str(err)
    _check(results, "Hilbert series routes agree", hilb_ok, hilb_msg)
    degree = max(3, min(8, scale + 1))
    try:
        stable = qbell.hilb_v_stabilized(degree)
        product = qbell.hilb_v_truncated(degree)
        stable_ok = stable == product and product[:4] == (1, 1, 2, 4)
        stable_msg = f"coefficients {' '.join(map(str, product))}"
    except ArithmeticError as err:
        stable_ok, stable_msg = False, str(err)
    _check(results, "stable Hilbert series product formula", stable_ok, stable_msg)
    return results


def suite_expansions(scale: int = 5) -> list[CheckResult]:
    """Positive expansions: top layers into the snowy basis and full
    Grothendieck polynomials into Lascoux polynomials."""
    results: list[CheckResult] = []
    n = scale
    perms = list(all_permutations(n))
    bad = []
    for w in perms:
        top = schubert.top_grothendieck(w)
        try:
            coeffs = schubert.expand_top_into_snowy_basis(top, n)
        except ValueError:
            bad.append(w)
            continue
        rebuilt = Polynomial.zero()
        for alpha, c in coeffs.items():
            if c < 0:
                bad.append(w)
            rebuilt = rebuilt + c * schubert.top_lascoux(alpha)
        if rebuilt != top:
            bad.append(w)
    _check(
        results,
        "top layers expand positively into the snowy basis",
        not bad,
        f"{len(perms)} permutations at n={n}",
    )
    full_n = min(n, 4)
    count = 0
    bad_full = []
    for w in all_permutations(full_n):
        count += 1
        try:
            schubert.expand_grothendieck_into_lascoux(w, full_n)
        except ArithmeticError:
            bad_full.append(w)
    _check(
        results,
        "Grothendieck expands into Lascoux over nonnegative b-polynomials",
        not bad_full,
        f"{count} permutations at n={full_n}",
    )
    return results


SUITES = {
    "tables": (suite_tables, None),
    "rajcode-equiv": (suite_rajcode_equiv, 6),
    "psw": (suite_psw, 5),
    "top-las": (suite_top_las, 5),
    "kkohnert": (suite_kkohnert, 4),
    "shadow": (suite_shadow, 6),
    "qbell": (suite_qbell, 7),
    "expansions": (suite_expansions, 5),
}


def run_suite(name: str, scale: int | None = None) -> list[CheckResult]:
    """Run one suite by name, or all of them; each check carries the wall
    time of its suite divided evenly."""
    if name == "all":
        results: list[CheckResult] = []
        for key in SUITES:
            results.extend(run_suite(key, scale))
        return results
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    fn, default = SUITES[name]
    start = time.perf_counter()
    if scale is None:
        results = fn(default) if default is not None else fn()
    else:
        results = fn(scale)
    elapsed = time.perf_counter() - start
    for r in results:
        r.seconds = elapsed / max(len(results), 1)
    return results
