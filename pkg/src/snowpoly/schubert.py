"""Divided-difference recursions for Grothendieck and Lascoux polynomials,
their top-degree components, and basis expansions of the spanned spaces.

All recursions are memoized on canonical keys; cached values are immutable
polynomials, so concurrent lookups can at worst recompute an identical
value.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from . import compositions, permutations
from .compositions import (
    Composition,
    enumerate_cn,
    in_cn,
    is_snowy,
    s_action,
    snowy_from_rajcode,
)
from .permutations import Permutation, all_permutations, is_inverse_fireworks
from .polyring import (
    Monomial,
    Polynomial,
    beta_component,
    demazure,
    divided_difference,
    leading_monomial_taillex,
    taillex_key,
    top_component,
)

_EXPANSION_STEP_CAP = 200_000


def grothendieck(w: Iterable[int]) -> Polynomial:
    """The Grothendieck polynomial, by ascent recursion up to the longest
    element of the minimal symmetric group containing w."""
    return _grothendieck(permutations.canonical(w))


@lru_cache(maxsize=None)
def _grothendieck(w: Permutation) -> Polynomial:
    n = len(w)
    if n == 0:
        return Polynomial.one()
    if all(w[k] > w[k + 1] for k in range(n - 1)):
        return Polynomial.x_monomial(range(n - 1, 0, -1))
    i = next(k + 1 for k in range(n - 1) if w[k] < w[k + 1])
    longer = list(w)
    longer[i - 1], longer[i] = longer[i], longer[i - 1]
    f = (Polynomial.one() + Polynomial.beta() * Polynomial.x(i + 1)) * _grothendieck(
        permutations.canonical(longer)
    )
    return divided_difference(f, i)


def schubert_polynomial(w: Iterable[int]) -> Polynomial:
    """The b^0 layer of the Grothendieck polynomial."""
    return beta_component(grothendieck(w), 0)


def top_grothendieck(w: Iterable[int]) -> Polynomial:
    """The Castelnuovo-Mumford polynomial: top b-layer of grothendieck(w)."""
    return top_component(grothendieck(w))[1]


def lascoux(alpha: Iterable[int]) -> Polynomial:
    """The Lascoux polynomial, by ascent recursion toward the decreasing sort."""
    return _lascoux(compositions.canonical(alpha))


@lru_cache(maxsize=None)
def _lascoux(alpha: Composition) -> Polynomial:
    ascent = _first_ascent(alpha)
    if ascent is None:
        return Polynomial.x_monomial(alpha)
    f = (Polynomial.one() + Polynomial.beta() * Polynomial.x(ascent + 1)) * _lascoux(
        s_action(alpha, ascent)
    )
    return demazure(f, ascent)


def _first_ascent(alpha: Composition) -> int | None:
    for k in range(len(alpha) - 1):
        if alpha[k] < alpha[k + 1]:
            return k + 1
    return None


def key_polynomial(alpha: Iterable[int]) -> Polynomial:
    """The b^0 layer of the Lascoux polynomial."""
    return beta_component(lascoux(alpha), 0)


def top_lascoux(alpha: Iterable[int]) -> Polynomial:
    """Top b-layer of the Lascoux polynomial."""
    return top_component(lascoux(alpha))[1]


def top_lascoux_recursive(alpha: Iterable[int]) -> Polynomial:
    """Direct recursion for the top Lascoux polynomial of a snowy composition:
    the monomial x^alpha when alpha is weakly decreasing, and otherwise the
    ascent step f -> demazure(x_{i+1} * f, i). Must agree with top_lascoux."""
    alpha = compositions.canonical(alpha)
    if not is_snowy(alpha):
        raise ValueError("recursion only applies to snowy weak compositions")
    return _top_lascoux_recursive(alpha)


@lru_cache(maxsize=None)
def _top_lascoux_recursive(alpha: Composition) -> Polynomial:
    ascent = _first_ascent(alpha)
    if ascent is None:
        return Polynomial.x_monomial(alpha)
    f = Polynomial.x(ascent + 1) * _top_lascoux_recursive(s_action(alpha, ascent))
    return demazure(f, ascent)


# -- basis expansions ---------------------------------------------------------


def expand_top_into_snowy_basis(f: Polynomial, n: int) -> dict[Composition, int]:
    """Expand a member of the top span into the snowy top Lascoux basis.

    Greedy elimination on tail-lex leading monomials: each leading monomial
    must be the rajcode of a snowy composition in the box for n, whose top
    Lascoux polynomial has that leading monomial with coefficient one.
    Raises ValueError when no basis element matches, which signals that f
    lies outside the span.
    """
    if any(m.bexp for m in f.monomials()):
        raise ValueError("top-layer expansion expects a polynomial free of b")
    coeffs: dict[Composition, int] = {}
    remainder = f
    while remainder:
        mono, coeff = leading_monomial_taillex(remainder)
        try:
            alpha = snowy_from_rajcode(mono.xexp)
        except ValueError:
            raise ValueError(
                f"leading monomial {mono.xexp} matches no snowy basis element"
            ) from None
        if not in_cn(alpha, n):
            raise ValueError(f"basis element {alpha} falls outside the box for n={n}")
        coeffs[alpha] = coeffs.get(alpha, 0) + coeff
        remainder = remainder - coeff * top_lascoux(alpha)
        if remainder:
            new_lead = leading_monomial_taillex(remainder)[0]
            assert taillex_key(new_lead.xexp) < taillex_key(mono.xexp)
    return {a: c for a, c in coeffs.items() if c}


def _select_pivot(remainder: Polynomial) -> tuple[Monomial, int]:
    """Pivot term: minimal x-degree, then minimal b-exponent, then tail-lex
    maximal monomial."""
    best = None
    for mono, coeff in remainder.items():
        key = (mono.x_degree(), mono.bexp)
        if best is None or key < best[0] or (
            key == best[0] and taillex_key(mono.xexp) > taillex_key(best[1].xexp)
        ):
            best = (key, mono, coeff)
    assert best is not None
    return best[1], best[2]


def expand_grothendieck_into_lascoux(
    w: Iterable[int], n: int | None = None
) -> dict[Composition, Polynomial]:
    """Coefficients g_alpha(b) with grothendieck(w) = sum g_alpha * lascoux(alpha).

    Greedy elimination against the key-polynomial leading terms; if it fails
    to finish within the step cap, an exact linear solve over the rationals
    takes over. The reconstruction is verified before returning and the
    coefficients are checked to be polynomials in b with nonnegative integer
    coefficients.
    """
    w = permutations.canonical(w)
    if n is None:
        n = max(len(w), 1)
    target = grothendieck(w)
    coeffs: dict[Composition, dict[int, int]] = {}
    remainder = target
    steps = 0
    while remainder and steps < _EXPANSION_STEP_CAP:
        steps += 1
        mono, coeff = _select_pivot(remainder)
        alpha = mono.xexp
        layer = coeffs.setdefault(alpha, {})
        layer[mono.bexp] = layer.get(mono.bexp, 0) + coeff
        remainder = remainder - coeff * Polynomial.term(1, (), mono.bexp) * lascoux(alpha)
    if remainder:
        coeffs = _expand_by_linear_solve(target, n)
    out: dict[Composition, Polynomial] = {}
    for alpha, layer in coeffs.items():
        g = Polynomial({Monomial((), b): c for b, c in layer.items() if c})
        if g:
            out[alpha] = g
    _verify_lascoux_expansion(w, target, out, n)
    return out


def _verify_lascoux_expansion(w, target, out, n):
    rebuilt = Polynomial.zero()
    for alpha, g in out.items():
        rebuilt = rebuilt + g * lascoux(alpha)
    if rebuilt != target:
        raise ArithmeticError(f"expansion of {w} failed to reconstruct")
    for alpha, g in out.items():
        if not in_cn(alpha, n):
            raise ArithmeticError(f"expansion of {w} leaves the box for n={n}: {alpha}")
        if any(c < 0 for _, c in g.items()):
            raise ArithmeticError(f"expansion of {w} has a negative coefficient at {alpha}")


def _expand_by_linear_solve(target: Polynomial, n: int) -> dict[Composition, dict[int, int]]:
    """Exact rational solve of target against the spanning set b^j * lascoux(alpha)."""
    bmax = target.beta_degree()
    columns: list[tuple[Composition, int, Polynomial]] = []
    for alpha in enumerate_cn(n):
        base = lascoux(alpha)
        for j in range(bmax + 1):
            columns.append((alpha, j, Polynomial.term(1, (), j) * base))
    monos = sorted(
        {m for _, _, p in columns for m in p.monomials()} | set(target.monomials()),
        key=lambda m: (taillex_key(m.xexp), m.bexp),
    )
    index = {m: k for k, m in enumerate(monos)}
    rows = len(monos)
    matrix = [[Fraction(0)] * (len(columns) + 1) for _ in range(rows)]
    for col, (_, _, p) in enumerate(columns):
        for m, c in p.items():
            matrix[index[m]][col] = Fraction(c)
    for m, c in target.items():
        matrix[index[m]][-1] = Fraction(c)
    pivots: list[tuple[int, int]] = []
    row_at = 0
    for col in range(len(columns)):
        pivot_row = next(
            (r for r in range(row_at, rows) if matrix[r][col] != 0), None
        )
        if pivot_row is None:
            continue
        matrix[row_at], matrix[pivot_row] = matrix[pivot_row], matrix[row_at]
        inv_p = 1 / matrix[row_at][col]
        matrix[row_at] = [v * inv_p for v in matrix[row_at]]
        for r in range(rows):
            if r != row_at and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[row_at])]
        pivots.append((row_at, col))
        row_at += 1
    for r in range(row_at, rows):
        if matrix[r][-1] != 0:
            raise ArithmeticError("target lies outside the Lascoux span")
    coeffs: dict[Composition, dict[int, int]] = {}
    for r, col in pivots:
        value = matrix[r][-1]
        if value == 0:
            continue
        if value.denominator != 1:
            raise ArithmeticError("expansion coefficient is not an integer")
        alpha, j, _ = columns[col]
        coeffs.setdefault(alpha, {})[j] = int(value)
    return coeffs


# -- bases of the top span ------------------------------------------------------


def vhat_basis(n: int) -> tuple[list[Permutation], list[Composition]]:
    """Index sets for the two bases of the degree-n top span: inverse
    fireworks permutations and snowy box compositions. Both have the same
    cardinality and pairwise distinct rajcodes."""
    if n < 1:
        raise ValueError("n must be positive")
    fireworks = [
        permutations.canonical(w)
        for w in all_permutations(n)
        if is_inverse_fireworks(w)
    ]
    snowy = [alpha for alpha in enumerate_cn(n) if is_snowy(alpha)]
    if len(fireworks) != len(snowy):
        raise ArithmeticError("basis index sets disagree in size")
    fire_codes = {permutations.rajcode(w, n) for w in fireworks}
    snow_codes = {compositions.rajcode(a) for a in snowy}
    if len(fire_codes) != len(fireworks) or len(snow_codes) != len(snowy):
        raise ArithmeticError("rajcodes fail to separate the basis index sets")
    return fireworks, snowy
