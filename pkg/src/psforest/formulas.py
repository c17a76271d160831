"""Closed-form Turán numbers of path-star forests.

Every quantity is an exact integer or ``Fraction``; floors are taken only where
the formulas themselves floor.  Results carry the smallest ``n`` from which the
formula is proven (``threshold``) or ``None`` when only "sufficiently large n"
is known.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .forest import PathStarForest, derived_params

HALF = Fraction(1, 2)


class Regime(str, enum.Enum):
    A = "A"
    B = "B"
    UNCOVERED = "uncovered"
    EXACT = "exact"


class FormulaError(ValueError):
    pass


class UncoveredRegimeError(FormulaError):
    """The forest lies in the parameter cell where no formula is known."""


@dataclass(frozen=True)
class BracketDecomposition:
    n: int
    m: int
    l: int
    d: int
    r: int


@dataclass(frozen=True)
class ExResult:
    n: int
    value: int | None
    regime: Regime
    formula: str  # which closed form produced the value
    threshold: int | None  # None: proven only for sufficiently large n
    gamma: Fraction | None = None
    i_star: int | None = None

    @property
    def guaranteed(self) -> bool:
        if self.value is None:
            return False
        if self.regime is Regime.EXACT:
            return True
        return self.threshold is not None and self.n >= self.threshold


@dataclass(frozen=True)
class Thresholds:
    N1: Fraction
    N2: Fraction
    L: Fraction | None

    @property
    def n1(self) -> int:
        return math.ceil(self.N1)

    @property
    def n2(self) -> int:
        return math.ceil(self.N2)


def decompose(n: int, m: int, l: int) -> BracketDecomposition:
    d, r = divmod(n - (m - 1), l - 1)
    return BracketDecomposition(n, m, l, d, r)


def bracket(n: int, m: int, l: int) -> int:
    """Edges of ``K_{m-1} ∪ d K_{l-1} ∪ K_r`` where ``n = (m-1) + d(l-1) + r``."""
    if not n >= m >= l >= 2:
        raise FormulaError(f"bracket needs n >= m >= l >= 2, got ({n}, {m}, {l})")
    dec = decompose(n, m, l)
    return comb(m - 1, 2) + dec.d * comb(l - 1, 2) + comb(dec.r, 2)


def hub_term(n: int, delta: int) -> Fraction:
    """``(delta - 1)(n - delta/2)``: edges of ``G_1(n, delta - 1)``."""
    return (delta - 1) * (n - Fraction(delta, 2))


def _trivial(n: int) -> ExResult:
    return ExResult(n, comb(n, 2), Regime.EXACT, "complete-graph", 0)


def ex_path(n: int, l: int) -> ExResult:
    if l < 2:
        raise FormulaError("path order must be at least 2")
    if n < 0:
        raise FormulaError("n must be non-negative")
    if n < l:
        return _trivial(n)
    return ExResult(n, bracket(n, l, l), Regime.EXACT, "path", 0)


def linear_forest_terms(n: int, paths: tuple[int, ...]) -> list[int]:
    """The candidates of the at-most-one-odd maximum: brackets, then the hub term."""
    delta = sum(l // 2 for l in paths)
    terms = []
    s = 0
    for l in paths:
        s += l
        terms.append(bracket(n, s, l))
    terms.append(int(hub_term(n, delta)))
    return terms


def ex_linear_forest(n: int, paths: tuple[int, ...] | list[int]) -> ExResult:
    paths = tuple(sorted(paths, reverse=True))
    if not paths:
        raise FormulaError("a linear forest needs at least one path")
    if len(paths) == 1:
        return ex_path(n, paths[0])
    if n < sum(paths):
        return _trivial(n)
    p = len(paths)
    delta = sum(l // 2 for l in paths)
    odd = sum(l % 2 for l in paths)
    if all(l == 3 for l in paths):
        value = (p - 1) * (n - Fraction(p, 2)) + (n - p + 1) // 2
        return ExResult(n, int(value), Regime.A, "pP3", 5 * p)
    if odd <= 1:
        return ExResult(n, max(linear_forest_terms(n, paths)), Regime.A, "at-most-one-odd", sum(paths))
    c = 1 if odd == p else 0
    value = hub_term(n, delta) + c
    threshold = None
    if all(l != 3 for l in paths):
        s = sum(paths)
        threshold = math.ceil(Fraction(5 * (s - 1) * (s - 2) ** 2, 4 * (delta - 1)) + delta - 1)
    return ExResult(n, int(value), Regime.A, "linear-large-n", threshold)


def linear_forest_hub_form(n: int, paths: tuple[int, ...]) -> bool:
    """True when the linear-forest value at ``n`` is the one realised by the hub graph.

    That graph is ``G_1``, ``G_1^+`` or ``K_{p-1} v M``; the only way to fail is an
    at-most-one-odd forest whose maximum is attained solely by a bracket term.
    """
    paths = tuple(sorted(paths, reverse=True))
    if len(paths) == 1 or all(l == 3 for l in paths):
        return True
    if n < sum(paths):
        return False
    if sum(l % 2 for l in paths) <= 1:
        *_, hub = linear_forest_terms(n, paths)
        return hub == ex_linear_forest(n, paths).value
    return True


def star_forest_term(n: int, j: int, a: int) -> int:
    """Edges of ``K_{j-1} v EX(n-j+1, S_a)`` (``j`` is 1-based)."""
    return int((j - 1) * (n - Fraction(j, 2))) + ((a - 1) * (n - j + 1)) // 2


def ex_star_forest(n: int, stars: tuple[int, ...] | list[int]) -> ExResult:
    stars = tuple(sorted(stars, reverse=True))
    if not stars:
        raise FormulaError("a star forest needs at least one star")
    if n < sum(a + 1 for a in stars):
        return _trivial(n)
    best_j, best = 1, None
    for j, a in enumerate(stars, start=1):
        value = star_forest_term(n, j, a)
        if best is None or value > best:
            best_j, best = j, value
    threshold = None
    if len(set(stars)) == 1:
        a, q = stars[0], len(stars)
        threshold = q * (a * a + a + 1) - a * (a - 3) // 2
    return ExResult(n, best, Regime.B, "star-forest", threshold, i_star=best_j)


def classify_regime(f: PathStarForest) -> Regime:
    if f.q == 0:
        return Regime.A
    par = derived_params(f)
    if par.beta <= par.star_threshold:
        return Regime.B
    if f.p == 1 and f.stars[-1] < f.paths[0] - 1:
        return Regime.UNCOVERED
    return Regime.A


def gamma(f: PathStarForest, n: int) -> Fraction:
    """Constant term in ``ex(n, F) = beta*n - gamma`` for the hub regime."""
    if f.q < 1 or f.p < 1 or classify_regime(f) is not Regime.A:
        raise FormulaError(f"gamma is defined for the hub regime with p, q >= 1; got {f}")
    q, p = f.q, f.p
    if p == 1:
        l1 = f.paths[0]
        r = (n - q) % (l1 - 1)
        return Fraction(q * q + (l1 - 1) * (q + r) - r * r, 2)
    if all(l == 3 for l in f.paths):
        c1 = HALF if (n - p - q + 1) % 2 else Fraction(0)
        return Fraction((p + q) ** 2 - 1, 2) + c1
    delta = derived_params(f).delta
    c2 = 1 if all(l % 2 for l in f.paths) else 0
    return Fraction((q + delta) * (q + delta - 1), 2) - c2


def explicit_bound_applies(f: PathStarForest) -> bool:
    """Equal stars, and paths all != 3, or p >= 2 paths all equal to 3."""
    if f.q == 0 or f.p == 0 or len(set(f.stars)) != 1:
        return False
    if all(l != 3 for l in f.paths):
        return True
    return f.p >= 2 and all(l == 3 for l in f.paths)


def thresholds(f: PathStarForest) -> Thresholds:
    if f.q == 0 or f.p == 0:
        raise FormulaError("explicit thresholds need both paths and stars")
    if len(set(f.stars)) != 1:
        raise FormulaError("explicit thresholds need all stars of one size")
    if not explicit_bound_applies(f):
        raise FormulaError("explicit thresholds need paths all != 3, or p >= 2 paths all = 3")
    par = derived_params(f)
    a, q, p = f.stars[0], f.q, f.p
    s, delta, l1 = par.s, par.delta, f.paths[0]
    base = Fraction((a * a + a + 1) * q)
    L = None
    if p == 1:
        N1 = base + (Fraction(l1, 2) + 1) * a + l1
        N2 = base + (a + 1) * s
    elif all(l == 3 for l in f.paths):
        N1 = base + (2 * a + 3) * p + Fraction(a + 1, 2)
        N2 = base + (a + 1) * s
    else:
        if all(l % 2 == 0 for l in f.paths):
            L = Fraction(delta, 2) * (1 + Fraction(l1 - 2, 2 * delta - l1)) + 1
        else:
            L = Fraction(5 * (s - 1) * (s - 2) ** 2, 4 * (delta - 1)) + delta - 1
        N1 = base + max(Fraction(a * (s - delta + 1) + s), L)
        N2 = base + max(Fraction((a + 1) * s), L)
    return Thresholds(N1, N2, L)


def ex_main(f: PathStarForest, n: int) -> ExResult:
    if n < 0:
        raise FormulaError("n must be non-negative")
    if n < f.order:
        return _trivial(n)
    regime = classify_regime(f)
    if regime is Regime.UNCOVERED:
        raise UncoveredRegimeError(f"no formula is known for {f}")
    if f.q == 0:
        return ex_linear_forest(n, f.paths)
    if regime is Regime.B:
        res = ex_star_forest(n, f.stars)
        threshold = res.threshold
        if f.p:
            threshold = thresholds(f).n2 if explicit_bound_applies(f) else None
        return ExResult(n, res.value, Regime.B, "star-dominant", threshold, i_star=res.i_star)
    q = f.q
    lin = ex_linear_forest(n - q, f.paths)
    value = comb(q, 2) + q * (n - q) + lin.value
    threshold = thresholds(f).n1 if explicit_bound_applies(f) else None
    return ExResult(n, value, Regime.A, "hub-join", threshold, gamma=gamma(f, n))
