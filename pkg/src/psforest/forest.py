"""Path-star forests and their derived parameters."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

HALF = Fraction(1, 2)

_TOKEN = re.compile(r"^\s*(\d*)\s*([PS])\s*(\d+)\s*$", re.IGNORECASE)


class ForestError(ValueError):
    pass


@dataclass(frozen=True)
class PathStarForest:
    """Disjoint union of paths ``P_l`` (l vertices) and stars ``S_a`` (a leaves).

    Both multisets are kept in descending order.
    """

    paths: tuple[int, ...] = ()
    stars: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        paths = tuple(sorted(self.paths, reverse=True))
        stars = tuple(sorted(self.stars, reverse=True))
        if not paths and not stars:
            raise ForestError("a forest needs at least one component")
        if any(l < 2 for l in paths):
            raise ForestError("path orders must be at least 2")
        if any(a < 3 for a in stars):
            raise ForestError("star sizes must be at least 3")
        object.__setattr__(self, "paths", paths)
        object.__setattr__(self, "stars", stars)

    @property
    def p(self) -> int:
        return len(self.paths)

    @property
    def q(self) -> int:
        return len(self.stars)

    @property
    def order(self) -> int:
        return sum(self.paths) + sum(a + 1 for a in self.stars)

    @property
    def path_part(self) -> PathStarForest:
        return PathStarForest(paths=self.paths)

    @property
    def star_part(self) -> PathStarForest:
        return PathStarForest(stars=self.stars)

    def to_json(self) -> dict:
        return {"paths": list(self.paths), "stars": list(self.stars)}

    def __str__(self) -> str:
        parts = [f"P{l}" for l in self.paths] + [f"S{a}" for a in self.stars]
        return ",".join(parts)


def forest(paths: Iterable[int] = (), stars: Iterable[int] = ()) -> PathStarForest:
    return PathStarForest(tuple(paths), tuple(stars))


def parse_forest(text: str) -> PathStarForest:
    """Parse ``"P4,S3"``; a count prefix such as ``2P3`` repeats a component."""
    tokens = text.split(",")
    if not text.strip() or any(not t.strip() for t in tokens):
        raise ForestError(f"empty component in forest {text!r}")
    paths: list[int] = []
    stars: list[int] = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if not m:
            raise ForestError(f"malformed forest token {tok!r}")
        count = int(m.group(1)) if m.group(1) else 1
        kind, size = m.group(2).upper(), int(m.group(3))
        if count < 1:
            raise ForestError(f"component count must be positive in {tok!r}")
        if kind == "P":
            if size < 2:
                raise ForestError(f"path order {size} below 2 in {tok!r}")
            paths += [size] * count
        else:
            if size < 3:
                raise ForestError(f"star size {size} below 3 in {tok!r}")
            stars += [size] * count
    return PathStarForest(tuple(paths), tuple(stars))


@dataclass(frozen=True)
class ForestParams:
    delta: int
    mu: Fraction
    beta: Fraction
    s: int
    s_j: tuple[int, ...] = field(default=())
    star_threshold: Fraction | None = None  # None when there are no stars


def mu(f: PathStarForest) -> Fraction:
    # p = 0 lands in the "otherwise" branch of the definition
    if f.p == 1 and f.paths[0] % 2 == 0:
        return Fraction(1)
    if f.p >= 2 and any(l != 3 for l in f.paths):
        return Fraction(1)
    return HALF


def star_threshold(stars: tuple[int, ...]) -> Fraction | None:
    """max over j of ``j - 1 + (a_j - 1)/2`` with stars sorted descending."""
    if not stars:
        return None
    return max(Fraction(j) + Fraction(a - 1, 2) for j, a in enumerate(stars))


def derived_params(f: PathStarForest) -> ForestParams:
    delta = sum(l // 2 for l in f.paths)
    m = mu(f)
    prefix = []
    total = 0
    for l in f.paths:
        total += l
        prefix.append(total)
    return ForestParams(
        delta=delta,
        mu=m,
        beta=f.q + delta - m,
        s=total,
        s_j=tuple(prefix),
        star_threshold=star_threshold(f.stars),
    )
