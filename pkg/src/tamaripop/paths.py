"""Lattice paths weakly above a fixed path nu, and the nu-Tamari covers.

A lattice path is a word over the steps N (north) and E (east) starting at
the origin.  For a fixed path nu, the lattice Tam(nu) consists of all paths
with the same endpoints as nu that stay weakly above it.  Its cover relation
moves a subpath D one unit to the left: mu = X E D Y is covered by
mu' = X D E Y, where D starts with a north step, and the endpoints of D have
the same horizontal distance to nu with no intermediate point sharing it.

The horizontal distance of a point p is the number of east steps that can be
appended to p before leaving the region weakly above nu.  It is computed in
O(1) from a table of rightmost abscissas per height, so enumerating the
covers of a path is linear in its length per candidate valley.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal

__all__ = [
    "BoundExceeded",
    "LatticePath",
    "NuContext",
    "Step",
    "covers_down",
    "covers_up",
    "east_staircase",
    "enumerate_tam",
    "horizontal_distance",
    "lies_weakly_above",
    "max_ell",
    "parse_path",
    "staircase",
]

Step = Literal["N", "E"]

#: Default cap on the path length for exhaustive enumeration.  (NE)^13 has
#: length 26 and 742900 elements, a practical desk limit.
DEFAULT_MAX_ELL = 26

_ENV_MAX_ELL = "TAMARIPOP_MAX_ELL"


class BoundExceeded(ValueError):
    """An enumeration request exceeded the configured safety bound."""


def max_ell() -> int:
    """Current global path-length bound (TAMARIPOP_MAX_ELL overrides)."""
    raw = os.environ.get(_ENV_MAX_ELL)
    return int(raw) if raw else DEFAULT_MAX_ELL


def _check_ell(ell: int, force: bool) -> None:
    bound = max_ell()
    if not force and ell > bound:
        raise BoundExceeded(
            f"path length {ell} exceeds the enumeration bound {bound}; "
            f"use force=True (--force) or set {_ENV_MAX_ELL} to override"
        )


@dataclass(frozen=True)
class LatticePath:
    """Immutable N/E step word starting at the origin."""

    steps: str

    def __post_init__(self) -> None:
        if not self.steps:
            raise ValueError("a lattice path needs at least one step")
        bad = set(self.steps) - {"N", "E"}
        if bad:
            raise ValueError(f"invalid step characters {sorted(bad)!r} in {self.steps!r}")

    def __str__(self) -> str:
        return self.steps

    @property
    def ell(self) -> int:
        """Number of steps."""
        return len(self.steps)

    @property
    def north_count(self) -> int:
        return self.steps.count("N")

    @property
    def east_count(self) -> int:
        return len(self.steps) - self.north_count

    @property
    def endpoint(self) -> tuple[int, int]:
        return (self.east_count, self.north_count)

    def heights(self) -> tuple[int, ...]:
        """Height of each of the ell+1 grid points along the path."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + (s == "N"))
        return tuple(out)

    def points(self) -> tuple[tuple[int, int], ...]:
        """Grid points visited, from the origin to the endpoint."""
        x = y = 0
        pts = [(0, 0)]
        for s in self.steps:
            if s == "N":
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return tuple(pts)

    def sort_key(self) -> str:
        """Key realizing the canonical order: lexicographic with N < E."""
        return self.steps.translate(_CANONICAL)


_CANONICAL = str.maketrans("NE", "01")


def parse_path(text: str) -> LatticePath:
    """Parse an N/E word such as "NENE" into a LatticePath."""
    return LatticePath(text)


def staircase(n: int) -> LatticePath:
    """The path (NE)^n, whose lattice is the Tamari lattice Tam_n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return LatticePath("NE" * n)


def east_staircase(n: int) -> LatticePath:
    """The path E(NE)^(n-1); its lattice is also isomorphic to Tam_n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return LatticePath("E" + "NE" * (n - 1))


@dataclass(frozen=True)
class NuContext:
    """Precomputed tables for a fixed base path nu.

    heights[i] is the height of nu after i steps; fixed_positions[k] is the
    largest index i with heights[i] == k (one per height 0..n_nu); and
    _rightmost[y] is the largest abscissa of nu at height y, which drives
    every horizontal-distance computation.
    """

    nu: LatticePath
    heights: tuple[int, ...]
    fixed_positions: tuple[int, ...]
    n_nu: int
    ell: int
    _rightmost: tuple[int, ...]

    @classmethod
    def from_path(cls, nu: LatticePath) -> "NuContext":
        heights = nu.heights()
        n_nu = heights[-1]
        fixed = [0] * (n_nu + 1)
        for i, h in enumerate(heights):
            fixed[h] = i
        rightmost = tuple(fixed[y] - y for y in range(n_nu + 1))
        return cls(nu, heights, tuple(fixed), n_nu, nu.ell, rightmost)

    @classmethod
    def from_text(cls, text: str) -> "NuContext":
        return _context_from_text(text)

    def rightmost_x(self, y: int) -> int:
        """Largest abscissa of nu at height y."""
        return self._rightmost[y]

    def bottom_entries(self) -> tuple[int, ...]:
        """Entries of the minimal bracket vector, which is heights itself."""
        return self.heights


@lru_cache(maxsize=512)
def _context_from_text(text: str) -> NuContext:
    return NuContext.from_path(parse_path(text))


def horizontal_distance(ctx: NuContext, point: tuple[int, int]) -> int:
    """East steps from point before leaving the region weakly above nu.

    Raises ValueError for points strictly below nu (or outside the grid of
    paths sharing nu's endpoints).
    """
    x, y = point
    if x < 0 or not 0 <= y <= ctx.n_nu:
        raise ValueError(f"point {point} is outside the grid of {ctx.nu}")
    d = ctx._rightmost[y] - x
    if d < 0:
        raise ValueError(f"point {point} lies strictly below {ctx.nu}")
    return d


def lies_weakly_above(mu: LatticePath, ctx: NuContext) -> bool:
    """Whether mu stays weakly above nu.  Endpoints must agree."""
    if mu.endpoint != ctx.nu.endpoint:
        raise ValueError(
            f"endpoint mismatch: {mu} ends at {mu.endpoint}, "
            f"{ctx.nu} ends at {ctx.nu.endpoint}"
        )
    x = y = 0
    for s in mu.steps:
        if s == "N":
            y += 1
        else:
            x += 1
            if x > ctx._rightmost[y]:
                return False
    return True


def enumerate_tam(ctx: NuContext, *, force: bool = False) -> list[LatticePath]:
    """All elements of Tam(nu), in lexicographic order with N < E."""
    _check_ell(ctx.ell, force)
    rightmost = ctx._rightmost
    n_nu = ctx.n_nu
    ell = ctx.ell
    out: list[LatticePath] = []
    buf: list[str] = []

    def rec(x: int, y: int) -> None:
        if len(buf) == ell:
            out.append(LatticePath("".join(buf)))
            return
        if y < n_nu:
            buf.append("N")
            rec(x, y + 1)
            buf.pop()
        if x < rightmost[y]:
            buf.append("E")
            rec(x + 1, y)
            buf.pop()

    rec(0, 0)
    return out


def _require_member(mu: LatticePath, ctx: NuContext) -> None:
    if not lies_weakly_above(mu, ctx):
        raise ValueError(f"{mu} is not weakly above {ctx.nu}")


def _distances(mu: LatticePath, ctx: NuContext) -> list[int]:
    rightmost = ctx._rightmost
    x = y = 0
    d = [rightmost[0]]
    for s in mu.steps:
        if s == "N":
            y += 1
        else:
            x += 1
        d.append(rightmost[y] - x)
    return d


def covers_up(mu: LatticePath, ctx: NuContext) -> set[LatticePath]:
    """All paths covering mu in Tam(nu).

    One candidate per valley: for each east step followed by a north step,
    the subpath D starts just after the east step and ends at the first
    later point with the same horizontal distance as D's start; the cover
    swaps that east step past D.
    """
    _require_member(mu, ctx)
    steps = mu.steps
    dist = _distances(mu, ctx)
    ell = mu.ell
    out: set[LatticePath] = set()
    for j in range(ell - 1):
        if steps[j] == "E" and steps[j + 1] == "N":
            d = dist[j + 1]
            m = next(i for i in range(j + 2, ell + 1) if dist[i] == d)
            out.add(LatticePath(steps[:j] + steps[j + 1 : m] + "E" + steps[m:]))
    return out


def covers_down(mu: LatticePath, ctx: NuContext) -> set[LatticePath]:
    """All paths covered by mu in Tam(nu) (inverse of covers_up).

    For each north step, the shifted subpath D starts at the point before
    it and ends at the first later point with the same horizontal distance;
    the inverse move requires D to be followed by an east step, which is
    pulled in front of D.
    """
    _require_member(mu, ctx)
    steps = mu.steps
    dist = _distances(mu, ctx)
    ell = mu.ell
    out: set[LatticePath] = set()
    for j in range(ell):
        if steps[j] != "N":
            continue
        d = dist[j]
        m = next(i for i in range(j + 1, ell + 1) if dist[i] == d)
        if m < ell and steps[m] == "E":
            out.add(LatticePath(steps[:j] + "E" + steps[j:m] + steps[m + 1 :]))
    return out
