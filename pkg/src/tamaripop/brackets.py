"""Bracket vectors: an integer encoding of Tam(nu) with componentwise meets.

A path mu weakly above nu is encoded by ell+1 integers: walk along mu, and
for each grid point of height k write k into the rightmost empty slot weakly
left of fixed_positions[k].  The resulting map is an order isomorphism from
Tam(nu) onto the set of valid vectors, where "valid" means:

  (1) entry fixed_positions[k] equals k for every height k,
  (2) heights[i] <= entry[i] <= n_nu for every index i,
  (3) if entry[i] = k then entry[j] <= k for all i < j <= fixed_positions[k].

Meets are componentwise minima under this encoding; both facts are verified
exhaustively by the test suite rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .paths import LatticePath, NuContext, _check_ell

__all__ = [
    "BracketVector",
    "enumerate_vectors",
    "is_valid",
    "leq",
    "meet",
    "path_to_vector",
    "vector_to_path",
]


@dataclass(frozen=True)
class BracketVector:
    """Integer vector of length ell+1 attached to a NuContext."""

    entries: tuple[int, ...]
    ctx: NuContext

    def __post_init__(self) -> None:
        if len(self.entries) != self.ctx.ell + 1:
            raise ValueError(
                f"expected {self.ctx.ell + 1} entries for nu={self.ctx.nu}, "
                f"got {len(self.entries)}"
            )

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def is_valid(vec: Sequence[int], ctx: NuContext) -> bool:
    """Check conditions (1)-(3) for a raw integer vector.

    Length mismatches raise; anything else just returns False.
    """
    entries = tuple(vec)
    if len(entries) != ctx.ell + 1:
        raise ValueError(f"expected {ctx.ell + 1} entries, got {len(entries)}")
    heights = ctx.heights
    fixed = ctx.fixed_positions
    n_nu = ctx.n_nu
    for k, pos in enumerate(fixed):
        if entries[pos] != k:
            return False
    for i, b in enumerate(entries):
        if not heights[i] <= b <= n_nu:
            return False
    for i, b in enumerate(entries):
        limit = fixed[b]
        for j in range(i + 1, limit + 1):
            if entries[j] > b:
                return False
    return True


def path_to_vector(mu: LatticePath, ctx: NuContext) -> BracketVector:
    """Associated vector of mu: slot-filling along the path."""
    if mu.endpoint != ctx.nu.endpoint:
        raise ValueError(
            f"endpoint mismatch: {mu} ends at {mu.endpoint}, "
            f"{ctx.nu} ends at {ctx.nu.endpoint}"
        )
    fixed = ctx.fixed_positions
    slots: list[int | None] = [None] * (ctx.ell + 1)
    for k in mu.heights():
        j = fixed[k]
        while slots[j] is not None:
            j -= 1
            if j < 0:
                raise ValueError(f"{mu} is not weakly above {ctx.nu}")
        slots[j] = k
    return BracketVector(tuple(slots), ctx)  # type: ignore[arg-type]


def vector_to_path(vec: BracketVector) -> LatticePath:
    """Unique path whose associated vector is vec.

    The entry multiset of an associated vector is exactly the multiset of
    point heights of its path, so occurrence counts determine the path:
    count[k]-1 east steps at height k, separated by north steps.
    """
    ctx = vec.ctx
    counts = [0] * (ctx.n_nu + 1)
    for b in vec.entries:
        if not 0 <= b <= ctx.n_nu:
            raise ValueError(f"entry {b} out of range for nu={ctx.nu}")
        counts[b] += 1
    if min(counts) < 1:
        raise ValueError(f"{vec} is not a valid vector for nu={ctx.nu}")
    pieces = []
    for k, c in enumerate(counts):
        pieces.append("E" * (c - 1))
        if k < ctx.n_nu:
            pieces.append("N")
    return LatticePath("".join(pieces))


def meet(v1: BracketVector, v2: BracketVector) -> BracketVector:
    """Componentwise minimum (the lattice meet under the encoding)."""
    if v1.ctx != v2.ctx:
        raise ValueError("meet requires vectors over the same nu")
    return BracketVector(tuple(map(min, v1.entries, v2.entries)), v1.ctx)


def leq(v1: BracketVector, v2: BracketVector) -> bool:
    """Componentwise order (the lattice order under the encoding)."""
    if v1.ctx != v2.ctx:
        raise ValueError("leq requires vectors over the same nu")
    return all(a <= b for a, b in zip(v1.entries, v2.entries))


def _iter_entry_tuples(ctx: NuContext) -> Iterator[tuple[int, ...]]:
    """Yield all valid raw vectors in lexicographic order.

    Backtracking with an incrementally maintained cap array: assigning value
    v at index i caps every index up to fixed_positions[v] at v, which is
    exactly condition (3); fixed positions then admit a single value.
    """
    heights = ctx.heights
    fixed = ctx.fixed_positions
    n_nu = ctx.n_nu
    ell = ctx.ell
    is_fixed = [False] * (ell + 1)
    fixed_value = [0] * (ell + 1)
    for k, pos in enumerate(fixed):
        is_fixed[pos] = True
        fixed_value[pos] = k
    cap = [n_nu] * (ell + 2)
    buf = [0] * (ell + 1)

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i > ell:
            yield tuple(buf)
            return
        if is_fixed[i]:
            lo = hi = fixed_value[i]
        else:
            lo, hi = heights[i], cap[i]
        for v in range(lo, min(hi, cap[i]) + 1):
            buf[i] = v
            limit = fixed[v]
            touched = []
            for j in range(i + 1, limit + 1):
                if cap[j] > v:
                    touched.append((j, cap[j]))
                    cap[j] = v
            yield from rec(i + 1)
            for j, old in touched:
                cap[j] = old

    yield from rec(0)


def enumerate_vectors(ctx: NuContext, *, force: bool = False) -> list[BracketVector]:
    """All valid vectors for nu, in lexicographic order on entries."""
    _check_ell(ctx.ell, force)
    return [BracketVector(e, ctx) for e in _iter_entry_tuples(ctx)]
