"""The Pop operator on Tam(nu): meet of an element with everything it covers.

Production route: Pop acts on bracket vectors entry by entry.  With
Delta(v) = {i : v[i] > v[i+1]}, the i-th entry of Pop(v) for i in Delta is

    eta_i = max{ x in [heights[i], v[i] - 1] :
                 v[j] <= x for all i < j <= fixed_positions[x] }

and entries outside Delta are unchanged.  The independent oracle
(pop_generic) instead folds meets over the path-level covers_down; the two
routes are compared exhaustively by the verification suites.

The census machinery (sortability times, Pop images, q-polynomials) works
over nu = E(NE)^(n-1), whose lattice is isomorphic to the Tamari lattice
Tam_n; enumeration plus memoized Pop trajectories is the production
algorithm, and the irreducible-decomposition recursion is only a check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .brackets import BracketVector, _iter_entry_tuples, meet, path_to_vector, vector_to_path
from .paths import LatticePath, NuContext, _check_ell, covers_down, covers_up, east_staircase

__all__ = [
    "PopPolynomial",
    "PopTrajectory",
    "count_t_sortable",
    "concat_irreducible",
    "decompose_irreducible",
    "delta_set",
    "down_cover_candidates",
    "eta",
    "hash_map",
    "pop_generic",
    "pop_image",
    "pop_polynomial",
    "pop_vector",
    "sortability_time",
    "trajectory",
    "up_cover_count",
]


def delta_set(vec: BracketVector) -> set[int]:
    """Indices i with entry[i] > entry[i+1] (the descents of the vector)."""
    e = vec.entries
    return {i for i in range(len(e) - 1) if e[i] > e[i + 1]}


def _eta_at(e: tuple[int, ...], heights: tuple[int, ...], fixed: tuple[int, ...], i: int) -> int:
    bi = e[i]
    hi_f = fixed[bi - 1]
    # prefix_max[j] = max(e[i+1..j]); only indices up to fixed[bi-1] are needed
    prefix_max = [0] * (hi_f + 1)
    run = -1
    for j in range(i + 1, hi_f + 1):
        if e[j] > run:
            run = e[j]
        prefix_max[j] = run
    for x in range(bi - 1, heights[i] - 1, -1):
        fx = fixed[x]
        if fx <= i or prefix_max[fx] <= x:
            return x
    raise RuntimeError(f"no admissible value at index {i} of {e}; input vector invalid?")


def eta(vec: BracketVector, i: int) -> int:
    """Entry i of Pop(vec): eta_i on descents, the entry itself elsewhere."""
    e = vec.entries
    if not 0 <= i <= vec.ctx.ell:
        raise ValueError(f"index {i} out of range 0..{vec.ctx.ell}")
    if i == vec.ctx.ell or e[i] <= e[i + 1]:
        return e[i]
    return _eta_at(e, vec.ctx.heights, vec.ctx.fixed_positions, i)


def _pop_entries(e: tuple[int, ...], heights: tuple[int, ...], fixed: tuple[int, ...]) -> tuple[int, ...]:
    out = list(e)
    for i in range(len(e) - 1):
        if e[i] > e[i + 1]:
            out[i] = _eta_at(e, heights, fixed, i)
    return tuple(out)


def pop_vector(vec: BracketVector) -> BracketVector:
    """Pop on bracket vectors (production route)."""
    ctx = vec.ctx
    return BracketVector(_pop_entries(vec.entries, ctx.heights, ctx.fixed_positions), ctx)


def pop_generic(mu: LatticePath, ctx: NuContext) -> LatticePath:
    """Pop computed as the meet of mu with all paths it covers (oracle route)."""
    acc = path_to_vector(mu, ctx)
    for lower in covers_down(mu, ctx):
        acc = meet(acc, path_to_vector(lower, ctx))
    return vector_to_path(acc)


def down_cover_candidates(vec: BracketVector) -> set[BracketVector]:
    """One vector per descent: entry i lowered to eta_i, the rest unchanged."""
    ctx = vec.ctx
    e = vec.entries
    out = set()
    for i in sorted(delta_set(vec)):
        lowered = list(e)
        lowered[i] = _eta_at(e, ctx.heights, ctx.fixed_positions, i)
        out.add(BracketVector(tuple(lowered), ctx))
    return out


def trajectory(vec: BracketVector) -> "PopTrajectory":
    """Iterate Pop until the minimum; each step strictly lowers the sum."""
    ctx = vec.ctx
    heights, fixed = ctx.heights, ctx.fixed_positions
    bottom = ctx.bottom_entries()
    states = [vec]
    cur = vec.entries
    total = sum(cur)
    while cur != bottom:
        cur = _pop_entries(cur, heights, fixed)
        new_total = sum(cur)
        if new_total >= total:
            raise RuntimeError(f"Pop failed to decrease {states[-1]}; invalid input?")
        total = new_total
        states.append(BracketVector(cur, ctx))
    return PopTrajectory(tuple(states))


@dataclass(frozen=True)
class PopTrajectory:
    """Successive Pop images ending at the lattice minimum."""

    states: tuple[BracketVector, ...]

    @property
    def sortability_time(self) -> int:
        return len(self.states) - 1


def sortability_time(vec: BracketVector) -> int:
    """Least t with Pop^t(vec) equal to the lattice minimum."""
    return trajectory(vec).sortability_time


# ---------------------------------------------------------------------------
# Census over nu = E(NE)^(n-1)


def _east_staircase_ctx(n: int) -> NuContext:
    return NuContext.from_text(east_staircase(n).steps)


class _Census:
    """All vectors for E(NE)^(n-1) with Pop targets and sortability times."""

    def __init__(self, n: int, force: bool):
        ctx = _east_staircase_ctx(n)
        _check_ell(ctx.ell, force)
        self.ctx = ctx
        self.entries = list(_iter_entry_tuples(ctx))
        index = {e: i for i, e in enumerate(self.entries)}
        heights, fixed = ctx.heights, ctx.fixed_positions
        self.pop_idx = [index[_pop_entries(e, heights, fixed)] for e in self.entries]
        sums = [sum(e) for e in self.entries]
        bottom = index[ctx.bottom_entries()]
        times = [0] * len(self.entries)
        for i in sorted(range(len(self.entries)), key=sums.__getitem__):
            if i == bottom:
                continue
            target = self.pop_idx[i]
            assert sums[target] < sums[i], "Pop must strictly decrease non-minimal vectors"
            times[i] = 1 + times[target]
        self.times = times


@lru_cache(maxsize=None)
def _census(n: int, force: bool = False) -> _Census:
    return _Census(n, force)


def count_t_sortable(n: int, t: int, *, force: bool = False) -> int:
    """Number of vectors for E(NE)^(n-1) that Pop sends to the minimum in <= t steps."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if t < 0:
        raise ValueError(f"need t >= 0, got {t}")
    census = _census(n, force)
    return sum(1 for time in census.times if time <= t)


def pop_image(n: int, *, force: bool = False) -> set[BracketVector]:
    """Distinct Pop images over all vectors for E(NE)^(n-1)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    census = _census(n, force)
    return {
        BracketVector(census.entries[i], census.ctx) for i in set(census.pop_idx)
    }


def up_cover_count(vec: BracketVector) -> int:
    """Number of covers above the corresponding path in Tam(nu)."""
    return len(covers_up(vector_to_path(vec), vec.ctx))


@dataclass(frozen=True)
class PopPolynomial:
    """Generating polynomial of up-cover counts over a Pop image."""

    coeffs: dict[int, int]

    def __post_init__(self) -> None:
        for e, c in self.coeffs.items():
            if e < 0 or c <= 0:
                raise ValueError(f"bad term {c} * q^{e}")

    def total(self) -> int:
        return sum(self.coeffs.values())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            base = "1" if e == 0 else ("q" if e == 1 else f"q^{e}")
            terms.append(base if c == 1 and e > 0 else (str(c) if e == 0 else f"{c}*{base}"))
        return " + ".join(terms)


def pop_polynomial(n: int, *, force: bool = False) -> PopPolynomial:
    """Histogram of up-cover counts over the Pop image of Tam_n, as q-exponents."""
    coeffs: dict[int, int] = {}
    for v in pop_image(n, force=force):
        e = up_cover_count(v)
        coeffs[e] = coeffs.get(e, 0) + 1
    return PopPolynomial(coeffs)


# ---------------------------------------------------------------------------
# Irreducible decomposition and the deletion map


def _require_east_staircase(ctx: NuContext) -> int:
    """Return n if nu = E(NE)^(n-1), else raise."""
    s = ctx.nu.steps
    n = (len(s) + 1) // 2
    if s != "E" + "NE" * (n - 1):
        raise ValueError(f"nu must have the form E(NE)^(n-1), got {ctx.nu}")
    return n


def decompose_irreducible(vec: BracketVector) -> list[BracketVector]:
    """Split a vector for E(NE)^(n-1) into its irreducible components.

    The first component is the prefix ending at fixed_positions[first entry];
    the remainder, shifted down, decomposes recursively.  A component is
    irreducible exactly when its first and last entries agree.
    """
    _require_east_staircase(vec.ctx)
    parts: list[BracketVector] = []
    work = vec.entries
    while work:
        b0 = work[0]
        size = 2 * b0 + 2  # fixed position of height b0 is 2*b0 + 1
        head, work = work[:size], work[size:]
        parts.append(BracketVector(head, _east_staircase_ctx(b0 + 1)))
        work = tuple(x - (b0 + 1) for x in work)
    return parts


def concat_irreducible(parts: list[BracketVector]) -> BracketVector:
    """Inverse of decompose_irreducible (offset concatenation)."""
    if not parts:
        raise ValueError("need at least one component")
    entries: list[int] = []
    total = 0
    for part in parts:
        k = _require_east_staircase(part.ctx)
        entries.extend(x + total for x in part.entries)
        total += k
    return BracketVector(tuple(entries), _east_staircase_ctx(total))


def hash_map(vec: BracketVector) -> BracketVector:
    """Delete the first fixed_positions[0]+1 entries and shift the rest down.

    The image lives over nu with its first fixed_positions[0]+1 steps removed;
    nu must have steps left over.
    """
    ctx = vec.ctx
    f0 = ctx.fixed_positions[0]
    if f0 + 1 >= ctx.ell:
        raise ValueError(f"nu={ctx.nu} is exhausted by deleting {f0 + 1} steps")
    reduced_nu = NuContext.from_text(ctx.nu.steps[f0 + 1 :])
    entries = tuple(x - 1 for x in vec.entries[f0 + 1 :])
    return BracketVector(entries, reduced_nu)
