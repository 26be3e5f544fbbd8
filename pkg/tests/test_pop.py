"""The pop operator: entrywise formula, meet-of-covers oracle, census, image."""

import pytest

from tamaripop.brackets import BracketVector, enumerate_vectors, path_to_vector, vector_to_path
from tamaripop.paths import NuContext, east_staircase, enumerate_tam, parse_path
from tamaripop.pop import (
    concat_irreducible,
    count_t_sortable,
    decompose_irreducible,
    delta_set,
    eta,
    hash_map,
    pop_generic,
    pop_image,
    pop_polynomial,
    pop_vector,
    sortability_time,
    trajectory,
    up_cover_count,
)
from tamaripop.series import a055151, catalan, h_series, motzkin


def _vec(text, entries):
    return BracketVector(tuple(entries), NuContext.from_text(text))


def test_descents_and_eta_worked_example():
    v = _vec("ENNEEEENNE", (1, 0, 1, 3, 3, 3, 2, 2, 3, 4, 4))
    assert delta_set(v) == {0, 5}
    assert eta(v, 0) == 0
    assert eta(v, 5) == 2
    assert eta(v, 3) == 3  # not a descent, unchanged
    assert pop_vector(v).entries == (0, 0, 1, 3, 3, 2, 2, 2, 3, 4, 4)


def test_pop_fixes_minimum():
    ctx = NuContext.from_text("ENENE")
    bottom = BracketVector(ctx.heights, ctx)
    assert pop_vector(bottom) == bottom


def test_pop_top_of_small_lattice():
    v = _vec("ENENE", (2, 0, 2, 1, 2, 2))
    assert pop_vector(v).entries == (0, 0, 1, 1, 2, 2)


def test_trajectory_and_time():
    v = _vec("ENENE", (2, 0, 1, 1, 2, 2))
    traj = trajectory(v)
    assert [s.entries for s in traj.states] == [
        (2, 0, 1, 1, 2, 2),
        (1, 0, 1, 1, 2, 2),
        (0, 0, 1, 1, 2, 2),
    ]
    assert traj.sortability_time == 2
    assert sortability_time(v) == 2
    assert sortability_time(_vec("ENENE", (0, 0, 1, 1, 2, 2))) == 0


@pytest.mark.parametrize("text", ["ENENE", "NENENE", "ENNEEEENNE", "EENNEE", "NNEEN"])
def test_pop_generic_equals_pop_vector(text):
    ctx = NuContext.from_text(text)
    for mu in enumerate_tam(ctx):
        via_meet = pop_generic(mu, ctx)
        via_formula = vector_to_path(pop_vector(path_to_vector(mu, ctx)))
        assert via_meet == via_formula


def test_pop_is_decreasing():
    ctx = NuContext.from_text("NENENE")
    from tamaripop.brackets import leq

    for v in enumerate_vectors(ctx):
        p = pop_vector(v)
        assert leq(p, v)


@pytest.mark.parametrize("n,t", [(1, 1), (3, 1), (4, 2), (5, 2), (6, 3)])
def test_count_t_sortable_matches_series(n, t):
    assert count_t_sortable(n, t) == h_series(t, n)[n]


def test_count_everything_is_n_sortable():
    for n in range(1, 8):
        assert count_t_sortable(n, n) == catalan(n)


def test_pop_image_sizes_are_motzkin():
    for n in range(1, 9):
        assert len(pop_image(n)) == motzkin(n - 1)


def test_pop_image_members_are_pop_values():
    n = 5
    ctx = NuContext.from_path(east_staircase(n))
    image = {pop_vector(v).entries for v in enumerate_vectors(ctx)}
    assert {v.entries for v in pop_image(n)} == image


def test_pop_polynomial_small():
    poly = pop_polynomial(5)
    assert poly.coeffs == {4: 1, 3: 6, 2: 2}
    assert poly.total() == motzkin(4)
    m = 4
    assert poly.coeffs == {
        m - k: a055151(m, k) for k in range(m // 2 + 1) if a055151(m, k)
    }


def test_up_cover_count_matches_cover_sets():
    from tamaripop.paths import covers_up

    ctx = NuContext.from_path(east_staircase(5))
    for v in enumerate_vectors(ctx):
        mu = vector_to_path(v)
        assert up_cover_count(v) == len(covers_up(mu, ctx))


def test_decompose_irreducible_blocks():
    # bottom of Tam_3 splits into three singleton blocks
    v = _vec("ENENE", (0, 0, 1, 1, 2, 2))
    parts = decompose_irreducible(v)
    assert [p.entries for p in parts] == [(0, 0)] * 3
    assert concat_irreducible(parts).entries == v.entries
    # the top is already irreducible
    top = _vec("ENENE", (2, 0, 2, 1, 2, 2))
    assert [p.entries for p in decompose_irreducible(top)] == [(2, 0, 2, 1, 2, 2)]


def test_decomposition_round_trips_everywhere():
    ctx = NuContext.from_path(east_staircase(6))
    for v in enumerate_vectors(ctx):
        parts = decompose_irreducible(v)
        assert all(p.entries[0] == p.entries[-1] for p in parts)
        assert concat_irreducible(parts).entries == v.entries


def test_sortability_time_is_max_over_components():
    ctx = NuContext.from_path(east_staircase(6))
    for v in enumerate_vectors(ctx):
        parts = decompose_irreducible(v)
        assert sortability_time(v) == max(sortability_time(p) for p in parts)


def test_hash_map_examples():
    # (2,0,2,1,2,2) loses its first two entries and shifts down one level
    v = _vec("ENENE", (2, 0, 2, 1, 2, 2))
    reduced = hash_map(v)
    assert reduced.entries == (1, 0, 1, 1)
    assert reduced.ctx.nu.steps == "ENE"
    with pytest.raises(ValueError):
        hash_map(_vec("E", (0, 0)))


def test_hash_bijection_on_irreducibles():
    for n in range(2, 7):
        ctx = NuContext.from_path(east_staircase(n))
        irreducibles = [v for v in enumerate_vectors(ctx) if v.entries[0] == v.entries[-1]]
        images = sorted(hash_map(v).entries for v in irreducibles)
        target = sorted(v.entries for v in enumerate_vectors(NuContext.from_path(east_staircase(n - 1))))
        assert images == target


def test_hash_sortability_threshold():
    # time(v) = max(time(v#), first entry - half the last component of v# + 1)
    for n in range(2, 7):
        ctx = NuContext.from_path(east_staircase(n))
        for v in enumerate_vectors(ctx):
            if v.entries[0] != v.entries[-1]:
                continue
            reduced = hash_map(v)
            x_r = len(decompose_irreducible(reduced)[-1].entries) // 2
            expected = max(sortability_time(reduced), v.entries[0] - x_r + 1)
            assert sortability_time(v) == expected


def test_pop_requires_valid_input_shape():
    ctx = NuContext.from_text("ENENE")
    with pytest.raises(ValueError):
        BracketVector((1, 2, 3), ctx)
