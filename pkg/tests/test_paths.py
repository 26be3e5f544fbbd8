"""Lattice path primitives: parsing, geometry, covers, enumeration."""

import pytest

from tamaripop.paths import (
    BoundExceeded,
    LatticePath,
    NuContext,
    covers_down,
    covers_up,
    east_staircase,
    enumerate_tam,
    horizontal_distance,
    lies_weakly_above,
    parse_path,
    staircase,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]


def test_parse_and_basic_geometry():
    p = parse_path("ENNEEEENNE")
    assert p.ell == 10
    assert p.north_count == 4
    assert p.east_count == 6
    assert p.endpoint == (6, 4)
    assert p.heights() == (0, 0, 1, 2, 2, 2, 2, 2, 3, 4, 4)


def test_parse_rejects_bad_letters():
    with pytest.raises(ValueError):
        parse_path("NEX")
    with pytest.raises(ValueError):
        parse_path("")


def test_staircase_shapes():
    assert staircase(3).steps == "NENENE"
    assert east_staircase(4).steps == "ENENENE"
    with pytest.raises(ValueError):
        staircase(0)


def test_context_fixed_positions():
    ctx = NuContext.from_text("ENNEEEENNE")
    # largest index at each height 0..4
    assert ctx.fixed_positions == (1, 2, 7, 8, 10)
    assert ctx.n_nu == 4
    ctx2 = NuContext.from_text("ENENE")
    assert ctx2.fixed_positions == (1, 3, 5)


def test_horizontal_distance_steps():
    # east steps drop the distance by one, north steps never drop it
    ctx = NuContext.from_text("ENNEEEENNE")
    for mu in enumerate_tam(ctx):
        pts = mu.points()
        dists = [horizontal_distance(ctx, p) for p in pts]
        for step, a, b in zip(mu.steps, dists, dists[1:]):
            if step == "E":
                assert b == a - 1
            else:
                assert b >= a


def test_lies_weakly_above():
    ctx = NuContext.from_text("NENE")
    assert lies_weakly_above(parse_path("NNEE"), ctx)
    assert lies_weakly_above(parse_path("NENE"), ctx)
    assert not lies_weakly_above(parse_path("NEEN"), ctx)
    with pytest.raises(ValueError):
        lies_weakly_above(parse_path("NE"), ctx)


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_counts_are_catalan(n):
    assert len(enumerate_tam(NuContext.from_path(staircase(n)))) == CATALAN[n]
    assert len(enumerate_tam(NuContext.from_path(east_staircase(n)))) == CATALAN[n]


def test_enumeration_members_lie_above():
    ctx = NuContext.from_text("ENNEEE")
    for mu in enumerate_tam(ctx):
        assert lies_weakly_above(mu, ctx)


def test_cover_up_example():
    ctx = NuContext.from_text("NENE")
    assert {p.steps for p in covers_up(parse_path("NENE"), ctx)} == {"NNEE"}
    assert covers_up(parse_path("NNEE"), ctx) == set()


def test_cover_down_example():
    ctx = NuContext.from_text("NENE")
    assert {p.steps for p in covers_down(parse_path("NNEE"), ctx)} == {"NENE"}
    assert covers_down(parse_path("NENE"), ctx) == set()


def test_covers_are_mutually_inverse():
    for text in ["NENENE", "ENENE", "ENNEEEENNE", "EENNEE"]:
        ctx = NuContext.from_text(text)
        elements = enumerate_tam(ctx)
        up = {mu: covers_up(mu, ctx) for mu in elements}
        down = {mu: covers_down(mu, ctx) for mu in elements}
        for mu in elements:
            for upper in up[mu]:
                assert mu in down[upper]
            for lower in down[mu]:
                assert mu in up[lower]


def test_cover_requires_membership():
    ctx = NuContext.from_text("NENE")
    with pytest.raises(ValueError):
        covers_up(parse_path("NEEN"), ctx)


def test_enumeration_bound():
    long = LatticePath("NE" * 14)
    with pytest.raises(BoundExceeded):
        enumerate_tam(NuContext.from_path(long))
    # force bypasses the guard
    ctx = NuContext.from_path(LatticePath("NE" * 14))
    assert len(enumerate_tam(ctx, force=True)) > 0


def test_bound_env_override(monkeypatch):
    monkeypatch.setenv("TAMARIPOP_MAX_ELL", "4")
    with pytest.raises(BoundExceeded):
        enumerate_tam(NuContext.from_text("NENENE"))
