"""Permutation side: pop-stack, pattern avoidance, the projection, the bijection."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tamaripop.perms import (
    Permutation,
    avoids,
    count_231_equal_descents_peaks,
    enumerate_av312,
    image_by_characterization,
    parse_permutation,
    perm_stats,
    pi_down,
    pi_down_random,
    pop_stack,
    pop_tamari_perm,
    r_map,
    tamari_perm_bijection,
    weak_order_covers_down,
)
from tamaripop.pop import pop_vector
from tamaripop.series import a055151, catalan, motzkin


def P(text):
    return parse_permutation(text)


def test_parse_and_validate():
    assert P("312").word == (3, 1, 2)
    assert P("10,2,3,4,5,6,7,8,9,1").word[0] == 10
    with pytest.raises(ValueError):
        P("331")
    with pytest.raises(ValueError):
        Permutation((1, 3))


def test_pop_stack_reverses_descending_runs():
    assert pop_stack(P("53412")).word == (3, 5, 1, 4, 2)
    assert pop_stack(P("321")).word == (1, 2, 3)
    assert pop_stack(P("123")).word == (1, 2, 3)
    assert pop_stack(P("1")).word == (1,)


def test_perm_stats():
    st_ = perm_stats(P("35142"))
    assert st_.descent_positions == (1, 3)
    assert st_.ascent_positions == (0, 2)
    assert st_.peak_positions == (1, 3)
    # maximal descending runs 3 | 51 | 42
    assert st_.run_lengths == (1, 2, 2)


def test_avoids():
    assert avoids(P("3142"), "312") is False
    assert avoids(P("1234"), "312") is True
    assert avoids(P("231"), "231") is False
    assert avoids(P("54321"), "231") is True
    with pytest.raises(ValueError):
        avoids(P("1"), "132")


@pytest.mark.parametrize("n", range(1, 9))
def test_av312_counts_are_catalan(n):
    words = enumerate_av312(n)
    assert len(words) == catalan(n)
    assert all(avoids(p, "312") for p in words)


def test_weak_order_covers_down():
    covers = {q.word for q in weak_order_covers_down(P("2143"))}
    assert covers == {(1, 2, 4, 3), (2, 1, 3, 4)}
    assert weak_order_covers_down(P("123")) == set()


def test_pi_down_clears_blocked_descents():
    # 2413: descent (4,1) with the later 3 sitting between them gets swapped
    assert pi_down(P("2413")).word == (2, 1, 4, 3)
    # 321 has no witness between any descent pair, so it is already stable
    assert pi_down(P("321")).word == (3, 2, 1)
    assert pi_down(P("312")).word == (1, 3, 2)


def test_pi_down_projects_onto_312_avoiders():
    import itertools

    for n in range(1, 7):
        for w in itertools.permutations(range(1, n + 1)):
            p = Permutation(w)
            q = pi_down(p)
            assert avoids(q, "312")
            if avoids(p, "312"):
                assert q == p


@settings(max_examples=200, deadline=None)
@given(st.permutations(list(range(1, 8))), st.integers(0, 2**31))
def test_pi_down_confluence(word, seed):
    p = Permutation(tuple(word))
    rng = random.Random(seed)
    assert pi_down_random(p, rng) == pi_down(p)


def test_pop_tamari_requires_312_avoidance():
    with pytest.raises(ValueError):
        pop_tamari_perm(P("312"))


def test_pop_tamari_examples():
    assert pop_tamari_perm(P("231")).word == (2, 1, 3)
    assert pop_tamari_perm(P("123")).word == (1, 2, 3)
    # identity is the unique fixed point
    for n in range(1, 7):
        fixed = [p for p in enumerate_av312(n) if pop_tamari_perm(p) == p]
        assert fixed == [Permutation(tuple(range(1, n + 1)))]


@pytest.mark.parametrize("n", range(1, 9))
def test_image_characterization(n):
    image = {pop_tamari_perm(p) for p in enumerate_av312(n)}
    assert image == image_by_characterization(n)
    assert len(image) == motzkin(n - 1)


def test_image_members_shape():
    for q in image_by_characterization(6):
        word = q.word
        assert word[-1] == 6
        stats = perm_stats(q)
        assert avoids(q, "312")
        # no two consecutive descent positions
        d = stats.descent_positions
        assert all(b - a > 1 for a, b in zip(d, d[1:]))


def test_r_map_involution_shape():
    assert r_map(P("213")).word == (1, 3, 2)
    q = P("2134")
    assert r_map(r_map(q)) == q


def test_r_map_sends_image_to_231_descent_peak_set():
    n = 5
    image = {pop_tamari_perm(p) for p in enumerate_av312(n + 1)}
    for p in image:
        q = r_map(p)
        stats = perm_stats(q)
        assert avoids(q, "231")
        assert len(stats.descent_positions) == len(stats.peak_positions)


@pytest.mark.parametrize("n", range(0, 7))
def test_descent_peak_counts_match_formula(n):
    for k in range(0, n // 2 + 1):
        assert count_231_equal_descents_peaks(n, k) == a055151(n, k)


@pytest.mark.parametrize("n", range(1, 8))
def test_bijection_commutes_with_pop(n):
    mapping = tamari_perm_bijection(n)
    assert len(mapping) == catalan(n)
    for p, v in mapping.items():
        assert mapping[pop_tamari_perm(p)] == pop_vector(v)


def test_bijection_identity_goes_to_bottom():
    mapping = tamari_perm_bijection(4)
    ident = Permutation((1, 2, 3, 4))
    v = mapping[ident]
    assert v.entries == v.ctx.heights


def test_hasse_matching_fallback_finds_isomorphism():
    # Relabel the cover digraph of a small lattice and ask the matcher to
    # recover an isomorphism; composing the two edge images must agree.
    from tamaripop.brackets import path_to_vector
    from tamaripop.paths import NuContext, covers_down, enumerate_tam
    from tamaripop.perms import _match_cover_digraphs

    ctx = NuContext.from_text("ENENENE")
    elements = sorted(enumerate_tam(ctx), key=lambda mu: path_to_vector(mu, ctx).entries)
    index = {mu: i for i, mu in enumerate(elements)}
    edges = {
        (index[mu], index[lower])
        for mu in elements
        for lower in covers_down(mu, ctx)
    }
    m = len(elements)
    shuffle = [(i * 5 + 3) % m for i in range(m)]
    assert sorted(shuffle) == list(range(m))
    relabeled = {(shuffle[a], shuffle[b]) for a, b in edges}
    match = _match_cover_digraphs(edges, relabeled, m)
    assert match is not None
    assert sorted(match) == list(range(m))
    assert {(match[a], match[b]) for a, b in edges} == relabeled
