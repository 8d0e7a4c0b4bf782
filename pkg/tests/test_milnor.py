from __future__ import annotations

import random

import pytest

from milnorlink import builder, milnor
from milnorlink.diagram import from_braid, longitude, mirror, parse_pd, wirtinger
from milnorlink.milnor import InvalidIndexError, Residue
from milnorlink.verify import random_prescription
from milnorlink.words import epsilon_pair, magnus_expand

BORROMEAN = [[6, 1, 7, 2], [12, 8, 9, 7], [4, 12, 1, 11], [10, 5, 11, 6], [8, 4, 5, 3],
             [2, 9, 3, 10]]


@pytest.fixture(scope="module")
def borromean():
    return parse_pd({"crossings": BORROMEAN})


def test_borromean_triple(borromean):
    assert milnor.mu(borromean, (1, 2, 3)) == 1
    assert milnor.delta(borromean, (1, 2, 3)) == 0
    assert milnor.mu_bar(borromean, (2, 1, 3)) == Residue(-1)
    assert milnor.triple(borromean, 1, 2, 3) == Residue(1)


def test_borromean_rewritten_longitude(borromean):
    u = milnor.reduce_mod_lcs(wirtinger(borromean), longitude(borromean, 3), 3)
    assert len(u) == 4
    assert epsilon_pair(1, 2, u) == 1


def test_hopf():
    d = from_braid([1, 1], 2)
    assert milnor.linking_numbers(d) == {(1, 2): 1}
    assert milnor.mu(d, (2, 1)) == 1


def test_unlink_is_zero():
    d = parse_pd({"crossings": [], "unknotted_components": 3})
    assert milnor.mu_bar(d, (1, 2, 3)) == Residue(0)


def test_knot_self_coefficient_vanishes():
    # zero framing: the longitude has no h_1 term
    assert milnor.mu(from_braid([1, 1, 1], 2), (1, 1)) == 0


def test_series_path_matches_word_path():
    rng = random.Random(7)
    for _ in range(15):
        d = builder.build_diagram(random_prescription(rng, 2))
        pres = wirtinger(d)
        for c in (1, 2, 3):
            u = milnor.reduce_mod_lcs(pres, longitude(d, c), 3)
            assert magnus_expand(u, 2) == milnor.longitude_series(d, c, 3, 2)


def test_mirror_law():
    # reflection inverts meridians and keeps longitudes: mu_I picks up (-1)^(|I|-1)
    rng = random.Random(11)
    for _ in range(30):
        d = builder.build_diagram(random_prescription(rng, 2))
        m = mirror(d)
        assert milnor.mu(m, (1, 2)) == -milnor.mu(d, (1, 2))
        assert milnor.mu_bar(m, (1, 2, 3)) == milnor.mu_bar(d, (1, 2, 3))


def test_indeterminacy():
    d = builder.build_diagram(builder.Prescription(2, 4, 6, 3))
    assert milnor.delta(d, (1, 2, 3)) == 2
    assert milnor.mu_bar(d, (1, 2, 3)) == Residue(1, 2)


def test_proper_subsequences():
    assert list(milnor.proper_subsequences((1, 2, 3))) == [(1, 2), (1, 3), (2, 3)]
    assert list(milnor.proper_subsequences((1, 1, 2))) == [(1, 1), (1, 2)]


@pytest.mark.parametrize("indices", [(1,), (1, 4), (0, 1, 2), (1, True, 2)])
def test_invalid_indices(borromean, indices):
    with pytest.raises(InvalidIndexError):
        milnor.mu(borromean, indices)


def test_triple_needs_distinct(borromean):
    with pytest.raises(InvalidIndexError):
        milnor.triple(borromean, 1, 1, 2)


def test_residue():
    assert Residue(7, 3) == Residue(1, 3)
    assert -Residue(1, 3) == Residue(2, 3)
    assert str(Residue(-1)) == "-1 (mod 0)"
    with pytest.raises(ValueError):
        Residue(1, -2)
