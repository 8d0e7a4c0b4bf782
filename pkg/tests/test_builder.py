from __future__ import annotations

import itertools

import pytest

from milnorlink import builder, milnor, surfaces
from milnorlink.builder import Prescription
from milnorlink.milnor import Residue


def test_unlink():
    d = builder.build_diagram(Prescription())
    assert d.crossings == () and d.num_components == 3
    assert surfaces.m_value(builder.build_pattern(Prescription())) == 0


def test_single_borromean_tangle():
    d = builder.build_diagram(Prescription(0, 0, 0, 1))
    assert milnor.linking_numbers(d) == {(1, 2): 0, (1, 3): 0, (2, 3): 0}
    assert milnor.mu_bar(d, (1, 2, 3)) == Residue(1)
    p = builder.build_pattern(Prescription(0, 0, 0, 1))
    assert str(p.word(2)) == "g3 g3^-1"
    assert str(p.word(3)) == "g1 g2 g1^-1 g2^-1"


@pytest.mark.parametrize("pr, lks", [
    (Prescription(1, 0, 0), {(1, 2): 1, (1, 3): 0, (2, 3): 0}),
    (Prescription(0, 2, 0), {(1, 2): 0, (1, 3): 0, (2, 3): 2}),
    (Prescription(0, 0, -3), {(1, 2): 0, (1, 3): -3, (2, 3): 0}),
    (Prescription(2, -1, 3, 5), {(1, 2): 2, (1, 3): 3, (2, 3): -1}),
])
def test_linking_numbers(pr, lks):
    d = builder.build_diagram(pr)
    p = builder.build_pattern(pr)
    assert milnor.linking_numbers(d) == lks
    assert {(a, b): p.lk(a, b) for a, b in lks} == lks


def test_patterns_are_valid():
    for args in itertools.product(range(-2, 3), repeat=4):
        p = builder.build_pattern(Prescription(*args))
        assert surfaces.validate(p) == []
        assert p.t == 0 and p.circles == 0


def test_negative_prescriptions_agree():
    for args in itertools.product((-2, -1, 0, 1), repeat=4):
        pr = Prescription(*args)
        want = builder.expected_mu_bar(pr)
        assert milnor.mu_bar(builder.build_diagram(pr), (1, 2, 3)) == want
        assert surfaces.mu_bar_surface(builder.build_pattern(pr)) == want


def test_expected_arithmetic():
    assert builder.expected_mu_bar(Prescription(3, 3, 3, 2)) == Residue(2, 3)
    assert builder.expected_mu_bar(Prescription(2, 2, 2, 1)) == Residue(1, 2)
    assert builder.expected_mu_bar(Prescription(0, 0, 0, -4)) == Residue(-4)


def test_braid_blocks():
    assert builder.braid_word(Prescription(1, 1, 1)) == [1, 1, 2, 2, 2, 1, 1, -2]
    assert builder.braid_word(Prescription(-1)) == [-1, -1]
