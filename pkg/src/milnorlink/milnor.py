"""Milnor's mu-bar invariants from a diagram.

Each Wirtinger generator is a conjugate ``w p w^-1`` of the preferred meridian
``p`` of its component, where ``w`` is read by walking the component from its
basepoint.  Modulo the ``n``-th lower central subgroup a generator can be
rewritten in preferred meridians alone by substituting the depth ``n-1``
rewriting into its conjugator; :func:`reduce_mod_lcs` applies this to a
longitude, and the Magnus coefficients of the result are the ``mu_I``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd
from typing import Sequence

from .diagram import LinkDiagram, LongitudeWord, WirtingerPresentation, longitude, wirtinger
from .words import TruncatedSeries, Word, epsilon_pair

__all__ = [
    "Residue",
    "MeridianExpression",
    "InvalidIndexError",
    "meridian_expressions",
    "reduce_mod_lcs",
    "longitude_series",
    "mu",
    "delta",
    "mu_bar",
    "triple",
    "linking_numbers",
]


class InvalidIndexError(ValueError):
    """Raised for component indices that do not fit the link."""


@dataclass(frozen=True)
class Residue:
    """An integer modulo ``modulus``; modulus 0 means an honest integer."""

    value: int
    modulus: int = 0

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("modulus must be nonnegative")
        if self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __add__(self, other):
        if isinstance(other, int):
            return Residue(self.value + other, self.modulus)
        if self.modulus != other.modulus:
            raise ValueError("cannot add residues with different moduli")
        return Residue(self.value + other.value, self.modulus)

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"

    def to_json(self):
        return {"value": self.value, "modulus": self.modulus}


def gcd_all(values) -> int:
    return reduce(gcd, (abs(v) for v in values), 0)


@dataclass(frozen=True)
class MeridianExpression:
    """``g = conjugator * p * conjugator^-1`` with ``p`` the meridian of ``component``."""

    conjugator: Word
    component: int


@lru_cache(maxsize=512)
def meridian_expressions(pres: WirtingerPresentation) -> dict:
    out = {}
    for c, walk in enumerate(pres.walks, start=1):
        base = pres.preferred_meridians[c - 1]
        out[base] = MeridianExpression(Word(), c)
        for rel in walk:
            if rel.outgoing == base:
                continue
            prev = out[rel.incoming].conjugator
            out[rel.outgoing] = MeridianExpression(Word([(rel.over, -rel.sign)]) + prev, c)
    return out


def _rewriting(pres: WirtingerPresentation, depth: int) -> dict:
    exprs = meridian_expressions(pres)
    table = {g: Word([(e.component, 1)]) for g, e in exprs.items()}
    for _ in range(depth - 2):
        prev = table
        table = {}
        for g, e in exprs.items():
            w = Word(itertools.chain.from_iterable(
                prev[x.generator] if x.sign > 0 else prev[x.generator].inverse()
                for x in e.conjugator))
            table[g] = w + Word([(e.component, 1)]) + w.inverse()
    return table


def reduce_mod_lcs(pres: WirtingerPresentation, long: LongitudeWord, n: int) -> Word:
    """The longitude rewritten in preferred meridians, valid modulo the n-th LCS term."""
    if n < 2:
        raise ValueError("lower central depth must be at least 2")
    table = _rewriting(pres, n)
    letters = []
    for x in long.full_word:
        w = table[x.generator]
        letters.extend(w if x.sign > 0 else w.inverse())
    return Word(letters)


@lru_cache(maxsize=1024)
def _series_table(pres: WirtingerPresentation, depth: int, degree: int) -> dict:
    # Magnus images of the depth-n rewriting of every generator and its inverse,
    # built without ever expanding the words themselves.
    exprs = meridian_expressions(pres)
    table = {}
    for g, e in exprs.items():
        h = TruncatedSeries({(): 1, (e.component,): 1} if degree else {(): 1}, degree)
        table[g] = (h, h.inverse())
    for _ in range(depth - 2):
        prev = table
        table = {}
        for g, e in exprs.items():
            conj = TruncatedSeries.one(degree)
            for x in e.conjugator:
                fwd, inv = prev[x.generator]
                conj = conj * (fwd if x.sign > 0 else inv)
            h, h_inv = _meridian(e.component, degree)
            conj_inv = conj.inverse()
            table[g] = (conj * h * conj_inv, conj * h_inv * conj_inv)
    return table


def _meridian(c, degree):
    h = TruncatedSeries({(): 1, (c,): 1} if degree else {(): 1}, degree)
    return h, h.inverse()


def longitude_series(d: LinkDiagram, c: int, depth: int, degree: int) -> TruncatedSeries:
    """Magnus expansion of ``reduce_mod_lcs(..., depth)`` for component ``c``."""
    if depth < 2:
        raise ValueError("lower central depth must be at least 2")
    pres = wirtinger(d)
    table = _series_table(pres, depth, degree)
    out = TruncatedSeries.one(degree)
    for x in longitude(d, c).full_word:
        fwd, inv = table[x.generator]
        out = out * (fwd if x.sign > 0 else inv)
    return out


def _check_indices(d: LinkDiagram, indices: Sequence[int], min_len: int = 2) -> tuple:
    indices = tuple(indices)
    if len(indices) < min_len:
        raise InvalidIndexError(f"need at least {min_len} indices, got {len(indices)}")
    for i in indices:
        if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= d.num_components:
            raise InvalidIndexError(f"component index {i!r} out of range 1..{d.num_components}")
    return indices


def mu(d: LinkDiagram, indices: Sequence[int], depth: int | None = None) -> int:
    """Coefficient of ``h_{i1} ... h_{i(r-1)}`` in the expansion of longitude ``i_r``.

    ``depth`` defaults to ``r``; any larger depth gives the same value.
    """
    indices = _check_indices(d, indices)
    r = len(indices)
    if depth is None:
        depth = r
    series = longitude_series(d, indices[-1], depth, r - 1)
    return series.coefficient(indices[:-1])


def proper_subsequences(indices: Sequence[int]):
    """Order-preserving deletions of length 2 .. len-1, without repeats."""
    seen = set()
    for n in range(2, len(indices)):
        for pos in itertools.combinations(range(len(indices)), n):
            sub = tuple(indices[p] for p in pos)
            if sub not in seen:
                seen.add(sub)
                yield sub


def delta(d: LinkDiagram, indices: Sequence[int]) -> int:
    indices = _check_indices(d, indices)
    return gcd_all(mu(d, sub) for sub in proper_subsequences(indices))


def mu_bar(d: LinkDiagram, indices: Sequence[int]) -> Residue:
    indices = _check_indices(d, indices)
    return Residue(mu(d, indices), delta(d, indices))


def linking_numbers(d: LinkDiagram) -> dict:
    """``{(i, j): lk}`` for ``i < j``, read from longitudes."""
    n = d.num_components
    return {(i, j): mu(d, (i, j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)}


def triple(d: LinkDiagram, i: int, j: int, k: int) -> Residue:
    """mu-bar_ijk as the signed ``i...j`` count in the depth-3 longitude of ``k``."""
    i, j, k = _check_indices(d, (i, j, k), 3)
    if len({i, j, k}) != 3:
        raise InvalidIndexError("triple linking number needs three distinct components")
    u = reduce_mod_lcs(wirtinger(d), longitude(d, k), 3)
    modulus = gcd_all(mu(d, pair) for pair in ((i, j), (i, k), (j, k)))
    return Residue(epsilon_pair(i, j, u), modulus)
