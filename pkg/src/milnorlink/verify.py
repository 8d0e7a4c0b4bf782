"""Seeded property suites shared by the test-suite and ``milnorlink verify``.

Every suite takes a :class:`random.Random` and a case count and returns a
:class:`SuiteResult`; nothing here depends on global state, so a fixed seed
reproduces a run exactly.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field

from . import builder, diagram, milnor, surfaces
from .words import (Letter, TruncatedSeries, Word, epsilon, epsilon_pair, free_reduce,
                    magnus_coeff, magnus_expand)

__all__ = [
    "SuiteResult",
    "random_word",
    "random_pattern",
    "naive_magnus",
    "SUITES",
    "run_all",
]

MAX_FAILURES = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)  # first few, for the report

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def check(self, ok: bool, what):
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_FAILURES:
                self.failures.append(str(what() if callable(what) else what))

    def to_json(self) -> dict:
        return {"name": self.name, "checked": self.checked, "failed": self.failed,
                "failures": list(self.failures)}


def random_word(rng: random.Random, max_len: int = 40, gens: int = 4) -> Word:
    n = rng.randint(0, max_len)
    return Word((rng.randint(1, gens), rng.choice((1, -1))) for _ in range(n))


def random_pattern(rng: random.Random, max_arcs: int = 8, labels=(1, 2, 3)) -> surfaces.SurfacePattern:
    """A valid pattern assembled from random clasps and ribbons."""
    words = {x: [] for x in labels}
    for n in range(rng.randint(0, max_arcs)):
        s = rng.choice((1, -1))
        if rng.random() < 0.6:
            a, b = rng.sample(labels, 2)
            words[a].insert(rng.randint(0, len(words[a])), (Letter(b, s), n))
            words[b].insert(rng.randint(0, len(words[b])), (Letter(a, s), n))
        else:
            r = rng.choice(labels)
            x = rng.choice([v for v in labels if v != r])
            for sign in (s, -s):
                words[r].insert(rng.randint(0, len(words[r])), (Letter(x, sign), n))
    ends = defaultdict(list)
    for w_idx, label in enumerate(labels):
        for pos, (_, arc) in enumerate(words[label]):
            ends[arc].append((w_idx, pos))
    return surfaces.SurfacePattern(
        tuple(labels), tuple(Word(x for x, _ in words[v]) for v in labels),
        t=rng.randint(-3, 3), circles=rng.randint(0, 2),
        arcs=tuple(tuple(v) for v in ends.values()))


def naive_magnus(w, d: int) -> dict:
    """Magnus expansion by multiplying explicit truncated factor polynomials.

    Shares no code with :mod:`milnorlink.words`: every letter becomes its own
    polynomial and the factors are multiplied with a plain double loop.
    """
    acc = {(): 1}
    for gen, sign in w:
        factor = {(): 1}
        if sign > 0:
            if d >= 1:
                factor[(gen,)] = 1
        else:
            for n in range(1, d + 1):
                factor[(gen,) * n] = (-1) ** n
        prod = {}
        for m1, c1 in acc.items():
            for m2, c2 in factor.items():
                if len(m1) + len(m2) <= d:
                    prod[m1 + m2] = prod.get(m1 + m2, 0) + c1 * c2
        acc = {m: c for m, c in prod.items() if c != 0}
    return acc


def word_identities(rng, cases) -> SuiteResult:
    res = SuiteResult("word identities")
    for _ in range(cases):
        u, v = random_word(rng), random_word(rng)
        uv = u + v
        i, j = rng.sample(range(1, 5), 2)
        res.check(epsilon(i, uv) == epsilon(i, u) + epsilon(i, v), lambda: f"additivity {u} | {v}")
        res.check(epsilon_pair(i, j, uv) == epsilon_pair(i, j, u) + epsilon_pair(i, j, v)
                  + epsilon(i, u) * epsilon(j, v), lambda: f"product rule {u} | {v}")
        res.check(epsilon_pair(i, j, u) + epsilon_pair(j, i, u) == epsilon(i, u) * epsilon(j, u),
                  lambda: f"symmetrization {u}")
        res.check(magnus_coeff(u, (i,), 2) == epsilon(i, u), lambda: f"degree 1 {u}")
        res.check(magnus_coeff(u, (i, j), 2) == epsilon_pair(i, j, u), lambda: f"degree 2 {u}")
        res.check(magnus_expand(free_reduce(u), 3) == magnus_expand(u, 3), lambda: f"reduction {u}")
    return res


def magnus_oracle(rng, cases) -> SuiteResult:
    res = SuiteResult("magnus vs naive oracle")
    for _ in range(cases):
        w = random_word(rng)
        d = rng.randint(0, 3)
        res.check(magnus_expand(w, d).terms == naive_magnus(w, d), lambda: f"{w} at degree {d}")
    return res


def series_ring(rng, cases) -> SuiteResult:
    res = SuiteResult("series ring axioms")
    for _ in range(cases):
        d = rng.randint(0, 3)
        a, b, c = (magnus_expand(random_word(rng, 12), d) for _ in range(3))
        one = TruncatedSeries.one(d)
        res.check((a * b) * c == a * (b * c), lambda: f"associativity at degree {d}")
        res.check(a * one == a == one * a, lambda: "unit")
        res.check(a * a.inverse() == one, lambda: "inverse")
    return res


def finger_moves(rng, cases) -> SuiteResult:
    res = SuiteResult("finger moves preserve m - t")
    for _ in range(cases):
        p = random_pattern(rng)
        base = surfaces.m_value(p) - p.t
        for move in surfaces.applicable_moves(p):
            q = surfaces.finger_move(p, move)
            res.check(surfaces.m_value(q) - q.t == base, lambda: f"{move} on {p.to_json()}")
    return res


def surface_symmetries(rng, cases) -> SuiteResult:
    res = SuiteResult("basepoint and antisymmetry on patterns")
    for _ in range(cases):
        p = random_pattern(rng)
        i, j, k = p.labels
        mb = surfaces.mu_bar_surface(p)
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            res.check(surfaces.e_value(p, (a, b, c)) + surfaces.e_value(p, (b, a, c))
                      == epsilon(a, p.word(c)) * epsilon(b, p.word(c)), lambda: f"e antisymmetry {p}")
        wk = p.word(k)
        for s in range(len(wk) + 1):
            q = surfaces.rotate_basepoint(p, k, s)
            v = wk[s:]
            change = surfaces.e_value(q, (i, j, k)) - surfaces.e_value(p, (i, j, k))
            expected = -(p.lk(i, k) * epsilon(j, v) - epsilon(i, v) * p.lk(j, k))
            res.check(change == expected, lambda: f"rotation change {p.to_json()} by {s}")
            res.check(surfaces.mu_bar_surface(q) == mb, lambda: f"rotation invariance {p.to_json()}")
        for order in ((j, i, k), (i, k, j), (k, j, i)):
            res.check(surfaces.mu_bar_surface(p, order) == -mb, lambda: f"transposition {order}")
        for order in ((j, k, i), (k, i, j)):
            res.check(surfaces.mu_bar_surface(p, order) == mb, lambda: f"cyclic {order}")
    return res


def normalization(rng, cases) -> SuiteResult:
    res = SuiteResult("type-2 normalization")
    for _ in range(cases):
        p = random_pattern(rng)
        q, residue = surfaces.normalize_type2(p)
        res.check(residue == surfaces.mu_bar_surface(p), lambda: f"residue {p.to_json()}")
        res.check(surfaces.classify(q) == "type2", lambda: f"not type2 after sorting {q.to_json()}")
        res.check(surfaces.m_value(q) % q.delta() == 0 if q.delta() else surfaces.m_value(q) == 0,
                  lambda: f"m not 0 mod delta {q.to_json()}")
    return res


def builder_grid(rng, cases, m_range=range(0, 5), lk_range=range(0, 4)) -> SuiteResult:
    res = SuiteResult("builder three-way agreement")
    if cases <= 0:
        return res
    for p in lk_range:
        for q in lk_range:
            for r in lk_range:
                for m in m_range:
                    pr = builder.Prescription(p, q, r, m)
                    d = builder.build_diagram(pr)
                    pat = builder.build_pattern(pr)
                    want = builder.expected_mu_bar(pr)
                    got_d = milnor.mu_bar(d, (1, 2, 3))
                    got_s = surfaces.mu_bar_surface(pat)
                    res.check(got_d == got_s == want, lambda: f"{pr}: diagram {got_d}, surface {got_s}, "
                                                              f"expected {want}")
                    if m == 0:
                        res.check(surfaces.classify(pat) == "type1", lambda: f"{pr} not type1")
    return res


def random_prescription(rng, bound=3) -> builder.Prescription:
    return builder.Prescription(*(rng.randint(-bound, bound) for _ in range(4)))


def diagram_properties(rng, cases) -> SuiteResult:
    res = SuiteResult("diagram invariants on builder links")
    for _ in range(cases):
        pr = random_prescription(rng)
        d = builder.build_diagram(pr)
        lks = milnor.linking_numbers(d)
        for (i, j), lk in lks.items():
            res.check(lk == d.linking_number(i, j), lambda: f"{pr} lk({i},{j})")
            res.check(milnor.mu(d, (j, i)) == lk, lambda: f"{pr} lk symmetry")
        tri = milnor.triple(d, 1, 2, 3)
        res.check(tri == milnor.mu_bar(d, (1, 2, 3)), lambda: f"{pr} triple vs mu_bar")
        for order, sign in (((2, 1, 3), -1), ((1, 3, 2), -1), ((3, 2, 1), -1),
                            ((2, 3, 1), 1), ((3, 1, 2), 1)):
            got = milnor.triple(d, *order)
            res.check(got == (tri if sign > 0 else -tri), lambda: f"{pr} permutation {order}")
        res.check(milnor.mu(d, (1, 2, 3), depth=3) == milnor.mu(d, (1, 2, 3), depth=4),
                  lambda: f"{pr} depth stability")
        for c, comp in enumerate(d.components, start=1):
            moved = d.with_basepoints({c: comp[rng.randrange(len(comp))]})
            res.check(milnor.mu_bar(moved, (1, 2, 3)) == tri, lambda: f"{pr} basepoint of {c}")
        shifted = diagram.relabel_monotone(d, range(7, 7 + 3 * len(d.edges), 3))
        res.check(milnor.mu_bar(shifted, (1, 2, 3)) == tri, lambda: f"{pr} relabelling")
    return res


SUITES = {
    "words": (word_identities, 1),
    "magnus": (magnus_oracle, 1),
    "series": (series_ring, 4),
    "finger": (finger_moves, 4),
    "symmetries": (surface_symmetries, 2),
    "normalize": (normalization, 2),
    "grid": (builder_grid, 1),
    "diagrams": (diagram_properties, 20),
}


def run_all(seed: int, cases: int) -> list:
    """Run every suite; suite ``name`` sees ``cases // divisor`` cases."""
    results = []
    for name, (suite, divisor) in SUITES.items():
        rng = random.Random(f"{seed}:{name}")
        results.append(suite(rng, cases // divisor if cases else 0))
    return results
