"""PD-code link diagrams and their Wirtinger presentations.

Conventions
-----------
A crossing ``(a, b, c, d)`` lists the four incident edge labels
counterclockwise, starting from the incoming under-edge ``a``; ``c`` is the
outgoing under-edge.  The crossing is positive when the over-strand runs
``d -> b`` and negative when it runs ``b -> d``.

Wirtinger generators are the arcs of the diagram (maximal over-passes), not
the PD edges.  With right-handed meridians and paths composed left to right,
a crossing with over-arc ``o``, sign ``s`` and under-arcs ``in -> out`` gives

    x_out = x_o^-s  x_in  x_o^s

and the longitude of a component picks up ``x_o^s`` at every under-pass.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

from .words import Word

__all__ = [
    "PDCodeError",
    "LinkDiagram",
    "Relation",
    "WirtingerPresentation",
    "LongitudeWord",
    "parse_pd",
    "load_pd",
    "from_braid",
    "mirror",
    "wirtinger",
    "longitude",
]


class PDCodeError(ValueError):
    """Raised for malformed or inconsistent PD codes."""


@dataclass(frozen=True)
class _Pass:
    # one passage of a component through a crossing
    crossing: int
    under: bool
    edge_in: int
    edge_out: int


@dataclass(frozen=True, eq=False)
class LinkDiagram:
    """An oriented link diagram given by a PD code.

    ``unknotted`` counts split crossingless unknots, which are numbered after
    the components that meet crossings.  ``basepoints`` optionally overrides
    the basepoint edge of crossing components (default: lowest label).
    """

    crossings: tuple
    unknotted: int = 0
    name: str | None = None
    basepoints: tuple | None = None
    _walks: tuple = field(init=False, repr=False)
    _signs: tuple = field(init=False, repr=False)

    def __post_init__(self):
        crossings = tuple(tuple(x) for x in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        walks, signs = _analyse(crossings)
        if self.basepoints is not None:
            if len(self.basepoints) != len(walks):
                raise PDCodeError("one basepoint edge per crossing component is required")
            walks = tuple(_rotate_walk(w, e) for w, e in zip(walks, self.basepoints))
        object.__setattr__(self, "_walks", walks)
        object.__setattr__(self, "_signs", signs)
        if self.unknotted < 0:
            raise PDCodeError("unknotted component count must be nonnegative")

    def __eq__(self, other):
        if not isinstance(other, LinkDiagram):
            return NotImplemented
        return (self.crossings, self.unknotted, self.basepoint_edges) == (
            other.crossings, other.unknotted, other.basepoint_edges)

    def __hash__(self):
        return hash((self.crossings, self.unknotted, self.basepoint_edges))

    @property
    def num_components(self) -> int:
        return len(self._walks) + self.unknotted

    @property
    def signs(self) -> tuple:
        """Sign of each crossing, in PD order."""
        return self._signs

    @property
    def edges(self) -> tuple:
        return tuple(sorted({e for x in self.crossings for e in x}))

    @property
    def components(self) -> tuple:
        """Edge labels of each crossing component, in orientation order from its basepoint."""
        return tuple(tuple(p.edge_in for p in w) for w in self._walks)

    @property
    def basepoint_edges(self) -> tuple:
        return tuple(w[0].edge_in for w in self._walks)

    def walk(self, c: int) -> tuple:
        return self._walks[c - 1]

    @cached_property
    def crossing_components(self) -> tuple:
        """``(under_component, over_component)`` for every crossing."""
        under = {}
        over = {}
        for c, w in enumerate(self._walks, start=1):
            for p in w:
                (under if p.under else over)[p.crossing] = c
        return tuple((under[i], over[i]) for i in range(len(self.crossings)))

    @cached_property
    def arcs(self) -> tuple:
        """Wirtinger arcs as tuples of edge labels, component by component."""
        out = []
        for w in self._walks:
            out.extend(_split_arcs(w))
        out.extend(() for _ in range(self.unknotted))
        return tuple(out)

    def writhe(self, c: int) -> int:
        return sum(s for s, (u, o) in zip(self._signs, self.crossing_components) if u == o == c)

    def linking_number(self, i: int, j: int) -> int:
        """Half the signed count of crossings between components ``i`` and ``j``."""
        if i == j:
            raise ValueError("linking number needs two distinct components")
        total = sum(s for s, comps in zip(self._signs, self.crossing_components)
                    if set(comps) == {i, j})
        return total // 2

    def with_basepoints(self, edges: Mapping[int, int]) -> "LinkDiagram":
        """Copy with the basepoint edge of some components moved."""
        current = list(self.basepoint_edges)
        for c, e in edges.items():
            if not 1 <= c <= len(current) or e not in self.components[c - 1]:
                raise ValueError(f"edge {e} does not lie on component {c}")
            current[c - 1] = e
        return replace(self, basepoints=tuple(current))

    def relabel(self, mapping: Mapping[int, int]) -> "LinkDiagram":
        crossings = tuple(tuple(mapping[e] for e in x) for x in self.crossings)
        bps = tuple(mapping[e] for e in self.basepoints) if self.basepoints else None
        return LinkDiagram(crossings, self.unknotted, self.name, bps)

    def to_json(self) -> dict:
        data = {"crossings": [list(x) for x in self.crossings],
                "components": self.num_components}
        if self.unknotted:
            data["unknotted_components"] = self.unknotted
        if self.name:
            data["name"] = self.name
        return data


def _analyse(crossings):
    slots: dict[int, list] = {}
    for ci, x in enumerate(crossings):
        if len(x) != 4:
            raise PDCodeError(f"crossing {ci} has {len(x)} entries, expected 4")
        for pos, e in enumerate(x):
            if isinstance(e, bool) or not isinstance(e, int) or e < 1:
                raise PDCodeError(f"crossing {ci}: arc labels must be positive integers, got {e!r}")
            slots.setdefault(e, []).append((ci, pos))
    for e, where in slots.items():
        if len(where) != 2:
            raise PDCodeError(f"arc label {e} appears {len(where)} times, expected 2")

    def traverse(start, head):
        steps = []
        e, (ci, pos) = start, head
        while True:
            out_slot = (ci, (pos + 2) % 4)
            nxt = crossings[ci][out_slot[1]]
            steps.append((e, ci, pos, nxt))
            a, b = slots[nxt]
            tail = out_slot
            head_slot = b if a == tail else a
            e, (ci, pos) = nxt, head_slot
            if e == start and (ci, pos) == head:
                return steps
            if len(steps) > 2 * len(slots):
                raise PDCodeError("orientation is inconsistent: edge successor map is not a permutation")

    seen: set[int] = set()
    walks = []
    over_entry = {}
    for start in sorted(slots):
        if start in seen:
            continue
        steps = traverse(start, slots[start][1])
        fwd = any(pos == 0 for _, _, pos, _ in steps)
        back = any(pos == 2 for _, _, pos, _ in steps)
        if fwd and back:
            raise PDCodeError(f"component through arc {start} has inconsistent orientation")
        if back or (not fwd and _prefers_reverse(crossings, steps)):
            steps = traverse(start, slots[start][0])
        edges = [e for e, *_ in steps]
        if len(set(edges)) != len(edges) or seen.intersection(edges):
            raise PDCodeError("orientation is inconsistent: edge successor map is not a permutation")
        seen.update(edges)
        walk = []
        for e, ci, pos, nxt in steps:
            walk.append(_Pass(ci, pos in (0, 2), e, nxt))
            if pos in (1, 3):
                over_entry[ci] = pos
        walks.append(tuple(walk))

    signs = []
    for ci, x in enumerate(crossings):
        under_ok = any(w_pass.crossing == ci and w_pass.under and w_pass.edge_in == x[0]
                       for w in walks for w_pass in w)
        if not under_ok:
            raise PDCodeError(f"crossing {ci}: under-strand does not run from position 1 to 3")
        signs.append(1 if over_entry[ci] == 3 else -1)
    return tuple(walks), tuple(signs)


def _prefers_reverse(crossings, steps) -> bool:
    # Over-only component: orientation cannot be read from the code, so fall
    # back to the usual consecutive-label rule at its first over-pass.
    e, ci, pos, _ = steps[0]
    b, d = crossings[ci][1], crossings[ci][3]
    d_to_b = b == d + 1 or d > b + 1
    return d_to_b != (pos == 3)


def _rotate_walk(walk, edge):
    for n, p in enumerate(walk):
        if p.edge_in == edge:
            return walk[n:] + walk[:n]
    raise PDCodeError(f"basepoint edge {edge} is not on the component")


def _split_arcs(walk):
    cuts = [n for n, p in enumerate(walk) if p.under]
    if not cuts:
        return [tuple(p.edge_in for p in walk)]
    edges = [p.edge_in for p in walk]
    arcs = [edges[: cuts[0] + 1] + edges[cuts[-1] + 1:]]
    for a, b in zip(cuts, cuts[1:]):
        arcs.append(edges[a + 1: b + 1])
    return [tuple(a) for a in arcs]


def parse_pd(data) -> LinkDiagram:
    """Build a diagram from PD JSON text or an already-decoded dict."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise PDCodeError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "crossings" not in data:
        raise PDCodeError("PD JSON must be an object with a 'crossings' list")
    raw = data["crossings"]
    if not isinstance(raw, list) or not all(isinstance(x, (list, tuple)) for x in raw):
        raise PDCodeError("'crossings' must be a list of 4-element lists")
    crossings = tuple(tuple(x) for x in raw)
    # build once to count crossing components
    probe = LinkDiagram(crossings)
    found = probe.num_components
    declared = data.get("components")
    unknotted = data.get("unknotted_components")
    if unknotted is None:
        unknotted = 0 if declared is None else declared - found
    if not isinstance(unknotted, int) or unknotted < 0:
        raise PDCodeError("declared component count is smaller than the number found")
    if declared is not None and declared != found + unknotted:
        raise PDCodeError(
            f"declared {declared} components but found {found} + {unknotted} unknotted")
    return LinkDiagram(crossings, unknotted, data.get("name"))


def load_pd(path) -> LinkDiagram:
    with open(path) as fh:
        return parse_pd(fh.read())


def from_braid(word: Sequence[int], strands: int, name: str | None = None) -> LinkDiagram:
    """Closure of a braid given as signed generator indices (``-2`` is sigma_2^-1).

    The braid runs upward; in ``sigma_i`` the strand moving left to right
    passes over, which makes it a positive crossing.  Bottom edges of the
    strands get labels ``1..strands`` so strand ``n`` carries the lowest label
    of its component; untouched strands come out as split unknots.
    """
    current = list(range(1, strands + 1))
    label = strands
    crossings = []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"braid generator {g} out of range for {strands} strands")
        left, right = current[i], current[i + 1]
        new_left, new_right = label + 1, label + 2
        label += 2
        if g > 0:
            crossings.append([right, new_right, new_left, left])
        else:
            crossings.append([left, right, new_right, new_left])
        current[i], current[i + 1] = new_left, new_right
    closing = {top: bottom for bottom, top in zip(range(1, strands + 1), current)}
    crossings = [[closing.get(e, e) for e in x] for x in crossings]
    used = sorted({e for x in crossings for e in x})
    compact = {e: n for n, e in enumerate(used, start=1)}
    crossings = tuple(tuple(compact[e] for e in x) for x in crossings)
    touched = {closing.get(b, b) for b in range(1, strands + 1)} & set(used)
    return LinkDiagram(crossings, strands - len(touched), name)


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Mirror image: every crossing changes from over to under."""
    flipped = []
    for (a, b, c, e), s in zip(d.crossings, d.signs):
        flipped.append((e, a, b, c) if s > 0 else (b, c, e, a))
    name = f"mirror of {d.name}" if d.name else None
    return LinkDiagram(tuple(flipped), d.unknotted, name, d.basepoints)


@dataclass(frozen=True)
class Relation:
    """``x_outgoing = x_over^-sign  x_incoming  x_over^sign``."""

    crossing: int
    over: int
    incoming: int
    outgoing: int
    sign: int

    def relator(self) -> Word:
        s = self.sign
        return Word([(self.over, -s), (self.incoming, 1), (self.over, s), (self.outgoing, -1)])


@dataclass(frozen=True)
class WirtingerPresentation:
    generators: tuple
    relations: tuple
    preferred_meridians: tuple
    component_of: tuple
    walks: tuple  # per component: its relations in order along the component

    def component(self, g: int) -> int:
        return self.component_of[g - 1]


@dataclass(frozen=True)
class LongitudeWord:
    component: int
    word: Word
    framing_correction: int
    meridian: int

    @property
    def full_word(self) -> Word:
        return self.word + Word([(self.meridian, 1)]) * self.framing_correction


@lru_cache(maxsize=2048)
def wirtinger(d: LinkDiagram) -> WirtingerPresentation:
    arc_of = {}
    component_of = []
    preferred = []
    for gen, arc in enumerate(d.arcs, start=1):
        for e in arc:
            arc_of[e] = gen
    next_gen = 1
    walks = []
    relations = {}
    for c in range(1, d.num_components + 1):
        if c > len(d.components):
            component_of.append(c)
            preferred.append(next_gen)
            next_gen += 1
            walks.append(())
            continue
        w = d.walk(c)
        n_arcs = max(1, sum(p.under for p in w))
        component_of.extend([c] * n_arcs)
        preferred.append(next_gen)
        next_gen += n_arcs
        steps = []
        for p in w:
            if not p.under:
                continue
            x = d.crossings[p.crossing]
            rel = Relation(p.crossing, arc_of[x[1]], arc_of[p.edge_in], arc_of[p.edge_out],
                           d.signs[p.crossing])
            relations[p.crossing] = rel
            steps.append(rel)
        walks.append(tuple(steps))
    return WirtingerPresentation(
        generators=tuple(range(1, next_gen)),
        relations=tuple(relations[i] for i in range(len(d.crossings))),
        preferred_meridians=tuple(preferred),
        component_of=tuple(component_of),
        walks=tuple(walks),
    )


def longitude(d: LinkDiagram, c: int) -> LongitudeWord:
    """Zero-framed longitude of component ``c`` read from its basepoint."""
    if not 1 <= c <= d.num_components:
        raise ValueError(f"component {c} out of range 1..{d.num_components}")
    pres = wirtinger(d)
    word = Word((rel.over, rel.sign) for rel in pres.walks[c - 1])
    return LongitudeWord(c, word, -d.writhe(c), pres.preferred_meridians[c - 1])


def relabel_monotone(d: LinkDiagram, labels: Iterable[int]) -> LinkDiagram:
    """Relabel edges by an order-preserving map onto ``labels`` (sorted)."""
    new = sorted(labels)
    return d.relabel(dict(zip(d.edges, new)))
