"""Combinatorial intersection patterns of three Seifert surfaces.

A pattern records, for surfaces ``F_i, F_j, F_k`` bounded by components
``L_i, L_j, L_k``, the word read around each boundary (one signed letter per
point where the boundary pierces another surface), the signed number of triple
points, the number of closed double curves, and optionally which boundary
letters are joined by a double arc.

From these data::

    e_pqr = epsilon_pair(p, q, w_r)
    m_ijk = e_ijk + e_jki + e_kij
    mu-bar_ijk = m_ijk - t_ijk   (mod gcd of the pairwise linking numbers)
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from typing import Sequence

from .milnor import Residue, gcd_all
from .words import Letter, Word, epsilon, epsilon_pair

__all__ = [
    "PatternError",
    "Violation",
    "SurfacePattern",
    "FingerMove",
    "parse_pattern",
    "load_pattern",
    "validate",
    "t_value",
    "e_value",
    "m_value",
    "mu_bar_surface",
    "rotate_basepoint",
    "finger_move",
    "applicable_moves",
    "is_type1",
    "is_type2",
    "classify",
    "normalize_type2",
]

ROLES = ("i", "j", "k")


class PatternError(ValueError):
    """Malformed pattern input, an invalid pattern, or an inapplicable move."""


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    location: tuple = ()

    def __str__(self):
        where = f" at {self.location}" if self.location else ""
        return f"{self.code}{where}: {self.message}"


@dataclass(frozen=True)
class SurfacePattern:
    """Boundary words ``(w_i, w_j, w_k)`` over the component labels ``(i, j, k)``.

    ``arcs`` pairs letter references ``(word_index, position)``; a pair on two
    different words is a clasp, a pair on one word a ribbon.
    """

    labels: tuple
    words: tuple
    t: int = 0
    circles: int = 0
    arcs: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "words", tuple(Word(w) for w in self.words))
        if len(self.labels) != 3 or len(self.words) != 3:
            raise PatternError("a pattern has exactly three labels and three words")
        if self.arcs is not None:
            arcs = tuple(tuple(tuple(ref) for ref in pair) for pair in self.arcs)
            object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_strings(cls, w_i: str = "", w_j: str = "", w_k: str = "", t: int = 0,
                     labels=(1, 2, 3), circles: int = 0, arcs=None) -> "SurfacePattern":
        """``SurfacePattern.from_strings("", "k+ k-", "i+ j+ i- j-")``."""
        words = [_parse_letters(w.split(), labels) for w in (w_i, w_j, w_k)]
        return cls(tuple(labels), tuple(words), t, circles, arcs)

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise PatternError(f"{label!r} is not one of the labels {self.labels}") from None

    def word(self, label) -> Word:
        return self.words[self.index(label)]

    def others(self, label) -> tuple:
        return tuple(x for x in self.labels if x != label)

    def lk(self, a, b) -> int:
        """Linking number of ``L_a`` and ``L_b``, counted on the boundary of ``a``."""
        return epsilon(b, self.word(a))

    def delta(self) -> int:
        i, j, k = self.labels
        return gcd_all((self.lk(i, j), self.lk(j, k), self.lk(k, i)))

    def to_json(self) -> dict:
        alias = dict(zip(self.labels, ROLES))
        data = {"labels": list(self.labels)}
        for role, w in zip(ROLES, self.words):
            data[f"w_{role}"] = [alias[x.generator] + ("+" if x.sign > 0 else "-") for x in w]
        data["t"] = self.t
        data["circles"] = self.circles
        if self.arcs is not None:
            data["arcs"] = [[[ROLES[w], pos] for w, pos in pair] for pair in self.arcs]
        return data


_LETTER = re.compile(r"^(?P<name>[A-Za-z_]\w*|\d+)(?P<sign>[+-]|\^-1)?$")


def _parse_letters(tokens, labels) -> Word:
    alias = dict(zip(ROLES, labels))
    letters = []
    for tok in tokens:
        if not isinstance(tok, str):
            raise PatternError(f"letter {tok!r} must be a string like 'j+'")
        m = _LETTER.match(tok.strip())
        if not m:
            raise PatternError(f"bad letter {tok!r}")
        name = m.group("name")
        if name in alias:
            gen = alias[name]
        elif name.isdigit() and int(name) in labels:
            gen = int(name)
        else:
            raise PatternError(f"letter {tok!r} does not name a component")
        letters.append(Letter(gen, -1 if m.group("sign") in ("-", "^-1") else 1))
    return Word(letters)


def _parse_ref(ref):
    if not isinstance(ref, (list, tuple)) or len(ref) != 2:
        raise PatternError(f"arc endpoint {ref!r} must be [word, position]")
    w, pos = ref
    if isinstance(w, str):
        name = w[2:] if w.startswith("w_") else w
        if name not in ROLES:
            raise PatternError(f"unknown word {w!r} in arc endpoint")
        w = ROLES.index(name)
    if not isinstance(w, int) or not 0 <= w < 3 or not isinstance(pos, int):
        raise PatternError(f"bad arc endpoint {ref!r}")
    return (w, pos)


def parse_pattern(data) -> SurfacePattern:
    """Read the pattern JSON schema (text or decoded dict)."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise PatternError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise PatternError("pattern JSON must be an object")
    labels = tuple(data.get("labels", (1, 2, 3)))
    if len(labels) != 3 or len(set(labels)) != 3 or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in labels):
        raise PatternError("'labels' must be three distinct integers")
    words = []
    for role in ROLES:
        raw = data.get(f"w_{role}", [])
        if isinstance(raw, str):
            raw = raw.split()
        if not isinstance(raw, list):
            raise PatternError(f"w_{role} must be a list of letters")
        words.append(_parse_letters(raw, labels))
    t = data.get("t", 0)
    circles = data.get("circles", 0)
    if not isinstance(t, int) or not isinstance(circles, int):
        raise PatternError("'t' and 'circles' must be integers")
    arcs = data.get("arcs")
    if arcs is not None:
        if not isinstance(arcs, list):
            raise PatternError("'arcs' must be a list of endpoint pairs")
        parsed = []
        for pair in arcs:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise PatternError(f"arc {pair!r} must have two endpoints")
            parsed.append((_parse_ref(pair[0]), _parse_ref(pair[1])))
        arcs = tuple(parsed)
    return SurfacePattern(labels, tuple(words), t, circles, arcs)


def load_pattern(path) -> SurfacePattern:
    with open(path) as fh:
        return parse_pattern(fh.read())


def validate(p: SurfacePattern) -> list:
    """All violated pattern invariants; an empty list means the pattern is valid."""
    out = []
    if len(set(p.labels)) != 3:
        out.append(Violation("labels", "labels must be distinct"))
        return out
    for n, (label, w) in enumerate(zip(p.labels, p.words)):
        allowed = set(p.others(label))
        for pos, x in enumerate(w):
            if x.generator not in allowed:
                out.append(Violation("letter", f"w_{ROLES[n]} may only use {sorted(allowed)}",
                                     (n, pos)))
    for a, b in ((0, 1), (1, 2), (2, 0)):
        la, lb = p.labels[a], p.labels[b]
        x, y = epsilon(lb, p.words[a]), epsilon(la, p.words[b])
        if x != y:
            out.append(Violation(
                "linking", f"epsilon({lb}, w_{ROLES[a]}) = {x} but epsilon({la}, w_{ROLES[b]}) = {y}",
                (a, b)))
    if p.circles < 0:
        out.append(Violation("circles", "circle count must be nonnegative"))
    if p.arcs is not None:
        out.extend(_validate_arcs(p))
    return out


def _validate_arcs(p):
    out = []
    used = {}
    for n, pair in enumerate(p.arcs):
        for ref in pair:
            w, pos = ref
            if not 0 <= pos < len(p.words[w]):
                out.append(Violation("arc", f"endpoint {ref} does not exist", (n,)))
                break
            if ref in used:
                out.append(Violation("arc", f"endpoint {ref} used by arcs {used[ref]} and {n}", (n,)))
            used[ref] = n
        else:
            (w1, p1), (w2, p2) = pair
            x1, x2 = p.words[w1][p1], p.words[w2][p2]
            if w1 != w2:
                if x1.sign != x2.sign:
                    out.append(Violation("clasp", "clasp endpoints must have the same sign", (n,)))
                if x1.generator != p.labels[w2] or x2.generator != p.labels[w1]:
                    out.append(Violation("clasp", "clasp endpoints must be on the two surfaces it joins",
                                         (n,)))
            else:
                if x1.sign == x2.sign:
                    out.append(Violation("ribbon", "ribbon endpoints must have opposite signs", (n,)))
                if x1.generator != x2.generator:
                    out.append(Violation("ribbon", "ribbon endpoints must lie on the same surface", (n,)))
    total = sum(len(w) for w in p.words)
    if len(used) != total:
        out.append(Violation("arc", f"{total - len(used)} boundary letters are not on any arc"))
    return out


def _require_valid(p):
    problems = validate(p)
    if problems:
        raise PatternError("; ".join(str(v) for v in problems))


def _perm_sign(labels, order) -> int:
    order = tuple(order)
    if sorted(order) != sorted(labels) or len(set(order)) != 3:
        raise PatternError(f"{order} is not an ordering of {labels}")
    idx = [labels.index(x) for x in order]
    inversions = sum(1 for a in range(3) for b in range(a + 1, 3) if idx[a] > idx[b])
    return -1 if inversions % 2 else 1


def t_value(p: SurfacePattern, order: Sequence | None = None) -> int:
    """Signed triple point count for the surfaces taken in ``order``."""
    if order is None:
        return p.t
    return _perm_sign(p.labels, order) * p.t


def e_value(p: SurfacePattern, triple: Sequence) -> int:
    a, b, c = triple
    if len({a, b, c}) != 3 or not {a, b, c} <= set(p.labels):
        raise PatternError(f"{tuple(triple)} must be three distinct labels from {p.labels}")
    return epsilon_pair(a, b, p.word(c))


def m_value(p: SurfacePattern, order: Sequence | None = None) -> int:
    i, j, k = p.labels if order is None else order
    return e_value(p, (i, j, k)) + e_value(p, (j, k, i)) + e_value(p, (k, i, j))


def mu_bar_surface(p: SurfacePattern, order: Sequence | None = None) -> Residue:
    _require_valid(p)
    return Residue(m_value(p, order) - t_value(p, order), p.delta())


def _remap_arcs(arcs, word, mapping):
    if arcs is None:
        return None
    return tuple(tuple((w, mapping[pos]) if w == word else (w, pos) for w, pos in pair)
                 for pair in arcs)


def rotate_basepoint(p: SurfacePattern, component, steps: int) -> SurfacePattern:
    """Move the basepoint of ``w_component`` forward by ``steps`` letters."""
    n = p.index(component)
    w = p.words[n]
    if not w:
        return p
    s = steps % len(w)
    words = list(p.words)
    words[n] = w[s:] + w[:s]
    mapping = {pos: (pos - s) % len(w) for pos in range(len(w))}
    return replace(p, words=tuple(words), arcs=_remap_arcs(p.arcs, n, mapping))


@dataclass(frozen=True)
class FingerMove:
    """A finger move acting on the boundary word of ``word`` (a label).

    kind 1  insert ``x^sign x^-sign`` before ``position`` (``generator`` = x);
            inverse deletes the cancelling pair starting at ``position``.
    kind 2  replace the letter ``y^e`` at ``position`` by ``x^-1 y^e x``, x the
            third label; inverse undoes this for the triple starting there.
    kind 3  swap the letters at ``position`` and ``position + 1``.
    """

    kind: int
    word: int
    position: int
    generator: int | None = None
    sign: int = 1
    inverse: bool = False


def _cyclic(p, x, y, r) -> bool:
    a, b, c = (p.index(v) for v in (x, y, r))
    return (b - a) % 3 == 1 and (c - b) % 3 == 1


def finger_move(p: SurfacePattern, move: FingerMove) -> SurfacePattern:
    """Apply ``move`` and update the triple point count so that m - t is preserved."""
    r = move.word
    n = p.index(r)
    w = list(p.words[n])
    pos = move.position
    others = p.others(r)
    dt = 0
    arcs = None
    if move.kind == 1 and not move.inverse:
        if move.generator not in others or move.sign not in (1, -1) or not 0 <= pos <= len(w):
            raise PatternError(f"cannot insert a cancelling pair: {move}")
        w[pos:pos] = [Letter(move.generator, move.sign), Letter(move.generator, -move.sign)]
    elif move.kind == 1:
        if not (0 <= pos < len(w) - 1 and w[pos].generator == w[pos + 1].generator
                and w[pos].sign == -w[pos + 1].sign):
            raise PatternError(f"no cancelling pair at {pos} in w_{r}")
        del w[pos:pos + 2]
    elif move.kind == 2 and not move.inverse:
        if not 0 <= pos < len(w):
            raise PatternError(f"no letter at {pos} in w_{r}")
        y, eps = w[pos]
        (x,) = [v for v in others if v != y]
        w[pos:pos + 1] = [Letter(x, -1), Letter(y, eps), Letter(x, 1)]
        dt = -eps if _cyclic(p, x, y, r) else eps
    elif move.kind == 2:
        if not 0 <= pos < len(w) - 2:
            raise PatternError(f"no conjugated letter at {pos} in w_{r}")
        a, (y, eps), b = w[pos:pos + 3]
        if not (a.generator == b.generator != y and a.sign == -1 and b.sign == 1):
            raise PatternError(f"letters at {pos} in w_{r} are not of the form x^-1 y x")
        x = a.generator
        w[pos:pos + 3] = [Letter(y, eps)]
        dt = eps if _cyclic(p, x, y, r) else -eps
    elif move.kind == 3:
        if not 0 <= pos < len(w) - 1:
            raise PatternError(f"no adjacent pair at {pos} in w_{r}")
        (x, alpha), (y, beta) = w[pos], w[pos + 1]
        w[pos], w[pos + 1] = w[pos + 1], w[pos]
        if x != y:
            dt = -alpha * beta if _cyclic(p, x, y, r) else alpha * beta
        arcs = _remap_arcs(p.arcs, n, {q: (pos + 1 if q == pos else pos if q == pos + 1 else q)
                                       for q in range(len(w))})
    else:
        raise PatternError(f"unknown finger move kind {move.kind}")
    words = list(p.words)
    words[n] = Word(w)
    return replace(p, words=tuple(words), t=p.t + dt, arcs=arcs)


def applicable_moves(p: SurfacePattern):
    """Every finger move (all role variants, both directions) that applies to ``p``."""
    for r, w in zip(p.labels, p.words):
        others = p.others(r)
        for pos in range(len(w) + 1):
            for x in others:
                for s in (1, -1):
                    yield FingerMove(1, r, pos, x, s)
        for pos in range(len(w)):
            yield FingerMove(2, r, pos)
            if pos + 1 < len(w):
                yield FingerMove(3, r, pos)
                if w[pos].generator == w[pos + 1].generator and w[pos].sign == -w[pos + 1].sign:
                    yield FingerMove(1, r, pos, inverse=True)
            if pos + 2 < len(w):
                a, y, b = w[pos:pos + 3]
                if a.generator == b.generator != y.generator and a.sign == -1 and b.sign == 1:
                    yield FingerMove(2, r, pos, inverse=True)


def is_type1(p: SurfacePattern) -> bool:
    """Disjoint clasps only: no triple points, no circles, every arc a clasp."""
    if p.arcs is None:
        raise PatternError("type 1 needs the arc pairing of the pattern")
    if validate(p):
        return False
    return p.t == 0 and p.circles == 0 and all(a[0][0] != a[1][0] for a in p.arcs)


def _cyclic_reduce(w: Sequence) -> list:
    stack = []
    for x in w:
        if stack and stack[-1].generator == x.generator and stack[-1].sign == -x.sign:
            stack.pop()
        else:
            stack.append(x)
    while len(stack) > 1 and stack[0].generator == stack[-1].generator \
            and stack[0].sign == -stack[-1].sign:
        stack = stack[1:-1]
    return stack


def _blocks(w) -> int:
    if not w:
        return 0
    changes = sum(1 for a, b in zip(w, w[1:] + w[:1]) if a.generator != b.generator)
    return max(changes, 1)


def is_type2(p: SurfacePattern) -> bool:
    """Each boundary meets the other two surfaces in (cyclically) contiguous blocks."""
    return all(_blocks(_cyclic_reduce(w)) <= 2 for w in p.words)


def classify(p: SurfacePattern) -> str:
    """``"type1"``, ``"type2"`` or ``"neither"``.

    Without an arc pairing the type-1 test is skipped.
    """
    if p.arcs is not None and is_type1(p):
        return "type1"
    if is_type2(p):
        return "type2"
    return "neither"


def normalize_type2(p: SurfacePattern) -> tuple:
    """Sort every boundary word into two blocks with finger moves of the third kind.

    Adjacent cancelling pairs are removed as they appear.  Returns the sorted
    pattern and ``-t`` of the result as a residue modulo the pattern's delta.
    """
    _require_valid(p)
    for r in p.labels:
        # w_k is sorted as i-block then j-block, and cyclically for w_i, w_j
        first = next(x for x in p.others(r) if _cyclic(p, x, _third(p, x, r), r))
        rank = {first: 0, _third(p, first, r): 1}
        while True:
            w = p.word(r)
            move = None
            for pos in range(len(w) - 1):
                x, y = w[pos], w[pos + 1]
                if x.generator == y.generator and x.sign == -y.sign:
                    move = FingerMove(1, r, pos, inverse=True)
                    break
            if move is None:
                for pos in range(len(w) - 1):
                    if rank[w[pos].generator] > rank[w[pos + 1].generator]:
                        move = FingerMove(3, r, pos)
                        break
            if move is None:
                break
            p = finger_move(p, move)
    p = replace(p, arcs=None)
    return p, Residue(-p.t, p.delta())


def _third(p, x, r):
    (y,) = [v for v in p.labels if v not in (x, r)]
    return y
