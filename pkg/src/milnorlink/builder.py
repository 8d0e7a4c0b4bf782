"""Three-component links with prescribed linking numbers and triple linking number.

Start from three split unknots bounding disks, add clasped feelers between each
pair of disks, then band in ``m`` Borromean tangles.  The same recipe is
emitted twice: as a PD diagram (a closed pure 3-braid) and as the intersection
pattern of the obvious disks-with-feelers surfaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagram import LinkDiagram, from_braid
from .milnor import Residue
from .surfaces import SurfacePattern
from .words import Letter, Word

__all__ = ["Prescription", "build_pattern", "build_diagram", "braid_word", "expected_mu_bar"]


@dataclass(frozen=True)
class Prescription:
    """lk(L1, L2) = p, lk(L2, L3) = q, lk(L3, L1) = r, and m Borromean tangles."""

    p: int = 0
    q: int = 0
    r: int = 0
    m: int = 0


def _sgn(n):
    return 1 if n > 0 else -1


# Pure braid generators on 3 strands; each links its pair once, positively.
_CLASP = {
    (1, 2): [1, 1],
    (2, 3): [2, 2],
    (1, 3): [2, 1, 1, -2],
}
_BORROMEAN = [2, -1] * 3


def _inverse(braid):
    return [-g for g in reversed(braid)]


def braid_word(pr: Prescription) -> list:
    """Pure braid realizing ``pr``: clasps (1,2), (2,3), (3,1), then Borromean tangles."""
    word = []
    for pair, n in (((1, 2), pr.p), ((2, 3), pr.q), ((1, 3), pr.r)):
        block = _CLASP[pair] if n > 0 else _inverse(_CLASP[pair])
        word += block * abs(n)
    block = _BORROMEAN if pr.m > 0 else _inverse(_BORROMEAN)
    word += block * abs(pr.m)
    return word


def _pad_over_only(word, strands=3):
    # A strand that never passes under has no orientation in PD; give it a
    # Reidemeister II bigon in which it passes under twice.
    under = set()
    pos = list(range(1, strands + 1))
    for g in word:
        i = abs(g) - 1
        left, right = pos[i], pos[i + 1]
        under.add(right if g > 0 else left)
        pos[i], pos[i + 1] = right, left
    padded = list(word)
    for s in range(1, strands + 1):
        if s not in under:
            padded += [-s, s] if s < strands else [s - 1, -(s - 1)]
    return padded


def build_diagram(pr: Prescription) -> LinkDiagram:
    name = f"builder p={pr.p} q={pr.q} r={pr.r} m={pr.m}"
    word = braid_word(pr)
    if not word:
        return LinkDiagram((), 3, name)
    return from_braid(_pad_over_only(word), 3, name)


def build_pattern(pr: Prescription) -> SurfacePattern:
    """Disks with feelers: ``w_i = j^p k^r``, ``w_j = k^q i^p``, ``w_k = i^r j^q``,
    followed by one ``k k^-1`` on ``w_j`` and one commutator on ``w_k`` per
    Borromean tangle.  No triple points, no circles.
    """
    i, j, k = 1, 2, 3
    # each entry: (letter, arc id); arc ids are resolved to positions at the end
    w = {i: [], j: [], k: []}

    def clasp_block(a, b, n):
        return [(Letter(b, _sgn(n)), (a, b, c)) for c in range(abs(n))]

    def partner_block(a, b, n):
        return [(Letter(a, _sgn(n)), (a, b, c)) for c in range(abs(n))]

    w[i] = clasp_block(i, j, pr.p) + partner_block(k, i, pr.r)
    w[j] = clasp_block(j, k, pr.q) + partner_block(i, j, pr.p)
    w[k] = clasp_block(k, i, pr.r) + partner_block(j, k, pr.q)
    for n in range(abs(pr.m)):
        a, b = (i, j) if pr.m > 0 else (j, i)
        w[j] += [(Letter(k, 1), ("B", n, 1)), (Letter(k, -1), ("B", n, -1))]
        for gen, s in ((a, 1), (b, 1), (a, -1), (b, -1)):
            # j letters clasp with the k k^-1 on w_j; the two i letters bound a ribbon
            arc = ("B", n, s) if gen == j else ("B", n, "ribbon")
            w[k].append((Letter(gen, s), arc))
    ends: dict = {}
    for label in (i, j, k):
        for pos, (_, arc) in enumerate(w[label]):
            ends.setdefault(arc, []).append((label - 1, pos))
    words = tuple(Word(x for x, _ in w[label]) for label in (i, j, k))
    return SurfacePattern((i, j, k), words, 0, 0, tuple(tuple(v) for v in ends.values()))


def expected_mu_bar(pr: Prescription) -> Residue:
    return Residue(pr.m, gcd(gcd(abs(pr.p), abs(pr.q)), abs(pr.r)))
