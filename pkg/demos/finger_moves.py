"""
Finger moves and sorting boundary words
=======================================

Pushing one surface across another changes the boundary words and the
triple point count, but never ``m - t``. Sorting every word into two
blocks with such moves leaves ``m = 0``, so what remains of the invariant
is ``-t``.
"""

# %%
import random

from milnorlink import surfaces
from milnorlink.surfaces import FingerMove, SurfacePattern
from milnorlink.verify import random_pattern

p = SurfacePattern.from_strings("", "k+ k-", "i+ j+ i- j-")
print("start:        m - t =", surfaces.m_value(p) - p.t)
for move in (FingerMove(3, 3, 1), FingerMove(1, 3, 0, inverse=True), FingerMove(2, 2, 0)):
    p = surfaces.finger_move(p, move)
    words = "  ".join(str(w) or "()" for w in p.words)
    print(f"kind {move.kind}{' inverse' if move.inverse else ''}:", words,
          f"| t = {p.t}, m - t = {surfaces.m_value(p) - p.t}")

# %% [markdown]
# Sorting random patterns. The residue ``-t`` of the sorted pattern matches
# the invariant computed from the original words.

# %%
rng = random.Random(1)
for _ in range(5):
    p = random_pattern(rng)
    q, residue = surfaces.normalize_type2(p)
    print(f"{surfaces.mu_bar_surface(p)!s:>12}  ->  sorted t = {q.t:>3}, -t = {residue}",
          f"[{surfaces.classify(q)}]")
