"""
Links with prescribed linking numbers
=====================================

Any three linking numbers ``p, q, r`` and any triple linking number ``m``
occur together. The builder realizes them by clasping three split unknots
and then banding in ``m`` Borromean tangles. It emits a diagram and a
surface pattern, and both pipelines should agree with the prediction
``m (mod gcd(p, q, r))``.
"""

# %%
import itertools

from milnorlink import builder, milnor, surfaces
from milnorlink.builder import Prescription

pr = Prescription(p=2, q=4, r=6, m=3)
d = builder.build_diagram(pr)
pat = builder.build_pattern(pr)
print(pr)
print("braid word:", builder.braid_word(pr))
print("diagram:", len(d.crossings), "crossings, linking numbers", milnor.linking_numbers(d))
print("pattern words:", *(str(w) for w in pat.words), sep="\n  ")

# %%
print("predicted      ", builder.expected_mu_bar(pr))
print("from diagram   ", milnor.mu_bar(d, (1, 2, 3)))
print("from surfaces  ", surfaces.mu_bar_surface(pat))

# %% [markdown]
# The same comparison over a small grid. The ``m`` Borromean tangles are
# only visible modulo the gcd of the linking numbers.

# %%
print(" p q r | m=0 m=1 m=2 m=3")
for p, q, r in itertools.product(range(3), repeat=3):
    row = []
    for m in range(4):
        pr = Prescription(p, q, r, m)
        got = milnor.mu_bar(builder.build_diagram(pr), (1, 2, 3))
        assert got == surfaces.mu_bar_surface(builder.build_pattern(pr))
        row.append(f"{got.value:>3}")
    print(f" {p} {q} {r} | {' '.join(row)}   (mod {got.modulus})")
