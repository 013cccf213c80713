"""
Borel-Bott-Weil on a small quadric
==================================

The spinor bundle on the 3-dimensional quadric B_2/P(alpha_1), twisted
through a range of t.  Each twist is either singular (everything
vanishes) or regular of some index p, and then only H^p survives.
"""

from acmbundles import FlagSpace, cohomology
from acmbundles.bbw import singular_twists, twist_window

X = FlagSpace("B", 2, 1)
spinor = (0, 1)

for t in range(-2, 6):
    h = cohomology(X, spinor, t)
    if h.is_zero:
        print(f"t={t:>2}: all cohomology vanishes")
    else:
        print(f"t={t:>2}: H^{h.degree} has highest weight {list(h.weight)}, dimension {h.dimension}")

# only the twists inside this window can be singular
print("window:", twist_window(X, spinor))
print("singular twists:", singular_twists(X, spinor))
