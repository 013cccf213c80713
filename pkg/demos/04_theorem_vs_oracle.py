"""
Cross-checking against Borel-Bott-Weil
======================================

The step-matrix test never computes cohomology.  Here both methods run
side by side over all small weights, and the disagreements are counted.
"""

import numpy as np

from acmbundles import FlagSpace, verify_equivalence

spaces = [FlagSpace(t, n, k) for t in "BC" for n in (3, 4) for k in range(1, n + 1)]
spaces += [FlagSpace("D", 5, k) for k in (1, 2, 3, 5)]

counts = np.array([[len(r.records), len(r.acm_weights), len(r.mismatches)]
                   for r in (verify_equivalence(X, 3) for X in spaces)])
for X, (total, acm, bad) in zip(spaces, counts):
    print(f"{str(X):<14} {total:>4} weights {acm:>4} ACM {bad} mismatches")
print("totals:", counts.sum(axis=0))
