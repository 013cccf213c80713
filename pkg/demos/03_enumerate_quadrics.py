"""
Every ACM bundle up to twist
============================

M is bounded by the dimension of the Grassmannian whenever the bundle is
ACM, which leaves only finitely many initialized weights to test.  On
quadrics the answer is the classical one: line bundles plus spinor bundles.
"""

from acmbundles import FlagSpace, dim_flag, enumerate_acm

for lt, n in [("B", 3), ("B", 4), ("C", 4), ("D", 4), ("D", 5)]:
    X = FlagSpace(lt, n, 1)
    res = enumerate_acm(X)
    print(X, "dim", dim_flag(X), "->", [list(w) for w in res.acm_weights])

# deeper nodes have many more
X = FlagSpace("C", 4, 2)
res = enumerate_acm(X, jobs=2)
print(X, len(res.acm_weights), "ACM weights out of", res.candidates_scanned, "candidates")
