"""
A first step matrix
===================

Build the step matrix of a bundle on the odd orthogonal Grassmannian
B_5/P(alpha_3) and read off whether it is ACM.
"""

from acmbundles import FlagSpace, build, is_acm, render

X = FlagSpace("B", 5, 3)   # marked node k=3
lam = (4, 4, 0, 0, 0)      # 4*lambda_1 + 4*lambda_2, a_3 = 0 so already initialized

sm = build(X, lam)
print(render(sm, "plain"))
print("largest entry:", sm.M)

# ACM exactly when every integer 1..M shows up somewhere in the blocks
v = is_acm(X, lam)
print(v.summary())
for l, pos in list(v.witnesses.items())[:4]:
    print("  ", l, "sits at", pos)

# a weight with a non-zero marked coefficient is twisted down first
print(is_acm(X, (4, 4, 2, 0, 0)).twist_applied)

# half-integers appear on type B; LaTeX output keeps them as fractions
print(render(sm, "latex"))
