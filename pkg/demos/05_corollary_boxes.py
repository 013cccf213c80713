"""
Closed-form families
====================

Some families of weights have a simple ACM description.  The validator
sweeps each box and a margin around it and compares with the step matrix.
"""

from acmbundles import FlagSpace, is_acm, validate_corollaries

X = FlagSpace("B", 5, 3)
for check in validate_corollaries(X):
    print(check.summary())

# the a_4, a_5 picture as a small grid: '#' marks ACM
for a4 in range(5):
    print("".join("#" if is_acm(X, (0, 0, 0, a4, a5)).is_acm else "." for a5 in range(8)))

for X in (FlagSpace("C", 4, 2), FlagSpace("D", 5, 2), FlagSpace("D", 6, 6)):
    for check in validate_corollaries(X):
        print(check.summary())
