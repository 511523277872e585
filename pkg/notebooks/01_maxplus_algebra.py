"""
Max-times algebra on positive matrices
======================================

Addition is max, multiplication is ordinary product. This walks through
the handful of operations the rating methods are built from.
"""

import numpy as np

from tropical_ratings import (
    conjugate_transpose,
    hilbert_seminorm,
    is_linearly_dependent,
    kleene_star,
    spectral_radius,
    trop_add,
    trop_mul,
    trop_power,
)

a = np.array([[1, 2, 1 / 4], [1 / 2, 1, 2], [4, 1 / 2, 1]])
b = np.array([[1, 3, 1], [1 / 3, 1, 1], [1, 1, 1]])

# entrywise max, and the max-product
print(trop_add(a, b))
print(trop_mul(a, b))

# powers: (A^2)_ij is the best two-step path from i to j
print(trop_power(a, 2))

# the conjugate transpose flips and inverts the nonzero entries
print(conjugate_transpose(a))

# spectral radius = largest geometric mean over all cycles
# here the cycle 1 -> 2 -> 3 -> 1 gives (2 * 2 * 4)^(1/3)
lam = spectral_radius(a)
print(lam, (2 * 2 * 4) ** (1 / 3))

# after dividing by lambda every cycle has mean <= 1 and the star exists
star = kleene_star(a / lam)
print(star)

# the star is idempotent: star (x) star == star
print(np.allclose(trop_mul(star, star), star))

# asking for the star of A itself fails, since lambda(A) > 1
try:
    kleene_star(a)
except ValueError as exc:
    print("refused:", exc)

# every column of the star is a max-linear combination of the others or not
print(is_linearly_dependent(star[:, 0], star[:, 1:]))

# Hilbert seminorm: max over min of a positive vector
print(hilbert_seminorm(star[:, 0]))
