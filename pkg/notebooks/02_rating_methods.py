"""
Four rating vectors from one comparison matrix
==============================================

A respondent compares six hotel criteria pairwise on a 1..5 scale. We derive
ratings by the principal eigenvector (SPE), the geometric mean (SGM) and the
log-Chebyshev approximation, which yields a whole cone of optimal vectors
summarised by its best (SCB) and worst (SCW) differentiating members.
"""

import numpy as np

from tropical_ratings import (
    ComparisonMatrix,
    hilbert_seminorm,
    log_chebyshev_objective,
    log_chebyshev_rate,
    rate_all,
    spectral_radius,
)
from tropical_ratings.fixtures import CRITERIA_NAMES, MATRICES
from tropical_ratings.matrices import parse_number

np.set_printoptions(precision=4, suppress=True)


def load(rid):
    return ComparisonMatrix.from_full([[parse_number(v) for v in row] for row in MATRICES[rid]])


a = load("3")
print(list(CRITERIA_NAMES.values()))
print(a.entries)

for tag, vec in rate_all(a).items():
    print(tag, vec.scores)

# all log-Chebyshev solutions reach the same objective, the spectral radius
cone, best, worst = log_chebyshev_rate(a)
lam = spectral_radius(a.entries)
print("lambda", lam)
print("objective SCB", log_chebyshev_objective(a, best.scores))
print("objective SCW", log_chebyshev_objective(a, worst.scores))

# the eigenvector is usually not optimal in this sense
print("objective SPE", log_chebyshev_objective(a, rate_all(a)["SPE"].scores))

# this cone has more than one generator, so SCB and SCW differ (criterion C6 here)
print("unique:", cone.unique, "generators:", cone.generators.shape[1])
print("seminorms", hilbert_seminorm(best.scores), hilbert_seminorm(worst.scores))

# a consistent matrix x_i / x_j gives x back from every method
x = np.array([0.5, 1.0, 0.25, 0.8])
for tag, vec in rate_all(ComparisonMatrix.consistent(x)).items():
    print(tag, vec.scores)
