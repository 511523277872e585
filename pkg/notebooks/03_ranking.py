"""
From ratings to ranks
=====================

Rank 1 goes to the highest rating. Ratings equal within 1e-9 share a tie
and get consecutive ranks in index order; order strings mark such ties with
a weak preference symbol.
"""

from tropical_ratings import (
    combined_order_string,
    interval_combine,
    log_chebyshev_rate,
    order_string,
    ranks_from_ratings,
)
from tropical_ratings.fixtures import GOLDEN_RATINGS, MATRICES
from tropical_ratings.matrices import ComparisonMatrix, parse_number

spe = GOLDEN_RATINGS["1"]["SPE"]
r = ranks_from_ratings(spe)
print(r.ranks)
print(order_string(r))

# a tie: C1 and C2 both at 1.0 in respondent 2's worst differentiating vector
scw = GOLDEN_RATINGS["2"]["SCW"]
r = ranks_from_ratings(scw)
print(r.ranks)
print(order_string(r, ratings=scw))
print(order_string(r, ratings=scw, ascii=True))

# when the cone is not a single ray, best and worst bound an interval per criterion
m = ComparisonMatrix.from_full([[parse_number(v) for v in row] for row in MATRICES["2"]])
_, best, worst = log_chebyshev_rate(m)
iv = interval_combine(best.scores, worst.scores)
print(iv.round(4))

# intervals that overlap cannot be ordered; "||" marks them
print(combined_order_string(iv))
print(combined_order_string(iv, ascii=True))
