"""
Comparing methods across respondents
====================================

A batch of survey respondents each gives direct scores, a stated rank
vector and a comparison matrix. The report lines the methods up against
each other: how often their rank vectors agree, how well they correlate,
and which orderings are most common.
"""

import json

import numpy as np

from tropical_ratings import (
    build_report,
    chebyshev_rank_distance,
    hamming_rank_distance,
    kendall_tau,
    parse_batch,
    pearson,
)
from tropical_ratings.fixtures import fixture_batch
from tropical_ratings.report import to_text

# the basic measures
print(kendall_tau((1, 2, 3), (1, 3, 2)))
print(pearson((0.2, 1.0, 0.6), (0.3, 1.0, 0.5)))
print(chebyshev_rank_distance((1, 2, 3, 4, 5, 6), (6, 2, 3, 4, 5, 1)))
print(hamming_rank_distance((1, 2, 3, 4, 5, 6), (6, 2, 3, 4, 5, 1)))

# the three worked respondents
batch = fixture_batch()
report = build_report(batch, tables=("match", "corr-ranks", "freq"))
print(to_text(report).decode())

# a synthetic batch of 30 respondents drawn on the survey scales
rng = np.random.default_rng(0)
fracs = ["1", "2", "3", "4", "5", "1/2", "1/3", "1/4", "1/5"]
doc = {"criteria": ["C1", "C2", "C3", "C4"], "respondents": []}
for k in range(30):
    doc["respondents"].append({
        "id": str(k + 1),
        "age": int(rng.integers(18, 60)),
        "sex": ["male", "female"][k % 2],
        "visited": bool(k % 3 == 0),
        "scores": [str(v) for v in rng.choice(["1/5", "2/5", "3/5", "4/5", "1"], 3)] + ["1"],
        "ranks": (rng.permutation(4) + 1).tolist(),
        "comparisons": [{"i": i + 1, "j": j + 1, "value": str(rng.choice(fracs))}
                        for i in range(4) for j in range(i + 1, 4)],
    })
synthetic = parse_batch(json.dumps(doc))
report = build_report(synthetic, tables=("means", "groups", "distance"))
print(to_text(report).decode())
