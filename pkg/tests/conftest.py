import numpy as np
import pytest

from tropical_ratings.fixtures import MATRICES, fixture_batch
from tropical_ratings.matrices import ComparisonMatrix, parse_number

SCALE = (1.0, 2.0, 3.0, 4.0, 5.0, 1 / 2, 1 / 3, 1 / 4, 1 / 5)


def fixture_matrix(rid):
    return ComparisonMatrix.from_full([[parse_number(v) for v in row] for row in MATRICES[rid]])


def random_scale_matrix(rng, n):
    upper = {(i, j): SCALE[rng.integers(len(SCALE))] for i in range(n) for j in range(i + 1, n)}
    return ComparisonMatrix.from_upper(n, upper)


def random_continuous_matrix(rng, n):
    upper = {(i, j): float(np.exp(rng.uniform(-np.log(5), np.log(5)))) for i in range(n) for j in range(i + 1, n)}
    return ComparisonMatrix.from_upper(n, upper)


@pytest.fixture(scope="session")
def respondent_matrices():
    return {rid: fixture_matrix(rid) for rid in ("1", "2", "3")}


@pytest.fixture(scope="session")
def batch():
    return fixture_batch()


FRACTIONS = ("1", "2", "3", "4", "5", "1/2", "1/3", "1/4", "1/5")
SCORES = ("1/5", "2/5", "3/5", "4/5", "1")


def random_batch_document(rng, m, n=6):
    """Synthetic on-scale survey document with ``m`` respondents."""
    criteria = [f"C{k + 1}" for k in range(n)]
    respondents = []
    for r in range(m):
        scores = [SCORES[rng.integers(len(SCORES))] for _ in range(n)]
        scores[rng.integers(n)] = "1"
        respondents.append(
            {
                "id": f"r{r + 1}",
                "age": int(rng.integers(18, 70)),
                "sex": ("male", "female", "unspecified")[rng.integers(3)],
                "visited": bool(rng.integers(2)),
                "scores": scores,
                "ranks": [int(v) + 1 for v in rng.permutation(n)],
                "comparisons": [
                    {"i": i + 1, "j": j + 1, "value": FRACTIONS[rng.integers(len(FRACTIONS))]}
                    for i in range(n)
                    for j in range(i + 1, n)
                ],
            }
        )
    return {"criteria": criteria, "respondents": respondents}
