"""The three worked respondents of the hotel-selection survey, with the
rating and rank vectors printed for them (4 decimals)."""

import copy
import json

CRITERIA = ("C1", "C2", "C3", "C4", "C5", "C6")

CRITERIA_NAMES = {
    "C1": "location",
    "C2": "accommodation cost",
    "C3": "social environment",
    "C4": "free breakfast",
    "C5": "amenities",
    "C6": "courtesy of staff",
}

MATRICES = {
    "1": [
        [1, "1/4", 5, 4, "1/5", 4],
        [4, 1, 5, 5, "1/3", 5],
        ["1/5", "1/5", 1, "1/3", "1/5", 2],
        ["1/4", "1/5", 3, 1, "1/5", 3],
        [5, 3, 5, 5, 1, 5],
        ["1/4", "1/5", "1/2", "1/3", "1/5", 1],
    ],
    "2": [
        [1, 1, 3, 3, 2, 4],
        [1, 1, 4, 2, 4, 5],
        ["1/3", "1/4", 1, 3, 1, 4],
        ["1/3", "1/2", "1/3", 1, 1, 3],
        ["1/2", "1/4", 1, 1, 1, 3],
        ["1/4", "1/5", "1/4", "1/3", "1/3", 1],
    ],
    "3": [
        [1, "1/4", 5, 4, "1/3", 3],
        [4, 1, 5, 5, 3, 5],
        ["1/5", "1/5", 1, "1/3", "1/5", "1/3"],
        ["1/4", "1/5", 3, 1, "1/4", 1],
        [3, "1/3", 5, 4, 1, 5],
        ["1/3", "1/5", 3, 1, "1/5", 1],
    ],
}

RESPONDENTS = [
    {"id": "1", "age": 24, "sex": "male", "visited": True,
     "scores": ["3/5", 1, "1/5", "2/5", 1, "1/5"], "ranks": [3, 2, 5, 4, 1, 6]},
    {"id": "2", "age": 19, "sex": "male", "visited": False,
     "scores": [1, 1, "3/4", "1/2", "3/4", "1/2"], "ranks": [2, 1, 3, 4, 5, 6]},
    {"id": "3", "age": 21, "sex": "female", "visited": False,
     "scores": ["4/5", 1, "1/5", "3/5", "4/5", "3/5"], "ranks": [2, 1, 6, 4, 3, 5]},
]

GOLDEN_RATINGS = {
    "1": {
        "SPE": (0.3581, 0.6526, 0.1142, 0.1832, 1.0000, 0.0943),
        "SGM": (0.3588, 0.6680, 0.1190, 0.1906, 1.0000, 0.0981),
        "SCB": (0.3218, 0.6551, 0.1036, 0.1581, 1.0000, 0.1018),
        "SCW": (0.3218, 0.6551, 0.1036, 0.1581, 1.0000, 0.1018),
    },
    "2": {
        "SPE": (0.8485, 1.0000, 0.4462, 0.3170, 0.3467, 0.1392),
        "SGM": (0.8754, 1.0000, 0.4292, 0.3184, 0.3645, 0.1434),
        "SCB": (0.7500, 1.0000, 0.4543, 0.2752, 0.2500, 0.1101),
        "SCW": (1.0000, 1.0000, 0.4543, 0.2752, 0.4543, 0.1667),
    },
    "3": {
        "SPE": (0.3773, 1.0000, 0.0930, 0.1630, 0.6213, 0.1631),
        "SGM": (0.3865, 1.0000, 0.0916, 0.1710, 0.6368, 0.1728),
        "SCB": (0.3798, 1.0000, 0.1082, 0.1755, 0.6163, 0.1755),
        "SCW": (0.3798, 1.0000, 0.1082, 0.1755, 0.6163, 0.2279),
    },
}

GOLDEN_RANKS = {
    "1": {
        "RR": (3, 2, 5, 4, 1, 6),
        "RSR": (3, 1, 5, 4, 2, 6),
        "RSPE": (3, 2, 5, 4, 1, 6),
        "RSGM": (3, 2, 5, 4, 1, 6),
        "RSCB": (3, 2, 5, 4, 1, 6),
        "RSCW": (3, 2, 5, 4, 1, 6),
    },
    "2": {
        "RR": (2, 1, 3, 4, 5, 6),
        "RSR": (1, 2, 3, 5, 4, 6),
        "RSPE": (2, 1, 3, 5, 4, 6),
        "RSGM": (2, 1, 3, 5, 4, 6),
        "RSCB": (2, 1, 3, 4, 5, 6),
        "RSCW": (1, 2, 3, 5, 4, 6),
    },
    "3": {
        "RR": (2, 1, 6, 4, 3, 5),
        "RSR": (2, 1, 6, 4, 3, 5),
        "RSPE": (3, 1, 6, 5, 2, 4),
        "RSGM": (3, 1, 6, 5, 2, 4),
        "RSCB": (3, 1, 6, 4, 2, 5),
        "RSCW": (3, 1, 6, 5, 2, 4),
    },
}

# combined best/worst intervals for the non-unique respondents
GOLDEN_INTERVALS = {
    "2": ((0.7500, 1.0000), (1.0000, 1.0000), (0.4543, 0.4543),
          (0.2752, 0.2752), (0.2500, 0.4543), (0.1101, 0.1667)),
    "3": ((0.3798, 0.3798), (1.0000, 1.0000), (0.1082, 0.1082),
          (0.1755, 0.1755), (0.6163, 0.6163), (0.1755, 0.2279)),
}

GOLDEN_UNIQUE = {"1": True, "2": False, "3": False}

GOLDEN_COMBINED_ORDERS = {
    "2": "C2 ⪰ C1 ≻ C3 ⪰ C5 ∥ C4 ≻ C6",
    "3": "C2 ≻ C5 ≻ C1 ≻ C6 ⪰ C4 ≻ C3",
}


def fixture_document():
    """The three respondents in the JSON batch schema (full matrices)."""
    respondents = [dict(r, matrix=MATRICES[r["id"]]) for r in RESPONDENTS]
    # callers may edit the document; keep the module data untouched
    return copy.deepcopy({"criteria": list(CRITERIA), "respondents": respondents})


def fixture_batch():
    """Parsed :class:`SurveyBatch` of the three respondents.

    Strict-scale checking is off: respondent 2 scores criteria 3/4 and 1/2.
    """
    from .survey import parse_batch

    return parse_batch(json.dumps(fixture_document()), strict_scale=False)
