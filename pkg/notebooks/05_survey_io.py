"""
Reading and writing survey batches
==================================

Batches travel as one JSON document or as a pair of CSV files. Values may be
written as decimals or as fractions like "1/3". Parsing collects every
problem it finds before raising.
"""

import json

from tropical_ratings import ValidationError, parse_batch, serialize_batch
from tropical_ratings.fixtures import fixture_document

doc = fixture_document()

# respondent 2 scored some criteria 3/4 and 1/2, which is off the 1/5 step scale
try:
    parse_batch(json.dumps(doc))
except ValidationError as exc:
    for v in exc.violations:
        print(v)

batch = parse_batch(json.dumps(doc), strict_scale=False)
print(len(batch), batch.criteria)

# JSON out and back in gives the same batch
text = serialize_batch(batch)
print(text.decode()[:300])
print(parse_batch(text, strict_scale=False) == batch)

# the CSV form: one row per respondent plus one row per comparison
respondents, comparisons = serialize_batch(batch, "csv")
print(respondents.decode())
print(comparisons.decode().splitlines()[:4])
print(parse_batch(respondents, "csv", strict_scale=False, comparisons=comparisons) == batch)

# a broken reciprocal pair is reported by cell
doc["respondents"][0]["matrix"][1][0] = 3
doc["respondents"][0]["age"] = 0
try:
    parse_batch(json.dumps(doc), strict_scale=False)
except ValidationError as exc:
    for v in exc.violations:
        print(v)
