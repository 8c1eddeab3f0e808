import csv
import functools
import os

FIXTURES_DIR = os.path.join(os.path.dirname(__file__), "fixtures")


@functools.lru_cache(maxsize=1)
def _reference_values():
    path = os.path.join(FIXTURES_DIR, "reference_values.csv")
    values = {}
    with open(path, newline="", encoding="utf-8") as f:
        for row in csv.DictReader(f):
            values[row["name"]] = float(row["value"])
    return values


def fixture_value(name):
    """Frozen oracle value from tests/fixtures/reference_values.csv."""
    return _reference_values()[name]
