"""Smoke tests for the pybind11 module. The build tree location of _gwcubic
comes from $GWCUBIC_PYMODULE_DIR; the package sources from $GWCUBIC_PYPKG_DIR."""

import os
import sys
from fractions import Fraction

for var in ("GWCUBIC_PYMODULE_DIR", "GWCUBIC_PYPKG_DIR"):
    path = os.environ.get(var)
    if path and path not in sys.path:
        sys.path.insert(0, path)

import pytest

import gwcubic


def test_kontsevich():
    assert gwcubic.kontsevich_number(1) == 1
    assert gwcubic.kontsevich_number(4) == 620
    assert gwcubic.kontsevich_number(5) == 87304


def test_invariant_and_count():
    engine = gwcubic.Engine()
    assert engine.invariant(1, [], [3]) == Fraction(6)
    assert engine.invariant(1, [0, 1], [1]) == Fraction(1)
    assert engine.invariant(1, [1], [2]) == Fraction(2)

    row = engine.count(1, [], [1, 1])
    assert row["N"] == Fraction(6)
    assert row["enumerative"] is True

    excluded = engine.count(1, [], [0, 0, 1])
    assert excluded["N"] is None
    assert excluded["I"] == Fraction(9)
    assert excluded["enumerative"] is False


def test_invalid_input_raises_value_error():
    engine = gwcubic.Engine()
    with pytest.raises(ValueError):
        engine.count(1, [], [1])  # defect != 0
    with pytest.raises(ValueError):
        engine.count(1, [3], [])  # no unassigned contact


def test_table_and_m_value():
    engine = gwcubic.Engine()
    rows = engine.table(1)
    assert len(rows) == 7
    assert sum(1 for r in rows if r["enumerative"]) == 6
    assert engine.m_value(1, [1, 1]) == Fraction(1)


def test_cache_round_trip(tmp_path):
    engine = gwcubic.Engine()
    engine.table(2)
    path = tmp_path / "cache.txt"
    engine.save_cache(str(path))
    size = engine.cache_size()
    assert size > 0

    other = gwcubic.Engine()
    other.load_cache(str(path))
    assert other.cache_size() == size


def test_selftest_and_oracle():
    engine = gwcubic.Engine()
    report = engine.selftest(1)
    assert all(item["pass"] for item in report)
    assert gwcubic.flex_count() == 9
    assert gwcubic.tangent_count(on_curve=False) == 6
    assert gwcubic.tangent_count(on_curve=True) == 4
