import sys
import os

project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

import pytest

from src.coloring import enumerate_admissible, strip_peripherals
from src.curve_engine import (Crossing, CurveSystem, Visit, coloring_of, components, is_normal,
                              normalize, normalize_word, trace)
from src.errors import NotNormal
from src.surface_model import Slot


def test_trace_of_slope_zero_curve(pt):
    cs = trace(pt, (0, 1, 1))
    assert cs.words == ((Crossing(Slot(0, 2), 0), Crossing(Slot(1, 1), 0)),)
    (component,) = components(cs)
    assert component.visits == (Visit(0, 1, 2), Visit(1, 2, 1))
    assert component.coloring == (0, 1, 1)
    assert not component.peripheral


def test_trace_records_geometry(pt):
    cs = trace(pt, (0, 2, 2))
    assert cs.traced
    assert len(cs.words) == 2
    assert cs.edge_points[0] == ()
    assert sorted(cs.edge_points[1]) == [0, 1]


def test_peripheral_component(pt):
    found = components(trace(pt, (2, 2, 2)))
    assert len(found) == 1
    assert found[0].peripheral
    assert found[0].coloring == (2, 2, 2)


def test_trace_round_trip_torus(pt):
    for f in enumerate_admissible(pt, 20):
        cs = trace(pt, f)
        assert is_normal(cs)
        assert coloring_of(cs) == f


def test_trace_round_trip_genus2(genus2):
    for f in enumerate_admissible(genus2, 6):
        assert coloring_of(trace(genus2, f)) == f


def test_peripherals_counted_as_components(pt):
    for f in enumerate_admissible(pt, 14):
        stripped, count = strip_peripherals(pt, f)
        found = components(trace(pt, f))
        assert sum(c.peripheral for c in found) == count


def test_normalize_cancels_u_turns(pt):
    # out through a, straight back through a, then around the slope-zero curve
    word = (Crossing(Slot(0, 0)), Crossing(Slot(1, 0)), Crossing(Slot(0, 2)), Crossing(Slot(1, 1)))
    reduced, removals = normalize_word(pt, word)
    assert removals == 1
    assert [c.slot for c in reduced] == [Slot(0, 2), Slot(1, 1)]


def test_normalize_cyclic_cancellation(pt):
    word = (Crossing(Slot(1, 0)), Crossing(Slot(0, 2)), Crossing(Slot(1, 1)), Crossing(Slot(0, 0)))
    reduced, removals = normalize_word(pt, word)
    assert removals == 1
    assert [c.slot for c in reduced] == [Slot(0, 2), Slot(1, 1)]


def test_coloring_of_requires_normal_form(pt):
    word = (Crossing(Slot(0, 0)), Crossing(Slot(1, 0)), Crossing(Slot(0, 2)), Crossing(Slot(1, 1)))
    cs = CurveSystem(triangulation=pt, words=(word,))
    assert not is_normal(cs)
    with pytest.raises(NotNormal):
        coloring_of(cs)
    assert coloring_of(normalize(cs)) == (0, 1, 1)
