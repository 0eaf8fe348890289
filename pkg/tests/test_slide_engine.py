import sys
import os

project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

import pytest

from src.band_analysis import Band, BandKind, bands, find_band
from src.coloring import check_admissible, enumerate_admissible, strip_peripherals
from src.curve_engine import components, trace
from src.errors import BandNotMaximal, NotAdmissible, PeripheralPresent
from src.oracles import torus_slope
from src.slide_engine import all_slides, slide


def test_short_band_slide_of_slope_zero_curve(pt):
    result = slide(pt, (0, 1, 1), find_band(pt, (0, 1, 1), 4))
    assert result.coloring == (0, 1, 1)
    assert result.delta == 0
    assert result.cascades == 1
    assert result.bound == 2


def test_half_band_slide_of_2_1_1(pt):
    result = slide(pt, (2, 1, 1), find_band(pt, (2, 1, 1), 2))
    assert result.coloring == (2, 1, 1)
    assert result.delta == 0
    assert result.cascades == 0


def test_all_slides_in_band_order(pt):
    found = all_slides(pt, (2, 1, 1))
    assert [band.start for band, _ in found] == [2, 5]
    assert all(result.coloring == (2, 1, 1) for _, result in found)


def test_slide_rejects_non_maximal_band(pt):
    with pytest.raises(BandNotMaximal):
        slide(pt, (2, 1, 1), Band(2, 1, 1, 3, BandKind.SHORT))


def test_slide_rejects_peripheral(pt):
    with pytest.raises(PeripheralPresent):
        all_slides(pt, (2, 3, 3))


def test_slide_rejects_inadmissible(pt):
    with pytest.raises(NotAdmissible):
        all_slides(pt, (1, 1, 1))


def test_empty_coloring_has_nothing_to_slide(pt):
    assert all_slides(pt, (0, 0, 0)) == []


def test_torus_slides_preserve_the_curve(pt):
    n = pt.link_size
    for f in enumerate_admissible(pt, 20):
        stripped, _ = strip_peripherals(pt, f)
        if stripped != f or not any(f):
            continue
        count = len(components(trace(pt, f)))
        slope = torus_slope(pt, f)
        for band, result in all_slides(pt, f):
            assert result.delta % 2 == 0
            assert result.delta <= n - 2 * band.length - 2
            assert result.delta == result.bound - 2 * result.cascades
            assert len(components(trace(pt, result.coloring))) == count
            assert torus_slope(pt, result.coloring) == slope


def test_genus2_slides_stay_admissible(genus2):
    n = genus2.link_size
    for f in enumerate_admissible(genus2, 6):
        if bands(genus2, f) is None:
            continue
        count = len(components(trace(genus2, f)))
        for band, result in all_slides(genus2, f):
            assert check_admissible(genus2, result.coloring).ok
            assert result.delta <= n - 2 * band.length - 2
            assert len(components(trace(genus2, result.coloring))) == count
