import sys
import os

project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

import pytest

from src.band_analysis import BandKind
from src.link_renderer import FULL_CIRCLE, link_schematic, render_link


def test_schematic_of_half_bands(pt):
    schematic = link_schematic(pt, (2, 1, 1))
    assert len(schematic.sectors) == 6
    assert [s.number for s in schematic.sectors] == [1, 0, 1, 1, 0, 1]
    assert [s.position for s in schematic.sectors if s.gap] == [1, 4]
    assert [arc.band.kind for arc in schematic.arcs] == [BandKind.HALF, BandKind.HALF]
    assert all(arc.label == "half" for arc in schematic.arcs)


def test_schematic_of_empty_coloring(pt):
    schematic = link_schematic(pt, (0, 0, 0))
    assert len(schematic.sectors) == 6
    assert schematic.arcs == ()


def test_sectors_fill_the_circle(genus2):
    schematic = link_schematic(genus2, (0,) * 9)
    assert sum(s.span for s in schematic.sectors) == -FULL_CIRCLE
    assert schematic.sectors[0].start_angle == 90 * 16


def test_render_svg(qapp, pt):
    document = render_link(pt, (2, 1, 1))
    assert "<svg" in document
    assert "Vertex link" in document
    assert "half" in document


def test_render_is_deterministic(qapp, pt):
    assert render_link(pt, (2, 1, 1)) == render_link(pt, (2, 1, 1))


def test_render_rejects_other_formats(qapp, pt):
    with pytest.raises(ValueError):
        render_link(pt, (2, 1, 1), format="png")
