import sys
import os

project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

import pytest

from src.errors import (BadCount, DuplicateSlot, FoldedTriangle, MultiplePunctures,
                        SelfGluing, SlotOutOfRange, TriangulationError)
from src.surface_model import (Corner, Slot, antipodal_corners, antipodal_edges,
                               build_triangulation, standard_surface, vertex_link)


def test_punctured_torus_link(pt):
    link = vertex_link(pt)
    assert link.size == 6
    assert link.corners == (Corner(0, 0), Corner(1, 1), Corner(0, 2), Corner(1, 0), Corner(0, 1), Corner(1, 2))
    assert link.crossings == (1, 2, 0, 1, 2, 0)
    assert link.exit_slots == (Slot(0, 1), Slot(1, 2), Slot(0, 0), Slot(1, 1), Slot(0, 2), Slot(1, 0))
    assert link.edge_positions == ((2, 5), (0, 3), (1, 4))


def test_punctured_torus_counts(pt):
    assert pt.triangle_count == 2
    assert pt.edge_count == 3
    assert pt.genus == 1
    assert pt.euler_characteristic == -1


def test_canonical_slots(pt):
    assert pt.canonical_slot(0) == Slot(0, 0)
    assert pt.canonical_slot(1) == Slot(0, 1)
    assert pt.canonical_slot(2) == Slot(1, 2)


def test_every_torus_edge_is_antipodal(pt):
    assert antipodal_edges(pt) == frozenset({0, 1, 2})
    assert antipodal_corners(pt, Corner(0, 0), Corner(1, 0))
    assert not antipodal_corners(pt, Corner(0, 0), Corner(0, 2))


@pytest.mark.parametrize("genus, triangles, edges", [(1, 2, 3), (2, 6, 9), (3, 10, 15)])
def test_standard_surface_counts(genus, triangles, edges):
    tri = standard_surface(genus)
    assert tri.triangle_count == triangles
    assert tri.edge_count == edges
    assert tri.link_size == 3 * triangles
    assert tri.genus == genus


def test_standard_surface_rejects_genus_zero():
    with pytest.raises(ValueError):
        standard_surface(0)


def test_glued_is_an_involution(genus2):
    for t in range(genus2.triangle_count):
        for s in range(3):
            slot = Slot(t, s)
            assert genus2.glued(genus2.glued(slot)) == slot
            assert genus2.edge_of(slot) == genus2.edge_of(genus2.glued(slot))


def test_link_visits_every_corner_once(genus2):
    link = genus2.link
    assert sorted(link.corners) == sorted(genus2.corners())
    for e, (p, q) in enumerate(link.edge_positions):
        assert p < q
        assert link.crossings[p] == link.crossings[q] == e


@pytest.mark.parametrize("pairs, error", [
    ([((0, 0), (1, 3)), ((0, 1), (1, 1)), ((0, 2), (1, 2))], SlotOutOfRange),
    ([((0, 0), (0, 0)), ((0, 1), (1, 1)), ((0, 2), (1, 2))], SelfGluing),
    ([((0, 0), (1, 0)), ((0, 0), (1, 1)), ((0, 2), (1, 2))], DuplicateSlot),
    ([((0, 0), (0, 1)), ((0, 2), (1, 2)), ((1, 0), (1, 1))], FoldedTriangle),
    ([((0, 0), (1, 0)), ((0, 1), (1, 1))], BadCount),
])
def test_invalid_gluings(pairs, error):
    with pytest.raises(error):
        build_triangulation(pairs)


def test_two_punctures_rejected():
    # Two triangles glued side-to-side like a pillowcase: three punctures
    pairs = [((0, 0), (1, 2)), ((0, 1), (1, 1)), ((0, 2), (1, 0))]
    with pytest.raises(MultiplePunctures):
        build_triangulation(pairs)


def test_triangulation_errors_are_value_errors():
    with pytest.raises(ValueError):
        build_triangulation([])
    assert issubclass(TriangulationError, ValueError)
