import sys
import os

project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

import pytest

from src.coloring import enumerate_admissible, strip_peripherals, weight
from src.errors import CapTooSmall, NotTorusFixture, PeripheralPresent
from src.oracles import TorusSlope, bfs_closure, closures_meet, random_representative, torus_slope
from src.reducer import equivalent, reduce


def test_bfs_closure_small_torus_cases(pt):
    assert bfs_closure(pt, (0, 1, 1), 2) == frozenset({(0, 1, 1)})
    assert bfs_closure(pt, (2, 1, 1), 4) == frozenset({(2, 1, 1)})


def test_bfs_closure_strips_first(pt):
    assert bfs_closure(pt, (2, 3, 3), 8) == frozenset({(0, 1, 1)})


def test_bfs_closure_cap_too_small(pt):
    with pytest.raises(CapTooSmall):
        bfs_closure(pt, (2, 1, 1), 3)


def test_closures_meet(pt):
    assert closures_meet(pt, (0, 1, 1), (2, 3, 3), 8)
    assert not closures_meet(pt, (2, 1, 1), (1, 1, 2), 4)


@pytest.mark.parametrize("f, slope", [
    ((0, 1, 1), TorusSlope(0, 1, 1)),
    ((0, 2, 2), TorusSlope(0, 1, 2)),
    ((1, 0, 1), TorusSlope(1, 0, 1)),
    ((0, 0, 0), TorusSlope(0, 0, 0)),
])
def test_torus_slopes(pt, f, slope):
    assert torus_slope(pt, f) == slope


def test_distinct_torus_slopes(pt):
    assert torus_slope(pt, (2, 1, 1)) != torus_slope(pt, (1, 1, 2))


def test_torus_slope_needs_torus(genus2):
    with pytest.raises(NotTorusFixture):
        torus_slope(genus2, (0,) * 9)


def test_torus_slope_needs_stripped_input(pt):
    with pytest.raises(PeripheralPresent):
        torus_slope(pt, (2, 3, 3))


def test_torus_slopes_classify_stripped_colorings(pt):
    seen = {}
    for f in enumerate_admissible(pt, 20):
        if strip_peripherals(pt, f)[1] or not any(f):
            continue
        slope = torus_slope(pt, f)
        assert slope.p >= 0
        assert seen.setdefault(slope, f) == f


def test_random_representative_zero_steps(pt, genus2):
    assert random_representative(pt, (2, 3, 3), 0, seed=7) == (2, 3, 3)
    assert random_representative(genus2, (0,) * 9, 4, seed=7) == (0,) * 9


def test_random_representative_is_reproducible(genus2):
    f = next(f for f in enumerate_admissible(genus2, 4) if any(f))
    first = random_representative(genus2, f, 5, seed=3)
    assert random_representative(genus2, f, 5, seed=3) == first


def test_random_representative_keeps_peripherals(pt):
    result = random_representative(pt, (2, 3, 3), 3, seed=11)
    assert strip_peripherals(pt, result)[1] == 1
    assert equivalent(pt, (2, 3, 3), result).equivalent


def test_equivalence_agrees_with_closure_oracle(genus2):
    minimal = []
    for f in enumerate_admissible(genus2, 6):
        final = reduce(genus2, f).final
        if any(final) and final not in minimal:
            minimal.append(final)
        if len(minimal) == 10:
            break
    pairs = []
    for index, m in enumerate(minimal):
        fuzzed = random_representative(genus2, m, 1 + index % 4, seed=index)
        for other in minimal[:5]:
            pairs.append((fuzzed, other))
    assert len(pairs) >= 50
    for f, m in pairs:
        cap = max(weight(f), weight(m))
        assert equivalent(genus2, f, m).equivalent == (m in bfs_closure(genus2, f, cap))
