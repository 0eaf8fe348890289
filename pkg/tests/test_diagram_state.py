import sys
import os

project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

import pytest

from src.commands.slide_commands import SlideBandCommand, StripPeripheralsCommand
from src.diagram_state import DiagramState
from src.coloring import PushoffSide, pushoff_coloring
from src.errors import BandNotMaximal, NotAdmissible, RewindTooFar
from src.reducer import minimal_set
from src.slide_history import SlideHistory


@pytest.fixture
def state(pt):
    return DiagramState(pt, (2, 3, 3))


@pytest.fixture
def history():
    return SlideHistory()


def test_rejects_inadmissible_coloring(pt):
    with pytest.raises(NotAdmissible):
        DiagramState(pt, (1, 1, 1))


def test_strip_emits_signals(qtbot, state):
    with qtbot.waitSignal(state.peripherals_stripped, timeout=1000) as blocker:
        with qtbot.waitSignal(state.coloring_changed, timeout=1000) as changed:
            state.strip_peripherals()
    assert blocker.args == [1]
    assert changed.args == [(0, 1, 1)]
    assert state.peripheral_count == 1
    assert state.full_coloring() == (2, 3, 3)


def test_slide_emits_start_and_delta(qtbot, pt):
    state = DiagramState(pt, (0, 1, 1))
    with qtbot.waitSignal(state.slide_applied, timeout=1000) as blocker:
        result = state.apply_slide(4)
    assert blocker.args == [4, 0]
    assert result.coloring == (0, 1, 1)


def test_slide_needs_a_maximal_band(pt):
    state = DiagramState(pt, (0, 1, 1))
    with pytest.raises(BandNotMaximal):
        state.apply_slide(0)


def test_rewinding_the_strip_restores_peripherals(qtbot, state, history):
    with qtbot.waitSignal(history.depth_changed, timeout=1000) as blocker:
        history.execute_command(StripPeripheralsCommand(state))
    assert blocker.args == [1]
    assert state.coloring == (0, 1, 1)

    with qtbot.waitSignal(history.command_rewound, timeout=1000):
        rewound = history.rewind()
    assert [c.description for c in rewound] == ["Strip 1 peripheral component(s)"]
    assert state.coloring == (2, 3, 3)
    assert state.peripheral_count == 0
    assert len(history) == 0


def test_slide_command_description_and_rewind(pt, history):
    state = DiagramState(pt, (0, 1, 1))
    command = SlideBandCommand(state, 4)
    history.execute_command(command)
    assert command.description == "Slide band at 4 (delta 0)"
    assert history.path() == (4,)
    history.rewind()
    assert state.coloring == (0, 1, 1)
    assert history.path() == ()


def test_rewind_moves_between_least_weight_representatives(genus2, history):
    target = pushoff_coloring(genus2, 6, PushoffSide.CCW)
    other = next(c for c in minimal_set(genus2, target).colorings if c != target)
    moves = minimal_set(genus2, other).moves[target]
    assert len(moves) == 1
    state = DiagramState(genus2, other)
    history.execute_command(StripPeripheralsCommand(state))
    history.execute_command(SlideBandCommand(state, moves[0]))
    assert state.coloring == target
    assert history.path() == moves
    assert history.descriptions() == ["Strip 0 peripheral component(s)", f"Slide band at {moves[0]} (delta 0)"]

    history.rewind(2)
    assert state.coloring == other
    assert state.full_coloring() == other


def test_failed_command_is_not_recorded(pt, history):
    state = DiagramState(pt, (0, 1, 1))
    with pytest.raises(BandNotMaximal):
        history.execute_command(SlideBandCommand(state, 0))
    assert len(history) == 0
    assert state.coloring == (0, 1, 1)


def test_rewind_past_the_start(state, history):
    history.execute_command(StripPeripheralsCommand(state))
    with pytest.raises(RewindTooFar):
        history.rewind(2)
    assert len(history) == 1
    assert state.coloring == (0, 1, 1)
    assert history.rewind(0) == []
