import os
import sys

# Headless Qt for the signal and rendering tests
os.environ.setdefault("QT_QPA_PLATFORM", "offscreen")

project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

import pytest

from src.surface_model import punctured_torus, standard_surface


PT_TEXT = "triangles 2\nglue 0 0 1 0\nglue 0 1 1 1\nglue 0 2 1 2\n"


@pytest.fixture(scope="session")
def pt():
    """The standard punctured torus: edges a, b, c glue side i of triangle 0 to side i of triangle 1."""
    return punctured_torus()


@pytest.fixture(scope="session")
def genus2():
    return standard_surface(2)


@pytest.fixture
def pt_file(tmp_path):
    path = tmp_path / "pt.tri"
    path.write_text(PT_TEXT, encoding="utf-8")
    return path
