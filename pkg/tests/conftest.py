"""
Shared fixtures: labelled graphs loaded from fixtures/*.json
"""

from pathlib import Path

import pytest

from gpends.cli import read_document
from gpends.groups import LabelledGraph

FIXTURES_DIR = Path(__file__).resolve().parent.parent / 'fixtures'


def load_fixture(name: str) -> LabelledGraph:
    return read_document(str(FIXTURES_DIR / f"{name}.json"))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def pentagon():
    return load_fixture('pentagon_cyclic')


@pytest.fixture
def hexagon():
    return load_fixture('hexagon_alternating')


@pytest.fixture
def petersen():
    return load_fixture('petersen_z3')


@pytest.fixture
def path_z2_z3_z5():
    return load_fixture('path_z2_z3_z5')


@pytest.fixture
def square_z2():
    return load_fixture('square_z2')


@pytest.fixture
def k4_two_ended():
    return load_fixture('k4_two_ended')


@pytest.fixture
def edgeless_mixed():
    return load_fixture('edgeless_mixed')


@pytest.fixture
def infinite_dihedral():
    return load_fixture('infinite_dihedral')


@pytest.fixture
def free_z3_z3():
    return load_fixture('free_z3_z3')


@pytest.fixture
def k3_z2_z3_z5():
    return load_fixture('k3_z2_z3_z5')
