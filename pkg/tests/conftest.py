"""Shared fixtures: one loader per bundled example complex."""

import pathlib

import pytest

from tropcomplex import load_fixture_file

FIXDIR = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

ABSTRACT = ["triangle", "triangle-tropical", "tetrahedron", "path", "loop"]
EMBEDDED = ["plane", "twosheet"]
DEGENERATION = ["tet-degen"]
ALL = ABSTRACT + EMBEDDED + DEGENERATION


def fixture_path(name):
    return FIXDIR / (name + ".json")


@pytest.fixture(scope="session")
def fx():
    """Mapping of fixture name to parsed Fixture object."""
    return {name: load_fixture_file(fixture_path(name)) for name in ALL}


@pytest.fixture(scope="session")
def triangle(fx):
    return fx["triangle"]


@pytest.fixture(scope="session")
def triangle_tropical(fx):
    return fx["triangle-tropical"]


@pytest.fixture(scope="session")
def tetrahedron(fx):
    return fx["tetrahedron"]


@pytest.fixture(scope="session")
def path_graph(fx):
    return fx["path"]


@pytest.fixture(scope="session")
def loop_graph(fx):
    return fx["loop"]


@pytest.fixture(scope="session")
def plane(fx):
    return fx["plane"]


@pytest.fixture(scope="session")
def twosheet(fx):
    return fx["twosheet"]


@pytest.fixture(scope="session")
def tet_degen(fx):
    return fx["tet-degen"]
