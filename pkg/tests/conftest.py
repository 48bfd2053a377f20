"""Shared fixtures.  The expensive constructions (Del Pezzo images, the
scroll, the degree-12 union, the bilinkage pipeline) are built once per
session and reused across modules.  The acceptance module appends one line
per criterion to ACCEPTANCE_LINES; they are echoed after the run, outside
output capture."""

import warnings

import pytest

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance ledger")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from scrollgeom.constructions import (DEFAULT_PRIME, UNION_COORDS,
                                      bilink_pipeline, del_pezzo,
                                      elliptic_scroll, scroll_union,
                                      source_ring, standard_ring)


@pytest.fixture(scope="session")
def ring6():
    return standard_ring(DEFAULT_PRIME)


@pytest.fixture(scope="session")
def ring4():
    return source_ring(DEFAULT_PRIME)


@pytest.fixture(scope="session")
def del_pezzos():
    return {t: del_pezzo(t) for t in (5, 6, 7, 8)}


@pytest.fixture(scope="session")
def scroll():
    return elliptic_scroll((0, 1, 0, 1))


@pytest.fixture(scope="session")
def union_y():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return scroll_union(*UNION_COORDS)


@pytest.fixture(scope="session")
def pipeline0(union_y):
    return bilink_pipeline(union_y, seed=0)
