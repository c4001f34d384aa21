import pathlib

import pytest

from monoideal import FieldSpec, RingContext, parse_polynomial

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture
def qq_xy():
    return RingContext(FieldSpec(0), ("x", "y"))


@pytest.fixture
def qq_xyz():
    return RingContext(FieldSpec(0), ("x", "y", "z"))


def fixture_text(name):
    return (FIXTURES / name).read_text()


def poly(ring, text):
    return parse_polynomial(text, ring)
