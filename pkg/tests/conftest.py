import json
import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from gyoja.cartan import build_affine_system, parse_cartan_type
from gyoja.weyl import enumerate_ball

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"

_BALLS: dict[tuple[str, int], object] = {}


def get_ball(label: str, radius: int):
    """Session-cached ball; reuses the largest one enumerated for the type."""
    for (lbl, r), ball in _BALLS.items():
        if lbl == label and r >= radius:
            return ball
    system = build_affine_system(parse_cartan_type(label))
    ball = enumerate_ball(system, radius)
    _BALLS[(label, radius)] = ball
    return ball


@pytest.fixture(scope="session")
def ball():
    return get_ball


@pytest.fixture(scope="session")
def golden_counts():
    with open(GOLDEN_DIR / "counts.json", encoding="utf-8") as fp:
        return json.load(fp)


def system_of(label: str):
    return build_affine_system(parse_cartan_type(label))
