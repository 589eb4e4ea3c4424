import math
from pathlib import Path

import numpy as np
import pytest
from django.conf import settings

from placement.exceptions import SingularNormalMatrix
from placement.geometry import (
    LineCoefficients, Point2, hesse_normalize, region_from_vertices,
)
from placement.published_cases import triangle_system
from placement.traffic_model import load_congestion, load_region
from placement.wls_core import (
    WeightVector, assemble, condition_number,
)

N_RANDOM_TRIALS = 1000
MAX_CONDITION = 1e3
MAX_NEAR_PARALLEL_CONDITION = 1e10

DISTRICT_VERTICES = (
    ('A', 0.0, 5.25),
    ('B', 1.25, 11.0),
    ('C', 3.0, 12.5),
    ('D', 19.25, 12.0),
    ('E', 17.5, 7.5),
    ('F', 17.0, 0.0),
    ('G', 3.0, 0.0),
)
SEGMENTS = ('AB', 'BC', 'CD', 'DE', 'EF', 'FG', 'GA')
MORNING_WEIGHTS = (0.02, 0.09, 0.03, 0.25, 0.45, 0.15, 0.01)
AFTERNOON_WEIGHTS = (0.17, 0.10, 0.30, 0.15, 0.06, 0.10, 0.12)

# Значения, подтверждённые перебором оракула по сетке [-5, 25]².
UNWEIGHTED_LOCATION = (7.567055, 6.212783)
MORNING_LOCATION = (16.757506, 4.509295)
AFTERNOON_LOCATION = (6.577454, 10.260342)

UNIT_SQUARE = (
    ('P', 0.0, 0.0),
    ('Q', 1.0, 0.0),
    ('R', 1.0, 1.0),
    ('S', 0.0, 1.0),
)


def named_points(rows):
    return [(label, Point2(x, y)) for label, x, y in rows]


def random_line(rng, low=0.0, high=10.0, angle=None):
    """Прямая со случайным направлением через случайную точку квадрата."""
    if angle is None:
        angle = rng.uniform(0.0, math.pi)
    px, py = rng.uniform(low, high, size=2)
    a, b = math.cos(angle), math.sin(angle)
    return hesse_normalize(LineCoefficients(a, b, a * px + b * py))


def random_weighted_system(rng, max_condition=MAX_CONDITION):
    """
    Случайная система из 3-10 прямых с весами из [0, 1].

    Плохо обусловленные системы отбрасываются.
    """
    while True:
        size = int(rng.integers(3, 11))
        system = assemble(random_line(rng) for _ in range(size))
        weights = WeightVector(tuple(float(w) for w in rng.random(size)))
        try:
            if condition_number(system, weights) <= max_condition:
                return system, weights
        except SingularNormalMatrix:
            continue


def near_parallel_system(
    rng, min_spread=1e-5, max_condition=MAX_NEAR_PARALLEL_CONDITION
):
    """
    Система из 3-7 почти параллельных прямых через точки [0, 1]².

    Направления лежат в веере ширины от min_spread до 0.1 рад,
    обусловленность доходит до max_condition.
    """
    while True:
        size = int(rng.integers(3, 8))
        spread = 10 ** rng.uniform(math.log10(min_spread), -1.0)
        base = rng.uniform(0.0, math.pi)
        system = assemble(
            random_line(
                rng, 0.0, 1.0, base + rng.uniform(-spread, spread)
            )
            for _ in range(size)
        )
        weights = WeightVector(
            tuple(float(w) for w in rng.uniform(0.1, 1.0, size))
        )
        try:
            if condition_number(system, weights) <= max_condition:
                return system, weights
        except SingularNormalMatrix:
            continue


@pytest.fixture
def rng():
    return np.random.default_rng(20240705)


@pytest.fixture
def region():
    return region_from_vertices(
        named_points(DISTRICT_VERTICES), 'Power and Light District'
    )


@pytest.fixture
def unit_square():
    return region_from_vertices(named_points(UNIT_SQUARE), 'unit square')


@pytest.fixture
def district_system(region):
    return assemble(region.lines)


@pytest.fixture
def triangle():
    return triangle_system()


@pytest.fixture
def region_path():
    return Path(settings.PLACEMENT_REGION_PATH)


@pytest.fixture
def congestion_path():
    return Path(settings.PLACEMENT_CONGESTION_PATH)


@pytest.fixture
def records(congestion_path):
    return load_congestion(congestion_path.read_text(encoding='utf-8'))


@pytest.fixture
def bundled_region(region_path):
    return load_region(region_path.read_text(encoding='utf-8'))


@pytest.fixture
def square_files(tmp_path):
    region_file = tmp_path / 'square.json'
    region_file.write_text(
        '{"name": "square", "vertices": ['
        '{"id": "P", "x": 0, "y": 0}, {"id": "Q", "x": 1, "y": 0}, '
        '{"id": "R", "x": 1, "y": 1}, {"id": "S", "x": 0, "y": 1}]}',
        encoding='utf-8',
    )
    congestion_file = tmp_path / 'empty.csv'
    congestion_file.write_text('segment,window,percent\n', encoding='utf-8')
    return region_file, congestion_file


@pytest.fixture
def singular_congestion_file(tmp_path):
    """Окно, в котором нагружен только один участок."""
    rows = ['segment,window,percent']
    for index, segment in enumerate(SEGMENTS):
        rows.append(f'{segment},night,{50 if index == 0 else 0}')
    path = tmp_path / 'night.csv'
    path.write_text('\n'.join(rows) + '\n', encoding='utf-8')
    return path


@pytest.fixture
def published_district(mixer):
    district = mixer.blend(
        'placement.District', is_published=True, slug='power-and-light',
        name='Power and Light District',
    )
    for ordinal, (label, x, y) in enumerate(DISTRICT_VERTICES):
        mixer.blend(
            'placement.Vertex', district=district, label=label,
            x=x, y=y, ordinal=ordinal,
        )
    for segment, morning, afternoon in zip(
        SEGMENTS, MORNING_WEIGHTS, AFTERNOON_WEIGHTS
    ):
        mixer.blend(
            'placement.CongestionRecord', district=district,
            segment=segment, window='morning', percent=morning * 100,
        )
        mixer.blend(
            'placement.CongestionRecord', district=district,
            segment=segment, window='afternoon', percent=afternoon * 100,
        )
    return district


@pytest.fixture
def unpublished_district(mixer):
    district = mixer.blend('placement.District', is_published=False)
    for ordinal, (label, x, y) in enumerate(UNIT_SQUARE):
        mixer.blend(
            'placement.Vertex', district=district, label=label,
            x=x, y=y, ordinal=ordinal,
        )
    return district


@pytest.fixture
def district_with_singular_window(mixer):
    district = mixer.blend('placement.District', is_published=True)
    for ordinal, (label, x, y) in enumerate(UNIT_SQUARE):
        mixer.blend(
            'placement.Vertex', district=district, label=label,
            x=x, y=y, ordinal=ordinal,
        )
    for index, segment in enumerate(('PQ', 'QR', 'RS', 'SP')):
        mixer.blend(
            'placement.CongestionRecord', district=district,
            segment=segment, window='night',
            percent=40.0 if index == 0 else 0.0,
        )
    return district
