import math

import pytest

from placement.exceptions import InvalidBox, RangeError
from placement.geometry import Point2
from placement.oracle import SearchBox, fd_gradient, grid_minimize
from placement.published_cases import TRIANGLE_EXACT
from placement.wls_core import WeightVector, objective_evaluator, solve_wls
from tests.conftest import assert_point_close
from tests.fixtures.fixture_data import (
    MORNING_LOCATION, MORNING_WEIGHTS, random_weighted_system,
)

N_ORACLE_SYSTEMS = 50
ORACLE_CONDITION = 50.0


def paraboloid(x, y):
    return (x - 3) ** 2 + (y - 7) ** 2


def test_default_box():
    box = SearchBox()
    assert (box.xmin, box.xmax, box.ymin, box.ymax) == (-5, 25, -5, 25)
    assert (box.levels, box.points_per_axis) == (5, 101)
    assert box.final_resolution == pytest.approx(7.68e-7, rel=1e-9)


def test_from_bounds():
    box = SearchBox.from_bounds(['0', 4, 0.0, 4], levels=3,
                                points_per_axis=11)
    assert box == SearchBox(0.0, 4.0, 0.0, 4.0, 3, 11)


@pytest.mark.parametrize('bounds', [
    dict(xmin=1, xmax=1),
    dict(ymin=3, ymax=-3),
    dict(levels=0),
    dict(points_per_axis=9),
])
def test_invalid_box(bounds):
    with pytest.raises(InvalidBox):
        SearchBox(**bounds)


def test_paraboloid():
    box = SearchBox()
    result = grid_minimize(paraboloid, box)
    assert_point_close(
        result.point, (3, 7), 2 * result.resolution,
        'Оракул должен найти вершину параболоида'
    )
    assert result.value < 1e-11
    assert result.resolution == pytest.approx(box.final_resolution, rel=1e-9)


def test_history_never_gets_worse():
    result = grid_minimize(paraboloid, SearchBox())
    assert len(result.history) == 5
    assert all(
        later <= earlier
        for earlier, later in zip(result.history, result.history[1:])
    ), 'Лучшее значение не должно ухудшаться от уровня к уровню.'
    assert result.history[-1] == result.value


def test_oracle_is_deterministic():
    first = grid_minimize(paraboloid, SearchBox())
    second = grid_minimize(paraboloid, SearchBox())
    assert first == second


def test_ties_prefer_smallest_coordinates():
    result = grid_minimize(lambda x, y: 0 * x + 0 * y, SearchBox())
    assert (result.point.x, result.point.y) == (-5.0, -5.0), (
        'При равных значениях выбирается узел с наименьшим x, '
        'затем с наименьшим y.'
    )


def test_triangle(triangle):
    result = grid_minimize(
        objective_evaluator(triangle, WeightVector.uniform(3)),
        SearchBox(0, 4, 0, 4),
    )
    assert_point_close(
        result.point, TRIANGLE_EXACT, 2 * result.resolution,
        'Оракул для треугольника'
    )


def test_district_morning(district_system):
    weights = WeightVector(MORNING_WEIGHTS)
    result = grid_minimize(
        objective_evaluator(district_system, weights), SearchBox()
    )
    solution = solve_wls(district_system, weights)
    assert_point_close(
        result.point, (solution.point.x, solution.point.y),
        2 * result.resolution, 'Оракул и решение для утреннего окна'
    )
    assert_point_close(
        result.point, MORNING_LOCATION, 1e-5, 'Оракул для утреннего окна'
    )


def test_random_systems_agree_with_solver(rng):
    box = SearchBox()
    checked = 0
    while checked < N_ORACLE_SYSTEMS:
        system, weights = random_weighted_system(rng, ORACLE_CONDITION)
        solution = solve_wls(system, weights)
        x, y = solution.point.x, solution.point.y
        if not (-4 <= x <= 24 and -4 <= y <= 24):
            continue
        checked += 1
        result = grid_minimize(objective_evaluator(system, weights), box)
        assert_point_close(
            result.point, (x, y), 2 * result.resolution,
            f'Система {checked}: оракул расходится с решением'
        )


def test_fd_gradient():
    def f(x, y):
        return x * x + 3 * x * y

    dx, dy = fd_gradient(f, Point2(1, 2))
    assert dx == pytest.approx(8, abs=1e-6)
    assert dy == pytest.approx(3, abs=1e-6)
    dx, dy = fd_gradient(f, Point2(1, 2), h=1e-3)
    assert math.hypot(dx - 8, dy - 3) < 1e-6


@pytest.mark.parametrize('h', [0.0, -1e-6])
def test_fd_gradient_step(h):
    with pytest.raises(RangeError):
        fd_gradient(paraboloid, Point2(0, 0), h)
