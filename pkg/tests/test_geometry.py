import math

import pytest

from placement.exceptions import (
    DegeneratePoints, InputError, TooFewVertices, ZeroLine,
)
from placement.geometry import (
    HesseLine, LineCoefficients, Point2, contains, hesse_normalize,
    line_through_points, region_from_vertices, signed_distance,
)
from tests.fixtures.fixture_data import SEGMENTS, named_points

# Уравнения участков в том виде, как они напечатаны для района.
PRINTED_LINES = (
    (-4.6, 1.0, 5.25),
    (-0.857, 1.0, 9.928),
    (0.03076, 1.0, 12.5923),
    (2.5714, -1.0, 37.5),
    (15.0, -1.0, 255.0),
    (0.0, 1.0, 0.0),
    (1.75, 1.0, 5.25),
)


def is_multiple(line, expected, tolerance=1e-12):
    a, b, c = expected
    return (
        abs(line.a * b - line.b * a) <= tolerance
        and abs(line.a * c - line.c * a) <= tolerance
        and abs(line.b * c - line.c * b) <= tolerance
    )


@pytest.mark.parametrize(('p', 'q', 'expected'), [
    (Point2(0, 5.25), Point2(1.25, 11), (-4.6, 1, 5.25)),
    (Point2(17, 0), Point2(3, 0), (0, 1, 0)),
])
def test_line_through_points(p, q, expected):
    line = line_through_points(p, q)
    for point in (p, q):
        assert abs(line.a * point.x + line.b * point.y - line.c) <= 1e-12, (
            'Убедитесь, что прямая проходит через обе исходные точки.'
        )
    assert is_multiple(line, expected, 1e-9), (
        f'Коэффициенты {line} должны быть кратны {expected}.'
    )


def test_line_through_same_point():
    with pytest.raises(DegeneratePoints):
        line_through_points(Point2(1, 1), Point2(1, 1))


@pytest.mark.parametrize(('coefficients', 'expected', 'tolerance'), [
    ((-4.6, 1, 5.25), (-0.9772, 0.2124, 1.1154), 5e-4),
    ((0, 1, 0), (0, 1, 0), 0),
    ((4, 5, 20), (4 / math.sqrt(41), 5 / math.sqrt(41), 20 / math.sqrt(41)),
     1e-15),
])
def test_hesse_normalize(coefficients, expected, tolerance):
    line = hesse_normalize(LineCoefficients(*coefficients))
    for got, want in zip((line.nx, line.ny, line.d), expected):
        assert abs(got - want) <= tolerance, (
            f'Нормализация {coefficients} дала {line}, ожидалось {expected}.'
        )


def test_zero_line_rejected():
    with pytest.raises(ZeroLine):
        LineCoefficients(0, 0, 3)


@pytest.mark.parametrize('factor', [-1.0, 2.0, -0.5, 1024.0, -0.125])
@pytest.mark.parametrize('coefficients', [
    (-4.6, 1, 5.25), (4, 5, 20), (1, 0, 0), (0, -3, 0), (7.5, -0.5, 127.5),
])
def test_normalize_ignores_scale_and_sign(coefficients, factor):
    line = LineCoefficients(*coefficients)
    assert hesse_normalize(line) == hesse_normalize(line.scaled(factor)), (
        'Канонизация должна убирать масштаб и знак коэффициентов прямой.'
    )


@pytest.mark.parametrize('factor', [3.0, -1e-3, 17.25])
def test_normalize_ignores_arbitrary_scale(factor):
    line = LineCoefficients(-4.6, 1, 5.25)
    first = hesse_normalize(line)
    second = hesse_normalize(line.scaled(factor))
    assert first.nx == pytest.approx(second.nx, abs=1e-15)
    assert first.ny == pytest.approx(second.ny, abs=1e-15)
    assert first.d == pytest.approx(second.d, abs=1e-15)


def test_canonical_orientation():
    line = hesse_normalize(LineCoefficients(-1, 0, 0))
    assert (line.nx, line.ny, line.d) == (1.0, 0.0, 0.0)
    line = hesse_normalize(LineCoefficients(0, -2, -6))
    assert (line.nx, line.ny, line.d) == (0.0, 1.0, 3.0)
    assert not math.copysign(1.0, line.nx) < 0, (
        'Отрицательный ноль в нормали нарушает сравнение прямых.'
    )


def test_hesse_line_invariants():
    with pytest.raises(InputError):
        HesseLine(1.0, 1.0, 0.0)
    with pytest.raises(InputError):
        HesseLine(0.0, 1.0, -2.0)


@pytest.mark.parametrize(('line', 'point', 'expected'), [
    (HesseLine(0.0, 1.0, 0.0), Point2(5, 3), 3.0),
    (HesseLine(0.0, 1.0, 0.0), Point2(-7, 0), 0.0),
    (hesse_normalize(LineCoefficients(4, 5, 20)), Point2(0, 0),
     -20 / math.sqrt(41)),
])
def test_signed_distance(line, point, expected):
    assert signed_distance(line, point) == pytest.approx(expected, abs=1e-12)


def test_distance_is_euclidean():
    line = hesse_normalize(LineCoefficients(4, 5, 20))
    point = Point2(3, 7)
    foot_t = signed_distance(line, point)
    foot = Point2(point.x - foot_t * line.nx, point.y - foot_t * line.ny)
    assert abs(signed_distance(line, foot)) < 1e-12
    assert math.hypot(point.x - foot.x, point.y - foot.y) == pytest.approx(
        abs(foot_t), abs=1e-12
    )
    flipped = -(-line.nx * point.x - line.ny * point.y + line.d)
    assert abs(flipped) == pytest.approx(abs(foot_t), abs=1e-15)


def test_district_lines(region):
    assert region.segment_ids == SEGMENTS, (
        'Имена участков должны складываться из имён соседних вершин, '
        'включая замыкающий участок GA.'
    )
    for line, printed in zip(region.lines, PRINTED_LINES):
        expected = hesse_normalize(LineCoefficients(*printed))
        assert line.nx == pytest.approx(expected.nx, abs=2e-3)
        assert line.ny == pytest.approx(expected.ny, abs=2e-3)
        assert line.d == pytest.approx(expected.d, abs=2e-3), (
            f'Участок {line.segment_id} не совпадает с напечатанным '
            'уравнением после нормализации.'
        )


def test_edges_pass_through_vertices(region, unit_square):
    for polygon in (region, unit_square):
        for line, (start, end) in zip(polygon.lines, polygon.edges()):
            assert abs(signed_distance(line, start)) < 1e-9
            assert abs(signed_distance(line, end)) < 1e-9


def test_unit_square_lines(unit_square):
    assert len(unit_square.lines) == 4
    for line in unit_square.lines:
        assert line.nx * line.ny == 0, (
            'Стороны единичного квадрата параллельны осям.'
        )


def test_too_few_vertices():
    with pytest.raises(TooFewVertices):
        region_from_vertices(named_points((('A', 0, 0), ('B', 1, 0))))


def test_repeated_vertex():
    with pytest.raises(DegeneratePoints):
        region_from_vertices(
            named_points((('A', 0, 0), ('B', 0, 0), ('C', 1, 1)))
        )


def test_point_must_be_finite():
    with pytest.raises(InputError):
        Point2(math.inf, 0.0)


@pytest.mark.parametrize(('point', 'expected'), [
    (Point2(0.5, 0.5), True),
    (Point2(2, 2), False),
    (Point2(0.5, 0.0), True),
    (Point2(1.0, 1.0), True),
    (Point2(1.0 + 1e-10, 0.5), True),
    (Point2(-1e-6, 0.5), False),
])
def test_contains_unit_square(unit_square, point, expected):
    assert contains(unit_square, point) is expected


def test_contains_district(region):
    assert contains(region, Point2(10, 6))
    assert not contains(region, Point2(18.5, 3))
    assert not contains(region, Point2(0.5, 1))


def winding_number(polygon, point):
    def is_left(p, start, end):
        return (
            (end.x - start.x) * (p.y - start.y)
            - (p.x - start.x) * (end.y - start.y)
        )

    number = 0
    for start, end in polygon.edges():
        if start.y <= point.y:
            if end.y > point.y and is_left(point, start, end) > 0:
                number += 1
        elif end.y <= point.y and is_left(point, start, end) < 0:
            number -= 1
    return number


def test_contains_agrees_with_winding_number(rng):
    for _ in range(20):
        size = int(rng.integers(3, 9))
        angles = sorted(rng.uniform(0, 2 * math.pi, size=size))
        radius = rng.uniform(1, 5)
        polygon = region_from_vertices([
            (f'V{index}', Point2(radius * math.cos(t), radius * math.sin(t)))
            for index, t in enumerate(angles)
        ])
        for x, y in rng.uniform(-6, 6, size=(100, 2)):
            point = Point2(float(x), float(y))
            assert contains(polygon, point) == (
                winding_number(polygon, point) != 0
            ), f'Трассировка луча и число оборотов расходятся в {point}.'
