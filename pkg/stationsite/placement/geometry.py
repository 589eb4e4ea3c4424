"""
Геометрия района: точки, прямые в нормальной форме Гессе и многоугольник.

Координаты задаются в локальной плоской системе карты
(безразмерные единицы сетки), географическая привязка не выполняется.
Все типы неизменяемы, все операции - чистые функции.
"""
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .exceptions import (
    DegeneratePoints, InputError, RangeError, TooFewVertices, ZeroLine,
)

logger = logging.getLogger(__name__)

POINT_TOLERANCE = 1e-12
UNIT_NORM_TOLERANCE = 1e-12
BOUNDARY_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Point2:
    """
    Точка в локальной системе координат карты.

    Attributes:
        x (float): Координата на восток.
        y (float): Координата на север.
    """

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise RangeError(
                f'координаты точки должны быть конечными: ({self.x}, {self.y})'
            )


@dataclass(frozen=True)
class LineCoefficients:
    """Прямая a·x + b·y = c с произвольным масштабом коэффициентов."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ZeroLine('коэффициенты a и b не могут быть оба нулевыми')

    def scaled(self, factor: float) -> 'LineCoefficients':
        return LineCoefficients(
            self.a * factor, self.b * factor, self.c * factor
        )


@dataclass(frozen=True)
class HesseLine:
    """
    Прямая в нормальной форме Гессе: nx·x + ny·y = d.

    Нормаль единичная, ориентация каноническая: d ≥ 0,
    а при d = 0 первая ненулевая компонента нормали положительна.
    Благодаря этому две записи одной прямой совпадают покомпонентно.

    Attributes:
        nx (float): Компонента единичной нормали по x.
        ny (float): Компонента единичной нормали по y.
        d (float): Смещение прямой от начала координат.
        segment_id (str | None): Имя участка границы, например 'AB'.
    """

    nx: float
    ny: float
    d: float
    segment_id: Optional[str] = None

    def __post_init__(self):
        if abs(self.nx ** 2 + self.ny ** 2 - 1.0) > UNIT_NORM_TOLERANCE:
            raise InputError(
                f'нормаль ({self.nx}, {self.ny}) не является единичной'
            )
        if not _is_canonical(self.nx, self.ny, self.d):
            raise InputError(
                f'прямая ({self.nx}, {self.ny}, {self.d}) '
                'не приведена к канонической ориентации'
            )

    @property
    def normal(self) -> Tuple[float, float]:
        return self.nx, self.ny


def _is_canonical(nx: float, ny: float, d: float) -> bool:
    if d != 0:
        return d > 0
    return nx > 0 or (nx == 0 and ny > 0)


@dataclass(frozen=True)
class PolygonRegion:
    """
    Район, ограниченный замкнутой ломаной.

    Attributes:
        vertices (tuple): Упорядоченные пары (имя вершины, Point2).
        lines (tuple): Прямые HesseLine, по одной на каждую пару
            соседних вершин, включая замыкающую.
        name (str): Название района.
    """

    vertices: Tuple[Tuple[str, Point2], ...]
    lines: Tuple[HesseLine, ...]
    name: str = ''

    @property
    def segment_ids(self) -> Tuple[str, ...]:
        return tuple(line.segment_id for line in self.lines)

    @property
    def points(self) -> Tuple[Point2, ...]:
        return tuple(point for _, point in self.vertices)

    def edges(self) -> Iterable[Tuple[Point2, Point2]]:
        points = self.points
        for index, start in enumerate(points):
            yield start, points[(index + 1) % len(points)]


def line_through_points(p: Point2, q: Point2) -> LineCoefficients:
    """
    Строит уравнение прямой, проходящей через две точки.

    Args:
        p (Point2): Первая точка.
        q (Point2): Вторая точка.
    Returns:
        LineCoefficients: Коэффициенты (a, b, c) в произвольном масштабе.
    Raises:
        DegeneratePoints: Точки совпадают.
    """
    if (
        abs(q.x - p.x) <= POINT_TOLERANCE
        and abs(q.y - p.y) <= POINT_TOLERANCE
    ):
        raise DegeneratePoints(
            f'через совпадающие точки ({p.x}, {p.y}) прямую не провести'
        )
    a = q.y - p.y
    b = p.x - q.x
    return LineCoefficients(a, b, a * p.x + b * p.y)


def hesse_normalize(
    line: LineCoefficients, segment_id: Optional[str] = None
) -> HesseLine:
    """
    Делит коэффициенты прямой на √(a² + b²) и выбирает знак так,
    чтобы ориентация была канонической.

    Масштаб и знак исходных коэффициентов на результат не влияют.
    """
    norm = math.hypot(line.a, line.b)
    if norm == 0:
        raise ZeroLine('коэффициенты a и b не могут быть оба нулевыми')
    nx, ny, d = line.a / norm, line.b / norm, line.c / norm
    if not _is_canonical(nx, ny, d):
        nx, ny, d = -nx, -ny, -d
    # +0.0 убирает отрицательные нули.
    return HesseLine(nx + 0.0, ny + 0.0, d + 0.0, segment_id)


def signed_distance(line: HesseLine, p: Point2) -> float:
    """Знаковое расстояние от точки до прямой: nx·x + ny·y − d."""
    return line.nx * p.x + line.ny * p.y - line.d


def region_from_vertices(
    vertices: Sequence[Tuple[str, Point2]], name: str = ''
) -> PolygonRegion:
    """
    Собирает район из упорядоченного списка именованных вершин.

    Прямая i проходит через вершины i и i + 1 (последняя - через
    последнюю и первую), имя участка - склейка имён вершин.

    Args:
        vertices: Пары (имя, Point2) в порядке обхода границы.
        name (str): Название района.
    Returns:
        PolygonRegion: Район с вычисленными прямыми границы.
    Raises:
        TooFewVertices: Вершин меньше трёх.
        DegeneratePoints: Соседние вершины совпадают.
    """
    vertices = tuple((str(label), point) for label, point in vertices)
    if len(vertices) < 3:
        raise TooFewVertices(
            f'у района должно быть не меньше 3 вершин, получено '
            f'{len(vertices)}'
        )
    lines = []
    for index, (label, start) in enumerate(vertices):
        next_label, end = vertices[(index + 1) % len(vertices)]
        segment_id = f'{label}{next_label}'
        try:
            coefficients = line_through_points(start, end)
        except DegeneratePoints as error:
            raise DegeneratePoints(
                f'участок {segment_id}: {error}'
            ) from error
        line = hesse_normalize(coefficients, segment_id)
        logger.debug(
            'Участок %s: %.6fx %+.6fy = %.6f',
            segment_id, line.nx, line.ny, line.d,
        )
        lines.append(line)
    return PolygonRegion(vertices, tuple(lines), name)


def _distance_to_segment(p: Point2, start: Point2, end: Point2) -> float:
    dx, dy = end.x - start.x, end.y - start.y
    length_sq = dx * dx + dy * dy
    t = ((p.x - start.x) * dx + (p.y - start.y) * dy) / length_sq
    t = min(1.0, max(0.0, t))
    return math.hypot(p.x - (start.x + t * dx), p.y - (start.y + t * dy))


def contains(region: PolygonRegion, p: Point2) -> bool:
    """
    Проверяет, лежит ли точка внутри района (метод трассировки луча).

    Точки на расстоянии не более BOUNDARY_TOLERANCE от участка
    границы считаются внутренними.
    """
    inside = False
    for start, end in region.edges():
        if _distance_to_segment(p, start, end) <= BOUNDARY_TOLERANCE:
            return True
        if (start.y > p.y) != (end.y > p.y):
            crossing = (
                (end.x - start.x) * (p.y - start.y) / (end.y - start.y)
                + start.x
            )
            if p.x < crossing:
                inside = not inside
    return inside
