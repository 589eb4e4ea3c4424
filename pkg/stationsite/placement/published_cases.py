"""
Опубликованные расчёты, с которыми сверяется программа.

Матрицы перенесены как напечатаны, включая ошибочный b₅ = 1.115
(правильное значение 255/√226 ≈ 16.962) и округлённые коэффициенты A,
строки которых не являются единичными векторами. Поэтому они решаются
через `solve_matrix`, а не через систему прямых Гессе.

Здесь же хранятся вершины района и таблица загруженности,
по которым `demo_published` строит исправленный расчёт.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from .geometry import (
    LineCoefficients, Point2, PolygonRegion, hesse_normalize,
    region_from_vertices,
)
from .traffic_model import CongestionRecord
from .wls_core import LineSystem, assemble

# Треугольник x = 0, 4x + 5y = 20, y = 0. В напечатанной системе вторая
# прямая записана как 0.75x + y = 4, но нормализуется и решается
# 4x + 5y = 20; опубликованный ответ соответствует второй записи.
TRIANGLE_LINES = (
    LineCoefficients(1.0, 0.0, 0.0),
    LineCoefficients(4.0, 5.0, 20.0),
    LineCoefficients(0.0, 1.0, 0.0),
)
TRIANGLE_EXACT = (1640 / 1681, 2050 / 1681)

DISTRICT_NAME = 'Power and Light District'
DISTRICT_VERTICES = (
    ('A', 0.0, 5.25),
    ('B', 1.25, 11.0),
    ('C', 3.0, 12.5),
    ('D', 19.25, 12.0),
    ('E', 17.5, 7.5),
    ('F', 17.0, 0.0),
    ('G', 3.0, 0.0),
)
# Загруженность участков AB, BC, CD, DE, EF, FG, GA в процентах.
DISTRICT_CONGESTION = {
    'morning': (2, 9, 3, 25, 45, 15, 1),
    'afternoon': (17, 10, 30, 15, 6, 10, 12),
}

LITERAL_A = (
    (-0.977, 0.212),
    (-0.652, 0.761),
    (0.0307, 1.0),
    (0.932, -0.362),
    (0.977, -0.0665),
    (0.0, 1.0),
    (0.868, 0.4961),
)
LITERAL_B = (1.115, 7.56, 12.586, 13.59, 1.115, 0.0, 2.604)

# Весовые матрицы в том виде, как напечатаны: масштаб части элементов
# не совпадает с процентами таблицы загруженности.
LITERAL_MORNING_WEIGHTS = (0.2, 0.9, 0.3, 0.25, 0.45, 0.15, 0.1)
LITERAL_AFTERNOON_WEIGHTS = (0.17, 0.10, 0.30, 0.15, 0.6, 0.10, 0.12)


@dataclass(frozen=True)
class PublishedCase:
    """
    Одна опубликованная точка и как её воспроизвести.

    Attributes:
        title (str): Короткое название расчёта.
        published (tuple): Напечатанные координаты (x̂, ŷ).
        window (str | None): Окно исправленного расчёта по району;
            None - расчёт не связан с районом.
        literal_weights (tuple | None): Напечатанная диагональ W для
            буквального воспроизведения; None - без весов.
        uses_literal_matrix (bool): Воспроизводить ли расчёт
            по напечатанным A и b.
        note (str): Пояснение расхождения.
    """

    title: str
    published: Tuple[float, float]
    window: Optional[str]
    literal_weights: Optional[Tuple[float, ...]]
    uses_literal_matrix: bool
    note: str


CASES = (
    PublishedCase(
        title='Треугольник',
        published=(0.9753, 1.219),
        window=None,
        literal_weights=None,
        uses_literal_matrix=False,
        note='расхождение в 4-м знаке из-за округления (AᵀA)⁻¹',
    ),
    PublishedCase(
        title='Район без весов',
        published=(3.55, 5.71),
        window='unweighted',
        literal_weights=None,
        uses_literal_matrix=True,
        note='напечатанный b₅ = 1.115 ошибочен, верно 16.962',
    ),
    PublishedCase(
        title='Утренний час пик',
        published=(3.3, 3.7),
        window='morning',
        literal_weights=LITERAL_MORNING_WEIGHTS,
        uses_literal_matrix=True,
        note='опубликованная арифметика не воспроизводится',
    ),
    PublishedCase(
        title='Вечерний час пик',
        published=(15.9608, 7.857),
        window='afternoon',
        literal_weights=LITERAL_AFTERNOON_WEIGHTS,
        uses_literal_matrix=True,
        note='опубликованная арифметика не воспроизводится',
    ),
)


def triangle_system() -> LineSystem:
    """Система трёх прямых треугольника в нормальной форме Гессе."""
    return assemble(hesse_normalize(line) for line in TRIANGLE_LINES)


def district_region() -> PolygonRegion:
    return region_from_vertices(
        [(label, Point2(x, y)) for label, x, y in DISTRICT_VERTICES],
        DISTRICT_NAME,
    )


def district_records() -> list:
    """Записи загруженности района в порядке таблицы: утро, затем вечер."""
    segments = district_region().segment_ids
    return [
        CongestionRecord(segment, window, float(percent))
        for window, percents in DISTRICT_CONGESTION.items()
        for segment, percent in zip(segments, percents)
    ]
