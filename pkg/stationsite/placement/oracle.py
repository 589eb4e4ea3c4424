"""
Независимая проверка решений перебором по сетке.

Оракул ничего не знает о нормальных уравнениях: он получает только
функцию f(x, y) и прямоугольник поиска, поэтому совпадение его
результата с аналитическим решением служит сертификатом.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from .exceptions import InvalidBox, RangeError
from .geometry import Point2

logger = logging.getLogger(__name__)

MIN_POINTS_PER_AXIS = 10
# Новая область - 4 шага сетки, по 2 шага в каждую сторону от лучшей точки.
REFINE_HALF_WIDTH = 2

Evaluator = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class SearchBox:
    """
    Прямоугольник поиска и параметры многоуровневой сетки.

    Attributes:
        xmin, xmax, ymin, ymax (float): Границы прямоугольника.
        levels (int): Число уровней уточнения.
        points_per_axis (int): Число узлов сетки по каждой оси.
    """

    xmin: float = -5.0
    xmax: float = 25.0
    ymin: float = -5.0
    ymax: float = 25.0
    levels: int = 5
    points_per_axis: int = 101

    def __post_init__(self):
        if not (self.xmin < self.xmax and self.ymin < self.ymax):
            raise InvalidBox(
                f'пустой прямоугольник [{self.xmin}, {self.xmax}] × '
                f'[{self.ymin}, {self.ymax}]'
            )
        if self.levels < 1:
            raise InvalidBox(f'число уровней должно быть ≥ 1: {self.levels}')
        if self.points_per_axis < MIN_POINTS_PER_AXIS:
            raise InvalidBox(
                f'узлов по оси должно быть ≥ {MIN_POINTS_PER_AXIS}: '
                f'{self.points_per_axis}'
            )

    @classmethod
    def from_bounds(cls, bounds, levels: int = 5, points_per_axis: int = 101):
        xmin, xmax, ymin, ymax = (float(value) for value in bounds)
        return cls(xmin, xmax, ymin, ymax, int(levels), int(points_per_axis))

    @property
    def final_resolution(self) -> float:
        """Шаг сетки по x на последнем уровне."""
        step = (self.xmax - self.xmin) / (self.points_per_axis - 1)
        for _ in range(self.levels - 1):
            step = 2 * REFINE_HALF_WIDTH * step / (self.points_per_axis - 1)
        return step


@dataclass(frozen=True)
class OracleResult:
    """
    Результат перебора.

    Attributes:
        point (Point2): Лучший найденный узел.
        value (float): Значение f в этом узле.
        resolution (float): Шаг сетки на последнем уровне.
        history (tuple): Лучшее значение после каждого уровня.
    """

    point: Point2
    value: float
    resolution: float
    history: Tuple[float, ...] = ()


def _best_node(f: Evaluator, xs: np.ndarray, ys: np.ndarray):
    grid_x, grid_y = np.meshgrid(xs, ys, indexing='ij')
    values = np.asarray(f(grid_x, grid_y), dtype=float)
    # Порядок 'ij': argmin берёт первый минимум, то есть с наименьшим x,
    # а среди них - с наименьшим y.
    flat = int(np.argmin(values))
    i, j = np.unravel_index(flat, values.shape)
    return float(xs[i]), float(ys[j]), float(values[i, j])


def grid_minimize(f: Evaluator, box: SearchBox) -> OracleResult:
    """
    Минимизирует f перебором по сетке с последовательным уточнением.

    На каждом уровне вычисляет f на сетке points_per_axis²,
    затем переносит прямоугольник шириной в 4 шага сетки в лучший узел.
    Лучшее значение между уровнями не ухудшается: если новый уровень
    не нашёл ничего лучше, сохраняется прежний узел.

    Args:
        f: Векторизованная функция f(x, y) над массивами numpy.
        box (SearchBox): Начальный прямоугольник и параметры сетки.
    Returns:
        OracleResult: Лучший узел, значение и итоговый шаг сетки.
    """
    xmin, xmax, ymin, ymax = box.xmin, box.xmax, box.ymin, box.ymax
    best = None
    history = []
    step_x = step_y = 0.0
    for level in range(box.levels):
        xs = np.linspace(xmin, xmax, box.points_per_axis)
        ys = np.linspace(ymin, ymax, box.points_per_axis)
        step_x = (xmax - xmin) / (box.points_per_axis - 1)
        step_y = (ymax - ymin) / (box.points_per_axis - 1)
        candidate = _best_node(f, xs, ys)
        if best is None or candidate[2] < best[2]:
            best = candidate
        history.append(best[2])
        logger.debug(
            'Уровень %d: шаг %.3e, f(%.9f, %.9f) = %.12g',
            level + 1, step_x, best[0], best[1], best[2],
        )
        xmin = best[0] - REFINE_HALF_WIDTH * step_x
        xmax = best[0] + REFINE_HALF_WIDTH * step_x
        ymin = best[1] - REFINE_HALF_WIDTH * step_y
        ymax = best[1] + REFINE_HALF_WIDTH * step_y
    logger.info(
        'Оракул: (%.6f, %.6f), %d уровней, шаг %.3e',
        best[0], best[1], box.levels, step_x,
    )
    return OracleResult(
        Point2(best[0], best[1]), best[2], step_x, tuple(history)
    )


def fd_gradient(f, p: Point2, h: float = 1e-6) -> Tuple[float, float]:
    """Центральные конечные разности f в точке p с шагом h."""
    if not h > 0:
        raise RangeError(f'шаг должен быть положительным: {h}')
    dx = (float(f(p.x + h, p.y)) - float(f(p.x - h, p.y))) / (2 * h)
    dy = (float(f(p.x, p.y + h)) - float(f(p.x, p.y - h))) / (2 * h)
    return dx, dy
