"""
Обычный и взвешенный метод наименьших квадратов для системы прямых.

Переопределённая система AX = b строится из прямых в нормальной
форме Гессе: строка A - единичная нормаль, элемент b - смещение.
Решение ищется по замкнутой формуле для нормальных уравнений 2×2.
Взвешивание умножает строки A и b на w_i, поэтому квадрат расстояния
до прямой i входит в целевую функцию с множителем w_i².
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .exceptions import (
    DimensionMismatch, InputError, LengthMismatch, RangeError,
    SingularNormalMatrix, TooFewLines, ZeroBasisVector,
)
from .geometry import HesseLine, Point2

logger = logging.getLogger(__name__)

SINGULARITY_THRESHOLD = 1e-12
EIGENVALUE_THRESHOLD = 1e-15
ORTHOGONALITY_TOLERANCE = 1e-10
GRADIENT_CERTIFICATE = 1e-8
REFINEMENT_STEPS = 4
ILL_CONDITIONED = 1e8

Row = Tuple[float, float, float]


@dataclass(frozen=True)
class LineSystem:
    """
    Система AX = b, записанная построчно прямыми Гессе.

    Attributes:
        rows (tuple): Прямые HesseLine; нормаль строки - строка A,
            смещение - элемент b.
    """

    rows: Tuple[HesseLine, ...]

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rhs(self) -> Tuple[float, ...]:
        return tuple(line.d for line in self.rows)

    @property
    def labels(self) -> Tuple[Optional[str], ...]:
        return tuple(line.segment_id for line in self.rows)

    def coefficients(self) -> Tuple[Row, ...]:
        return tuple((line.nx, line.ny, line.d) for line in self.rows)


@dataclass(frozen=True)
class WeightVector:
    """
    Диагональ весовой матрицы W.

    Attributes:
        w (tuple): Неотрицательные веса, по одному на строку системы.
        labels (tuple | None): Имена участков в том же порядке.
    """

    w: Tuple[float, ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        for index, value in enumerate(self.w):
            if not math.isfinite(value) or value < 0:
                raise RangeError(
                    f'вес строки {index} должен быть конечным '
                    f'и неотрицательным, получено {value}'
                )
        if self.labels is not None and len(self.labels) != len(self.w):
            raise LengthMismatch(
                f'меток {len(self.labels)}, а весов {len(self.w)}'
            )

    def __len__(self) -> int:
        return len(self.w)

    @classmethod
    def uniform(cls, size: int, value: float = 1.0, labels=None):
        return cls(tuple(float(value) for _ in range(size)), labels)

    def scaled(self, factor: float) -> 'WeightVector':
        return WeightVector(
            tuple(value * factor for value in self.w), self.labels
        )


@dataclass(frozen=True)
class Solution:
    """
    Решение задачи наименьших квадратов.

    Attributes:
        point (Point2): Найденная точка (x̂, ŷ).
        objective (float): Взвешенная сумма квадратов расстояний в точке.
        gradient_norm (float): Норма аналитического градиента в точке.
        condition (float): Число обусловленности нормальной матрицы.
        residuals (tuple): Знаковые расстояния до прямых системы.
    """

    point: Point2
    objective: float
    gradient_norm: float
    condition: float
    residuals: Tuple[float, ...]


class OrthogonalBasis:
    """
    Ортогональный базис подпространства W.

    Векторы попарно ортогональны (с относительным допуском
    ORTHOGONALITY_TOLERANCE), ненулевые и одной размерности.
    """

    def __init__(self, vectors):
        vectors = [np.asarray(vector, dtype=float) for vector in vectors]
        if not vectors:
            raise InputError('базис не может быть пустым')
        dimension = vectors[0].shape
        for index, vector in enumerate(vectors):
            if vector.ndim != 1 or vector.shape != dimension:
                raise DimensionMismatch(
                    f'вектор базиса {index} имеет размерность '
                    f'{vector.shape}, ожидалась {dimension}'
                )
            if not np.any(vector):
                raise ZeroBasisVector(f'вектор базиса {index} нулевой')
        for i, first in enumerate(vectors):
            for j in range(i + 1, len(vectors)):
                second = vectors[j]
                bound = ORTHOGONALITY_TOLERANCE * (
                    np.linalg.norm(first) * np.linalg.norm(second)
                )
                if abs(first @ second) > bound:
                    raise InputError(
                        f'векторы базиса {i} и {j} не ортогональны'
                    )
        self.vectors = tuple(vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    @property
    def dimension(self) -> int:
        return self.vectors[0].shape[0]


def assemble(lines: Sequence[HesseLine]) -> LineSystem:
    """
    Составляет систему AX = b из нормализованных прямых.

    Порядок строк совпадает с порядком прямых.
    """
    lines = tuple(lines)
    if len(lines) < 2:
        raise TooFewLines(
            f'для системы нужно не меньше 2 прямых, получено {len(lines)}'
        )
    return LineSystem(lines)


def _check_lengths(system: LineSystem, weights: WeightVector) -> None:
    if len(weights) != len(system):
        raise LengthMismatch(
            f'весов {len(weights)}, а строк системы {len(system)}'
        )


def _normal_equations(rows: Sequence[Row], weights: Sequence[float]):
    """Возвращает (WA)ᵀWA и (WA)ᵀWb в виде (sxx, sxy, syy), (sxb, syb)."""
    squares = [w * w for w in weights]
    sxx = math.fsum(s * a * a for s, (a, _, _) in zip(squares, rows))
    sxy = math.fsum(s * a * b for s, (a, b, _) in zip(squares, rows))
    syy = math.fsum(s * b * b for s, (_, b, _) in zip(squares, rows))
    sxb = math.fsum(s * a * c for s, (a, _, c) in zip(squares, rows))
    syb = math.fsum(s * b * c for s, (_, b, c) in zip(squares, rows))
    return (sxx, sxy, syy), (sxb, syb)


def _eigenvalues(sxx: float, sxy: float, syy: float) -> Tuple[float, float]:
    mean = (sxx + syy) / 2
    spread = math.hypot((sxx - syy) / 2, sxy)
    larger = mean + spread
    if larger <= 0:
        return larger, 0.0
    # Меньшее собственное число через определитель точнее разности.
    return larger, (sxx * syy - sxy * sxy) / larger


def _condition(sxx: float, sxy: float, syy: float) -> float:
    larger, smaller = _eigenvalues(sxx, sxy, syy)
    if smaller <= EIGENVALUE_THRESHOLD * max(larger, 0.0) or smaller <= 0:
        return math.inf
    return larger / smaller


def _weighted_terms(rows, weights, x: float, y: float):
    residuals = tuple(a * x + b * y - c for a, b, c in rows)
    value = math.fsum(
        (w * r) ** 2 for w, r in zip(weights, residuals)
    )
    gx = math.fsum(
        2 * w * w * r * a for w, r, (a, _, _) in zip(weights, residuals, rows)
    )
    gy = math.fsum(
        2 * w * w * r * b for w, r, (_, b, _) in zip(weights, residuals, rows)
    )
    return residuals, value, (gx, gy)


def solve_matrix(
    rows: Sequence[Sequence[float]],
    rhs: Sequence[float],
    weights: Optional[Sequence[float]] = None,
) -> Solution:
    """
    Решает нормальные уравнения (WA)ᵀWA·X = (WA)ᵀWb для матрицы из
    двух столбцов по замкнутой формуле обращения 2×2.

    Строки не обязаны быть нормализованными: так воспроизводятся
    опубликованные матрицы с округлёнными коэффициентами.

    Args:
        rows: Строки матрицы A, пары (a_i, b_i).
        rhs: Правая часть b.
        weights: Диагональ W; по умолчанию все веса равны 1.
    Returns:
        Solution: Точка, значение целевой функции и диагностика.
    Raises:
        TooFewLines: Строк меньше двух.
        LengthMismatch: Длины A, b и W не совпадают.
        SingularNormalMatrix: Относительный определитель нормальной
            матрицы не превышает SINGULARITY_THRESHOLD или градиент
            не стал меньше GRADIENT_CERTIFICATE·max(1, D) за
            REFINEMENT_STEPS шагов уточнения.
    """
    matrix = tuple(
        (float(a), float(b), float(c)) for (a, b), c in zip(rows, rhs)
    )
    if len(rows) != len(rhs):
        raise LengthMismatch(f'строк A {len(rows)}, а элементов b {len(rhs)}')
    if len(matrix) < 2:
        raise TooFewLines(
            f'для системы нужно не меньше 2 строк, получено {len(matrix)}'
        )
    if weights is None:
        weights = (1.0,) * len(matrix)
    weights = tuple(float(w) for w in weights)
    if len(weights) != len(matrix):
        raise LengthMismatch(
            f'весов {len(weights)}, а строк системы {len(matrix)}'
        )

    (sxx, sxy, syy), (sxb, syb) = _normal_equations(matrix, weights)
    determinant = sxx * syy - sxy * sxy
    trace = sxx + syy
    relative = determinant / (trace * trace / 4) if trace > 0 else 0.0
    if relative <= SINGULARITY_THRESHOLD:
        raise SingularNormalMatrix(
            'нормальная матрица вырождена: прямые с ненулевым весом '
            f'(почти) параллельны, относительный определитель {relative:.3e}'
        )
    x = (syy * sxb - sxy * syb) / determinant
    y = (sxx * syb - sxy * sxb) / determinant

    # Итеративное уточнение: X ← X − N⁻¹·(g/2) той же обратной 2×2.
    for step in range(REFINEMENT_STEPS + 1):
        residuals, value, (gx, gy) = _weighted_terms(matrix, weights, x, y)
        gradient_norm = math.hypot(gx, gy)
        if gradient_norm < GRADIENT_CERTIFICATE * max(1.0, value):
            break
        if step == REFINEMENT_STEPS:
            raise SingularNormalMatrix(
                f'решение не прошло проверку градиента за {step} шагов '
                f'уточнения: |∇D| = {gradient_norm:.3e}, '
                f'относительный определитель {relative:.3e}'
            )
        hx, hy = gx / 2, gy / 2
        x -= (syy * hx - sxy * hy) / determinant
        y -= (sxx * hy - sxy * hx) / determinant
    if step:
        logger.debug('Решение уточнено за %d шаг(ов)', step)

    condition = _condition(sxx, sxy, syy)
    if condition > ILL_CONDITIONED:
        logger.warning('Система плохо обусловлена: %.3e', condition)
    return Solution(Point2(x, y), value, gradient_norm, condition, residuals)


def solve_ls(system: LineSystem) -> Solution:
    """
    Находит точку с минимальной суммой квадратов расстояний
    до прямых системы: (x̂, ŷ) = (AᵀA)⁻¹Aᵀb.
    """
    solution = solve_matrix(
        [(nx, ny) for nx, ny, _ in system.coefficients()], system.rhs
    )
    logger.info(
        'МНК: (%.6f, %.6f), D = %.6g', solution.point.x, solution.point.y,
        solution.objective,
    )
    return solution


def solve_wls(system: LineSystem, weights: WeightVector) -> Solution:
    """
    Находит точку с минимальной взвешенной суммой Σ w_i²·d_i².

    Строки с нулевым весом остаются в системе, но не влияют на решение.

    Raises:
        LengthMismatch: Число весов не равно числу строк.
        SingularNormalMatrix: Прямые с ненулевым весом не задают точку.
    """
    _check_lengths(system, weights)
    solution = solve_matrix(
        [(nx, ny) for nx, ny, _ in system.coefficients()],
        system.rhs, weights.w,
    )
    logger.info(
        'Взвешенный МНК: (%.6f, %.6f), D = %.6g, обусловленность %.3g',
        solution.point.x, solution.point.y, solution.objective,
        solution.condition,
    )
    return solution


def objective(system: LineSystem, weights: WeightVector, p: Point2) -> float:
    """Взвешенная сумма квадратов расстояний Σ w_i²·d_i(p)²."""
    _check_lengths(system, weights)
    _, value, _ = _weighted_terms(system.coefficients(), weights.w, p.x, p.y)
    return value


def objective_gradient(
    system: LineSystem, weights: WeightVector, p: Point2
) -> Tuple[float, float]:
    """Аналитический градиент целевой функции: Σ 2·w_i²·d_i(p)·n_i."""
    _check_lengths(system, weights)
    _, _, gradient = _weighted_terms(
        system.coefficients(), weights.w, p.x, p.y
    )
    return gradient


def objective_evaluator(
    system: LineSystem, weights: WeightVector
) -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
    """
    Возвращает векторизованную функцию f(x, y) для целевой функции.

    Функция принимает массивы numpy одинаковой формы и не хранит
    изменяемого состояния, поэтому её можно вызывать параллельно.
    """
    _check_lengths(system, weights)
    terms = tuple(
        (w * w, nx, ny, d)
        for w, (nx, ny, d) in zip(weights.w, system.coefficients())
    )

    def evaluate(x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        total = np.zeros(np.broadcast(x, y).shape)
        for square, nx, ny, d in terms:
            total += square * (nx * x + ny * y - d) ** 2
        return total

    return evaluate


def condition_number(system: LineSystem, weights: WeightVector) -> float:
    """
    Отношение большего собственного числа взвешенной нормальной матрицы
    к меньшему.

    Raises:
        SingularNormalMatrix: Меньшее собственное число неположительно
            (в пределах EIGENVALUE_THRESHOLD относительно большего).
    """
    _check_lengths(system, weights)
    (sxx, sxy, syy), _ = _normal_equations(system.coefficients(), weights.w)
    value = _condition(sxx, sxy, syy)
    if math.isinf(value):
        raise SingularNormalMatrix(
            'меньшее собственное число нормальной матрицы равно нулю'
        )
    return value


def project_onto_basis(y, basis) -> Tuple[np.ndarray, np.ndarray]:
    """
    Раскладывает вектор y на проекцию ŷ в подпространство W
    и ортогональную к W составляющую z.

    ŷ = Σ (y·u_j)/(u_j·u_j)·u_j, z = y − ŷ.

    Args:
        y: Исходный вектор.
        basis (OrthogonalBasis | Sequence): Ортогональный базис W.
    Returns:
        tuple: Пара массивов (ŷ, z).
    Raises:
        DimensionMismatch: Размерность y не совпадает с размерностью базиса.
        ZeroBasisVector: В базисе есть нулевой вектор.
    """
    if not isinstance(basis, OrthogonalBasis):
        basis = OrthogonalBasis(basis)
    y = np.asarray(y, dtype=float)
    if y.ndim != 1 or y.shape[0] != basis.dimension:
        raise DimensionMismatch(
            f'размерность y {y.shape}, а базиса {basis.dimension}'
        )
    projection = np.zeros_like(y)
    for vector in basis.vectors:
        projection += (y @ vector) / (vector @ vector) * vector
    return projection, y - projection
