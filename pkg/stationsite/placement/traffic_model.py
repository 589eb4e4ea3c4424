"""
Данные о загруженности дорог и расчёт размещения станции по окнам.

Модуль загружает район и таблицу загруженности, строит векторы весов
для каждого временного окна (час пик утром, вечером и т. д.),
решает взвешенную задачу наименьших квадратов и собирает отчёты.
"""
import csv
import io
import json
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .exceptions import (
    DuplicateSegment, MissingSegment, ParseError, PlacementError, RangeError,
    ReservedWindow, UnknownSegment, UnknownWindow,
)
from .geometry import (
    Point2, PolygonRegion, contains, region_from_vertices, signed_distance,
)
from .oracle import SearchBox, grid_minimize
from .wls_core import (
    WeightVector, assemble, objective_evaluator, solve_wls,
)

logger = logging.getLogger(__name__)

UNWEIGHTED = 'unweighted'
CONGESTION_HEADER = ('segment', 'window', 'percent')
SIGNIFICANT_DIGITS = 17


@dataclass(frozen=True)
class CongestionRecord:
    """
    Процент загруженности участка дороги в одном временном окне.

    Attributes:
        segment_id (str): Имя участка, например 'AB'.
        window (str): Временное окно, например 'morning'.
        percent (float): Загруженность в процентах, от 0 до 100.
    """

    segment_id: str
    window: str
    percent: float

    def __post_init__(self):
        if not (0.0 <= self.percent <= 100.0):
            raise RangeError(
                f'загруженность участка {self.segment_id} в окне '
                f'{self.window} должна быть в пределах [0, 100], '
                f'получено {self.percent}'
            )


@dataclass(frozen=True)
class SegmentReading:
    """Вклад одного участка в отчёт: вес и знаковое расстояние."""

    segment: str
    weight: float
    distance: float


@dataclass(frozen=True)
class PlacementReport:
    """
    Отчёт о размещении станции для одного временного окна.

    Attributes:
        window (str): Временное окно.
        location (Point2): Найденное место станции.
        objective (float): Σ w²·d² по участкам в этой точке.
        inside_region (bool): Лежит ли точка внутри района.
        per_segment (tuple): SegmentReading для каждого участка
            в порядке обхода границы.
        condition (float): Число обусловленности нормальной матрицы.
    """

    window: str
    location: Point2
    objective: float
    inside_region: bool
    per_segment: Tuple[SegmentReading, ...]
    condition: float


@dataclass(frozen=True)
class CrossCheck:
    """Сравнение аналитического решения с перебором оракула."""

    window: str
    solver_point: Point2
    oracle_point: Point2
    distance: float
    resolution: float
    passed: bool


WeightSchedule = Dict[str, WeightVector]


def _field(item: dict, key: str, location: str, kinds):
    if key not in item:
        raise ParseError(f'нет обязательного поля «{key}»', location)
    value = item[key]
    if isinstance(value, bool) or not isinstance(value, kinds):
        raise ParseError(
            f'поле «{key}» имеет недопустимый тип {type(value).__name__}',
            f'{location}.{key}' if location else key,
        )
    return value


def load_region(source: str) -> PolygonRegion:
    """
    Читает район из JSON-документа.

    Документ - объект с полями `name` (строка) и `vertices`
    (массив объектов `id`, `x`, `y` в порядке обхода границы).

    Args:
        source (str): Текст документа.
    Returns:
        PolygonRegion: Район с замыкающим участком.
    Raises:
        ParseError: Документ не соответствует схеме.
        TooFewVertices: Вершин меньше трёх.
    """
    try:
        document = json.loads(source)
    except json.JSONDecodeError as error:
        raise ParseError(
            error.msg, f'строка {error.lineno}, столбец {error.colno}'
        ) from error
    if not isinstance(document, dict):
        raise ParseError('документ района должен быть объектом')
    name = document.get('name', '')
    if not isinstance(name, str):
        raise ParseError('поле «name» должно быть строкой', 'name')
    vertices = _field(document, 'vertices', '', list)
    parsed = []
    for index, item in enumerate(vertices):
        location = f'vertices[{index}]'
        if not isinstance(item, dict):
            raise ParseError('вершина должна быть объектом', location)
        label = _field(item, 'id', location, str)
        x = _field(item, 'x', location, (int, float))
        y = _field(item, 'y', location, (int, float))
        try:
            parsed.append((label, Point2(float(x), float(y))))
        except RangeError as error:
            raise ParseError(str(error), location) from error
    region = region_from_vertices(parsed, name)
    logger.info(
        'Загружен район «%s»: %d вершин', region.name, len(region.vertices)
    )
    return region


def load_congestion(source: str) -> List[CongestionRecord]:
    """
    Читает таблицу загруженности с заголовком `segment,window,percent`.

    Пустые строки пропускаются.

    Raises:
        ParseError: Нет заголовка, неверное число полей или не число
            в столбце percent.
        RangeError: Процент вне [0, 100].
    """
    reader = csv.reader(io.StringIO(source))
    header = next(reader, None)
    if header is None or tuple(
        cell.strip() for cell in header
    ) != CONGESTION_HEADER:
        raise ParseError(
            'ожидался заголовок «segment,window,percent»', 'строка 1'
        )
    records = []
    for row in reader:
        location = f'строка {reader.line_num}'
        if not any(cell.strip() for cell in row):
            continue
        if len(row) != len(CONGESTION_HEADER):
            raise ParseError(
                f'ожидалось 3 поля, получено {len(row)}', location
            )
        segment, window, percent = (cell.strip() for cell in row)
        if not segment or not window:
            raise ParseError('пустое имя участка или окна', location)
        try:
            value = float(percent)
        except ValueError as error:
            raise ParseError(
                f'«{percent}» не является числом', location
            ) from error
        if math.isnan(value):
            raise RangeError(f'{location}: процент не может быть NaN')
        try:
            records.append(CongestionRecord(segment, window, value))
        except RangeError as error:
            raise RangeError(f'{location}: {error}') from error
    logger.info('Загружено %d записей о загруженности', len(records))
    return records


def windows_of(records: Iterable[CongestionRecord]) -> List[str]:
    """Возвращает имена окон из записей в алфавитном порядке."""
    return sorted({record.window for record in records})


def weights_for_window(
    records: Sequence[CongestionRecord], region: PolygonRegion, window: str
) -> WeightVector:
    """
    Строит вектор весов окна: w_i = процент участка i / 100
    в порядке участков района.

    Raises:
        UnknownWindow: Для окна нет ни одной записи.
        UnknownSegment: Запись ссылается на участок вне района.
        MissingSegment: Для участка района нет записи.
        DuplicateSegment: Для участка несколько записей.
    """
    selected = [record for record in records if record.window == window]
    if not selected:
        raise UnknownWindow(f'окно «{window}» отсутствует в данных')
    segments = region.segment_ids
    percents = {}
    for record in selected:
        if record.segment_id not in segments:
            raise UnknownSegment(
                f'участок «{record.segment_id}» не принадлежит району; '
                f'участки района: {", ".join(segments)}'
            )
        if record.segment_id in percents:
            raise DuplicateSegment(
                f'для участка «{record.segment_id}» в окне «{window}» '
                'задано несколько записей'
            )
        percents[record.segment_id] = record.percent
    missing = [segment for segment in segments if segment not in percents]
    if missing:
        raise MissingSegment(
            f'в окне «{window}» нет данных для участков: '
            f'{", ".join(missing)}'
        )
    return WeightVector(
        tuple(percents[segment] / 100 for segment in segments), segments
    )


def _check_reserved(records: Sequence[CongestionRecord]) -> None:
    if UNWEIGHTED in {record.window for record in records}:
        raise ReservedWindow(
            f'имя окна «{UNWEIGHTED}» зарезервировано для расчёта без весов'
        )


def window_weights(
    records: Sequence[CongestionRecord], region: PolygonRegion, window: str
) -> WeightVector:
    """Вектор весов окна; для `unweighted` все веса равны 1."""
    if window == UNWEIGHTED:
        _check_reserved(records)
        return WeightVector.uniform(
            len(region.lines), labels=region.segment_ids
        )
    try:
        return weights_for_window(records, region, window)
    except PlacementError as error:
        raise error.annotate(window)


def build_schedule(
    records: Sequence[CongestionRecord], region: PolygonRegion
) -> WeightSchedule:
    """Собирает векторы весов для всех окон, включая `unweighted`, по имени."""
    _check_reserved(records)
    return {
        window: window_weights(records, region, window)
        for window in sorted([UNWEIGHTED, *windows_of(records)])
    }


def place_station(
    region: PolygonRegion, weights: WeightVector, window: str
) -> PlacementReport:
    """Решает взвешенную задачу для одного окна и собирает отчёт."""
    system = assemble(region.lines)
    try:
        solution = solve_wls(system, weights)
    except PlacementError as error:
        raise error.annotate(window)
    location = solution.point
    per_segment = tuple(
        SegmentReading(
            line.segment_id, weight, signed_distance(line, location)
        )
        for line, weight in zip(region.lines, weights.w)
    )
    report = PlacementReport(
        window=window,
        location=location,
        objective=solution.objective,
        inside_region=contains(region, location),
        per_segment=per_segment,
        condition=solution.condition,
    )
    logger.info(
        'Окно «%s»: станция в (%.4f, %.4f), %s района',
        window, location.x, location.y,
        'внутри' if report.inside_region else 'вне',
    )
    return report


def plan_stations(
    region: PolygonRegion, records: Sequence[CongestionRecord]
) -> List[PlacementReport]:
    """
    Рассчитывает место станции для каждого окна.

    Первым идёт отчёт `unweighted` (все веса равны 1), затем окна
    из записей в алфавитном порядке. Ошибки помечаются именем окна.

    Args:
        region (PolygonRegion): Район.
        records: Записи о загруженности; могут быть пустыми.
    Returns:
        list[PlacementReport]: Отчёты по окнам.
    """
    schedule = build_schedule(records, region)
    return [
        place_station(region, weights, window)
        for window, weights in schedule.items()
    ]


def plan_window(
    region: PolygonRegion, records: Sequence[CongestionRecord], window: str
) -> PlacementReport:
    """Рассчитывает место станции только для одного окна."""
    return place_station(
        region, window_weights(records, region, window), window
    )


def cross_check(
    region: PolygonRegion,
    records: Sequence[CongestionRecord],
    box: SearchBox,
    tolerance: float,
) -> List[CrossCheck]:
    """
    Сверяет аналитическое решение каждого окна с перебором оракула.

    Окно проходит проверку, если евклидово расстояние между точками
    не превышает tolerance.
    """
    schedule = build_schedule(records, region)
    system = assemble(region.lines)
    checks = []
    for window, weights in schedule.items():
        report = place_station(region, weights, window)
        found = grid_minimize(objective_evaluator(system, weights), box)
        distance = math.hypot(
            report.location.x - found.point.x,
            report.location.y - found.point.y,
        )
        checks.append(CrossCheck(
            window=window,
            solver_point=report.location,
            oracle_point=found.point,
            distance=distance,
            resolution=found.resolution,
            passed=distance <= tolerance,
        ))
        if distance > tolerance:
            logger.warning(
                'Окно «%s»: расхождение с оракулом %.3e > %.3e',
                window, distance, tolerance,
            )
    return checks


def report_to_dict(report: PlacementReport) -> dict:
    return {
        'window': report.window,
        'location': {'x': report.location.x, 'y': report.location.y},
        'objective': report.objective,
        'inside_region': report.inside_region,
        'condition': report.condition,
        'per_segment': [
            {
                'segment': reading.segment,
                'weight': reading.weight,
                'distance': reading.distance,
            }
            for reading in report.per_segment
        ],
    }


def _encode(value, depth: int = 0) -> str:
    """JSON с отступом 2, как у json.dumps, но числа с 17 значащими."""
    if isinstance(value, float):
        if not math.isfinite(value):
            return json.dumps(value)
        return format(value, f'.{SIGNIFICANT_DIGITS}g')
    if isinstance(value, (dict, list)):
        if not value:
            return '{}' if isinstance(value, dict) else '[]'
        inner = '\n' + '  ' * (depth + 1)
        if isinstance(value, dict):
            items = (
                f'{json.dumps(key, ensure_ascii=False)}: '
                f'{_encode(item, depth + 1)}'
                for key, item in value.items()
            )
            opening, closing = '{', '}'
        else:
            items = (_encode(item, depth + 1) for item in value)
            opening, closing = '[', ']'
        return (
            opening + inner + (',' + inner).join(items)
            + '\n' + '  ' * depth + closing
        )
    return json.dumps(value, ensure_ascii=False)


def dump_reports(reports: Sequence[PlacementReport]) -> str:
    """
    Сериализует отчёты в JSON.

    Числа записываются с SIGNIFICANT_DIGITS значащими цифрами, поэтому
    `load_reports` восстанавливает каждое значение double точно.
    """
    return _encode([report_to_dict(report) for report in reports]) + '\n'


def load_reports(source: str) -> List[PlacementReport]:
    """Восстанавливает отчёты из документа, созданного `dump_reports`."""
    try:
        document = json.loads(source)
        return [
            PlacementReport(
                window=item['window'],
                location=Point2(
                    float(item['location']['x']),
                    float(item['location']['y']),
                ),
                objective=float(item['objective']),
                inside_region=bool(item['inside_region']),
                per_segment=tuple(
                    SegmentReading(
                        reading['segment'],
                        float(reading['weight']),
                        float(reading['distance']),
                    )
                    for reading in item['per_segment']
                ),
                condition=float(item['condition']),
            )
            for item in document
        ]
    except json.JSONDecodeError as error:
        raise ParseError(
            error.msg, f'строка {error.lineno}, столбец {error.colno}'
        ) from error
    except (KeyError, TypeError) as error:
        raise ParseError(f'неполный отчёт: {error}') from error


def reports_to_geojson(
    region: PolygonRegion, reports: Sequence[PlacementReport]
) -> dict:
    """
    Собирает коллекцию объектов GeoJSON: многоугольник района
    и точку станции для каждого окна.

    Координаты остаются в локальных единицах карты.
    """
    ring = [[point.x, point.y] for point in region.points]
    ring.append(ring[0])
    features = [{
        'type': 'Feature',
        'geometry': {'type': 'Polygon', 'coordinates': [ring]},
        'properties': {
            'name': region.name,
            'segments': list(region.segment_ids),
        },
    }]
    for report in reports:
        features.append({
            'type': 'Feature',
            'geometry': {
                'type': 'Point',
                'coordinates': [report.location.x, report.location.y],
            },
            'properties': {
                'window': report.window,
                'objective': report.objective,
                'inside_region': report.inside_region,
            },
        })
    return {'type': 'FeatureCollection', 'features': features}
