"""
Иерархия ошибок расчёта размещения станции.

Все ошибки библиотеки наследуются от `PlacementError`.
Ошибки входных данных (`InputError`) и численные ошибки
(`NumericalError`) разведены, чтобы команды могли сопоставить
им разные коды завершения.
"""


class PlacementError(Exception):
    """
    Базовая ошибка расчёта размещения.

    Attributes:
        window (str | None): Временное окно, при расчёте которого
            возникла ошибка. Заполняется через `annotate`.
    """

    window = None

    def annotate(self, window: str) -> 'PlacementError':
        """Привязывает ошибку к временному окну и дополняет сообщение."""
        if self.window is None:
            self.window = window
            message = str(self.args[0]) if self.args else ''
            self.args = (f'окно «{window}»: {message}', *self.args[1:])
        return self


class InputError(PlacementError):
    """Некорректные входные данные."""


class NumericalError(PlacementError):
    """Система уравнений не допускает устойчивого решения."""


class ParseError(InputError):
    """
    Документ не соответствует ожидаемой схеме.

    Attributes:
        location (str): Номер строки или путь к полю, где найдена ошибка.
    """

    def __init__(self, message: str, location: str = ''):
        self.location = location
        if location:
            message = f'{location}: {message}'
        super().__init__(message)


class RangeError(InputError):
    """Значение вне допустимого диапазона."""


class DegeneratePoints(InputError):
    """Две точки совпадают, прямую через них провести нельзя."""


class ZeroLine(InputError):
    """Коэффициенты a и b прямой одновременно равны нулю."""


class TooFewVertices(InputError):
    """У многоугольника меньше трёх вершин."""


class TooFewLines(InputError):
    """В системе меньше двух прямых."""


class LengthMismatch(InputError):
    """Длина вектора весов не совпадает с числом строк системы."""


class DimensionMismatch(InputError):
    """Размерности векторов не совпадают."""


class ZeroBasisVector(InputError):
    """В базисе есть нулевой вектор."""


class InvalidBox(InputError):
    """Некорректная область поиска."""


class MissingSegment(InputError):
    """Для участка границы нет данных о загруженности."""


class UnknownSegment(MissingSegment):
    """Запись о загруженности ссылается на несуществующий участок."""


class DuplicateSegment(InputError):
    """Для участка в одном окне задано несколько записей."""


class UnknownWindow(InputError):
    """Временное окно отсутствует в данных."""


class ReservedWindow(InputError):
    """Имя окна совпадает с зарезервированным."""


class SingularNormalMatrix(NumericalError):
    """Нормальная матрица системы (почти) вырождена."""
