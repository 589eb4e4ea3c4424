"""Общая часть команд расчёта: входные файлы, вывод и коды завершения."""
import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from placement.exceptions import InputError, NumericalError
from placement.traffic_model import load_congestion, load_region

logger = logging.getLogger(__name__)

EXIT_INPUT = 1
EXIT_NUMERICAL = 2
EXIT_MISMATCH = 3


def read_text(path) -> str:
    """Читает файл UTF-8; ошибка чтения - ошибка входных данных."""
    try:
        return Path(path).read_text(encoding='utf-8')
    except OSError as error:
        raise CommandError(
            f'не удалось прочитать {path}: {error.strerror or error}',
            returncode=EXIT_INPUT,
        ) from error


def write_text(path, text: str) -> None:
    try:
        Path(path).write_text(text, encoding='utf-8')
    except OSError as error:
        raise CommandError(
            f'не удалось записать {path}: {error.strerror or error}',
            returncode=EXIT_INPUT,
        ) from error


class PlacementCommand(BaseCommand):
    """
    Базовая команда расчёта.

    Наследники реализуют `handle_placement`; ошибки библиотеки
    переводятся в CommandError с кодом 1 (входные данные)
    или 2 (вырожденная система).
    """

    def add_input_arguments(self, parser):
        parser.add_argument(
            '--region', default=settings.PLACEMENT_REGION_PATH,
            help='JSON-документ с вершинами района.',
        )
        parser.add_argument(
            '--congestion', default=settings.PLACEMENT_CONGESTION_PATH,
            help='CSV-таблица загруженности segment,window,percent.',
        )

    def load_inputs(self, options):
        region = load_region(read_text(options['region']))
        records = load_congestion(read_text(options['congestion']))
        return region, records

    def emit(self, text: str, output=None) -> None:
        if output:
            write_text(output, text)
            logger.info('Результат записан в %s', output)
        else:
            self.stdout.write(text, ending='')

    def handle(self, *args, **options):
        try:
            self.handle_placement(*args, **options)
        except InputError as error:
            raise CommandError(str(error), returncode=EXIT_INPUT) from error
        except NumericalError as error:
            raise CommandError(
                str(error), returncode=EXIT_NUMERICAL
            ) from error

    def handle_placement(self, *args, **options):
        raise NotImplementedError(
            'subclasses of PlacementCommand must provide a '
            'handle_placement() method'
        )
