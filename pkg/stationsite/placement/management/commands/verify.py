from django.conf import settings
from django.core.management.base import CommandError

from placement.exceptions import RangeError
from placement.management.base import EXIT_MISMATCH, PlacementCommand
from placement.oracle import SearchBox
from placement.traffic_model import cross_check


class Command(PlacementCommand):
    help = (
        'Сверяет аналитическое решение каждого окна с перебором по сетке; '
        'при расхождении больше допуска завершается с кодом 3.'
    )

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        parser.add_argument(
            '--tolerance', type=float,
            default=settings.PLACEMENT_VERIFY_TOLERANCE,
            help='Допустимое расстояние между решениями в единицах карты.',
        )

    def handle_placement(self, *args, **options):
        tolerance = options['tolerance']
        if not tolerance > 0:
            raise RangeError(f'допуск должен быть положительным: {tolerance}')
        region, records = self.load_inputs(options)
        box = SearchBox.from_bounds(
            settings.PLACEMENT_ORACLE_BOX,
            levels=settings.PLACEMENT_ORACLE_LEVELS,
            points_per_axis=settings.PLACEMENT_ORACLE_POINTS_PER_AXIS,
        )
        checks = cross_check(region, records, box, tolerance)
        for check in checks:
            verdict = 'OK' if check.passed else 'РАСХОЖДЕНИЕ'
            self.stdout.write(
                f'{check.window}: {verdict} '
                f'решение ({check.solver_point.x:.6f}, '
                f'{check.solver_point.y:.6f}), '
                f'оракул ({check.oracle_point.x:.6f}, '
                f'{check.oracle_point.y:.6f}), '
                f'Δ = {check.distance:.3e}, шаг сетки {check.resolution:.3e}'
            )
        failed = [check.window for check in checks if not check.passed]
        if failed:
            raise CommandError(
                f'расхождение с оракулом больше {tolerance:g} '
                f'в окнах: {", ".join(failed)}',
                returncode=EXIT_MISMATCH,
            )
