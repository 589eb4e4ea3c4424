from placement.management.base import PlacementCommand
from placement.traffic_model import dump_reports, plan_stations, plan_window


def format_reports(reports) -> str:
    """Таблица отчётов для чтения человеком."""
    lines = []
    for report in reports:
        place = 'внутри района' if report.inside_region else 'вне района'
        lines.append(
            f'Окно {report.window}: ({report.location.x:.4f}, '
            f'{report.location.y:.4f}), {place}, '
            f'D = {report.objective:.6g}, '
            f'обусловленность {report.condition:.4g}'
        )
        lines.append(f'  {"участок":<8} {"вес":>8} {"расстояние":>12}')
        for reading in report.per_segment:
            lines.append(
                f'  {reading.segment:<8} {reading.weight:>8.4f} '
                f'{reading.distance:>12.4f}'
            )
    return '\n'.join(lines) + '\n'


class Command(PlacementCommand):
    help = (
        'Рассчитывает место станции по взвешенному МНК '
        'для одного окна или для всех окон.'
    )

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        parser.add_argument(
            '--window', default=None,
            help='Временное окно; по умолчанию - все окна и unweighted.',
        )
        parser.add_argument(
            '--output', default=None, help='Файл для записи отчёта.'
        )
        parser.add_argument(
            '--pretty', action='store_true',
            help='Вывести таблицу вместо JSON.',
        )

    def handle_placement(self, *args, **options):
        region, records = self.load_inputs(options)
        if options['window']:
            reports = [plan_window(region, records, options['window'])]
        else:
            reports = plan_stations(region, records)
        if options['pretty']:
            text = format_reports(reports)
        else:
            text = dump_reports(reports)
        self.emit(text, options['output'])
