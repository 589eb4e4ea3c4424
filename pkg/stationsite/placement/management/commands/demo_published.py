from placement.exceptions import PlacementError
from placement.management.base import PlacementCommand
from placement.published_cases import (
    CASES, LITERAL_A, LITERAL_B, district_records, district_region,
    triangle_system,
)
from placement.traffic_model import plan_window
from placement.wls_core import solve_ls, solve_matrix

MISSING = '—'


def _pair(point) -> str:
    return f'{point[0]:.5f} / {point[1]:.5f}'


class Command(PlacementCommand):
    help = (
        'Сравнивает опубликованные результаты с буквальным воспроизведением '
        'напечатанных матриц и с исправленным расчётом по району.'
    )

    def literal(self, case):
        if not case.uses_literal_matrix:
            point = solve_ls(triangle_system()).point
        else:
            point = solve_matrix(
                LITERAL_A, LITERAL_B, case.literal_weights
            ).point
        return point.x, point.y

    def corrected(self, case, region, records):
        if case.window is None:
            point = solve_ls(triangle_system()).point
        else:
            point = plan_window(region, records, case.window).location
        return point.x, point.y

    def handle_placement(self, *args, **options):
        region = district_region()
        records = district_records()
        header = (
            f'{"Расчёт":<18} {"Опубликовано":<18} {"Буквально":<22} '
            f'{"Исправлено":<22} Примечание'
        )
        self.stdout.write(header)
        self.stdout.write('-' * len(header))
        for case in CASES:
            published = f'{case.published[0]:g} / {case.published[1]:g}'
            cells = []
            for compute in (
                lambda: self.literal(case),
                lambda: self.corrected(case, region, records),
            ):
                try:
                    cells.append(_pair(compute()))
                except PlacementError as error:
                    cells.append(MISSING)
                    self.stderr.write(f'{case.title}: {error}')
            self.stdout.write(
                f'{case.title:<18} {published:<18} {cells[0]:<22} '
                f'{cells[1]:<22} {case.note}'
            )
