import json

from placement.management.base import PlacementCommand
from placement.traffic_model import plan_stations, reports_to_geojson


class Command(PlacementCommand):
    help = (
        'Сохраняет границу района и места станций по окнам '
        'как коллекцию объектов GeoJSON.'
    )

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        parser.add_argument(
            '--output', required=True, help='Файл GeoJSON для записи.'
        )

    def handle_placement(self, *args, **options):
        region, records = self.load_inputs(options)
        collection = reports_to_geojson(
            region, plan_stations(region, records)
        )
        self.emit(
            json.dumps(collection, ensure_ascii=False, indent=2) + '\n',
            options['output'],
        )
