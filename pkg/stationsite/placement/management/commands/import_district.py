from django.db import transaction
from django.utils.text import slugify

from placement.management.base import PlacementCommand
from placement.models import CongestionRecord, District, Vertex
from placement.traffic_model import build_schedule


class Command(PlacementCommand):
    help = (
        'Загружает район и таблицу загруженности в базу данных; '
        'район с тем же идентификатором заменяется.'
    )

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        parser.add_argument(
            '--slug', default=None,
            help='Идентификатор района; по умолчанию - из его названия.',
        )

    @transaction.atomic
    def handle_placement(self, *args, **options):
        region, records = self.load_inputs(options)
        build_schedule(records, region)
        slug = options['slug'] or slugify(region.name) or 'district'
        District.objects.filter(slug=slug).delete()
        district = District.objects.create(
            name=region.name or slug, slug=slug
        )
        Vertex.objects.bulk_create(
            Vertex(
                district=district, label=label, x=point.x, y=point.y,
                ordinal=ordinal,
            )
            for ordinal, (label, point) in enumerate(region.vertices)
        )
        CongestionRecord.objects.bulk_create(
            CongestionRecord(
                district=district, segment=record.segment_id,
                window=record.window, percent=record.percent,
            )
            for record in records
        )
        self.stdout.write(
            f'Район «{district.name}» ({slug}): '
            f'{len(region.vertices)} вершин, {len(records)} записей'
        )
