from django.conf import settings
from django.core.validators import MaxValueValidator, MinValueValidator
from django.db import models

from .geometry import Point2, PolygonRegion, region_from_vertices
from .traffic_model import CongestionRecord as CongestionEntry


class BaseDistrictMeta(models.Model):
    """
    Базовый мета-класс для моделей размещения,
    определяющий общие атрибуты и настройки.

    Этот класс является абстрактным и не предназначен
    для создания объектов в базе данных.

    Attributes:
        is_published (models.BooleanField): Флаг, указывающий,
            опубликован ли объект. По умолчанию установлен в True.
        created_at (models.DateTimeField): Дата и время создания объекта,
            устанавливаются автоматически при создании.

    Meta class:
        abstract: Указывает, что класс является абстрактным.
        ordering: Порядок сортировки объектов по умолчанию,
            в данном случае по полю 'created_at'.
    """

    is_published = models.BooleanField(
        verbose_name='Опубликовано',
        default=True,
        help_text='Снимите галочку, чтобы скрыть район.'
    )
    created_at = models.DateTimeField(
        verbose_name='Добавлено',
        auto_now_add=True,
    )

    class Meta:
        abstract = True
        ordering = ('created_at', )


class PublishedDistrictsManager(models.Manager):
    def get_queryset(self):
        """
        Возвращает QuerySet опубликованных районов
        с предзагруженными вершинами и записями о загруженности.
        """
        return super().get_queryset().prefetch_related(
            'vertices', 'congestion_records'
        ).filter(is_published=True)


class District(BaseDistrictMeta):
    """
    Район города, для которого подбирается место станции.

    Граница района - замкнутая ломаная через вершины `Vertex`
    в порядке их номеров; участки границы называются склейкой
    имён соседних вершин.

    Attributes:
        name (models.CharField): Название района.
        slug (models.SlugField): Уникальный идентификатор для URL.

    Methods:
        to_region: Строит PolygonRegion из вершин района.
        congestion_entries: Возвращает записи о загруженности
            в виде объектов библиотеки расчёта.
    """

    name = models.CharField(
        verbose_name='Название',
        max_length=settings.MAX_FIELD_LENGTH
    )
    slug = models.SlugField(
        verbose_name='Идентификатор',
        max_length=64, unique=True,
        help_text=(
            'Идентификатор района для URL; разрешены символы '
            'латиницы, цифры, дефис и подчёркивание.'
        )
    )
    objects = models.Manager()
    published = PublishedDistrictsManager()

    class Meta(BaseDistrictMeta.Meta):
        verbose_name = 'район'
        verbose_name_plural = 'Районы'

    def __str__(self) -> str:
        return self.name[:settings.REPRESENTATION_LENGTH]

    def to_region(self) -> PolygonRegion:
        return region_from_vertices(
            [
                (vertex.label, Point2(vertex.x, vertex.y))
                for vertex in self.vertices.all()
            ],
            self.name,
        )

    def congestion_entries(self):
        return [
            CongestionEntry(record.segment, record.window, record.percent)
            for record in self.congestion_records.all()
        ]


class Vertex(models.Model):
    """
    Вершина границы района.

    Attributes:
        district (models.ForeignKey): Район, которому принадлежит вершина.
        label (models.CharField): Имя вершины, например 'A'.
        x (models.FloatField): Координата на восток в единицах карты.
        y (models.FloatField): Координата на север в единицах карты.
        ordinal (models.PositiveIntegerField): Номер вершины при обходе.
    """

    district = models.ForeignKey(
        District,
        on_delete=models.CASCADE,
        verbose_name='Район',
    )
    label = models.CharField(verbose_name='Имя вершины', max_length=16)
    x = models.FloatField(verbose_name='Координата x')
    y = models.FloatField(verbose_name='Координата y')
    ordinal = models.PositiveIntegerField(verbose_name='Порядковый номер')

    class Meta:
        default_related_name = 'vertices'
        verbose_name = 'вершина'
        verbose_name_plural = 'Вершины'
        ordering = ('ordinal', )
        constraints = (
            models.UniqueConstraint(
                fields=('district', 'ordinal'),
                name='unique_vertex_ordinal',
            ),
        )

    def __str__(self) -> str:
        return f'{self.label} ({self.x}, {self.y})'


class CongestionRecord(models.Model):
    """
    Процент загруженности участка границы в одном временном окне.

    Attributes:
        district (models.ForeignKey): Район.
        segment (models.CharField): Имя участка, например 'AB'.
        window (models.CharField): Временное окно, например 'morning'.
        percent (models.FloatField): Загруженность от 0 до 100.
    """

    district = models.ForeignKey(
        District,
        on_delete=models.CASCADE,
        verbose_name='Район',
    )
    segment = models.CharField(verbose_name='Участок', max_length=32)
    window = models.CharField(
        verbose_name='Временное окно',
        max_length=64,
        help_text='Например, morning или afternoon.'
    )
    percent = models.FloatField(
        verbose_name='Загруженность, %',
        validators=(MinValueValidator(0.0), MaxValueValidator(100.0)),
    )

    class Meta:
        default_related_name = 'congestion_records'
        verbose_name = 'загруженность участка'
        verbose_name_plural = 'Загруженность участков'
        ordering = ('window', 'segment')
        constraints = (
            models.UniqueConstraint(
                fields=('district', 'segment', 'window'),
                name='unique_segment_window',
            ),
        )

    def __str__(self) -> str:
        return f'{self.segment} {self.window}: {self.percent}%'
