# Generated by Django 3.2.16 on 2026-10-18 12:40

import django.core.validators
from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='District',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('is_published', models.BooleanField(default=True, help_text='Снимите галочку, чтобы скрыть район.', verbose_name='Опубликовано')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Добавлено')),
                ('name', models.CharField(max_length=256, verbose_name='Название')),
                ('slug', models.SlugField(help_text='Идентификатор района для URL; разрешены символы латиницы, цифры, дефис и подчёркивание.', max_length=64, unique=True, verbose_name='Идентификатор')),
            ],
            options={
                'verbose_name': 'район',
                'verbose_name_plural': 'Районы',
                'ordering': ('created_at',),
                'abstract': False,
            },
        ),
        migrations.CreateModel(
            name='Vertex',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('label', models.CharField(max_length=16, verbose_name='Имя вершины')),
                ('x', models.FloatField(verbose_name='Координата x')),
                ('y', models.FloatField(verbose_name='Координата y')),
                ('ordinal', models.PositiveIntegerField(verbose_name='Порядковый номер')),
                ('district', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='vertices', to='placement.district', verbose_name='Район')),
            ],
            options={
                'verbose_name': 'вершина',
                'verbose_name_plural': 'Вершины',
                'ordering': ('ordinal',),
                'default_related_name': 'vertices',
            },
        ),
        migrations.CreateModel(
            name='CongestionRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('segment', models.CharField(max_length=32, verbose_name='Участок')),
                ('window', models.CharField(help_text='Например, morning или afternoon.', max_length=64, verbose_name='Временное окно')),
                ('percent', models.FloatField(validators=[django.core.validators.MinValueValidator(0.0), django.core.validators.MaxValueValidator(100.0)], verbose_name='Загруженность, %')),
                ('district', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='congestion_records', to='placement.district', verbose_name='Район')),
            ],
            options={
                'verbose_name': 'загруженность участка',
                'verbose_name_plural': 'Загруженность участков',
                'ordering': ('window', 'segment'),
                'default_related_name': 'congestion_records',
            },
        ),
        migrations.AddConstraint(
            model_name='vertex',
            constraint=models.UniqueConstraint(fields=('district', 'ordinal'), name='unique_vertex_ordinal'),
        ),
        migrations.AddConstraint(
            model_name='congestionrecord',
            constraint=models.UniqueConstraint(fields=('district', 'segment', 'window'), name='unique_segment_window'),
        ),
    ]
