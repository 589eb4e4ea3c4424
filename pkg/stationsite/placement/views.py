from http import HTTPStatus

from django.http import JsonResponse
from django.shortcuts import get_object_or_404
from django.urls import reverse

from placement.exceptions import InputError, NumericalError
from placement.models import District
from placement.traffic_model import (
    plan_stations, report_to_dict, reports_to_geojson,
)

JSON_PARAMS = {'ensure_ascii': False}


def _error_response(error, status):
    return JsonResponse(
        {'error': str(error), 'window': error.window},
        status=status, json_dumps_params=JSON_PARAMS,
    )


def _plan(district):
    region = district.to_region()
    return region, plan_stations(region, district.congestion_entries())


def index(request):
    """
    Отображает перечень опубликованных районов со ссылками на расчёты.
    Args:
        request: HttpRequest объект, содержащий метаданные о запросе.
    Returns:
        JsonResponse со списком районов.
    """
    districts = [
        {
            'name': district.name,
            'slug': district.slug,
            'plan': reverse('placement:district_plan', args=[district.slug]),
            'geojson': reverse(
                'placement:district_geojson', args=[district.slug]
            ),
        }
        for district in District.published.all()
    ]
    return JsonResponse(
        {'districts': districts}, json_dumps_params=JSON_PARAMS
    )


def district_plan(request, district_slug: str):
    """
    Рассчитывает место станции для каждого временного окна района.
    Если район не найден или не опубликован, возвращает 404 ошибку.
    Ошибки входных данных возвращаются с кодом 400,
    вырожденные системы - с кодом 422.
    Args:
        request: HttpRequest объект, содержащий метаданные о запросе.
        district_slug (str): Слаг района.
    Returns:
        JsonResponse со списком отчётов по окнам.
    """
    district = get_object_or_404(District.published.all(), slug=district_slug)
    try:
        _, reports = _plan(district)
    except InputError as error:
        return _error_response(error, HTTPStatus.BAD_REQUEST)
    except NumericalError as error:
        return _error_response(error, HTTPStatus.UNPROCESSABLE_ENTITY)
    return JsonResponse(
        [report_to_dict(report) for report in reports],
        safe=False, json_dumps_params=JSON_PARAMS,
    )


def district_geojson(request, district_slug: str):
    """Возвращает границу района и станции по окнам в формате GeoJSON."""
    district = get_object_or_404(District.published.all(), slug=district_slug)
    try:
        region, reports = _plan(district)
    except InputError as error:
        return _error_response(error, HTTPStatus.BAD_REQUEST)
    except NumericalError as error:
        return _error_response(error, HTTPStatus.UNPROCESSABLE_ENTITY)
    return JsonResponse(
        reports_to_geojson(region, reports), json_dumps_params=JSON_PARAMS
    )
