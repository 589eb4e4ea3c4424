from django.urls import path

from . import views

app_name = 'placement'

urlpatterns = [
    path('', views.index, name='index'),
    path('districts/<slug:district_slug>/plan/', views.district_plan,
         name='district_plan'),
    path('districts/<slug:district_slug>/geojson/', views.district_geojson,
         name='district_geojson'),
]
