from django.contrib import admin
from .models import CongestionRecord, District, Vertex


class VertexInline(admin.TabularInline):
    model = Vertex
    extra = 0
    ordering = ('ordinal', )


class CongestionRecordInline(admin.TabularInline):
    model = CongestionRecord
    extra = 0


class DistrictAdmin(admin.ModelAdmin):
    search_fields = ('name', )
    list_display = (
        'id',
        'name',
        'slug',
        'is_published',
        'created_at',
    )
    list_display_links = ('name', )
    list_editable = ('slug', 'is_published', )
    list_filter = ('created_at', )
    inlines = (VertexInline, CongestionRecordInline)
    empty_value_display = '-пусто-'


class CongestionRecordAdmin(admin.ModelAdmin):
    search_fields = ('segment', 'window', )
    list_display = (
        'id',
        'district',
        'segment',
        'window',
        'percent',
    )
    list_display_links = ('segment', )
    list_editable = ('percent', )
    list_filter = ('window', 'district', )
    empty_value_display = '-пусто-'


admin.site.register(District, DistrictAdmin)
admin.site.register(CongestionRecord, CongestionRecordAdmin)
