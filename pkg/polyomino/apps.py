from django.apps import AppConfig


class PolyominoConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'polyomino'
    verbose_name = 'Polyomino ideals'
