from django.apps import AppConfig


class BraidsConfig(AppConfig):
    name = 'braids'
    verbose_name = 'Parametrized braid groups'
