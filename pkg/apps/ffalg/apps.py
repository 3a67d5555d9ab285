from django.apps import AppConfig


class FfalgConfig(AppConfig):
    name = 'apps.ffalg'
