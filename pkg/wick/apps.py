from django.apps import AppConfig


class WickConfig(AppConfig):
    name = 'wick'
    verbose_name = 'Wick map from decorated tensors to graphs'
