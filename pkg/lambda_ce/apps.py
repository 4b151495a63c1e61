from django.apps import AppConfig


class LambdaCeConfig(AppConfig):
    name = 'lambda_ce'
    verbose_name = 'Chevalley-Eilenberg complexes'
