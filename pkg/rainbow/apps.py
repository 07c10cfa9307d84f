from django.apps import AppConfig


class RainbowConfig(AppConfig):
    name = "rainbow"
    verbose_name = "Rainbow cycle forbidding colorings"
