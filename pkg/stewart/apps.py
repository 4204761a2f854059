from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class StewartConfig(AppConfig):
    name = 'stewart'
    verbose_name = _("Stewart words")
    default_auto_field = 'django.db.models.AutoField'

    def ready(self):
        from stewart.conf import app_settings

        # perform some sanity checks
        app_settings.STATE_CAP
        app_settings.DEFAULT_BASE
