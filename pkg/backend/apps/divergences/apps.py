# Third-party imports
from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


# Class for divergences app configuration
class DivergencesConfig(AppConfig):
    """
    Configuration class for the divergences app.

    Attributes:
        name (str): The name of the app
        verbose_name (str): The verbose name of the app
    """

    # Attributes
    name = "apps.divergences"
    verbose_name = _("Distances and divergences")
