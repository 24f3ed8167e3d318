# Third-party imports
from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


# Class for measures app configuration
class MeasuresConfig(AppConfig):
    """
    Configuration class for the measures app.

    The app holds the particle, grid and Gaussian carriers of probability
    measures and the conversions among them.

    Attributes:
        name (str): The name of the app
        verbose_name (str): The verbose name of the app
    """

    # Attributes
    name = "apps.measures"
    verbose_name = _("Measures")
