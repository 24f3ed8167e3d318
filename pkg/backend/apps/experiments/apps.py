# Third-party imports
from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


# Class for experiments app configuration
class ExperimentsConfig(AppConfig):
    """
    Configuration class for the experiments app.

    Attributes:
        name (str): The name of the app
        verbose_name (str): The verbose name of the app
    """

    # Attributes
    name = "apps.experiments"
    verbose_name = _("Experiments")
