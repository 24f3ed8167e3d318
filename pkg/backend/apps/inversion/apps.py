# Third-party imports
from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


# Class for inversion app configuration
class InversionConfig(AppConfig):
    """
    Configuration class for the inversion app.

    Attributes:
        name (str): The name of the app
        verbose_name (str): The verbose name of the app
    """

    # Attributes
    name = "apps.inversion"
    verbose_name = _("Direct inversion and stability")
