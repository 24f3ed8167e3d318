# Third-party imports
from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


# Class for maps app configuration
class MapsConfig(AppConfig):
    """
    Configuration class for the maps app.

    The app holds the forward maps of an inverse problem and their
    pushforward actions on measures.

    Attributes:
        name (str): The name of the app
        verbose_name (str): The verbose name of the app
    """

    # Attributes
    name = "apps.maps"
    verbose_name = _("Forward maps")
