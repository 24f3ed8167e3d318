# Third-party imports
from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


# Class for flow app configuration
class GradientFlowConfig(AppConfig):
    """
    Configuration class for the flow app.

    Attributes:
        name (str): The name of the app
        verbose_name (str): The verbose name of the app
    """

    # Attributes
    name = "apps.flow"
    verbose_name = _("Wasserstein gradient flows")
