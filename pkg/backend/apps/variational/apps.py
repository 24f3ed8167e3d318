# Third-party imports
from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


# Class for variational app configuration
class VariationalConfig(AppConfig):
    """
    Configuration class for the variational app.

    Attributes:
        name (str): The name of the app
        verbose_name (str): The verbose name of the app
    """

    # Attributes
    name = "apps.variational"
    verbose_name = _("Regularized variational solvers")
