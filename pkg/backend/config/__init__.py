"""StochInverse project configuration.

Importing the package loads the Celery application, so ``shared_task``
functions bind to it whether they run under a worker or a management command.
"""

# Local application imports
from config.celery_app import app as celery_app

# Exports
__all__ = ["celery_app"]
