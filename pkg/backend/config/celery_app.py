"""Celery application of the StochInverse project.

Experiment configurations run as ``experiments.run_experiment`` tasks. Batch
mode applies them eagerly in local threads, ``--dispatch`` sends them to the
workers of the configured broker.
"""

# Standard library imports
import logging
import os
from logging.config import dictConfig
from typing import Any

# Third-party imports
from celery import Celery
from celery.signals import setup_logging, task_failure
from django.conf import settings

# Settings module unless the environment names another
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")

# Application reading the CELERY_ settings
app: Celery = Celery("stochinverse")
app.config_from_object("django.conf:settings", namespace="CELERY")

# Register the tasks modules of the installed apps
app.autodiscover_tasks()

# Get the logger
logger = logging.getLogger(__name__)


# Workers log like the management commands
@setup_logging.connect
def configure_worker_logging(*args: Any, **kwargs: Any) -> None:
    """Apply the ``LOGGING`` dictionary of the Django settings to the worker.

    Args:
        *args: Signal arguments.
        **kwargs: Signal keyword arguments.
    """

    dictConfig(settings.LOGGING)


# Report tasks that raised
@task_failure.connect
def log_task_failure(
    sender: Any = None,
    task_id: str | None = None,
    exception: Exception | None = None,
    **kwargs: Any,
) -> None:
    """Log a task that raised instead of returning a result.

    Args:
        sender (Any): The task.
        task_id (str | None): Id of the failed task.
        exception (Exception | None): The raised exception.
        **kwargs: Other signal arguments.
    """

    logger.error("Task %s (%s) failed: %s", getattr(sender, "name", sender), task_id, exception)
