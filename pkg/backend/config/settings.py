"""Base settings for the StochInverse project.

This module contains the Django settings shared by the command line tools,
the Celery workers and the test suite. There is no database and no web
surface; Django hosts the management commands, the serializers used to
validate experiment configurations and the logging configuration.
"""

# Standard library imports
import logging
from pathlib import Path

# Third-party imports
import environ
import sentry_sdk
from sentry_sdk.integrations.celery import CeleryIntegration
from sentry_sdk.integrations.django import DjangoIntegration
from sentry_sdk.integrations.logging import LoggingIntegration

# -----------------------------------------
# Path configuration
# -----------------------------------------

# Set the base directory for the project
BASE_DIR = Path(__file__).resolve(strict=True).parent.parent

# Set the apps directory
APPS_DIR = BASE_DIR / "apps"

# Initialize environment variables
env = environ.Env()

# Read environment variables from .env file if specified
READ_DOT_ENV_FILE = env.bool("DJANGO_READ_DOT_ENV_FILE", default=False)
if READ_DOT_ENV_FILE:
    env.read_env(str(BASE_DIR / ".env"))

# -----------------------------------------
# Core Django settings
# -----------------------------------------

# Debug settings
DEBUG = env.bool("DJANGO_DEBUG", False)

# Secret key for cryptographic signing
SECRET_KEY = env.str("DJANGO_SECRET_KEY", default="stochinverse-local-only-secret-key")

# No hosts are served
ALLOWED_HOSTS: list[str] = []

# Internationalization settings
TIME_ZONE = env.str("DJANGO_TIME_ZONE", default="UTC")
LANGUAGE_CODE = "en-us"
USE_I18N = True
USE_TZ = True
LOCALE_PATHS = [str(BASE_DIR / "locale")]

# -----------------------------------------
# Database settings
# -----------------------------------------

# Experiments are file based, no database is configured
DATABASES: dict[str, dict[str, str]] = {}
DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# -----------------------------------------
# Application definition
# -----------------------------------------

# Django built-in applications
DJANGO_APPS = [
    "django.contrib.contenttypes",
]

# Third-party applications
THIRD_PARTY_APPS = [
    "rest_framework",
]

# Local applications
LOCAL_APPS = [
    "apps.common",
    "apps.measures",
    "apps.maps",
    "apps.divergences",
    "apps.inversion",
    "apps.variational",
    "apps.flow",
    "apps.experiments",
]

# Combined applications list
INSTALLED_APPS = [*DJANGO_APPS, *THIRD_PARTY_APPS, *LOCAL_APPS]

# -----------------------------------------
# Numerical settings
# -----------------------------------------

# Largest cost matrix handed to the exact transport solver
STOCHINVERSE_OT_SIZE_CAP = env.int("STOCHINVERSE_OT_SIZE_CAP", default=1_000_000)

# Sinkhorn iteration limits
STOCHINVERSE_SINKHORN_MAX_ITER = env.int("STOCHINVERSE_SINKHORN_MAX_ITER", default=10_000)
STOCHINVERSE_SINKHORN_TOL = env.float("STOCHINVERSE_SINKHORN_TOL", default=1e-9)

# Grid Fokker-Planck stability factor, dt <= factor * h^2 / |B|
STOCHINVERSE_CFL_FACTOR = env.float("STOCHINVERSE_CFL_FACTOR", default=0.25)

# Clamped negative mass tolerated before a trace is marked invalid
STOCHINVERSE_CLAMP_MASS_LIMIT = env.float("STOCHINVERSE_CLAMP_MASS_LIMIT", default=1e-6)

# -----------------------------------------
# Experiment output settings
# -----------------------------------------

# Default directory for experiment outputs
STOCHINVERSE_OUTPUT_DIR = env.str("STOCHINVERSE_OUTPUT_DIR", default="runs")

# Float format for every CSV artifact
STOCHINVERSE_CSV_FLOAT_FORMAT = env.str("STOCHINVERSE_CSV_FLOAT_FORMAT", default="%.17g")

# -----------------------------------------
# Celery settings
# -----------------------------------------

# Celery timezone setting
if USE_TZ:
    CELERY_TIMEZONE = TIME_ZONE

# Celery broker settings
CELERY_BROKER_URL = env.str("CELERY_BROKER_URL", default="memory://")

# Celery result backend settings
CELERY_RESULT_BACKEND = env.str("CELERY_RESULT_BACKEND", default="cache+memory://")
CELERY_RESULT_EXTENDED = True

# Celery serialization settings
CELERY_ACCEPT_CONTENT = ["json"]
CELERY_TASK_SERIALIZER = "json"
CELERY_RESULT_SERIALIZER = "json"

# Celery task execution settings
CELERY_TASK_ALWAYS_EAGER = env.bool("CELERY_TASK_ALWAYS_EAGER", default=True)
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_TASK_TIME_LIMIT = env.int("CELERY_TASK_TIME_LIMIT", default=60 * 60)
CELERY_WORKER_HIJACK_ROOT_LOGGER = False

# -----------------------------------------
# Django REST Framework settings
# -----------------------------------------

# REST Framework configuration
REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
    "DEFAULT_RENDERER_CLASSES": ("apps.common.renderers.ArtifactJSONRenderer",),
}

# -----------------------------------------
# Logging settings
# -----------------------------------------

# Log level for the project loggers
LOG_LEVEL = env.str("DJANGO_LOG_LEVEL", default="INFO")

# Logging configuration
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "%(levelname)s %(asctime)s %(module)s %(process)d %(thread)d %(message)s",
        },
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "root": {"level": LOG_LEVEL, "handlers": ["console"]},
    "loggers": {
        "apps": {"level": LOG_LEVEL, "handlers": ["console"], "propagate": False},
        "matplotlib": {"level": "WARNING", "handlers": ["console"], "propagate": False},
        "sentry_sdk": {"level": "ERROR", "handlers": ["console"], "propagate": False},
    },
}

# -----------------------------------------
# Sentry settings
# -----------------------------------------

# Sentry configuration
SENTRY_DSN = env.str("SENTRY_DSN", default="")
SENTRY_LOG_LEVEL = env.int("DJANGO_SENTRY_LOG_LEVEL", logging.INFO)

# Initialize Sentry SDK only when a DSN is configured
if SENTRY_DSN:
    # Sentry integrations
    sentry_logging = LoggingIntegration(
        level=SENTRY_LOG_LEVEL,
        event_level=logging.ERROR,
    )
    integrations = [
        sentry_logging,
        DjangoIntegration(),
        CeleryIntegration(),
    ]

    # Initialize Sentry SDK
    sentry_sdk.init(
        dsn=SENTRY_DSN,
        integrations=integrations,
        environment=env.str("SENTRY_ENVIRONMENT", default="local"),
        traces_sample_rate=env.float("SENTRY_TRACES_SAMPLE_RATE", default=0.0),
    )
