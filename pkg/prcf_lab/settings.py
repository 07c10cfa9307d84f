"""
Django settings for the prcf_lab project.

The project has no web surface: Django provides the management-command CLI,
the settings/override layer, logging configuration and the test runner.
Every tunable below can be overridden through a PRCF_-prefixed environment
variable (or a .env file next to manage.py).
"""

from pathlib import Path

from prcf_lab.env import env_float, env_int, env_str, load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR / ".env")

# Not used for anything security-relevant (no sessions, no web requests),
# but Django refuses to start without one.
SECRET_KEY = env_str("SECRET_KEY", "prcf-lab-insecure-local-key")

DEBUG = False

ALLOWED_HOSTS: list[str] = []

INSTALLED_APPS = [
    "rainbow",
]

# No models; the test suite uses SimpleTestCase only.
DATABASES: dict = {}

USE_TZ = True

TIME_ZONE = "UTC"


# Search and enumeration limits
# Enumeration node cap shared by census, rainbow-cycle search and decide_prcf.
PRCF_MAX_NODES = env_int("MAX_NODES", 10**9)

# Wall-clock cap in seconds; None means unlimited.
PRCF_MAX_SECONDS = env_float("MAX_SECONDS", None)

# Worker processes for partitioned enumeration. 1 = deterministic mode.
PRCF_WORKERS = env_int("WORKERS", 1)

# Number of precomputed cycles the decide_prcf pruner may index.
PRCF_CYCLE_CAP = env_int("CYCLE_CAP", 200_000)

PRCF_LOG_LEVEL = env_str("LOG_LEVEL", "INFO").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "console": {
            "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "console",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": PRCF_LOG_LEVEL,
    },
    "loggers": {
        "django": {"handlers": ["console"], "level": "WARNING", "propagate": False},
        "rainbow": {
            "handlers": ["console"],
            "level": PRCF_LOG_LEVEL,
            "propagate": False,
        },
    },
}
