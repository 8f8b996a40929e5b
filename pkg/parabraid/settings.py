"""
Django settings for parabraid project.

The project hosts one app, `braids`, which is a pure computation engine:
no database, no templates, no sessions. Everything tunable comes from the
environment.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os


# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv(
    "DJANGO_SECRET_KEY",
    "unsafe-dev-secret-key"
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.getenv("DJANGO_DEBUG", "1") == "1"

ALLOWED_HOSTS = [
    host.strip()
    for host in os.getenv("DJANGO_ALLOWED_HOSTS", "localhost,127.0.0.1,testserver").split(",")
    if host.strip()
]


# Application definition

INSTALLED_APPS = [
    'braids',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
]

ROOT_URLCONF = 'parabraid.urls'

WSGI_APPLICATION = 'parabraid.wsgi.application'


# The engine keeps no state between requests.
DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# =========================
# LOGGING
# =========================

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        "braids": {
            "handlers": ["console"],
            "level": os.getenv("PARABRAID_LOG_LEVEL", "INFO"),
            "propagate": False,
        },
    },
}


# =========================
# PROVER AND SUITE BOUNDS
# =========================

def _optional_int(name):
    raw = os.getenv(name, "").strip()
    return int(raw) if raw else None


# Expansions a single prove_equal search may perform.
PARABRAID_MAX_STEPS = int(os.getenv("PARABRAID_MAX_STEPS", "2000000"))

# Longest intermediate word; None means max(len(u), len(v)) + 8.
PARABRAID_MAX_LEN = _optional_int("PARABRAID_MAX_LEN")

# Certification attempts inside verification suites use a smaller budget.
PARABRAID_SUITE_MAX_STEPS = int(os.getenv("PARABRAID_SUITE_MAX_STEPS", "5000"))

# When "1", runs whose only non-pass statuses are "unproven" exit with 0.
PARABRAID_UNPROVEN_PASSES = os.getenv("PARABRAID_UNPROVEN_PASSES", "0") == "1"
