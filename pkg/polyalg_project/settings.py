"""
Django settings for polyalg_project project.

Generated by 'django-admin startproject' using Django 5.0.1.

The project is driven entirely through management commands (see the
``polyalg`` script at the repository root); it serves no HTTP endpoints.

For more information on this file, see
https://docs.djangoproject.com/en/5.0/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.0/ref/settings/
"""

from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='django-insecure-polyalg-batch-only')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',

    # Third-party apps
    'rest_framework',

    # Local apps
    'polyomino',
]


# Database
# Nothing is persisted; Django still expects a default connection entry.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.0/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Polyomino toolkit settings
POLYALG = {
    'GENERATOR_MAX_RANK': config('POLYALG_GENERATOR_MAX_RANK', default=14, cast=int),
    # 2^12 candidate Y sets
    'LEX_ORDER_SEARCH_BUDGET': config('POLYALG_LEX_ORDER_SEARCH_BUDGET', default=4096, cast=int),
    'BUCHBERGER_PAIR_BUDGET': config('POLYALG_BUCHBERGER_PAIR_BUDGET', default=20000, cast=int),
    # 10 rather than 20: above it the monomial series splits on a pivot variable,
    # which stays exact and avoids 2^20 subsets per call
    'INCLUSION_EXCLUSION_CUTOFF': config('POLYALG_INCLUSION_EXCLUSION_CUTOFF', default=10, cast=int),
    'ZIG_ZAG_MAX_LENGTH': config('POLYALG_ZIG_ZAG_MAX_LENGTH', default=None,
                                 cast=lambda v: int(v) if v not in (None, '') else None),
    'VERIFY_WORKERS': config('POLYALG_VERIFY_WORKERS', default=1, cast=int),
    'SVG_CELL_SIZE': config('POLYALG_SVG_CELL_SIZE', default=20, cast=int),
    'SEED': config('POLYALG_SEED', default=0, cast=int),
    'REPORT_SCHEMA_VERSION': 1,
}


# Logging
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'polyomino': {
            'handlers': ['console'],
            'level': config('POLYALG_LOG_LEVEL', default='WARNING'),
            'propagate': False,
        },
    },
}
