"""
Toolkit settings are read from the ``POLYALG`` dict in Django settings,
falling back to the defaults below. Values are looked up at call time so
``override_settings`` works in tests.
"""
from django.conf import settings

DEFAULTS = {
    'GENERATOR_MAX_RANK': 14,
    'LEX_ORDER_SEARCH_BUDGET': 4096,
    'BUCHBERGER_PAIR_BUDGET': 20000,
    'INCLUSION_EXCLUSION_CUTOFF': 10,
    'ZIG_ZAG_MAX_LENGTH': None,
    'VERIFY_WORKERS': 1,
    'SVG_CELL_SIZE': 20,
    'SEED': 0,
    'REPORT_SCHEMA_VERSION': 1,
}


def polyalg_settings(name):
    if name not in DEFAULTS:
        raise AttributeError(f"Invalid POLYALG setting: '{name}'")
    user_settings = getattr(settings, 'POLYALG', {})
    return user_settings.get(name, DEFAULTS[name])
