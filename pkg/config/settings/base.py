"""
Base settings to build other settings upon
"""
import os
import environ

ROOT_DIR = (environ.Path(__file__) - 3)
APPS_DIR = ROOT_DIR.path("apps")

env = environ.Env()

if os.path.exists(str(ROOT_DIR.path(".env"))):
    env.read_env(str(ROOT_DIR.path(".env")))


# Generals
# ----------------------------------------------------------------------------
DEBUG = env.bool("DJANGO_DEBUG", False)
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True
BASE_DIR = str(ROOT_DIR)
FIXTURE_ROOT = str(ROOT_DIR("fixtures"))


# Apps
# ----------------------------------------------------------------------------
DJANGO_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
]

THIRD_PARTY_APPS = [
    'rest_framework',
]

LOCAL_APPS = [
    'apps.core.apps.CoreConfig',
    'apps.ffalg.apps.FfalgConfig',
    'apps.codes.apps.CodesConfig',
    'apps.repair.apps.RepairConfig',
    'apps.reduction.apps.ReductionConfig',
    'apps.certificates.apps.CertificatesConfig',
    'apps.bounds.apps.BoundsConfig',
    'apps.search.apps.SearchAppConfig',
    'apps.cli.apps.CliConfig',
]

INSTALLED_APPS = DJANGO_APPS + THIRD_PARTY_APPS + LOCAL_APPS


# Database
# ----------------------------------------------------------------------------
# Every artifact is a flat JSON file; nothing is persisted.
DATABASES = {}


REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'COERCE_DECIMAL_TO_STRING': False,
}


# Logging
# ----------------------------------------------------------------------------
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': env.str('MSRLAB_LOG_LEVEL', default='WARNING'),
            'propagate': False,
        },
        'celery': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
    },
}


# msrlab
# ----------------------------------------------------------------------------
MSRLAB_THREADS = env.int('MSRLAB_THREADS', default=os.cpu_count() or 1)
MSRLAB_MDS_SUBSET_LIMIT = env.int('MSRLAB_MDS_SUBSET_LIMIT', default=10 ** 6)
MSRLAB_SUBSPACE_LIMIT = env.int('MSRLAB_SUBSPACE_LIMIT', default=10 ** 6)
MSRLAB_SCHEME_SUBSPACE_LIMIT = env.int('MSRLAB_SCHEME_SUBSPACE_LIMIT', default=10 ** 5)
MSRLAB_CANDIDATE_LIMIT = env.int('MSRLAB_CANDIDATE_LIMIT', default=10 ** 6)
MSRLAB_GAMMA_LIMIT = env.int('MSRLAB_GAMMA_LIMIT', default=10 ** 6)
MSRLAB_DEFAULT_BUDGET = env.int('MSRLAB_DEFAULT_BUDGET', default=10 ** 7)
MSRLAB_REPORT_SCHEMA = 1
