import os
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent

# No sessions, signing or auth are used; the key only satisfies Django.
SECRET_KEY = os.getenv(
    'MAXINF_SECRET_KEY',
    'maxinf-local-only-6b1e0f2d9c5a4e7f8a3b2c1d0e9f8a7b'
)

DEBUG = False

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'influence',
    'cli',
]

# Everything is computed in memory; nothing is persisted.
DATABASES = {}

# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'COMPACT_JSON': True,
    'STRICT_JSON': True,
    'UNICODE_JSON': True,
    'COERCE_DECIMAL_TO_STRING': False,
}

# maxinf settings

MAXINF = {
    # Master seed used when neither --seed nor MAXINF_SEED is given.
    'DEFAULT_SEED': int(os.getenv('MAXINF_SEED', '20140105')),
    'WORKERS': int(os.getenv('MAXINF_WORKERS', '1')),
    'LOG_LEVEL': os.getenv('MAXINF_LOG_LEVEL', 'WARNING'),
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'influence': {
            'handlers': ['stderr'],
            'level': MAXINF['LOG_LEVEL'],
            'propagate': True,
        },
        'cli': {
            'handlers': ['stderr'],
            'level': MAXINF['LOG_LEVEL'],
            'propagate': True,
        },
    },
}
