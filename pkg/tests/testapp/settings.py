DEBUG = True

SECRET_KEY = 'test'

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    }
}

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'rest_framework',
    'stewart',
]

USE_TZ = True

TIME_ZONE = 'UTC'

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

# keep the sampled sweeps of the theorem checks small
STEWART_CHECK_LENGTH = 4

STEWART_SAMPLE_LENGTHS = (5,)

STEWART_SAMPLE_SIZE = 20

STEWART_SEED = 7

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '[%(asctime)s %(name)s] %(levelname)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        'stewart': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': True,
        },
    },
}
