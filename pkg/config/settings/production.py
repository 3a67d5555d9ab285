from .base import * # noqa
from .base import env


DEBUG = False
SECRET_KEY = env("DJANGO_SECRET_KEY")
MSRLAB_THREADS = env.int('MSRLAB_THREADS', default=1)
