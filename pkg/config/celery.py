import os
from celery import Celery

os.environ.setdefault(
    'DJANGO_SETTINGS_MODULE', 'config.settings.local'
)

app = Celery('msrlab')

app.config_from_object('config.celeryconfig')

app.autodiscover_tasks()
