import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'ribbon.settings')
django.setup()
