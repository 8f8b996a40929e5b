"""Configure Django for pytest, as manage.py does for its test runner."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'parabraid.settings')
django.setup()
