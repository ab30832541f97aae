import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'polyalg_project.settings')
django.setup()
