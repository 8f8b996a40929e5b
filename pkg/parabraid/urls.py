"""
URL configuration for parabraid project.

Only the JSON endpoints of the `braids` app are exposed.
"""
from django.urls import path, include

urlpatterns = [
    path('api/', include('braids.urls')),
]
