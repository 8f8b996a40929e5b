from django.urls import path

from . import views

urlpatterns = [
    path("normalize/", views.normalize_view, name="normalize"),
    path("eval/", views.eval_view, name="eval"),
    path("pure-gens/", views.pure_gens_view, name="pure_gens"),
    path("check/", views.check_view, name="check"),
]
