"""
JSON endpoints over the engine. Form fields: type, rank, ring and the
endpoint's own fields. Every engine error comes back as {"error": ...}
with status 400.
"""
import logging

from django.http import JsonResponse
from django.views.decorators.csrf import csrf_exempt
from django.views.decorators.http import require_GET, require_POST

from .braid import format_braid, garside_nf, pure_braid_gens
from .errors import InvalidSystem, ParabraidError
from .paint import apply_colors
from .parsing import parse_ring, parse_word
from .pbg import normalize
from .ring import to_text
from .rootsys import system_from_rank
from .steinberg import format_steinberg
from .verify import SUITES, run_suite

logger = logging.getLogger(__name__)


def _system(params, default_ring="poly:a,b,c"):
    try:
        rank = int(params.get("rank", "1"))
    except ValueError:
        raise InvalidSystem(f"rank must be an integer, got {params.get('rank')!r}") from None
    rs = system_from_rank(params.get("type", "A"), rank)
    ring = parse_ring(params.get("ring", default_ring))
    if rs.family == "D" and not ring.is_commutative:
        raise InvalidSystem("type D needs a commutative ring")
    return rs, ring


def _error(e):
    logger.info("request rejected: %s", e)
    return JsonResponse({"error": str(e)}, status=400)


# =========================
# WORDS
# =========================

@csrf_exempt
@require_POST
def normalize_view(request):
    try:
        rs, ring = _system(request.POST)
        image = normalize(rs, ring, parse_word(rs, ring, request.POST.get("word", "")))
    except ParabraidError as e:
        return _error(e)
    return JsonResponse({
        "steinberg": format_steinberg(image.st),
        "braid": format_braid(image.br),
        "garside": str(garside_nf(rs, image.br)),
    })


@csrf_exempt
@require_POST
def eval_view(request):
    """Final strand colours of a painted word; `colors` is a comma separated list."""
    try:
        rs, ring = _system(request.POST)
        word = parse_word(rs, ring, request.POST.get("word", ""))
        names = [name.strip() for name in request.POST.get("colors", "").split(",") if name.strip()]
        colours = apply_colors(rs, ring, word, names)
    except ParabraidError as e:
        return _error(e)
    return JsonResponse({"colors": [to_text(colour) for colour in colours]})


@require_GET
def pure_gens_view(request):
    try:
        rs, _ = _system(request.GET, default_ring="int")
    except ParabraidError as e:
        return _error(e)
    return JsonResponse({
        "system": str(rs),
        "generators": [{"name": name, "word": format_braid(word)} for name, word in pure_braid_gens(rs)],
    })


# =========================
# SUITES
# =========================

@csrf_exempt
@require_POST
def check_view(request):
    """Runs one suite and returns its CheckReport; `prover` defaults to off here."""
    suite = request.POST.get("suite", "")
    if suite not in SUITES:
        return JsonResponse({"error": f"unknown suite {suite!r}", "suites": sorted(SUITES)}, status=400)
    try:
        rs, ring = _system(request.POST)
        report = run_suite(
            suite, rs, ring,
            prover=request.POST.get("prover") == "1",
            signed=request.POST.get("signed") == "1",
        )
    except ParabraidError as e:
        return _error(e)
    return JsonResponse(report.model_dump(mode="json"))
