"""
Shared plumbing of the engine commands: system and ring flags, exit codes.

Exit codes:
- 1  usage (bad system, ring, option combination)
- 2  parse error in a word or ring expression
- 3  a check failed or a derivation did not replay
- 4  only unproven results (0 when PARABRAID_UNPROVEN_PASSES=1)
"""
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from braids.errors import InvalidSystem, ParabraidError, ParseError
from braids.parsing import parse_ring
from braids.rootsys import system_from_rank

logger = logging.getLogger(__name__)

USAGE = 1
PARSE = 2
CHECK_FAILED = 3
UNPROVEN = 4


class BraidCommand(BaseCommand):
    default_family = "A"
    default_rank = 1
    default_ring = "poly:a,b,c"

    def add_arguments(self, parser):
        parser.add_argument("--type", dest="family", choices=("A", "D"), default=self.default_family)
        parser.add_argument("--rank", type=int, default=self.default_rank, help="Lie rank (A_r has r + 1 strands)")
        parser.add_argument("--ring", dest="ring_spec", default=self.default_ring, help="int | mod:m | ideal:g,m | poly:a,b[,noncomm][,modM]")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            rs = system_from_rank(options["family"], options["rank"])
            ring = parse_ring(options["ring_spec"])
            if rs.family == "D" and not ring.is_commutative:
                raise InvalidSystem("type D needs a commutative ring")
            self.run(rs, ring, **options)
        except ParseError as e:
            raise CommandError(str(e), returncode=PARSE) from e
        except ParabraidError as e:
            raise CommandError(str(e), returncode=USAGE) from e

    def run(self, rs, ring, **options):
        raise NotImplementedError

    def finish_status(self, status, message):
        """Exit code for a pass / fail / unproven outcome."""
        if status == "fail":
            raise CommandError(message, returncode=CHECK_FAILED)
        if status == "unproven" and not settings.PARABRAID_UNPROVEN_PASSES:
            raise CommandError(message, returncode=UNPROVEN)
