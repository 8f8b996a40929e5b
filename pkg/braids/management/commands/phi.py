from braids.braid import format_braid
from braids.management.base import BraidCommand
from braids.parsing import parse_word
from braids.pbg import phi
from braids.steinberg import format_steinberg


class Command(BraidCommand):
    help = "phi image of a parametrized word (unfolded Steinberg part and braid part)."

    def add_command_arguments(self, parser):
        parser.add_argument("word")
        parser.add_argument("--signed", action="store_true", help="use the signed Weyl action")

    def run(self, rs, ring, **options):
        image = phi(rs, ring, parse_word(rs, ring, options["word"]), signed=options["signed"])
        self.stdout.write(f"steinberg: {format_steinberg(image.st)}")
        self.stdout.write(f"braid: {format_braid(image.br)}")
