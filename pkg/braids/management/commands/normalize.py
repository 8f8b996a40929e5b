from braids.braid import format_braid, garside_nf
from braids.management.base import BraidCommand
from braids.parsing import parse_word
from braids.pbg import normalize
from braids.steinberg import format_steinberg


class Command(BraidCommand):
    help = "Image of a parametrized word in St x| Br: folded Steinberg word, braid word, Garside normal form."

    def add_command_arguments(self, parser):
        parser.add_argument("word")

    def run(self, rs, ring, **options):
        word = parse_word(rs, ring, options["word"])
        image = normalize(rs, ring, word)
        self.stdout.write(f"steinberg: {format_steinberg(image.st)}")
        self.stdout.write(f"braid: {format_braid(image.br)}")
        self.stdout.write(f"garside: {garside_nf(rs, image.br)}")
