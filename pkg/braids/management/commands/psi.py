from braids.management.base import BraidCommand
from braids.parsing import parse_steinberg_word
from braids.pbg import format_word, psi
from braids.steinberg import SemidirectElem


class Command(BraidCommand):
    help = "psi image of a Steinberg word such as 'x{e1-e3}[a]'."

    def add_command_arguments(self, parser):
        parser.add_argument("word")

    def run(self, rs, ring, **options):
        letters = parse_steinberg_word(rs, ring, options["word"])
        self.stdout.write(format_word(psi(rs, ring, SemidirectElem(letters, ()))))
