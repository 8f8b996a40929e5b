from braids.management.base import BraidCommand
from braids.paint import draw_word
from braids.parsing import parse_word


class Command(BraidCommand):
    help = "ASCII diagram of a word, first letter on top."

    def add_command_arguments(self, parser):
        parser.add_argument("word")

    def run(self, rs, ring, **options):
        self.stdout.write(draw_word(rs, parse_word(rs, ring, options["word"])))
