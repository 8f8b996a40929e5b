from braids.management.base import BraidCommand
from braids.paint import apply_colors, paint_word
from braids.parsing import parse_word
from braids.ring import to_text
from braids.steinberg import format_matrix


class Command(BraidCommand):
    help = "Painted-braid action of a word: final strand colours with --colors, else the matrix."

    def add_command_arguments(self, parser):
        parser.add_argument("word")
        parser.add_argument("--colors", help="comma separated colour symbols, one per strand")

    def run(self, rs, ring, **options):
        word = parse_word(rs, ring, options["word"])
        if options["colors"]:
            names = [name.strip() for name in options["colors"].split(",") if name.strip()]
            colours = apply_colors(rs, ring, word, names)
            self.stdout.write(", ".join(to_text(colour) for colour in colours))
            return
        self.stdout.write(format_matrix(paint_word(rs, ring, word).matrix))
