from braids.braid import format_braid, pure_braid_gens
from braids.management.base import BraidCommand


class Command(BraidCommand):
    help = "Generators of the pure braid group in reflection form."

    def run(self, rs, ring, **options):
        for name, word in pure_braid_gens(rs):
            self.stdout.write(f"{name}: {format_braid(word)}")
