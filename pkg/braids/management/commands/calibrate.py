from pathlib import Path

from django.core.management.base import CommandError

import braids
from braids.management.base import CHECK_FAILED, BraidCommand
from braids.rootsys import RootSystem, oriented_pairs, root_to_text, simple_root
from braids.steinberg import (
    calibrate,
    committed_table,
    eta_table,
    is_sign_free,
    render_sign_module,
    structure_constant,
)

COMMITTED_RANKS = (3, 4, 5, 6)


class Command(BraidCommand):
    help = "Sign calibration of the D_n matrix model: show, --check against the committed table, or --write it."

    def add_command_arguments(self, parser):
        mode = parser.add_mutually_exclusive_group()
        mode.add_argument("--check", action="store_true", help="verify the committed table is reproduced and stable")
        mode.add_argument("--write", action="store_true", help="regenerate braids/steinberg_signs.py")

    def run(self, rs, ring, **options):
        if options["check"]:
            self.check_committed()
        elif options["write"]:
            self.write_committed()
        else:
            self.show(rs)

    def show(self, rs):
        table = committed_table(rs)
        self.stdout.write(f"{rs}: flips {', '.join(table.flip_texts()) or 'none'}")
        for x, y in oriented_pairs(rs, 3):
            alpha, beta = simple_root(rs, x), simple_root(rs, y)
            self.stdout.write(f"N({root_to_text(alpha)}, {root_to_text(beta)}) = {structure_constant(rs, alpha, beta, table):+d}")
        negative = sum(1 for eta in eta_table(rs, table).values() if eta < 0)
        self.stdout.write(f"sign_free: {str(is_sign_free(rs, table)).lower()} ({negative} negative conjugation signs)")

    def check_committed(self):
        bad = []
        for n in COMMITTED_RANKS:
            rs = RootSystem("D", n)
            table = committed_table(rs)
            if calibrate(rs) != table or calibrate(rs, table) != table:
                bad.append(str(rs))
            self.stdout.write(f"{rs}: {'ok' if str(rs) not in bad else 'differs'}")
        if bad:
            raise CommandError(f"committed sign table out of date for {', '.join(bad)}", returncode=CHECK_FAILED)

    def write_committed(self):
        tables = [calibrate(RootSystem("D", n)) for n in COMMITTED_RANKS]
        target = Path(braids.__file__).resolve().parent / "steinberg_signs.py"
        target.write_text(render_sign_module(tables), encoding="utf-8")
        committed_table.cache_clear()
        self.stdout.write(f"written {target}")
