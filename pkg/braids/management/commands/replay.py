from pathlib import Path

from django.core.management.base import CommandError
from pydantic import ValidationError

from braids.errors import ReplayError
from braids.management.base import CHECK_FAILED, PARSE, USAGE, BraidCommand
from braids.pbg import format_word
from braids.prover import derivation_from_record, replay
from braids.schemas import DerivationRecord


class Command(BraidCommand):
    help = "Re-validate a derivation file written by `prove --out`. The file fixes system and ring."

    def add_command_arguments(self, parser):
        parser.add_argument("path")

    def run(self, rs, ring, **options):
        try:
            text = Path(options["path"]).read_text(encoding="utf-8")
        except OSError as e:
            raise CommandError(f"cannot read {options['path']}: {e}", returncode=USAGE) from e
        try:
            record = DerivationRecord.model_validate_json(text)
        except ValidationError as e:
            raise CommandError(f"not a derivation file: {e}", returncode=PARSE) from e

        rs, ring, derivation, shortcuts = derivation_from_record(record)
        try:
            replay(rs, ring, derivation, shortcuts)
        except ReplayError as e:
            raise CommandError(f"replay failed: {e}", returncode=CHECK_FAILED) from e
        self.stdout.write(
            f"ok: {format_word(derivation.start)} == {format_word(derivation.end)} "
            f"in {len(derivation.steps)} steps on {rs} over {ring}"
        )
