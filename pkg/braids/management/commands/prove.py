from pathlib import Path

from django.core.management.base import CommandError

from braids.errors import NotFound, ParseError
from braids.management.base import USAGE, BraidCommand
from braids.parsing import parse_word
from braids.pbg import format_word
from braids.prover import derivation_to_record, format_rule, prove_equal, rule_set
from braids.ring import to_text


class Command(BraidCommand):
    help = "Search a derivation of '<w1> == <w2>' from the defining relations."

    def add_command_arguments(self, parser):
        parser.add_argument("equation")
        parser.add_argument("--out", help="write the derivation as JSON")
        parser.add_argument("--max-steps", type=int, default=None)
        parser.add_argument("--max-len", type=int, default=None)
        parser.add_argument("--no-shortcuts", dest="shortcuts", action="store_false")
        parser.add_argument("--rules", action="store_true", help="list the rules in search order and exit")

    def run(self, rs, ring, **options):
        if options["rules"]:
            for rule in rule_set(rs, ring, options["shortcuts"]):
                self.stdout.write(f"{rule.name}: {format_rule(rule)}")
            return
        left, sep, right = options["equation"].partition("==")
        if not sep:
            raise ParseError("expected '<w1> == <w2>'", offset=len(options["equation"].encode("utf-8")), expected=("'=='",))
        u = parse_word(rs, ring, left)
        v = parse_word(rs, ring, right)
        try:
            derivation = prove_equal(
                rs, ring, u, v,
                max_steps=options["max_steps"],
                max_len=options["max_len"],
                shortcuts=options["shortcuts"],
            )
        except NotFound as e:
            self.stdout.write(f"unproven: {e}")
            self.finish_status("unproven", str(e))
            return

        self.stdout.write(f"{format_word(u)} == {format_word(v)}: {len(derivation.steps)} steps")
        for i, step in enumerate(derivation.steps, 1):
            bindings = ", ".join(f"{name}={to_text(value)}" for name, value in step.bindings)
            self.stdout.write(f"{i:>3}. {step.rule} {step.orientation} at {step.position}" + (f" [{bindings}]" if bindings else ""))

        if options["out"]:
            record = derivation_to_record(rs, ring, derivation, options["shortcuts"])
            try:
                Path(options["out"]).write_text(record.model_dump_json(indent=2) + "\n", encoding="utf-8")
            except OSError as e:
                raise CommandError(f"cannot write {options['out']}: {e}", returncode=USAGE) from e
            self.stdout.write(f"written to {options['out']}")
