import json
import sys
from functools import partial

from django.core.management.base import CommandError
from tqdm import tqdm

from braids.management.base import USAGE, BraidCommand
from braids.schemas import CheckReport
from braids.verify import SUITES, run_suite


class Command(BraidCommand):
    help = "Run a verification suite and print its report."

    def add_command_arguments(self, parser):
        parser.add_argument("suite", nargs="?", choices=sorted(SUITES))
        parser.add_argument("--format", choices=("text", "json"), default="text")
        parser.add_argument("--schema", action="store_true", help="print the JSON schema of reports and exit")
        parser.add_argument("--no-prover", dest="prover", action="store_false")
        parser.add_argument("--signed", action="store_true", help="signed Weyl action in paint_vs_phi")
        parser.add_argument("--max-steps", type=int, default=None, help="bound for each certification attempt")

    def run(self, rs, ring, **options):
        if options["schema"]:
            self.stdout.write(json.dumps(CheckReport.model_json_schema(), indent=2, sort_keys=True))
            return
        if not options["suite"]:
            raise CommandError("name a suite or pass --schema", returncode=USAGE)

        progress = partial(tqdm, file=sys.stderr, leave=False, disable=options["verbosity"] < 2)
        report = run_suite(
            options["suite"], rs, ring,
            prover=options["prover"],
            signed=options["signed"],
            max_steps=options["max_steps"],
            progress=progress,
        )

        if options["format"] == "json":
            self.stdout.write(report.model_dump_json(indent=2))
        else:
            for check in report.checks:
                line = f"{check.status:<9}{check.id}"
                if check.witness:
                    line += f"  {check.witness}"
                self.stdout.write(line)
            counts = ", ".join(f"{count} {status}" for status, count in sorted(report.counts().items()))
            self.stdout.write(f"{report.suite} on {rs} over {ring}: {report.status} ({counts}) in {report.elapsed_ms} ms")

        self.finish_status(report.status, f"suite {report.suite}: {report.status}")
