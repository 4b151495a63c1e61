import json
import logging
from typing import List, Sequence

from django.core.management.base import BaseCommand, CommandError

from core import ComplexKind, ExitCode
from core.cli import RunConfig
from core.utils import CheckReport

logger = logging.getLogger(__name__)


def format_table(headers: Sequence[str], rows: List[Sequence[object]]) -> str:
    """Left-aligned plain text columns."""
    cells = [[str(cell) for cell in row] for row in [headers, *rows]]
    widths = [max(len(row[column]) for row in cells) for column in range(len(headers))]
    return '\n'.join('  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells)


class RibbonCommand(BaseCommand):
    """Shared options and output helpers."""

    requires_system_checks = []

    def add_complex_arguments(self, parser, marked_required: bool = False):
        parser.add_argument('--complex', choices=[value for value, _ in ComplexKind.CHOICES], default=ComplexKind.SRGC)
        parser.add_argument('--genus', type=int, default=None, required=marked_required)
        parser.add_argument('--marked', type=int, default=None, required=marked_required)
        parser.add_argument('--connected', action='store_true', help='Only connected graphs')

    def add_json_argument(self, parser):
        parser.add_argument('--json', action='store_true', help='Machine-readable output')

    def config(self, options) -> RunConfig:
        return RunConfig.from_options(self.name, options)

    @property
    def name(self) -> str:
        return self.__module__.rsplit('.', 1)[-1]

    def write_json(self, payload) -> None:
        self.stdout.write(json.dumps(payload, indent=2, sort_keys=True))

    def finish(self, report: CheckReport, as_json: bool = False) -> None:
        """Print a check report and fail with exit code 1 on the first failure."""
        if as_json:
            payload = {
                'suite': report.name,
                'status': 'PASS' if report.passed else 'FAIL',
                'checked': report.checked,
                'failures': [{'case': label, 'detail': detail} for label, detail in report.failures],
            }
            if report.cases:
                payload['cases'] = [
                    {'case': label, 'status': status, 'detail': detail} for label, status, detail in report.cases
                ]
            self.write_json(payload)
        else:
            if report.cases:
                self.stdout.write(format_table(('case', 'status', 'detail'), report.cases))
            self.stdout.write(report.summary())
        if not report.passed:
            label, detail = report.first_failure
            logger.error(f"{report.name} failed at {label}: {detail}")
            raise CommandError(f"First counterexample: {label} {detail}".rstrip(), returncode=ExitCode.VERIFICATION_FAILURE)
