"""
Command-line entry point.

``run(argv)`` dispatches to the management commands of the project and turns
their outcome into an exit code: 0 when everything passed, 1 for a failed
verification, 2 for arguments that cannot be used.
"""
import logging
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError

from core import ComplexKind, ExitCode

logger = logging.getLogger(__name__)

COMMANDS = ('enumerate', 'boundary', 'homology', 'verify', 'euler')


def usage_error(message: str) -> CommandError:
    return CommandError(message, returncode=ExitCode.USAGE_ERROR)


@dataclass(frozen=True)
class RunConfig:
    """Validated options shared by the commands; outputs are always deterministic."""

    command: str
    complex: str = ComplexKind.SRGC
    genus: Optional[int] = None
    marked: Optional[int] = None
    connected: bool = False
    max_edges: Optional[int] = None
    dimension: Optional[int] = None
    output: Optional[str] = None
    as_json: bool = False

    @classmethod
    def from_options(cls, command: str, options: dict) -> 'RunConfig':
        config = cls(
            command=command,
            complex=options.get('complex') or ComplexKind.SRGC,
            genus=options.get('genus'),
            marked=options.get('marked'),
            connected=bool(options.get('connected')),
            max_edges=options.get('max_edges', options.get('edges')),
            dimension=options.get('dimension'),
            output=options.get('emit_matrices'),
            as_json=bool(options.get('json')),
        )
        config.validate()
        return config

    def validate(self) -> None:
        if self.complex not in dict(ComplexKind.CHOICES):
            raise usage_error(f"Unknown complex: {self.complex}")
        if self.max_edges is not None:
            if self.max_edges < 1:
                raise usage_error(f"The number of edges must be positive, got {self.max_edges}")
            if self.max_edges > settings.RIBBON_MAX_EDGES:
                raise usage_error(f"{self.max_edges} edges exceed RIBBON_MAX_EDGES={settings.RIBBON_MAX_EDGES}")
        if self.genus is not None and self.genus < 0:
            raise usage_error(f"The genus must be nonnegative, got {self.genus}")
        if self.marked is not None and self.marked < 1:
            raise usage_error(f"The number of marked points must be positive, got {self.marked}")
        if self.dimension is not None and self.dimension < 1:
            raise usage_error(f"The dimension must be positive, got {self.dimension}")

    @property
    def space_dimension(self) -> int:
        return self.dimension or settings.RIBBON_DEFAULT_DIMENSION

    def graph_filter(self):
        from complexes.enumeration import GraphFilter
        return GraphFilter(kind=self.complex, genus=self.genus, marked=self.marked, connected=self.connected)


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv: List[str] = list(argv)
    if not argv or argv[0] not in COMMANDS:
        stderr.write(f"usage: ribbon {{{'|'.join(COMMANDS)}}} [options]\n")
        return ExitCode.USAGE_ERROR
    try:
        call_command(argv[0], *argv[1:], stdout=stdout, stderr=stderr)
    except CommandError as error:
        stderr.write(f"{error}\n")
        # argparse failures surface as CommandError("Error: ...") outside a terminal
        if str(error).startswith('Error:'):
            return ExitCode.USAGE_ERROR
        return error.returncode
    return ExitCode.SUCCESS
