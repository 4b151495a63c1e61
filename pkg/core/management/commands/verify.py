import logging

from complexes.checks import (
    check_boundary_squared,
    check_hopf_boundary,
    check_projections,
    generators,
    run_enumeration_suite,
    run_homology_oracle_suite,
)
from core import VerifySuite
from core.cli import usage_error
from core.management.base import RibbonCommand
from core.utils import CheckReport
from lambda_ce.checks import run_lambda_projection_suite, run_lambda_suite
from wick.checks import run_chain_map_suite, run_hopf_suite
from words.checks import check_bracket_oracle, run_bialgebra_suite, run_divergence_suite
from words.structures import SymplecticSpace

logger = logging.getLogger(__name__)


def run_suite(
    suite: str,
    space: SymplecticSpace,
    max_edges: int,
    max_length: int,
    max_factors: int = 3,
    max_total_length: int = 6,
) -> CheckReport:
    """
    ``max_length`` bounds single cyclic words in the word checks;
    ``max_factors`` and ``max_total_length`` bound the Chevalley-Eilenberg monomials.
    """
    report = CheckReport(suite)
    if suite == VerifySuite.D2:
        report.merge(check_boundary_squared(generators(max_edges)))
        report.merge(run_lambda_suite(space, max_factors, max_total_length))
    elif suite == VerifySuite.BIALGEBRA:
        report.merge(run_bialgebra_suite(space, max_length))
    elif suite == VerifySuite.DIVERGENCE:
        report.merge(run_divergence_suite(space, max_length))
    elif suite == VerifySuite.BRACKET_ORACLE:
        report.merge(check_bracket_oracle(space, max_length))
    elif suite == VerifySuite.CHAINMAP:
        report.merge(run_chain_map_suite(max_edges))
    elif suite == VerifySuite.HOPF:
        report.merge(run_hopf_suite(max_edges))
        report.merge(check_hopf_boundary(generators(min(max_edges, 2))))
    elif suite == VerifySuite.PROJECTIONS:
        report.merge(check_projections(generators(max_edges)))
        report.merge(run_lambda_projection_suite(space, max_factors, max_total_length))
    elif suite == VerifySuite.ENUMERATION:
        report.merge(run_enumeration_suite(max_edges))
    elif suite == VerifySuite.HOMOLOGY_ORACLE:
        report.merge(run_homology_oracle_suite(max_edges))
    return report


class Command(RibbonCommand):
    help = 'Run one exhaustive verification suite'

    def add_arguments(self, parser):
        parser.add_argument('suite', choices=[value for value, _ in VerifySuite.CHOICES])
        parser.add_argument('--max-edges', type=int, default=3)
        parser.add_argument('--max-length', type=int, default=4, help='Longest cyclic word in the word checks')
        parser.add_argument('--max-factors', type=int, default=3, help='Most factors of a Chevalley-Eilenberg monomial')
        parser.add_argument('--max-total-length', type=int, default=6, help='Total word length of a Chevalley-Eilenberg monomial')
        parser.add_argument('--dimension', type=int, default=None, help='Dimension of the symplectic space')
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        config = self.config(options)
        for option in ('max_length', 'max_factors', 'max_total_length'):
            if options[option] < 1:
                raise usage_error(f"--{option.replace('_', '-')} must be positive, got {options[option]}")
        space = SymplecticSpace(config.space_dimension)
        logger.info(
            "Running %s on edges<=%d length<=%d factors<=%d total<=%d over dim %d",
            options['suite'], config.max_edges, options['max_length'],
            options['max_factors'], options['max_total_length'], space.dim,
        )
        report = run_suite(
            options['suite'], space, config.max_edges, options['max_length'],
            options['max_factors'], options['max_total_length'],
        )
        self.finish(report, config.as_json)
