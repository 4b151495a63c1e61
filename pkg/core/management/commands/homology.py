from django.conf import settings
from django.core.management.base import CommandError

from complexes.utils import build_slice, dense_rank, emit_matrices, homology_ranks, sparse_rank
from core import ExitCode
from core.cli import usage_error
from core.exceptions import IncompleteDegreeRange
from core.management.base import RibbonCommand, format_table


class Command(RibbonCommand):
    help = 'Betti numbers of a (g, n) slice of a graph complex'

    def add_arguments(self, parser):
        self.add_complex_arguments(parser, marked_required=True)
        parser.add_argument('--max-edges', type=int, default=None, help='Defaults to the top degree of the slice')
        parser.add_argument('--emit-matrices', metavar='DIR', default=None)
        parser.add_argument('--dense-check', action='store_true', help='Compare every rank with dense elimination')
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        config = self.config(options)
        graph_filter = config.graph_filter()
        max_edges = config.max_edges or min(max(graph_filter.top_degree, 1), settings.RIBBON_MAX_EDGES)
        try:
            complex_slice = build_slice(graph_filter, max_edges)
            betti = dict(homology_ranks(complex_slice, allow_truncated=True))
        except IncompleteDegreeRange as error:
            raise usage_error(str(error))

        ranks = {degree: sparse_rank(matrix) for degree, matrix in complex_slice.matrices.items()}
        if options['dense_check']:
            dense = {degree: dense_rank(matrix) for degree, matrix in complex_slice.matrices.items()}
            if dense != ranks:
                raise CommandError(f"Sparse ranks {ranks} differ from dense ranks {dense}", returncode=ExitCode.VERIFICATION_FAILURE)

        if config.output:
            for path in emit_matrices(complex_slice, config.output):
                self.stderr.write(f'wrote {path}')

        rows = [
            (degree, complex_slice.dimension(degree), ranks.get(degree, 0), betti[degree])
            for degree in complex_slice.degrees
        ]
        if config.as_json:
            self.write_json({
                'complex': config.complex,
                'g': config.genus,
                'n': config.marked,
                'connected': config.connected,
                'max_edges': max_edges,
                'complete': complex_slice.is_complete,
                'augmented': False,
                'degrees': [{'degree': d, 'dim': dim, 'rank': rank, 'betti': b} for d, dim, rank, b in rows],
            })
            return
        self.stdout.write(f'# {complex_slice.describe()}')
        self.stdout.write('# unaugmented graph complex homology, no degree-0 term')
        if not complex_slice.is_complete:
            self.stdout.write(
                f'# truncated below the top degree {graph_filter.top_degree}: chain groups above E={max_edges} are taken to be zero'
            )
        self.stdout.write(format_table(('degree', 'dim', 'rank', 'betti'), rows))
