from complexes.enumeration import enumerate_graphs
from core.cli import usage_error
from core.management.base import RibbonCommand, format_table
from graphs.canonical import canonical_form
from graphs.serializers import format_graph, graph_to_dict
from graphs.utils import total_g_n


class Command(RibbonCommand):
    help = 'List one canonical graph per isomorphism class with a given number of edges'

    def add_arguments(self, parser):
        parser.add_argument('--edges', type=int, required=True)
        self.add_complex_arguments(parser)
        parser.add_argument('--include-zero', action='store_true', help='Also list classes with an odd automorphism')
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        config = self.config(options)
        try:
            basis = enumerate_graphs(config.max_edges, config.graph_filter(), include_zero=options['include_zero'])
        except ValueError as error:
            raise usage_error(str(error))

        rows = []
        for graph in basis:
            graph_class = canonical_form(graph)
            genus, marked = total_g_n(graph)
            rows.append((graph_class, genus, marked))

        if config.as_json:
            self.write_json([
                {
                    **graph_to_dict(graph_class.graph),
                    'digest': graph_class.digest,
                    'automorphisms': graph_class.automorphism_count,
                    'zero': graph_class.is_zero,
                    'g': genus,
                    'n': marked,
                }
                for graph_class, genus, marked in rows
            ])
            return
        self.stdout.write(f'# {config.complex} E={config.max_edges}: {len(basis)} classes')
        self.stdout.write(format_table(
            ('#', 'digest', 'aut', 'g', 'n', 'graph'),
            [
                (index, graph_class.digest, graph_class.automorphism_count, genus, marked, format_graph(graph_class.graph))
                for index, (graph_class, genus, marked) in enumerate(rows)
            ],
        ))
