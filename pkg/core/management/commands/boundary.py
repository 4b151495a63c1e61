from django.core.exceptions import ValidationError

from core import ComplexKind
from core.cli import usage_error
from core.exceptions import GraphFormatError, MalformedGraphError
from core.management.base import RibbonCommand
from core.utils import format_rational
from graphs.contraction import graph_boundary, project
from graphs.serializers import format_chain, format_graph, graph_to_dict, parse_graphs
from graphs.validators import validate_graph


class Command(RibbonCommand):
    help = 'Print the boundary of every graph in a graph file'

    def add_arguments(self, parser):
        parser.add_argument('graph_file')
        parser.add_argument('--complex', choices=[value for value, _ in ComplexKind.CHOICES], default=ComplexKind.SRGC)
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        config = self.config(options)
        try:
            with open(options['graph_file']) as handle:
                graphs = parse_graphs(handle.read())
            for graph in graphs:
                validate_graph(graph)
        except OSError as error:
            raise usage_error(f"Cannot read {options['graph_file']}: {error}")
        except (GraphFormatError, MalformedGraphError) as error:
            raise usage_error(str(error))
        except ValidationError as error:
            raise usage_error(f"Invalid graph ({error.code}): {error.messages[0]}")

        results = [(graph, project(graph_boundary(graph), config.complex)) for graph in graphs]
        if config.as_json:
            self.write_json([
                {
                    'graph': graph_to_dict(graph),
                    'boundary': [
                        {'coefficient': format_rational(value), **graph_to_dict(image)}
                        for image, value in chain.sorted_items()
                    ],
                }
                for graph, chain in results
            ])
            return
        for graph, chain in results:
            self.stdout.write(f'# d {format_graph(graph)}')
            self.stdout.write(format_chain(chain))
