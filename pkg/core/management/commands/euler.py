from core.management.base import RibbonCommand, format_table
from complexes.utils import euler_table


class Command(RibbonCommand):
    help = 'Alternating sums of cell counts per (g, n)'

    def add_arguments(self, parser):
        parser.add_argument('--max-edges', type=int, required=True)
        self.add_complex_arguments(parser)
        self.add_json_argument(parser)

    def handle(self, *args, **options):
        config = self.config(options)
        table = euler_table(config.max_edges, config.graph_filter())
        degrees = list(range(1, config.max_edges + 1))
        if config.as_json:
            self.write_json([
                {'g': genus, 'n': marked, 'counts': {str(degree): counts.get(degree, 0) for degree in degrees}, 'euler': total}
                for (genus, marked), counts, total in table
            ])
            return
        self.stdout.write(format_table(
            ('g', 'n', *(f'E={degree}' for degree in degrees), 'euler'),
            [(genus, marked, *(counts.get(degree, 0) for degree in degrees), total) for (genus, marked), counts, total in table],
        ))
