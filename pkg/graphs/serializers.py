"""
Graph file format, one graph per record:

    E=2; sigma1=[(0,2),(1,3)]; vertices=[[cycle=[0,1,2,3]; g=0; n=0]]; orient=[0,1]

``sigma1`` lists the edges sorted by their first half-edge and ``orient``
gives the orientation as positions in that list. Chains are written one
term per line as ``<p/q> | <record>``.
"""
import re
from typing import List

from core.exceptions import GraphFormatError
from core.utils import format_rational, parse_rational
from graphs.structures import GraphChain, StableRibbonGraph, Vertex

RECORD_PATTERN = re.compile(
    r'^\s*E=(?P<edges>\d+);\s*sigma1=\[(?P<sigma1>[^\]]*)\];\s*vertices=\[(?P<vertices>.*)\];\s*orient=\[(?P<orient>[^\]]*)\]\s*$'
)
PAIR_PATTERN = re.compile(r'\(\s*(\d+)\s*,\s*(\d+)\s*\)')
VERTEX_PATTERN = re.compile(r'\[(?P<cycles>(?:\s*cycle=\[[\d,\s]*\]\s*,?)*)\s*;\s*g=(?P<genus>\d+)\s*;\s*n=(?P<boundary>\d+)\s*\]')
CYCLE_PATTERN = re.compile(r'cycle=\[([\d,\s]*)\]')
CHAIN_SEPARATOR = ' | '


def _integers(text: str) -> List[int]:
    return [int(part) for part in text.split(',') if part.strip()]


def format_vertex(vertex: Vertex) -> str:
    cycles = ','.join('cycle=[' + ','.join(str(half_edge) for half_edge in cycle) + ']' for cycle in vertex.cycles)
    return f'[{cycles}; g={vertex.genus}; n={vertex.boundary}]'


def format_graph(graph: StableRibbonGraph) -> str:
    pairs = sorted(graph.edges, key=min)
    position = {frozenset(pair): index for index, pair in enumerate(pairs)}
    sigma1 = ','.join(f'({min(pair)},{max(pair)})' for pair in pairs)
    vertices = ','.join(format_vertex(vertex) for vertex in graph.vertices)
    orient = ','.join(str(position[frozenset(pair)]) for pair in graph.edges)
    return f'E={graph.edge_count}; sigma1=[{sigma1}]; vertices=[{vertices}]; orient=[{orient}]'


def parse_graph(text: str) -> StableRibbonGraph:
    match = RECORD_PATTERN.match(text)
    if not match:
        raise GraphFormatError(f"Invalid graph record: {text!r}")
    pairs = [(int(first), int(second)) for first, second in PAIR_PATTERN.findall(match.group('sigma1'))]
    if len(pairs) != int(match.group('edges')):
        raise GraphFormatError(f"E={match.group('edges')} but sigma1 lists {len(pairs)} edges")
    orient = _integers(match.group('orient'))
    if sorted(orient) != list(range(len(pairs))):
        raise GraphFormatError(f"orient={orient} is not an ordering of the {len(pairs)} edges")
    vertices = tuple(
        Vertex(
            cycles=tuple(tuple(_integers(cycle)) for cycle in CYCLE_PATTERN.findall(found.group('cycles'))),
            genus=int(found.group('genus')),
            boundary=int(found.group('boundary')),
        )
        for found in VERTEX_PATTERN.finditer(match.group('vertices'))
    )
    return StableRibbonGraph(edges=tuple(pairs[index] for index in orient), vertices=vertices)


def parse_graphs(text: str) -> List[StableRibbonGraph]:
    return [parse_graph(line) for line in text.splitlines() if line.strip() and not line.lstrip().startswith('#')]


def format_chain(chain: GraphChain) -> str:
    if not chain:
        return '0'
    return '\n'.join(
        f'{format_rational(value)}{CHAIN_SEPARATOR}{format_graph(graph)}'
        for graph, value in chain.sorted_items()
    )


def parse_chain(text: str) -> GraphChain:
    chain = GraphChain()
    for line in text.splitlines():
        if not line.strip() or line.strip() == '0' or line.lstrip().startswith('#'):
            continue
        coefficient, separator, record = line.partition(CHAIN_SEPARATOR.strip())
        if not separator:
            raise GraphFormatError(f"Invalid chain line: {line!r}")
        chain.add_term(parse_graph(record), parse_rational(coefficient))
    return chain


def graph_to_dict(graph: StableRibbonGraph) -> dict:
    """JSON-friendly form used by the ``--json`` command output."""
    return {
        'edges': [list(pair) for pair in graph.edges],
        'vertices': [
            {'cycles': [list(cycle) for cycle in vertex.cycles], 'g': vertex.genus, 'n': vertex.boundary}
            for vertex in graph.vertices
        ],
        'record': format_graph(graph),
    }
