"""
Cache of enumerated graph complex bases.

A basis depends only on the edge count and the filter, so each
(complex, g, n, connected, defect limit, E) combination is one cache entry
holding the canonical graph records in basis order.
"""
import logging
from typing import List, Optional

from django.conf import settings
from django.core.cache import cache

from graphs.serializers import format_graph, parse_graph

logger = logging.getLogger(__name__)

BASIS_CACHE_PREFIX = 'graph_basis'
BASIS_INDEX_KEY = 'graph_basis:index'

CACHE_TIMEOUT = getattr(settings, 'RIBBON_CACHE_TIMEOUT', 3600)


def basis_cache_key(edge_count: int, graph_filter) -> str:
    genus = '*' if graph_filter.genus is None else graph_filter.genus
    marked = '*' if graph_filter.marked is None else graph_filter.marked
    connected = 'c' if graph_filter.connected else 'a'
    return f'{BASIS_CACHE_PREFIX}:{graph_filter.kind}:g{genus}:n{marked}:{connected}:d{graph_filter.limit}:E{edge_count}'


def get_cached_basis(edge_count: int, graph_filter) -> Optional[list]:
    """
    Get a cached basis.

    Returns:
        List of canonical graphs if cached, None otherwise
    """
    key = basis_cache_key(edge_count, graph_filter)
    try:
        records = cache.get(key)
        if records is not None:
            logger.debug(f"Cache HIT for {key}")
            return [parse_graph(record) for record in records]
        logger.debug(f"Cache MISS for {key}")
        return None
    except Exception as e:
        logger.error(f"Cache read error: {str(e)}")
        return None


def cache_basis(edge_count: int, graph_filter, basis: list) -> bool:
    """
    Cache a basis as graph records.

    Returns:
        True if cached successfully
    """
    key = basis_cache_key(edge_count, graph_filter)
    try:
        cache.set(key, [format_graph(graph) for graph in basis], timeout=CACHE_TIMEOUT)
        keys: List[str] = cache.get(BASIS_INDEX_KEY) or []
        if key not in keys:
            cache.set(BASIS_INDEX_KEY, keys + [key], timeout=CACHE_TIMEOUT)
        logger.debug(f"Cached {len(basis)} graphs under {key}")
        return True
    except Exception as e:
        logger.error(f"Cache write error: {str(e)}")
        return False


def invalidate_basis_cache() -> bool:
    """Clear every cached basis."""
    try:
        keys = cache.get(BASIS_INDEX_KEY) or []
        cache.delete_many(keys + [BASIS_INDEX_KEY])
        logger.info(f"Graph basis cache invalidated ({len(keys)} entries)")
        return True
    except Exception as e:
        logger.error(f"Cache invalidation error: {str(e)}")
        return False
