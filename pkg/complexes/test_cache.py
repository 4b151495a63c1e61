"""
Unit tests for the graph basis cache.
These tests don't require Redis - they use Django's in-memory cache.
"""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'ribbon.settings')
os.environ['USE_REDIS_CACHE'] = 'False'

import django
django.setup()

from django.core.cache import cache
from django.test import SimpleTestCase, override_settings

from core import ComplexKind
from complexes.cache import (
    BASIS_INDEX_KEY,
    basis_cache_key,
    cache_basis,
    get_cached_basis,
    invalidate_basis_cache,
)
from complexes.enumeration import GraphFilter
from complexes.utils import load_basis
from graphs.factories import LoopGraphFactory, SplitLoopGraphFactory


TEST_CACHES = {
    'default': {
        'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
        'LOCATION': 'test-cache',
        'KEY_PREFIX': 'ribbon',
    }
}


@override_settings(CACHES=TEST_CACHES)
class BasisCacheUnitTest(SimpleTestCase):
    """Unit tests for basis caching."""

    def setUp(self):
        cache.clear()

    def tearDown(self):
        cache.clear()

    def test_cache_key_names_the_filter(self):
        """Test that the key spells out the complex, (g, n), connectivity, defect limit and degree."""
        graph_filter = GraphFilter(kind=ComplexKind.KRGC, genus=1, marked=1, connected=True, defect_limit=2)
        self.assertEqual(basis_cache_key(3, graph_filter), 'graph_basis:krgc:g1:n1:c:d2:E3')

    def test_unfiltered_cache_key(self):
        """Test that a missing genus or marked count is a wildcard."""
        graph_filter = GraphFilter(defect_limit=1)
        self.assertEqual(basis_cache_key(2, graph_filter), 'graph_basis:srgc:g*:n*:a:d1:E2')

    def test_get_cached_basis_miss(self):
        """Test a cache miss returns None."""
        self.assertIsNone(get_cached_basis(1, GraphFilter(genus=0, marked=3)))

    def test_cache_and_get_basis(self):
        """Test that a cached basis comes back in the same order."""
        graph_filter = GraphFilter(genus=0, marked=3)
        basis = [LoopGraphFactory(), SplitLoopGraphFactory()]
        self.assertTrue(cache_basis(1, graph_filter, basis))
        self.assertEqual(get_cached_basis(1, graph_filter), basis)

    def test_cache_index_tracks_keys(self):
        """Test that every cached basis is listed in the index once."""
        graph_filter = GraphFilter(genus=0, marked=3)
        cache_basis(1, graph_filter, [LoopGraphFactory()])
        cache_basis(1, graph_filter, [LoopGraphFactory()])
        self.assertEqual(cache.get(BASIS_INDEX_KEY), [basis_cache_key(1, graph_filter)])

    def test_invalidate_basis_cache(self):
        """Test that invalidation removes every basis."""
        first, second = GraphFilter(genus=0, marked=3), GraphFilter(genus=1, marked=1)
        cache_basis(1, first, [LoopGraphFactory()])
        cache_basis(1, second, [SplitLoopGraphFactory()])
        self.assertTrue(invalidate_basis_cache())
        self.assertIsNone(get_cached_basis(1, first))
        self.assertIsNone(get_cached_basis(1, second))
        self.assertIsNone(cache.get(BASIS_INDEX_KEY))

    def test_load_basis_fills_cache(self):
        """Test that loading a basis stores it and a second load reads it back."""
        graph_filter = GraphFilter(genus=0, marked=3, connected=True)
        basis = load_basis(1, graph_filter)
        self.assertEqual(get_cached_basis(1, graph_filter), basis)
        self.assertEqual(load_basis(1, graph_filter), basis)
