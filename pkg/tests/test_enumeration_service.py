import pytest
from app.models.graph import Graph
from app.services.enumeration_service import EnumerationService
from app.services.graph6_service import Graph6Service
from app.services.isomorphism_service import IsomorphismService
from app.utils.exceptions import CapExceededError
from config.settings import Limits


def is_connected(g: Graph) -> bool:
    return g.is_connected()


def triangle_free(g: Graph) -> bool:
    return not any(g.masks[u] & g.masks[v] for u, v in g.edges())


@pytest.fixture
def enumeration():
    return EnumerationService()


class TestEnumerateGraphs:
    """Tests pour l'énumération sans isomorphes."""

    @pytest.mark.parametrize('n,expected', [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
    def test_counts(self, enumeration, n, expected):
        assert enumeration.count_graphs(n) == expected

    @pytest.mark.slow
    def test_count_seven(self, enumeration):
        assert enumeration.count_graphs(7) == 1044

    def test_no_duplicates(self, enumeration):
        iso = IsomorphismService()
        codes = [iso.canonical_code(g) for g in enumeration.enumerate_graphs(6)]

        assert len(set(codes)) == len(codes)

    @pytest.mark.parametrize('n', [3, 4, 5])
    def test_matches_labelled_oracle(self, enumeration, n):
        iso = IsomorphismService()
        fast = {iso.canonical_code(g) for g in enumeration.enumerate_graphs(n)}
        oracle = {iso.canonical_code(g) for g in enumeration.enumerate_labeled(n)}

        assert fast == oracle

    def test_filter_connected(self, enumeration):
        assert enumeration.count_graphs(4, filter=is_connected) == 6
        assert enumeration.count_graphs(5, filter=is_connected) == 21

    def test_hereditary_prune(self, enumeration):
        """Graphes sans triangle : l'élagage par niveau rejoint l'oracle étiqueté."""
        pruned = enumeration.count_graphs(5, prune=triangle_free)

        assert pruned == len(enumeration.enumerate_labeled(5, filter=triangle_free)) == 14

    def test_deterministic_order(self, enumeration):
        first = [Graph6Service.write_graph6(g) for g in enumeration.enumerate_graphs(5)]
        second = [Graph6Service.write_graph6(g) for g in enumeration.enumerate_graphs(5)]

        assert first == second

    def test_parallel_matches_sequential(self, enumeration):
        sequential = [Graph6Service.write_graph6(g) for g in enumeration.enumerate_graphs(6)]
        parallel = [Graph6Service.write_graph6(g) for g in enumeration.enumerate_graphs(6, jobs=2)]

        assert parallel == sequential

    def test_cap(self):
        enumeration = EnumerationService(Limits(enumeration_cap=5))

        with pytest.raises(CapExceededError):
            list(enumeration.enumerate_graphs(6))

    def test_labelled_oracle_cap(self, enumeration):
        with pytest.raises(CapExceededError):
            enumeration.enumerate_labeled(7)
