import pytest
from app.models.graph import Graph
from app.models.reports import PerfectPartition
from app.services.generator_service import GeneratorService
from app.services.perfection_service import PerfectionService
from app.utils.exceptions import CapExceededError, TriangleFoundError, ValidationError
from config.settings import Limits


@pytest.fixture
def perfection(limits):
    return PerfectionService(limits)


class TestPerfectChromaticNumber:
    """Tests pour le nombre chromatique parfait."""

    def test_perfect_graph(self, perfection):
        value, partition = perfection.perfect_chromatic_number(GeneratorService.complete(4))

        assert value == 1
        assert partition.classes == [(0, 1, 2, 3)]

    def test_empty_graph(self, perfection):
        assert perfection.perfect_chromatic_number(Graph.empty(0))[0] == 0

    @pytest.mark.parametrize('fixture', ['c5', 'antihole7', 'grotzsch', 'petersen'])
    def test_imperfect_graphs_need_two(self, perfection, request, fixture):
        g = request.getfixturevalue(fixture)
        value, partition = perfection.perfect_chromatic_number(g)

        assert value == 2
        assert len(partition) == 2
        assert perfection.verify_partition(g, partition)

    def test_bounds(self, perfection, antihole7):
        assert perfection.chi_p_bounds(antihole7) == (2, 2)

    def test_bounds_of_empty_graph(self, perfection):
        with pytest.raises(ValidationError):
            perfection.chi_p_bounds(Graph.empty(0))

    def test_verify_partition_rejects_bad_partitions(self, perfection, c5):
        assert not perfection.verify_partition(c5, PerfectPartition([tuple(range(5))]))
        assert not perfection.verify_partition(c5, PerfectPartition([(0, 1), (2, 3)]))
        assert not perfection.verify_partition(c5, PerfectPartition([(0, 1, 2), (2, 3, 4)]))
        assert perfection.verify_partition(c5, PerfectPartition([(0, 1, 2), (3, 4)]))

    def test_triangle_free(self, perfection, grotzsch):
        assert perfection.chi_p_triangle_free(grotzsch) == 2
        assert perfection.chi_p_triangle_free(GeneratorService.cycle(6)) == 1

    def test_triangle_found(self, perfection):
        with pytest.raises(TriangleFoundError):
            perfection.chi_p_triangle_free(GeneratorService.complete(3))

    def test_cap(self):
        perfection = PerfectionService(Limits(perfect_cap=6))

        with pytest.raises(CapExceededError):
            perfection.perfect_chromatic_number(GeneratorService.cycle(7))


class TestNice:
    """Tests pour les graphes « nice »."""

    def test_perfect_is_nice(self, perfection):
        report = perfection.is_nice(GeneratorService.complete_bipartite(3, 3))

        assert report.is_nice
        assert report.reason == 'perfect'

    def test_small_chromatic_number(self, perfection, c5):
        assert perfection.is_nice(c5).reason == 'chi_at_most_3'

    def test_grotzsch_is_not_nice(self, perfection, grotzsch):
        report = perfection.is_nice(grotzsch)

        assert not report.is_nice
        assert report.witness == tuple(range(11))
        assert (report.witness_chi, report.witness_omega) == (4, 2)

    def test_antihole_is_nice(self, perfection, antihole7):
        report = perfection.is_nice(antihole7)

        assert report.is_nice
        assert report.reason == 'subgraph_scan'
        assert report.subgraphs_checked > 0

    def test_line_graph_is_nice(self, perfection):
        g = GeneratorService.line_graph(GeneratorService.complete(5))

        assert perfection.is_nice(g).is_nice

    def test_line_graph_of_k6_with_raised_cap(self):
        """L(K_6) a 15 sommets : la borne par défaut le refuse, une borne relevée le décide."""
        g = GeneratorService.line_graph(GeneratorService.complete(6))

        with pytest.raises(CapExceededError):
            PerfectionService(Limits()).is_nice(g)
        report = PerfectionService(Limits(nice_cap=15, timeout=120.0)).is_nice(g)

        assert g.n == 15
        assert report.is_nice
        assert report.subgraphs_checked > 0

    def test_cap(self):
        perfection = PerfectionService(Limits(nice_cap=6))

        with pytest.raises(CapExceededError):
            perfection.is_nice(GeneratorService.cycle(7))


class TestLineGraphsOfComplete:
    """Tests pour L(K_n) et son complémentaire."""

    def test_small_line_graphs_are_perfect(self, perfection):
        assert perfection.chi_p_of_line_complete(3) == 1
        assert perfection.chi_p_of_line_complete(4) == 1

    def test_line_complete_bounds(self, perfection):
        with pytest.raises(ValidationError):
            perfection.chi_p_of_line_complete(1)
        with pytest.raises(CapExceededError):
            PerfectionService(Limits(line_complete_cap=4)).chi_p_of_line_complete(5)

    @pytest.mark.parametrize('n', [4, 5, 6])
    def test_complement_report(self, perfection, n):
        report = perfection.line_complete_complement_report(n)

        assert report.matches
        assert report.chi == n - 2

    def test_complement_report_minimum(self, perfection):
        with pytest.raises(ValidationError):
            perfection.line_complete_complement_report(3)
