import pytest
import networkx as nx
from app.models.graph import Graph, disjoint_union, join, substitute
from app.services.generator_service import GeneratorService
from app.services.isomorphism_service import IsomorphismService
from app.utils.exceptions import ValidationError


class TestBasicFamilies:
    """Tests pour les familles élémentaires."""

    def test_cycle(self):
        g = GeneratorService.cycle(5)

        assert g.n == 5
        assert g.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        assert g.edge_count() == 5
        assert g.degrees() == [2] * 5

    def test_cycle_minimum(self):
        with pytest.raises(ValidationError):
            GeneratorService.cycle(2)

    def test_path_and_complete(self):
        assert GeneratorService.path(1).edge_count() == 0
        assert GeneratorService.path(4).edges() == [(0, 1), (1, 2), (2, 3)]
        assert GeneratorService.complete(5).edge_count() == 10

    def test_complete_bipartite(self):
        g = GeneratorService.complete_bipartite(2, 3)

        assert g.edge_count() == 6
        assert g.is_stable([0, 1]) and g.is_stable([2, 3, 4])

    def test_antihole_five_is_a_cycle(self):
        iso = IsomorphismService()

        assert iso.are_isomorphic(GeneratorService.antihole(5), GeneratorService.cycle(5))


class TestConstructions:
    """Tests pour les constructions dérivées."""

    def test_line_graph_of_complete(self):
        """L(K_n) a n(n-1)/2 sommets, chacun de degré 2(n-2)."""
        g = GeneratorService.line_graph(GeneratorService.complete(5))

        assert g.n == 10
        assert g.degrees() == [6] * 10

    def test_line_graph_vertex_order(self):
        """Les sommets de L(g) suivent l'ordre lexicographique des arêtes de g."""
        g = GeneratorService.line_graph(GeneratorService.path(4))

        assert g.edges() == [(0, 1), (1, 2)]

    def test_line_graph_of_hexagon(self):
        iso = IsomorphismService()

        assert iso.are_isomorphic(GeneratorService.line_graph(GeneratorService.cycle(6)),
                                  GeneratorService.cycle(6))

    def test_mycielskian_labels(self):
        """mycielskian(K_2) : copies 2 et 3, sommet central 4 ; on obtient C_5."""
        g = GeneratorService.mycielskian(GeneratorService.complete(2))

        assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 4), (3, 4)]

    def test_mycielskian_sizes(self):
        g = GeneratorService.mycielskian(GeneratorService.cycle(5))

        assert g.n == 11
        assert g.edge_count() == 20

    def test_grotzsch_degrees(self):
        """Sommets du pentagone de degré 4, copies de degré 3, centre de degré 5."""
        g = GeneratorService.grotzsch()

        assert g.degrees() == [4] * 5 + [3] * 5 + [5]
        assert not any(g.masks[u] & g.masks[v] for u, v in g.edges())

    def test_tree_T(self):
        t1 = GeneratorService.tree_T(1)

        assert t1.n == 6
        assert t1.edge_count() == 5
        assert nx.is_tree(t1.to_networkx())

        t4 = GeneratorService.tree_T(4)
        assert t4.n == 9
        assert sorted(t4.degrees(), reverse=True)[:2] == [3, 3]
        assert nx.is_tree(t4.to_networkx())

    def test_tree_T_minimum(self):
        with pytest.raises(ValidationError):
            GeneratorService.tree_T(0)

    def test_scott_seymour_tower(self):
        assert GeneratorService.scott_seymour(0).n == 1
        g1 = GeneratorService.scott_seymour(1)
        assert IsomorphismService().are_isomorphic(g1, GeneratorService.antihole(7))
        assert GeneratorService.scott_seymour(2).n == 49

    def test_scott_seymour_minimum(self):
        with pytest.raises(ValidationError):
            GeneratorService.scott_seymour(-1)


class TestCompositions:
    """Tests pour la substitution, l'union disjointe et le joint."""

    def test_substitute_into_edge(self):
        g = substitute(GeneratorService.complete(2),
                       [GeneratorService.complete(2), Graph.empty(2)])

        assert g.n == 4
        # arête interne 0-1, plus les quatre arêtes entre parties
        assert g.edge_count() == 5

    def test_disjoint_union_and_join(self):
        c3 = GeneratorService.cycle(3)

        assert disjoint_union(c3, c3).edge_count() == 6
        assert join(c3, c3).edge_count() == 6 + 9
        assert not disjoint_union(c3, c3).is_connected()

    def test_substitute_requires_one_part_per_vertex(self):
        with pytest.raises(ValidationError):
            substitute(GeneratorService.complete(2), [Graph.empty(1)])
