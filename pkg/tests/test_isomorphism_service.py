import pytest
import networkx as nx
import numpy as np
from app.models.graph import Embedding, Graph, disjoint_union
from app.services.generator_service import GeneratorService
from app.services.isomorphism_service import IsomorphismService
from app.utils.exceptions import CapExceededError
from config.settings import Limits


@pytest.fixture
def iso():
    return IsomorphismService()


def _random_graph(n, p, seed):
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


class TestCanonicalCode:
    """Tests pour le code canonique."""

    @pytest.mark.parametrize('seed', range(5))
    def test_invariant_under_relabelling(self, iso, seed):
        g = _random_graph(9, 0.45, seed)
        permutation = [int(v) for v in np.random.default_rng(seed).permutation(g.n)]

        assert iso.canonical_code(g) == iso.canonical_code(g.relabel(permutation))

    def test_distinguishes_two_regular_graphs(self, iso):
        c6 = GeneratorService.cycle(6)
        two_triangles = disjoint_union(GeneratorService.cycle(3), GeneratorService.cycle(3))

        assert not iso.are_isomorphic(c6, two_triangles)

    def test_agrees_with_networkx_on_atlas(self, iso):
        """Deux graphes de l'atlas ont le même code ssi ils sont isomorphes."""
        atlas = [Graph.from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == 5]
        codes = {iso.canonical_code(g) for g in atlas}

        assert len(codes) == len(atlas) == 34

    def test_canonical_form(self, iso):
        g = _random_graph(8, 0.5, 7)
        form = iso.canonical_form(g)

        assert iso.are_isomorphic(g, form)
        assert iso.canonical_form(g.relabel(list(reversed(range(g.n))))) == form

    def test_rooted_code_separates_orbits(self, iso):
        path = GeneratorService.path(3)

        assert iso.rooted_code(path, 0) == iso.rooted_code(path, 2)
        assert iso.rooted_code(path, 0) != iso.rooted_code(path, 1)

    def test_cap(self):
        iso = IsomorphismService(Limits(canonical_cap=8))

        with pytest.raises(CapExceededError):
            iso.canonical_code(Graph.empty(9))


class TestInducedEmbedding:
    """Tests pour la recherche de plongements induits."""

    def test_path_in_cycle(self, iso, c5):
        embedding = iso.find_embedding(GeneratorService.path(4), c5)

        assert embedding is not None
        assert embedding.is_induced(GeneratorService.path(4), c5)

    def test_square_not_in_pentagon(self, iso, c5):
        assert iso.find_embedding(GeneratorService.cycle(4), c5) is None

    def test_subgraph_is_not_enough(self, iso):
        """P_3 est un sous-graphe de K_3 mais pas un sous-graphe induit."""
        assert iso.find_embedding(GeneratorService.path(3), GeneratorService.complete(3)) is None

    def test_first_embedding_is_lexicographic(self, iso):
        embedding = iso.find_embedding(GeneratorService.complete(2), GeneratorService.path(4))

        assert embedding == Embedding((0, 1))

    def test_agrees_with_networkx(self, iso):
        from networkx.algorithms import isomorphism
        h = GeneratorService.cycle(4)
        for seed in range(6):
            g = _random_graph(8, 0.4, seed)
            matcher = isomorphism.GraphMatcher(g.to_networkx(), h.to_networkx())
            expected = matcher.subgraph_is_isomorphic()

            assert (iso.find_embedding(h, g) is not None) == expected
