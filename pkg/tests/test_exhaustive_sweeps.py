"""
Balayages exhaustifs sur tous les graphes à isomorphisme près.

Les petits ordres tournent à chaque exécution ; les ordres plus grands sont
marqués slow et demandent ``pytest --runslow``.
"""

from functools import lru_cache
from typing import Tuple
import pytest
from app.models.graph import Graph, disjoint_union, substitute
from app.services.class_lab_service import ClassLabService
from app.services.enumeration_service import EnumerationService
from app.services.generator_service import GeneratorService
from app.services.hole_service import ACYCLIC, ALL_EVEN, ALL_ODD, HoleService
from app.services.invariant_service import InvariantService
from app.services.isomorphism_service import IsomorphismService
from app.services.levelling_service import LevellingService, palette_bound
from app.services.perfection_service import PerfectionService
from config.settings import Limits

LIMITS = Limits(timeout=120.0, seed=0)
INVARIANTS = InvariantService(LIMITS)
HOLES = HoleService(LIMITS, INVARIANTS)


def _long_hole_free(g: Graph) -> bool:
    return HOLES.find_long_hole(g) is None


def _triangle_free(g: Graph) -> bool:
    return not any(g.masks[u] & g.masks[v] for u, v in g.edges())


@lru_cache(maxsize=None)
def all_graphs(n: int) -> Tuple[Graph, ...]:
    return tuple(EnumerationService(LIMITS).enumerate_graphs(n))


@lru_cache(maxsize=None)
def long_hole_free_graphs(n: int) -> Tuple[Graph, ...]:
    return tuple(EnumerationService(LIMITS).enumerate_graphs(n, prune=_long_hole_free))


@lru_cache(maxsize=None)
def triangle_free_graphs(n: int) -> Tuple[Graph, ...]:
    return tuple(EnumerationService(LIMITS).enumerate_graphs(n, prune=_triangle_free))


def _ceil_half(value: int) -> int:
    return (value + 1) // 2


@pytest.fixture(scope='module')
def perfection():
    return PerfectionService(LIMITS, INVARIANTS, HOLES)


@pytest.fixture(scope='module')
def lab():
    return ClassLabService(LIMITS)


@pytest.fixture(scope='module')
def levelling():
    return LevellingService(LIMITS)


class TestGraphCore:
    """Identités structurelles du noyau sur tous les graphes à au plus six sommets."""

    @pytest.mark.parametrize('n', range(7))
    def test_complement_is_an_involution(self, n):
        for g in all_graphs(n):
            assert g.complement().complement() == g

    @pytest.mark.parametrize('n', range(7))
    def test_substitute_single_vertices_is_identity(self, n):
        k1 = GeneratorService.complete(1)
        for g in all_graphs(n):
            assert substitute(g, [k1] * g.n) == g

    @pytest.mark.parametrize('n', range(1, 7))
    def test_canonical_code_ignores_relabelling(self, n):
        iso = IsomorphismService(LIMITS)
        reverse = list(reversed(range(n)))
        for g in all_graphs(n):
            assert iso.canonical_code(g.relabel(reverse)) == iso.canonical_code(g)


class TestLongHoleDetection:
    """La détection par arête et composante coïncide avec l'énumération des cycles induits."""

    @pytest.mark.parametrize('n', range(3, 8))
    def test_agrees_with_enumeration(self, n):
        for g in all_graphs(n):
            hole = HOLES.find_long_hole(g)
            long_cycles = HOLES.enumerate_induced_cycles(g, min_len=5).cycles

            assert (hole is None) == (not long_cycles)
            if hole is not None:
                assert len(hole) >= 5
                assert HOLES.is_induced_cycle(g, hole)


class TestLevellingContract:
    """Coloration par niveaux de tout graphe connexe sans trou long."""

    def test_palette_bound_constants(self):
        assert [palette_bound(w) for w in (1, 2, 3)] == [1, 4, 64]

    @pytest.mark.parametrize('n', [
        1, 2, 3, 4, 5, 6, 7,
        pytest.param(8, marks=pytest.mark.slow),
        pytest.param(9, marks=pytest.mark.slow),
    ])
    def test_every_connected_long_hole_free_graph(self, levelling, n):
        for g in long_hole_free_graphs(n):
            if not g.is_connected():
                continue
            coloring = levelling.color_long_hole_free(g)
            omega, _ = INVARIANTS.clique_number(g)

            assert INVARIANTS.is_proper(g, coloring)
            assert coloring.colors_used() <= palette_bound(omega)


class TestPerfectionSweeps:
    """Encadrement de chi_p, égalité sans triangle et perfection."""

    @pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
    def test_chi_p_sandwich(self, perfection, n):
        """chi/omega <= chi_p <= ceil(chi/2), et chi_p = 1 exactement pour les parfaits."""
        for g in all_graphs(n):
            chi, _ = INVARIANTS.chromatic_number(g)
            omega, _ = INVARIANTS.clique_number(g)
            chi_p, partition = perfection.perfect_chromatic_number(g)

            assert chi <= omega * chi_p
            assert chi_p <= _ceil_half(chi)
            assert perfection.verify_partition(g, partition)
            assert (chi_p == 1) == HOLES.is_perfect(g).perfect

    @pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6, 7, pytest.param(8, marks=pytest.mark.slow)])
    def test_triangle_free_halving(self, perfection, n):
        for g in triangle_free_graphs(n):
            chi, _ = INVARIANTS.chromatic_number(g)
            chi_p, _ = perfection.perfect_chromatic_number(g)

            assert chi_p == _ceil_half(chi)

    @pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
    def test_perfect_iff_chi_equals_omega_everywhere(self, n):
        memo = {}
        iso = IsomorphismService(LIMITS)

        def balanced(h: Graph) -> bool:
            key = iso.canonical_code(h)
            if key not in memo:
                memo[key] = INVARIANTS.chromatic_number(h)[0] == INVARIANTS.clique_number(h)[0]
            return memo[key]

        for g in all_graphs(n):
            expected = all(balanced(g.induced_mask(mask)) for mask in range(1, 1 << g.n))

            assert HOLES.is_perfect(g).perfect == expected

    @pytest.mark.parametrize('n', range(1, 7))
    def test_nice_is_hereditary(self, perfection, n):
        for g in all_graphs(n):
            if not perfection.is_nice(g).is_nice:
                continue
            for v in range(g.n):
                rest = g.induced([u for u in range(g.n) if u != v])
                assert perfection.is_nice(rest).is_nice


class TestParityProposition:
    """Cycles induits tous impairs : élimination bisimpliciale ; tous pairs : biparti."""

    @pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6, 7, pytest.param(8, marks=pytest.mark.slow)])
    def test_parity_classes(self, n):
        for g in all_graphs(n):
            parity = HOLES.parity_class(g)
            if parity in (ALL_ODD, ACYCLIC):
                coloring = HOLES.bisimplicial_elimination_coloring(g)
                omega, _ = INVARIANTS.clique_number(g)

                assert INVARIANTS.is_proper(g, coloring)
                assert coloring.colors_used() <= 2 * omega - 1
            elif parity == ALL_EVEN:
                assert HOLES.is_bipartite(g)


class TestConjectureEvidence:
    """Aucun contre-exemple aux conjectures sur les graphes sans trou long."""

    @pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6, 7, pytest.param(8, marks=pytest.mark.slow)])
    def test_bipartition_and_chi_omega_sq(self, lab, n):
        for g in long_hole_free_graphs(n):
            bipartition = lab.check_bipartition_conjecture(g)
            if bipartition.applicable:
                assert bipartition.holds, g
                left = sum(1 << v for v in bipartition.side_a)
                right = g.full_mask & ~left
                for clique in INVARIANTS.maximum_cliques(g):
                    assert clique & left != clique
                    assert clique & right != clique
            assert lab.check_chi_omega_sq(g).holds, g


class TestGyarfasSlack:
    """Écart nul exactement pour les graphes parfaits."""

    @pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
    def test_zero_slack_iff_perfect(self, lab, n):
        for g in all_graphs(n):
            slack = lab.gyarfas_slack(g).slack

            assert (slack == 0) == HOLES.is_perfect(g).perfect
            assert lab.max_anticomplete_odd_holes(g).count <= slack

    @pytest.mark.parametrize('lengths', [
        (5,), (7,), (9,), (11,), (13,), (5, 5), (5, 7), (7, 7), (5, 9),
    ])
    def test_disjoint_odd_holes_identity(self, lab, lengths):
        """c + 1 trous impairs disjoints : alpha = somme des l_i et n - alpha*omega = c + 1."""
        g = disjoint_union(*[GeneratorService.cycle(length) for length in lengths])
        alpha, _ = INVARIANTS.stability_number(g)
        omega, _ = INVARIANTS.clique_number(g)

        assert alpha == sum(length // 2 for length in lengths)
        assert omega == 2
        assert g.n - alpha * omega == len(lengths)
        assert lab.max_anticomplete_odd_holes(g).count == len(lengths)


class TestPlanarCatalogue:
    """Tout graphe planaire du catalogue exhaustif est nice avec chi_p <= 2."""

    @pytest.mark.parametrize('n', [
        1, 2, 3, 4, 5, 6,
        pytest.param(7, marks=pytest.mark.slow),
        pytest.param(8, marks=pytest.mark.slow),
        pytest.param(9, marks=pytest.mark.slow),
    ])
    def test_planar_graphs_are_nice(self, lab, n):
        report = lab.planar_sweep(all_graphs(n))

        assert report.not_nice == []
        assert report.chi_p_above_two == []
        assert report.checked + report.skipped_nonplanar == len(all_graphs(n))
