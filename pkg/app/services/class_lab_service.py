"""
Laboratoire des classes héréditaires : conjectures, écart de Gyárfás, trous
impairs anticomplets, exposant d'Erdős-Hajnal, antichaînes et suites interdites.
"""

from dataclasses import dataclass
from math import log
from typing import Dict, Iterable, List, Optional, Sequence
import logging
import networkx as nx
from app.models.graph import Graph, join
from app.models.reports import (AntichainReport, BipartitionReport, ChiOmegaReport, EHReport,
                                FnSearchReport, ForbiddenSequenceRealization, OddHolePacking,
                                PlanarSweepReport, SlackReport)
from app.services.corpus_service import CorpusService
from app.services.enumeration_service import EnumerationService
from app.services.generator_service import GeneratorService
from app.services.graph6_service import Graph6Service
from app.services.hole_service import HoleService, iter_induced_cycles
from app.services.invariant_service import InvariantService, max_clique_mask
from app.services.isomorphism_service import IsomorphismService
from app.services.perfection_service import PerfectionService
from app.utils.bits import bit, iter_bits, popcount, to_list
from app.utils.deadline import Deadline
from app.utils.exceptions import (CapExceededError, LongHoleDetectedError, SolverTimeoutError,
                                  ValidationError)
from config.settings import DEFAULT_LIMITS, Limits

logger = logging.getLogger(__name__)

# Plus petit n admettant un graphe 4-régulier
_MIN_FOUR_REGULAR = 5


def max_degree_at_most_four(g: Graph) -> bool:
    return all(popcount(m) <= 4 for m in g.masks)


def connected_four_regular(g: Graph) -> bool:
    return all(popcount(m) == 4 for m in g.masks) and g.is_connected()


@dataclass
class SearchBudget:
    """Budget d'une recherche de f(omega)."""
    seed: int = 0
    exhaustive_max_n: int = 7
    random_trials: int = 50
    random_n: int = 9
    substitution_trials: int = 30
    max_vertices: int = 20


class ClassLabService:
    """Service de vérification des conjectures et constructions."""

    def __init__(self, limits: Limits = DEFAULT_LIMITS):
        self.limits = limits
        self.isomorphism = IsomorphismService(limits)
        self.invariants = InvariantService(limits)
        self.holes = HoleService(limits, self.invariants)
        self.perfection = PerfectionService(limits, self.invariants, self.holes, self.isomorphism)
        self.enumeration = EnumerationService(limits, self.isomorphism)
        self.corpus = CorpusService(limits, self.holes, self.enumeration)

    # Conjectures

    def check_bipartition_conjecture(self, g: Graph) -> BipartitionReport:
        """
        Cherche une partition (S, V\\S) dont aucune part ne contient une clique maximum.

        Raises:
            LongHoleDetectedError: Le graphe contient un trou de longueur >= 5
            CapExceededError: Graphe au-delà de la limite de sommets
        """
        if g.n > self.limits.vertex_cap:
            raise CapExceededError(f"Bipartition limitée à {self.limits.vertex_cap} sommets (n={g.n})")
        hole = self.holes.find_long_hole(g)
        if hole is not None:
            raise LongHoleDetectedError(f"Trou de longueur {len(hole)} : conjecture non applicable", hole)
        cliques = self.invariants.maximum_cliques(g)
        if not cliques or popcount(cliques[0]) <= 1:
            return BipartitionReport(applicable=False, holds=None, maximum_cliques=len(cliques))

        containing: List[List[int]] = [[c for c in cliques if c >> v & 1] for v in range(g.n)]
        sides = [0, 0]
        deadline = Deadline(self.limits.timeout)

        def assign(v: int) -> bool:
            if v == g.n:
                return True
            deadline.tick()
            # Le sommet 0 est placé à gauche par symétrie
            for s in ((0,) if v == 0 else (0, 1)):
                sides[s] |= bit(v)
                if not any(c & sides[s] == c for c in containing[v]) and assign(v + 1):
                    return True
                sides[s] &= ~bit(v)
            return False

        if assign(0):
            return BipartitionReport(True, True, tuple(to_list(sides[0])), tuple(to_list(sides[1])),
                                     len(cliques))
        logger.warning(f"Bipartition introuvable (contre-exemple potentiel) : {Graph6Service.write_graph6(g)}")
        return BipartitionReport(True, False, maximum_cliques=len(cliques))

    def check_chi_omega_sq(self, g: Graph) -> ChiOmegaReport:
        """Vérifie chi <= omega² (le dépassement de délai est propagé)."""
        omega, _ = self.invariants.clique_number(g)
        chi, _ = self.invariants.chromatic_number(g)
        report = ChiOmegaReport(omega=omega, chi=chi, omega_squared=omega * omega)
        if not report.holds:
            logger.warning(f"chi > omega² : {Graph6Service.write_graph6(g)} ({report.to_dict()})")
        return report

    def _fn_candidates(self, omega: int, budget: SearchBudget) -> Iterable[tuple]:
        def admissible(h: Graph) -> bool:
            return self.invariants.clique_number(h)[0] <= omega and self.holes.find_long_hole(h) is None

        for n in range(1, min(budget.exhaustive_max_n, self.limits.enumeration_cap) + 1):
            for h in self.enumeration.enumerate_graphs(n, prune=admissible):
                yield 'exhaustive', h

        antihole = GeneratorService.antihole(7)
        seeds = [GeneratorService.complete(1), GeneratorService.complete(2), antihole]
        for h in seeds:
            yield 'seed', h
        for left in seeds:
            for right in seeds:
                yield 'join', join(left, right)
        for h in self.corpus.substitution_closure(budget.substitution_trials, budget.max_vertices,
                                                   seed=budget.seed):
            yield 'substitution', h
        for h in self.corpus.random_long_hole_free(budget.random_trials, budget.random_n,
                                                    seed=budget.seed, max_attempts=budget.random_trials * 20):
            yield 'random', h

    def fn_search(self, omega: int, budget: Optional[SearchBudget] = None) -> FnSearchReport:
        """
        Plus grand chi exact observé parmi des graphes sans trou long de nombre
        de clique ``omega`` : une borne inférieure sur f(omega), jamais une réponse.
        """
        if omega < 1:
            raise ValidationError(f"omega doit être >= 1 (reçu {omega})")
        budget = budget or SearchBudget(seed=self.limits.seed)
        report = FnSearchReport(omega=omega)
        for source, h in self._fn_candidates(omega, budget):
            if self.invariants.clique_number(h)[0] != omega:
                continue
            if source != 'exhaustive' and self.holes.find_long_hole(h) is not None:
                continue
            report.examined += 1
            try:
                chi, _ = self.invariants.chromatic_number(h)
            except SolverTimeoutError:
                report.unknown += 1
                logger.warning(f"chi inconnu (délai) pour {Graph6Service.write_graph6(h)}")
                continue
            if chi > report.best_chi:
                report.best_chi = chi
                report.witness = Graph6Service.write_graph6(h)
                report.source = source
        logger.info(f"f({omega}) >= {report.best_chi} ({report.examined} graphes examinés)")
        return report

    def f4_search(self, budget: Optional[SearchBudget] = None) -> FnSearchReport:
        return self.fn_search(4, budget)

    # Écart de Gyárfás et trous impairs

    def gyarfas_slack(self, g: Graph) -> SlackReport:
        """
        Écart max(|V(H)| - alpha(H) omega(H)) sur tous les sous-graphes induits
        (connexes ou non), alpha et omega mémorisés par code canonique.

        Raises:
            CapExceededError: Graphe au-delà de la limite de l'écart
        """
        if g.n > self.limits.slack_cap:
            raise CapExceededError(f"Écart limité à {self.limits.slack_cap} sommets (n={g.n})")
        memo: Dict[bytes, tuple] = {}
        deadline = Deadline(self.limits.timeout)
        best = SlackReport(slack=0)
        for mask in range(1, 1 << g.n):
            deadline.tick()
            sub = g.induced_mask(mask)
            key = self.isomorphism.canonical_code(sub)
            if key not in memo:
                memo[key] = (self.invariants.stability_number(sub)[0], self.invariants.clique_number(sub)[0])
            alpha, omega = memo[key]
            value = sub.n - alpha * omega
            if value > best.slack:
                best = SlackReport(value, tuple(to_list(mask)), alpha, omega)
        return best

    def max_anticomplete_odd_holes(self, g: Graph) -> OddHolePacking:
        """
        Nombre maximum de trous impairs deux à deux anticomplets (clique maximum
        du graphe de compatibilité entre trous impairs).

        Raises:
            CapExceededError: Trop de trous impairs ou graphe trop grand
        """
        if g.n > self.limits.vertex_cap:
            raise CapExceededError(f"Limité à {self.limits.vertex_cap} sommets (n={g.n})")
        holes = []
        for cycle in iter_induced_cycles(g, 5, None, Deadline(self.limits.timeout)):
            if len(cycle) % 2:
                holes.append(cycle)
                if len(holes) > self.limits.cycle_cap:
                    raise CapExceededError(f"Plus de {self.limits.cycle_cap} trous impairs")
        if not holes:
            return OddHolePacking(0, [])
        spans = [sum(bit(v) for v in h) for h in holes]
        closed = []
        for span in spans:
            reach = span
            for v in iter_bits(span):
                reach |= g.masks[v]
            closed.append(reach)
        compat = [0] * len(holes)
        for i in range(len(holes)):
            for j in range(i + 1, len(holes)):
                if not closed[i] & spans[j]:
                    compat[i] |= bit(j)
                    compat[j] |= bit(i)
        best = max_clique_mask(compat, (1 << len(holes)) - 1, Deadline(self.limits.timeout))
        chosen = [holes[i] for i in iter_bits(best)]
        return OddHolePacking(len(chosen), chosen)

    def eh_exponent(self, g: Graph) -> EHReport:
        """Exposant log(max(alpha, omega)) / log(n)."""
        if g.n < 2:
            raise ValidationError("L'exposant exige au moins 2 sommets")
        alpha, _ = self.invariants.stability_number(g)
        omega, _ = self.invariants.clique_number(g)
        return EHReport(n=g.n, alpha=alpha, omega=omega, exponent=log(max(alpha, omega)) / log(g.n))

    # Antichaînes et suites interdites

    def verify_antichain(self, graphs: Sequence[Graph]) -> AntichainReport:
        """Antichaîne pour l'ordre induit ; la première paire (i, j) avec G_i induit dans G_j est rendue."""
        for i, h in enumerate(graphs):
            for j, g in enumerate(graphs):
                if i != j and h.n <= g.n and self.isomorphism.find_embedding(h, g) is not None:
                    return AntichainReport(False, (i, j))
        return AntichainReport(True)

    def enumerate_connected_4_regular(self, n: int, jobs: int = 1) -> List[Graph]:
        """
        Graphes 4-réguliers connexes à n sommets, un par classe d'isomorphisme.

        Raises:
            ValidationError: n < 5
            CapExceededError: n au-delà de la limite d'énumération
        """
        if n < _MIN_FOUR_REGULAR:
            raise ValidationError(f"Aucun graphe 4-régulier à {n} sommets")
        return list(self.enumeration.enumerate_graphs(
            n, filter=connected_four_regular, prune=max_degree_at_most_four, jobs=jobs))

    def realize_forbidden_sequence(self, f: Sequence[int]) -> ForbiddenSequenceRealization:
        """
        Choisit, pour chaque n, les f_n premiers graphes 4-réguliers connexes.

        ``f[i]`` est le nombre demandé pour n = i + 1. Un n est infaisable quand
        il en existe moins que demandé (ou qu'il dépasse la limite d'énumération).
        """
        requested = {i + 1: count for i, count in enumerate(f)}
        selected: Dict[int, List[Graph]] = {}
        feasible: Dict[int, bool] = {}
        for n, count in requested.items():
            if count <= 0:
                feasible[n] = True
                continue
            if n < _MIN_FOUR_REGULAR or n > self.limits.enumeration_cap:
                feasible[n] = False
                continue
            available = self.enumerate_connected_4_regular(n)
            selected[n] = available[:count]
            feasible[n] = len(available) >= count
            if not feasible[n]:
                logger.info(f"n={n}: {len(available)} graphes disponibles, {count} demandés")
        return ForbiddenSequenceRealization(requested, selected, feasible)

    def class_membership(self, g: Graph, forbidden: Iterable[Graph]) -> bool:
        """Vrai ssi aucun graphe interdit n'apparaît comme sous-graphe induit."""
        return all(self.isomorphism.find_embedding(h, g) is None for h in forbidden)

    # Graphes planaires

    @staticmethod
    def is_planar(g: Graph) -> bool:
        planar, _ = nx.check_planarity(g.to_networkx())
        return planar

    def planar_sweep(self, graphs: Iterable[Graph]) -> PlanarSweepReport:
        """Sur les entrées planaires : « nice » et chi_p <= 2."""
        report = PlanarSweepReport()
        for g in graphs:
            if not self.is_planar(g):
                report.skipped_nonplanar += 1
                continue
            report.checked += 1
            code = Graph6Service.write_graph6(g)
            if not self.perfection.is_nice(g).is_nice:
                report.not_nice.append(code)
                logger.warning(f"Graphe planaire non nice : {code}")
            chi_p, _ = self.perfection.perfect_chromatic_number(g)
            if chi_p > 2:
                report.chi_p_above_two.append(code)
                logger.warning(f"Graphe planaire avec chi_p = {chi_p} : {code}")
        return report
