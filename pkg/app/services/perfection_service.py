"""
Nombre chromatique parfait et graphes « nice ».
"""

from typing import Dict, List, Optional, Tuple
import logging
from app.models.graph import Graph
from app.models.reports import LineCompleteReport, NiceReport, PerfectPartition
from app.services.generator_service import GeneratorService
from app.services.hole_service import HoleService
from app.services.invariant_service import InvariantService
from app.services.isomorphism_service import IsomorphismService
from app.utils.bits import bit, popcount, to_list
from app.utils.deadline import Deadline
from app.utils.exceptions import CapExceededError, TriangleFoundError, ValidationError
from config.settings import DEFAULT_LIMITS, Limits

logger = logging.getLogger(__name__)

# Tout graphe à moins de 5 sommets est parfait
_SMALLEST_IMPERFECT = 5


class PerfectionService:
    """Service du nombre chromatique parfait et de la vérification « nice »."""

    def __init__(self, limits: Limits = DEFAULT_LIMITS, invariants: InvariantService = None,
                 holes: HoleService = None, isomorphism: IsomorphismService = None):
        self.limits = limits
        self.invariants = invariants or InvariantService(limits)
        self.holes = holes or HoleService(limits, self.invariants)
        self.isomorphism = isomorphism or IsomorphismService(limits)
        self._perfect_cache: Dict[bytes, bool] = {}

    def _is_perfect_subset(self, g: Graph, mask: int, local: Dict[int, bool]) -> bool:
        if popcount(mask) < _SMALLEST_IMPERFECT:
            return True
        if mask in local:
            return local[mask]
        sub = g.induced_mask(mask)
        key = self.isomorphism.canonical_code(sub) if sub.n <= self.limits.canonical_cap else None
        if key is not None and key in self._perfect_cache:
            verdict = self._perfect_cache[key]
        else:
            verdict = self.holes.is_perfect(sub).perfect
            if key is not None:
                self._perfect_cache[key] = verdict
        local[mask] = verdict
        return verdict

    def chi_p_bounds(self, g: Graph) -> Tuple[int, int]:
        """
        Encadrement ceil(chi/omega) <= chi_p <= ceil(chi/2).

        Raises:
            ValidationError: Graphe vide
        """
        if g.n == 0:
            raise ValidationError("Encadrement de chi_p indéfini pour le graphe vide")
        chi, _ = self.invariants.chromatic_number(g)
        omega, _ = self.invariants.clique_number(g)
        return -(-chi // omega), -(-chi // 2)

    def _pairing_witness(self, g: Graph) -> PerfectPartition:
        """Regroupe deux à deux les classes d'une coloration optimale (classes bipartites)."""
        _, coloring = self.invariants.chromatic_number(g)
        classes = coloring.classes()
        merged = []
        for i in range(0, len(classes), 2):
            merged.append(tuple(sorted(sum((classes[j] for j in range(i, min(i + 2, len(classes)))), ()))))
        return PerfectPartition(merged)

    def _partition_into(self, g: Graph, t: int, deadline: Deadline,
                        local: Dict[int, bool]) -> Optional[PerfectPartition]:
        classes = [0] * t
        n = g.n

        def assign(v: int, opened: int) -> bool:
            if v == n:
                return True
            deadline.tick()
            # Une classe j ne s'ouvre que si les classes < j sont déjà non vides
            for j in range(min(opened + 1, t)):
                candidate = classes[j] | bit(v)
                if not self._is_perfect_subset(g, candidate, local):
                    continue
                classes[j] = candidate
                if assign(v + 1, max(opened, j + 1)):
                    return True
                classes[j] &= ~bit(v)
            return False

        if assign(0, 0):
            return PerfectPartition([tuple(to_list(c)) for c in classes if c])
        return None

    def perfect_chromatic_number(self, g: Graph) -> Tuple[int, PerfectPartition]:
        """
        Nombre chromatique parfait exact avec une partition témoin.

        Les valeurs t < ceil(chi/2) sont testées par recherche exhaustive ; la
        borne supérieure est réalisée en regroupant les classes d'une coloration
        optimale.

        Raises:
            CapExceededError: Graphe au-delà de la limite de perfection
            SolverTimeoutError: Délai dépassé
        """
        if g.n > self.limits.perfect_cap:
            raise CapExceededError(
                f"chi_p limité à {self.limits.perfect_cap} sommets (n={g.n})")
        if g.n == 0:
            return 0, PerfectPartition([])
        if self.holes.is_perfect(g).perfect:
            return 1, PerfectPartition([tuple(range(g.n))])
        lo, hi = self.chi_p_bounds(g)
        deadline = Deadline(self.limits.timeout)
        local: Dict[int, bool] = {}
        logger.debug(f"chi_p: n={g.n}, bornes [{lo}, {hi}]")
        for t in range(max(lo, 2), hi):
            partition = self._partition_into(g, t, deadline, local)
            if partition is not None:
                return t, partition
        return hi, self._pairing_witness(g)

    def verify_partition(self, g: Graph, partition: PerfectPartition) -> bool:
        """Chaque classe est non vide et parfaite, et les classes partitionnent V(G)."""
        seen = 0
        for cls in partition.classes:
            if not cls:
                return False
            mask = 0
            for v in cls:
                mask |= bit(v)
            if mask & seen or not self.holes.is_perfect(g.induced(cls)).perfect:
                return False
            seen |= mask
        return seen == g.full_mask

    def chi_p_triangle_free(self, g: Graph) -> int:
        """
        chi_p = ceil(chi/2) pour un graphe sans triangle.

        Raises:
            TriangleFoundError: Le graphe contient un triangle
        """
        omega, clique = self.invariants.clique_number(g)
        if omega >= 3:
            raise TriangleFoundError(f"Triangle trouvé : {clique[:3]}")
        chi, _ = self.invariants.chromatic_number(g)
        return -(-chi // 2)

    def is_nice(self, g: Graph) -> NiceReport:
        """
        Vérifie que chi(H) - omega(H) <= 1 pour tout sous-graphe induit H.

        Il suffit d'examiner les sous-graphes induits connexes, parcourus par
        taille décroissante ; on s'arrête au premier témoin.

        Raises:
            CapExceededError: Graphe au-delà de la limite « nice »
        """
        if g.n > self.limits.nice_cap:
            raise CapExceededError(f"Vérification limitée à {self.limits.nice_cap} sommets (n={g.n})")
        if g.n == 0 or self.holes.is_perfect(g).perfect:
            return NiceReport(True, reason='perfect')
        chi, _ = self.invariants.chromatic_number(g)
        omega, _ = self.invariants.clique_number(g)
        if chi <= 3:
            return NiceReport(True, reason='chi_at_most_3')
        if omega <= 2:
            return NiceReport(False, tuple(range(g.n)), chi, omega, 1, reason='triangle_free')

        deadline = Deadline(self.limits.timeout)
        checked = 0
        by_size: Dict[int, List[int]] = {}
        for mask in range(1, 1 << g.n):
            by_size.setdefault(popcount(mask), []).append(mask)
        for size in range(g.n, _SMALLEST_IMPERFECT - 1, -1):
            for mask in by_size.get(size, []):
                deadline.tick()
                if not g.induced_mask(mask).is_connected():
                    continue
                checked += 1
                sub_omega, _ = self.invariants.clique_number(g, within=mask)
                # chi(H) <= chi(G) : l'écart ne peut atteindre 2 que si omega(H) <= chi(G) - 2
                if sub_omega > chi - 2:
                    continue
                sub = g.induced_mask(mask)
                if self.invariants.dsatur_coloring(sub).palette_size - sub_omega <= 1:
                    continue
                sub_chi, _ = self.invariants.chromatic_number(sub, deadline)
                if sub_chi - sub_omega >= 2:
                    return NiceReport(False, tuple(to_list(mask)), sub_chi, sub_omega, checked,
                                      reason='subgraph_scan')
        return NiceReport(True, subgraphs_checked=checked, reason='subgraph_scan')

    def chi_p_of_line_complete(self, n: int) -> int:
        """
        chi_p du graphe adjoint de K_n.

        Raises:
            CapExceededError: n au-delà de la limite configurée
        """
        if n < 2:
            raise ValidationError(f"K_n exige n >= 2 (reçu {n})")
        if n > self.limits.line_complete_cap:
            raise CapExceededError(f"L(K_n) limité à n <= {self.limits.line_complete_cap} (n={n})")
        line = GeneratorService.line_graph(GeneratorService.complete(n))
        value, _ = self.perfect_chromatic_number(line)
        logger.info(f"chi_p(L(K_{n})) = {value}")
        return value

    def line_complete_complement_report(self, n: int) -> LineCompleteReport:
        """chi et omega du complémentaire de L(K_n), attendus n-2 et floor(n/2)."""
        if n < 4:
            raise ValidationError(f"Le complémentaire de L(K_n) est étudié pour n >= 4 (reçu {n})")
        if n > self.limits.line_complete_cap:
            raise CapExceededError(f"L(K_n) limité à n <= {self.limits.line_complete_cap} (n={n})")
        kneser = GeneratorService.line_graph(GeneratorService.complete(n)).complement()
        chi, _ = self.invariants.chromatic_number(kneser)
        omega, _ = self.invariants.clique_number(kneser)
        return LineCompleteReport(n=n, chi=chi, omega=omega, expected_chi=n - 2, expected_omega=n // 2)
