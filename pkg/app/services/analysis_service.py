"""
Façade par commande : chaque commande transforme un graphe en une ligne de
résultat (dictionnaire JSON stable) partagée par la CLI et l'API HTTP.
"""

from typing import Any, Callable, Dict
import logging
from app.models.graph import Graph
from app.services.class_lab_service import ClassLabService
from app.services.graph6_service import Graph6Service
from app.services.levelling_service import LevellingService
from app.utils.exceptions import CapExceededError, SolverTimeoutError
from config.settings import DEFAULT_LIMITS, Limits

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

# Sections émises à vide (valeurs null) quand le calcul est sauté
_CHI_OMEGA_KEYS = ('omega', 'chi', 'omega_squared', 'holds')
_BIPARTITION_KEYS = ('applicable', 'holds', 'side_a', 'side_b', 'maximum_cliques')
_PACKING_KEYS = ('count', 'holes')


class AnalysisService:
    """Service qui produit une ligne de résultat par graphe et par commande."""

    def __init__(self, limits: Limits = DEFAULT_LIMITS):
        self.limits = limits
        self.lab = ClassLabService(limits)
        self.invariants = self.lab.invariants
        self.holes = self.lab.holes
        self.perfection = self.lab.perfection
        self.isomorphism = self.lab.isomorphism
        self.levelling = LevellingService(limits, self.invariants, self.holes)
        self._commands: Dict[str, Callable[..., Dict[str, Any]]] = {
            'analyze': self.analyze,
            'classify': self.classify,
            'color': self.color,
            'chip': self.chip,
            'nice': self.nice,
            'slack': self.slack,
            'search': self.search,
        }

    @property
    def commands(self):
        return sorted(self._commands)

    def header(self, g: Graph, command: str) -> Dict[str, Any]:
        code = None
        if g.n <= self.limits.canonical_cap:
            code = self.isomorphism.canonical_code(g).hex()
        return {
            'schema_version': SCHEMA_VERSION,
            'command': command,
            'graph6': Graph6Service.write_graph6(g),
            'canonical_code': code,
            'n': g.n,
            'm': g.edge_count(),
        }

    def run(self, command: str, g: Graph, **options) -> Dict[str, Any]:
        """
        Exécute une commande sur un graphe.

        Args:
            command: Nom de la commande
            g: Graphe
            **options: Options propres à la commande (trust, verify)

        Returns:
            Ligne de résultat (en-tête + charge utile)
        """
        if command not in self._commands:
            raise KeyError(command)
        row = self.header(g, command)
        row.update(self._commands[command](g, **options))
        return row

    def analyze(self, g: Graph) -> Dict[str, Any]:
        return {'invariants': self.invariants.report(g).to_dict()}

    def classify(self, g: Graph) -> Dict[str, Any]:
        return {'classes': self.holes.classify(g).to_dict()}

    def color(self, g: Graph, trust: bool = False, verify: bool = False) -> Dict[str, Any]:
        report = self.levelling.coloring_report(g, trust=trust, exact=verify)
        payload = {'coloring': report.to_dict()}
        if verify:
            payload['verified'] = (self.invariants.is_proper(g, report.coloring)
                                   and report.colors_used <= report.palette_bound
                                   and (report.chi_exact is None or report.colors_used >= report.chi_exact))
        return payload

    def chip(self, g: Graph) -> Dict[str, Any]:
        value, partition = self.perfection.perfect_chromatic_number(g)
        lo, hi = self.perfection.chi_p_bounds(g) if g.n else (0, 0)
        return {'chi_p': value, 'bounds': [lo, hi], 'partition': partition.to_dict()['classes']}

    def nice(self, g: Graph) -> Dict[str, Any]:
        return {'nice': self.perfection.is_nice(g).to_dict()}

    def slack(self, g: Graph) -> Dict[str, Any]:
        payload = {'slack': self.lab.gyarfas_slack(g).to_dict()}
        try:
            payload['odd_hole_packing'] = self.lab.max_anticomplete_odd_holes(g).to_dict()
        except CapExceededError as e:
            logger.warning(f"Empilement de trous impairs ignoré: {e}")
            payload['odd_hole_packing'] = dict.fromkeys(_PACKING_KEYS)
        return payload

    def search(self, g: Graph) -> Dict[str, Any]:
        """
        Preuves pour les conjectures chi <= omega² et de bipartition ; un délai donne « unknown ».

        Les sections chi_omega_sq et bipartition sont toujours présentes,
        à valeurs null quand le graphe a un trou long.
        """
        payload: Dict[str, Any] = {
            'long_hole_free': self.holes.find_long_hole(g) is None,
            'chi_omega_sq': dict.fromkeys(_CHI_OMEGA_KEYS),
            'bipartition': dict.fromkeys(_BIPARTITION_KEYS),
        }
        verdict = 'skipped'
        if payload['long_hole_free']:
            try:
                sq = self.lab.check_chi_omega_sq(g)
                bipartition = self.lab.check_bipartition_conjecture(g)
                payload['chi_omega_sq'] = sq.to_dict()
                payload['bipartition'] = bipartition.to_dict()
                verdict = 'holds' if sq.holds and bipartition.holds is not False else 'violation'
            except SolverTimeoutError as e:
                logger.warning(f"Recherche incomplète ({e}) pour {Graph6Service.write_graph6(g)}")
                verdict = 'unknown'
        payload['verdict'] = verdict
        return payload


def run_command(args) -> Dict[str, Any]:
    """Point d'entrée sérialisable pour les processus de travail."""
    command, graph6, limits, options = args
    service = AnalysisService(limits)
    return service.run(command, Graph6Service.parse_graph6(graph6), **options)
