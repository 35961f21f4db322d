import logging
import networkx as nx
from app.models.graph import Graph, substitute
from app.utils.exceptions import ValidationError

logger = logging.getLogger(__name__)


def _require(condition: bool, message: str):
    if not condition:
        raise ValidationError(message)


class GeneratorService:
    """Générateurs des graphes et constructions utilisés par le laboratoire."""

    @staticmethod
    def cycle(n: int) -> Graph:
        """Cycle C_n, sommets numérotés cycliquement."""
        _require(n >= 3, f"Un cycle exige n >= 3 (reçu {n})")
        return Graph.from_networkx(nx.cycle_graph(n))

    @staticmethod
    def path(n: int) -> Graph:
        """Chemin P_n à n sommets."""
        _require(n >= 1, f"Un chemin exige n >= 1 (reçu {n})")
        return Graph.from_networkx(nx.path_graph(n))

    @staticmethod
    def complete(n: int) -> Graph:
        _require(n >= 0, f"Un graphe complet exige n >= 0 (reçu {n})")
        return Graph.from_networkx(nx.complete_graph(n))

    @staticmethod
    def complete_bipartite(a: int, b: int) -> Graph:
        """K_{a,b} : côté A = 0..a-1, côté B = a..a+b-1."""
        _require(a >= 0 and b >= 0, "Les deux côtés doivent être de taille positive ou nulle")
        return Graph.from_networkx(nx.complete_bipartite_graph(a, b))

    @staticmethod
    def antihole(n: int) -> Graph:
        """Complémentaire du cycle C_n."""
        return GeneratorService.cycle(n).complement()

    @staticmethod
    def line_graph(g: Graph) -> Graph:
        """
        Graphe adjoint L(g) : un sommet par arête (ordre lexicographique des
        arêtes), deux sommets adjacents ssi les arêtes partagent une extrémité.
        """
        return Graph.from_networkx(nx.line_graph(g.to_networkx()))

    @staticmethod
    def mycielskian(g: Graph) -> Graph:
        """
        Construction de Mycielski : sommets v_i (0..n-1), copies u_i (n..2n-1)
        adjacentes à N(v_i), et un sommet w (2n) adjacent à tous les u_i.
        """
        return Graph.from_networkx(nx.mycielskian(g.to_networkx()))

    @staticmethod
    def grotzsch() -> Graph:
        """Graphe de Grötzsch = mycielskian(C_5) : 11 sommets, sans triangle, chi = 4."""
        return GeneratorService.mycielskian(GeneratorService.cycle(5))

    @staticmethod
    def tree_T(k: int) -> Graph:
        """
        Arbre T_k : chemin à k arêtes (sommets 0..k) avec deux arêtes pendantes
        à chacune de ses extrémités ; k + 5 sommets.

        Les seuls sommets de degré 3 sont les extrémités, à distance k : aucun
        T_j n'est induit dans T_k pour j != k.
        """
        _require(k >= 1, f"T_k exige k >= 1 (reçu {k})")
        spine = k + 1
        edges = [(v, v + 1) for v in range(k)]
        for i, end in enumerate((0, k)):
            edges.append((end, spine + 2 * i))
            edges.append((end, spine + 2 * i + 1))
        return Graph.from_edges(spine + 4, edges)

    @staticmethod
    def scott_seymour(k: int) -> Graph:
        """
        Tour G_k : G_0 = K_1 et G_k s'obtient de G_{k-1} en substituant un
        antitrou à sept sommets à chaque sommet ; 7^k sommets, sans trou de
        longueur au moins 5, omega = 3^k.
        """
        _require(k >= 0, f"La tour exige k >= 0 (reçu {k})")
        graph = GeneratorService.complete(1)
        antihole = GeneratorService.antihole(7)
        for level in range(k):
            graph = substitute(graph, [antihole] * graph.n)
            logger.debug(f"Tour de substitution niveau {level + 1}: {graph.n} sommets")
        return graph
