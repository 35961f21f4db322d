"""
Types de domaine du noyau de graphes : Graph, Embedding, Coloring.

Les sommets sont identifiés par leur position 0..n-1 ; toutes les opérations
sont déterministes vis-à-vis de cet ordre.
"""

from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
from app.utils.bits import bit, iter_bits, popcount
from app.utils.exceptions import ValidationError

VertexSet = Tuple[int, ...]


class Graph:
    """Graphe simple non orienté, immuable, à listes d'adjacence en bitsets."""

    __slots__ = ('n', 'masks', '_adj', '_hash')

    def __init__(self, n: int, masks: Sequence[int]):
        if n < 0:
            raise ValidationError("Le nombre de sommets doit être positif ou nul")
        if len(masks) != n:
            raise ValidationError("Une liste d'adjacence par sommet est attendue")
        full = (1 << n) - 1
        for v, mask in enumerate(masks):
            if mask & ~full:
                raise ValidationError(f"Voisin hors bornes pour le sommet {v}")
            if mask >> v & 1:
                raise ValidationError(f"Boucle sur le sommet {v}")
            for u in iter_bits(mask):
                if not masks[u] >> v & 1:
                    raise ValidationError(f"Adjacence non symétrique entre {u} et {v}")
        self.n = n
        self.masks = tuple(masks)
        self._adj = None
        self._hash = None

    # Constructeurs

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        """
        Construit un graphe à partir d'une liste d'arêtes.

        Args:
            n: Nombre de sommets
            edges: Couples (u, v) avec u != v

        Returns:
            Graphe construit

        Raises:
            ValidationError: Boucle ou indice hors bornes
        """
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"Arête ({u}, {v}) hors bornes pour n={n}")
            if u == v:
                raise ValidationError(f"Boucle sur le sommet {u}")
            masks[u] |= bit(v)
            masks[v] |= bit(u)
        return cls(n, masks)

    @classmethod
    def trusted(cls, n: int, masks: Sequence[int]) -> 'Graph':
        """Construit sans revalider (masques déjà symétriques, sans boucle)."""
        g = cls.__new__(cls)
        g.n = n
        g.masks = tuple(masks)
        g._adj = None
        g._hash = None
        return g

    @classmethod
    def empty(cls, n: int) -> 'Graph':
        return cls(n, [0] * n)

    # Accès

    @property
    def adj(self) -> Tuple[FrozenSet[int], ...]:
        if self._adj is None:
            self._adj = tuple(frozenset(iter_bits(m)) for m in self.masks)
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.masks[v])

    def degrees(self) -> List[int]:
        return [popcount(m) for m in self.masks]

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.masks[v]))

    def edges(self) -> List[Tuple[int, int]]:
        """Arêtes (u, v) avec u < v, en ordre lexicographique."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.masks[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(popcount(m) for m in self.masks) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])

    def is_stable(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return component_of(self, 0, self.full_mask) == self.full_mask

    # Opérations de base

    def complement(self) -> 'Graph':
        """Retourne le complémentaire (uv arête ssi u != v et uv non-arête)."""
        full = self.full_mask
        return Graph.trusted(self.n, [full & ~m & ~bit(v) for v, m in enumerate(self.masks)])

    def induced(self, vertices: Iterable[int]) -> 'Graph':
        """
        Sous-graphe induit sur un ensemble de sommets, renuméroté par rang.

        Args:
            vertices: Sommets conservés (l'ordre est ignoré)

        Returns:
            Sous-graphe induit à |vertices| sommets
        """
        vs = sorted(set(vertices))
        for v in vs:
            if not 0 <= v < self.n:
                raise ValidationError(f"Sommet {v} hors bornes pour n={self.n}")
        rank = {v: i for i, v in enumerate(vs)}
        selected = 0
        for v in vs:
            selected |= bit(v)
        masks = []
        for v in vs:
            m = 0
            for u in iter_bits(self.masks[v] & selected):
                m |= bit(rank[u])
            masks.append(m)
        return Graph.trusted(len(vs), masks)

    def induced_mask(self, mask: int) -> 'Graph':
        return self.induced(iter_bits(mask))

    def relabel(self, permutation: Sequence[int]) -> 'Graph':
        """Graphe dont le sommet permutation[v] joue le rôle de v."""
        if sorted(permutation) != list(range(self.n)):
            raise ValidationError("La renumérotation doit être une permutation")
        masks = [0] * self.n
        for v in range(self.n):
            for u in iter_bits(self.masks[v]):
                masks[permutation[v]] |= bit(permutation[u])
        return Graph(self.n, masks)

    # Ponts networkx

    def to_networkx(self):
        import networkx as nx
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def from_networkx(cls, graph) -> 'Graph':
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), [(index[u], index[v]) for u, v in graph.edges() if u != v])

    # Protocoles Python

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.masks))
        return self._hash

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def __getstate__(self):
        return (self.n, self.masks)

    def __setstate__(self, state):
        self.n, self.masks = state
        self._adj = None
        self._hash = None


def component_of(g: Graph, start: int, within: int) -> int:
    """Composante connexe de ``start`` dans le sous-graphe induit par ``within``."""
    seen = bit(start)
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.masks[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, within: Optional[int] = None) -> List[int]:
    """Composantes connexes (bitsets) ordonnées par plus petit sommet."""
    remaining = g.full_mask if within is None else within
    result = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = component_of(g, start, remaining)
        result.append(comp)
        remaining &= ~comp
    return result


def substitute(g: Graph, parts: Sequence[Graph]) -> Graph:
    """
    Substitue à chaque sommet v de g le graphe parts[v].

    Les arêtes internes des parties sont conservées ; deux parties dont les
    sommets de base sont adjacents sont complètement reliées, sinon elles sont
    anticomplètes. Les sommets sont numérotés partie par partie.

    Args:
        g: Graphe de base
        parts: Un graphe par sommet de g

    Returns:
        Graphe obtenu par substitution
    """
    if len(parts) != g.n:
        raise ValidationError("Une partie par sommet du graphe de base est attendue")
    offsets = []
    total = 0
    for part in parts:
        offsets.append(total)
        total += part.n
    blocks = [((1 << part.n) - 1) << offsets[v] for v, part in enumerate(parts)]
    masks = []
    for v, part in enumerate(parts):
        outside = 0
        for u in iter_bits(g.masks[v]):
            outside |= blocks[u]
        for m in part.masks:
            masks.append((m << offsets[v]) | outside)
    return Graph(total, masks)


def disjoint_union(*graphs: Graph) -> Graph:
    """Union disjointe, sommets numérotés graphe par graphe."""
    return substitute(Graph.empty(len(graphs)), list(graphs))


def join(*graphs: Graph) -> Graph:
    """Joint complet des graphes donnés."""
    k = len(graphs)
    full = (1 << k) - 1
    base = Graph(k, [full & ~bit(v) for v in range(k)])
    return substitute(base, list(graphs))


class Embedding:
    """Plongement induit d'un motif H dans un hôte G (image du sommet i de H)."""

    __slots__ = ('images',)

    def __init__(self, images: Sequence[int]):
        self.images = tuple(images)

    def is_induced(self, h: Graph, g: Graph) -> bool:
        """Vérifie l'injectivité et la condition induite paire par paire."""
        if len(self.images) != h.n or len(set(self.images)) != h.n:
            return False
        if any(not 0 <= v < g.n for v in self.images):
            return False
        return all(
            h.has_edge(i, j) == g.has_edge(self.images[i], self.images[j])
            for i in range(h.n) for j in range(i + 1, h.n)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Embedding) and self.images == other.images

    def __repr__(self) -> str:
        return f"Embedding({list(self.images)})"


class Coloring:
    """Attribution couleur par sommet avec la taille de palette."""

    __slots__ = ('colors', 'palette_size')

    def __init__(self, colors: Sequence[int], palette_size: Optional[int] = None):
        self.colors = tuple(colors)
        if palette_size is None:
            palette_size = max(self.colors) + 1 if self.colors else 0
        if any(c < 0 or c >= palette_size for c in self.colors):
            raise ValidationError("Indice de couleur hors de la palette")
        self.palette_size = palette_size

    @classmethod
    def compact(cls, raw: Sequence[int]) -> 'Coloring':
        """Renumérote les couleurs utilisées en 0..k-1 (ordre croissant des indices bruts)."""
        ranks = {c: i for i, c in enumerate(sorted(set(raw)))}
        return cls([ranks[c] for c in raw], len(ranks))

    def colors_used(self) -> int:
        return len(set(self.colors))

    def classes(self) -> List[VertexSet]:
        buckets: Dict[int, List[int]] = {}
        for v, c in enumerate(self.colors):
            buckets.setdefault(c, []).append(v)
        return [tuple(buckets[c]) for c in sorted(buckets)]

    def __len__(self) -> int:
        return len(self.colors)

    def __repr__(self) -> str:
        return f"Coloring(palette={self.palette_size}, colors={list(self.colors)})"
