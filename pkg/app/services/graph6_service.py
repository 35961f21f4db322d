from typing import BinaryIO, Iterable, Iterator, List, TextIO
import logging
import networkx as nx
from app.models.graph import Graph
from app.utils.exceptions import GraphFormatError, ValidationError

logger = logging.getLogger(__name__)

GRAPH6_HEADER = '>>graph6<<'
_BIAS = 63
_MAX_SMALL = 62
_MAX_MEDIUM = 258047


class Graph6Service:
    """Service de lecture/écriture des formats texte graph6 et liste d'arêtes."""

    @staticmethod
    def parse_graph6(text: str) -> Graph:
        """
        Décode une ligne graph6 (en-tête ``>>graph6<<`` toléré).

        La ligne est d'abord validée octet par octet pour situer l'erreur,
        puis décodée par networkx.

        Args:
            text: Ligne graph6

        Returns:
            Graphe décodé

        Raises:
            GraphFormatError: Champ de longueur invalide, caractère hors plage
                imprimable ou charge utile de taille incorrecte (avec l'octet fautif)
        """
        line = text.rstrip('\r\n')
        start = 0
        if line.startswith(GRAPH6_HEADER):
            start = len(GRAPH6_HEADER)
        data = line[start:]
        if not data:
            raise GraphFormatError("Ligne graph6 vide", start)

        values = []
        for i, ch in enumerate(data):
            code = ord(ch)
            if code < _BIAS or code > 126:
                raise GraphFormatError(f"Caractère {ch!r} hors de la plage graph6", start + i)
            values.append(code - _BIAS)

        n, pos = Graph6Service._decode_length(values, start)
        pairs = n * (n - 1) // 2
        expected = (pairs + 5) // 6
        payload = values[pos:]
        if len(payload) != expected:
            raise GraphFormatError(
                f"Charge utile de {len(payload)} octets, {expected} attendus pour n={n}",
                start + pos + min(len(payload), expected))
        # Les bits de bourrage doivent être nuls
        if pairs % 6 and payload[-1] & ((1 << (6 - pairs % 6)) - 1):
            raise GraphFormatError("Bits de bourrage non nuls", start + pos + len(payload) - 1)

        return Graph.from_networkx(nx.from_graph6_bytes(data.encode('ascii')))

    @staticmethod
    def _decode_length(values: List[int], start: int):
        if values[0] != 63:
            return values[0], 1
        if len(values) >= 2 and values[1] == 63:
            if len(values) < 8:
                raise GraphFormatError("Champ de longueur tronqué", start + len(values))
            n = 0
            for v in values[2:8]:
                n = (n << 6) | v
            if n <= _MAX_MEDIUM:
                raise GraphFormatError("Champ de longueur non minimal", start)
            return n, 8
        if len(values) < 4:
            raise GraphFormatError("Champ de longueur tronqué", start + len(values))
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        if n <= _MAX_SMALL:
            raise GraphFormatError("Champ de longueur non minimal", start)
        return n, 4

    @staticmethod
    def write_graph6(g: Graph) -> str:
        """
        Encode un graphe en graph6 (sans en-tête).

        Args:
            g: Graphe à encoder

        Returns:
            Chaîne graph6
        """
        return nx.to_graph6_bytes(g.to_networkx(), header=False).decode('ascii').rstrip('\n')

    @staticmethod
    def parse_edge_list(text: str) -> Graph:
        """
        Décode le format secondaire : n sur la première ligne, puis « u v » par ligne.

        Args:
            text: Contenu texte

        Returns:
            Graphe décodé

        Raises:
            GraphFormatError: Ligne illisible, arête dupliquée ou hors bornes
        """
        offset = 0
        n = None
        edges = []
        seen = set()
        for raw in text.splitlines(keepends=True):
            line = raw.split('#', 1)[0].strip()
            if line:
                fields = line.split()
                try:
                    numbers = [int(f) for f in fields]
                except ValueError:
                    raise GraphFormatError(f"Entier attendu dans {line!r}", offset)
                if n is None:
                    if len(numbers) != 1 or numbers[0] < 0:
                        raise GraphFormatError("Nombre de sommets attendu en première ligne", offset)
                    n = numbers[0]
                else:
                    if len(numbers) != 2:
                        raise GraphFormatError("Deux sommets attendus par arête", offset)
                    u, v = numbers
                    if not (0 <= u < n and 0 <= v < n) or u == v:
                        raise GraphFormatError(f"Arête ({u}, {v}) invalide pour n={n}", offset)
                    key = (min(u, v), max(u, v))
                    if key in seen:
                        raise GraphFormatError(f"Arête ({u}, {v}) dupliquée", offset)
                    seen.add(key)
                    edges.append(key)
            offset += len(raw.encode('utf-8'))
        if n is None:
            raise GraphFormatError("Liste d'arêtes vide", 0)
        return Graph.from_edges(n, edges)

    @staticmethod
    def write_edge_list(g: Graph) -> str:
        lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
        return '\n'.join(lines) + '\n'

    @staticmethod
    def parse_any(text: str) -> Graph:
        """Décode du graph6 sur une ligne, sinon une liste d'arêtes."""
        stripped = text.strip()
        if not stripped:
            raise ValidationError("Aucun graphe fourni")
        if '\n' in stripped or ' ' in stripped or stripped.isdigit():
            return Graph6Service.parse_edge_list(stripped)
        return Graph6Service.parse_graph6(stripped)

    @staticmethod
    def read_stream(stream: TextIO) -> Iterator[Graph]:
        """Lit un flux graph6, une ligne par graphe, en ignorant les lignes vides."""
        for number, line in enumerate(stream, start=1):
            if not line.strip():
                continue
            try:
                yield Graph6Service.parse_graph6(line.strip())
            except GraphFormatError as e:
                logger.error(f"Ligne {number} illisible: {e}")
                raise

    @staticmethod
    def read_binary(stream: BinaryIO) -> Iterator[Graph]:
        """
        Lit un flux d'octets graph6. Un octet non ASCII donne une erreur de
        format qui porte sa position dans le flux.

        Raises:
            GraphFormatError: Octet non ASCII ou ligne graph6 mal formée
        """
        offset = 0
        for number, raw in enumerate(stream, start=1):
            try:
                line = raw.decode('ascii')
            except UnicodeDecodeError as e:
                logger.error(f"Ligne {number} illisible: octet non ASCII")
                raise GraphFormatError(f"Octet non ASCII 0x{raw[e.start]:02x} ligne {number}",
                                       offset + e.start) from e
            offset += len(raw)
            if not line.strip():
                continue
            try:
                yield Graph6Service.parse_graph6(line.strip())
            except GraphFormatError as e:
                logger.error(f"Ligne {number} illisible: {e}")
                raise

    @staticmethod
    def write_lines(graphs: Iterable[Graph]) -> str:
        return ''.join(Graph6Service.write_graph6(g) + '\n' for g in graphs)
