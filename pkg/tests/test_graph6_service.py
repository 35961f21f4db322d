import io
import pytest
from app.models.graph import Graph
from app.services.enumeration_service import EnumerationService
from app.services.generator_service import GeneratorService
from app.services.graph6_service import GRAPH6_HEADER, Graph6Service
from app.utils.exceptions import GraphFormatError, ValidationError


class TestGraph6Parsing:
    """Tests pour le décodage graph6."""

    def test_parse_triangle(self):
        """Test de décodage de K_3."""
        g = Graph6Service.parse_graph6('Bw')

        assert g.n == 3
        assert g.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_parse_with_header(self):
        g = Graph6Service.parse_graph6(GRAPH6_HEADER + 'Dhc\n')

        assert g == GeneratorService.cycle(5)

    def test_parse_empty_graph(self):
        assert Graph6Service.parse_graph6('?').n == 0

    @pytest.mark.parametrize('text,n,edges', [
        ('@', 1, []),
        ('A?', 2, []),
        ('A_', 2, [(0, 1)]),
        ('D~{', 5, [(u, v) for u in range(5) for v in range(u + 1, 5)]),
    ])
    def test_parse_hand_encoded(self, text, n, edges):
        """Chaînes encodées à la main : un octet de longueur puis six bits par caractère."""
        g = Graph6Service.parse_graph6(text)

        assert g.n == n
        assert g.edges() == edges

    def test_truncated_payload(self):
        """Test avec une charge utile trop courte."""
        with pytest.raises(GraphFormatError) as exc_info:
            Graph6Service.parse_graph6('D')

        assert exc_info.value.offset == 1

    def test_non_zero_padding(self):
        with pytest.raises(GraphFormatError):
            Graph6Service.parse_graph6('Bx')

    def test_character_out_of_range(self):
        with pytest.raises(GraphFormatError) as exc_info:
            Graph6Service.parse_graph6('B w')

        assert exc_info.value.offset == 1

    def test_format_error_is_validation_error(self):
        with pytest.raises(ValidationError):
            Graph6Service.parse_graph6('')


class TestGraph6Writing:
    """Tests pour l'encodage graph6."""

    def test_write_known_strings(self):
        assert Graph6Service.write_graph6(GeneratorService.complete(3)) == 'Bw'
        assert Graph6Service.write_graph6(GeneratorService.cycle(5)) == 'Dhc'
        assert Graph6Service.write_graph6(Graph.empty(0)) == '?'

    def test_long_length_field(self):
        """Au-delà de 62 sommets, le champ de longueur occupe quatre octets."""
        g = GeneratorService.path(63)
        text = Graph6Service.write_graph6(g)

        assert text.startswith('~??~')
        assert Graph6Service.parse_graph6(text) == g

    def test_round_trip_small_graphs(self):
        """Tous les graphes à au plus six sommets survivent à l'aller-retour."""
        enumeration = EnumerationService()
        for n in range(7):
            for g in enumeration.enumerate_graphs(n):
                text = Graph6Service.write_graph6(g)
                assert Graph6Service.parse_graph6(text) == g

    def test_write_lines(self):
        text = Graph6Service.write_lines([GeneratorService.complete(3), GeneratorService.cycle(5)])

        assert text == 'Bw\nDhc\n'


class TestEdgeList:
    """Tests pour le format liste d'arêtes."""

    def test_parse_edge_list(self):
        g = Graph6Service.parse_edge_list("3\n0 1\n# commentaire\n1 2\n")

        assert g == GeneratorService.path(3)

    def test_duplicate_edge(self):
        with pytest.raises(GraphFormatError) as exc_info:
            Graph6Service.parse_edge_list("3\n0 1\n1 0\n")

        assert "dupliquée" in str(exc_info.value)

    def test_edge_out_of_range(self):
        with pytest.raises(GraphFormatError):
            Graph6Service.parse_edge_list("2\n0 2\n")

    def test_write_edge_list(self):
        assert Graph6Service.write_edge_list(GeneratorService.path(3)) == "3\n0 1\n1 2\n"

    def test_parse_any(self):
        assert Graph6Service.parse_any('Bw') == GeneratorService.complete(3)
        assert Graph6Service.parse_any("2\n0 1") == GeneratorService.complete(2)
        with pytest.raises(ValidationError):
            Graph6Service.parse_any('   ')


class TestStream:

    def test_read_stream_skips_blank_lines(self):
        graphs = list(Graph6Service.read_stream(io.StringIO("Bw\n\nDhc\n")))

        assert [g.n for g in graphs] == [3, 5]

    def test_read_stream_reports_bad_line(self):
        with pytest.raises(GraphFormatError):
            list(Graph6Service.read_stream(io.StringIO("Bw\nB\n")))

    def test_read_binary_matches_text_reader(self):
        graphs = list(Graph6Service.read_binary(io.BytesIO(b"Bw\n\nDhc\n")))

        assert graphs == list(Graph6Service.read_stream(io.StringIO("Bw\n\nDhc\n")))

    def test_read_binary_non_ascii_offset(self):
        """L'octet 0xff suit la première ligne de quatre octets."""
        with pytest.raises(GraphFormatError) as exc_info:
            list(Graph6Service.read_binary(io.BytesIO(b"D~{\n\xff\xfe\n")))

        assert exc_info.value.offset == 4
        assert '0xff' in str(exc_info.value)
