from app.services.generator_service import GeneratorService
from app.services.graph6_service import Graph6Service


class TestGraphRoutes:
    """Tests pour l'API HTTP des graphes."""

    def test_health(self, client):
        response = client.get('/health')

        assert response.status_code == 200
        assert response.get_json()['status'] == 'healthy'

    def test_status_exposes_limits(self, client):
        data = client.get('/api/status').get_json()

        assert data['limits']['vertex_cap'] == 64

    def test_analyze(self, client):
        response = client.post('/api/v1/analyze', json={'graph6': 'Dhc'})

        assert response.status_code == 200
        data = response.get_json()
        assert data['invariants']['chi'] == 3
        assert data['command'] == 'analyze'

    def test_analyze_edge_list(self, client):
        response = client.post('/api/v1/analyze', json={'edges': "3\n0 1\n1 2\n"})

        assert response.status_code == 200
        assert response.get_json()['invariants']['omega'] == 2

    def test_missing_graph(self, client):
        response = client.post('/api/v1/analyze', json={})

        assert response.status_code == 400
        assert response.get_json()['type'] == 'ValidationError'

    def test_malformed_graph6(self, client):
        response = client.post('/api/v1/classify', json={'graph6': 'D'})

        assert response.status_code == 400
        assert response.get_json()['type'] == 'GraphFormatError'

    def test_color_rejects_long_hole(self, client):
        response = client.post('/api/v1/color', json={'graph6': 'Dhc'})

        assert response.status_code == 400
        data = response.get_json()
        assert data['type'] == 'LongHoleDetectedError'
        assert len(data['witness']) == 5

    def test_color_with_verification(self, client):
        graph6 = Graph6Service.write_graph6(GeneratorService.antihole(7))
        response = client.post('/api/v1/color?verify=true', json={'graph6': graph6})

        assert response.status_code == 200
        assert response.get_json()['verified'] is True

    def test_cap_exceeded(self, client):
        graph6 = Graph6Service.write_graph6(GeneratorService.cycle(12))
        response = client.post('/api/v1/nice', json={'graph6': graph6})

        assert response.status_code == 422
        assert response.get_json()['type'] == 'CapExceededError'

    def test_too_many_vertices(self, client):
        graph6 = Graph6Service.write_graph6(GeneratorService.path(65))
        response = client.post('/api/v1/analyze', json={'graph6': graph6})

        assert response.status_code == 400

    def test_chip_and_slack(self, client):
        assert client.post('/api/v1/chip', json={'graph6': 'Dhc'}).get_json()['chi_p'] == 2
        assert client.post('/api/v1/slack', json={'graph6': 'Dhc'}).get_json()['slack']['slack'] == 1

    def test_sweeps_listing(self, client):
        response = client.get('/api/v1/sweeps?command=search')

        assert response.status_code == 200
        assert response.get_json() == {'records': [], 'total': 0}

    def test_sweeps_invalid_limit(self, client):
        assert client.get('/api/v1/sweeps?limit=abc').status_code == 400
