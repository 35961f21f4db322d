import pytest
import networkx as nx
from app import create_app
from app.models.sweep_models import db
from app.services.generator_service import GeneratorService
from app.models.graph import Graph
from config.settings import Limits


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help="Exécuter aussi les tests marqués slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason="Utiliser --runslow pour l'exécuter")
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def app():
    """Fixture pour créer une application de test."""
    app = create_app('testing')

    with app.app_context():
        db.create_all()
        yield app
        db.session.remove()
        db.drop_all()


@pytest.fixture
def client(app):
    """Fixture pour créer un client de test."""
    return app.test_client()


@pytest.fixture
def limits():
    """Bornes de test : délai large, graine fixe."""
    return Limits(timeout=30.0, seed=0)


@pytest.fixture
def c5():
    return GeneratorService.cycle(5)


@pytest.fixture
def c6():
    return GeneratorService.cycle(6)


@pytest.fixture
def antihole7():
    """Complémentaire de C_7 : sans trou long, omega = 3, chi = 4."""
    return GeneratorService.antihole(7)


@pytest.fixture
def petersen():
    return Graph.from_networkx(nx.petersen_graph())


@pytest.fixture
def grotzsch():
    return GeneratorService.grotzsch()
