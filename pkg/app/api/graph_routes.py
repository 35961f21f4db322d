from flask import Blueprint, request, jsonify
from flask_cors import cross_origin
import logging
from app.models.sweep_models import SweepRecord
from app.services.sweep_service import SweepService
from app.utils.validators import GraphPayloadValidator
from app.utils.exceptions import (CapExceededError, HoleforgeError, LongHoleDetectedError,
                                  SolverTimeoutError, ValidationError)
from config.settings import Limits

logger = logging.getLogger(__name__)

graph_bp = Blueprint('graphs', __name__, url_prefix='/api/v1')

# Services initialisés par init_graph_api
sweep_service = None
graph_validator = None


def init_graph_api(app):
    """Initialise l'API des graphes avec les bornes de la configuration."""
    global sweep_service, graph_validator

    limits = Limits.from_config(app.config)
    sweep_service = SweepService(limits)
    graph_validator = GraphPayloadValidator(max_vertices=limits.vertex_cap)

    logger.info("Services de l'API graphes initialisés")


def error_response(error: Exception):
    """Traduit une exception du domaine en réponse JSON (400, 422 ou 500)."""
    if isinstance(error, LongHoleDetectedError):
        status = 500 if error.under_trust else 400
    elif isinstance(error, ValidationError):
        status = 400
    elif isinstance(error, (CapExceededError, SolverTimeoutError)):
        status = 422
    else:
        status = 500
    body = {"error": str(error), "type": type(error).__name__}
    if isinstance(error, LongHoleDetectedError) and error.witness:
        body["witness"] = list(error.witness)
    return jsonify(body), status


def _run(command: str, **options):
    try:
        g = graph_validator.validate_json(request.get_json(silent=True))
        row = sweep_service.analysis.run(command, g, **options)
        return jsonify(row)
    except HoleforgeError as e:
        logger.warning(f"{command}: {type(e).__name__}: {e}")
        return error_response(e)
    except Exception as e:
        logger.error(f"Erreur inattendue ({command}): {str(e)}")
        return jsonify({"error": str(e), "type": type(e).__name__}), 500


@graph_bp.route('/analyze', methods=['POST'])
@cross_origin()
def analyze():
    """Invariants exacts : omega, chi, alpha, theta."""
    return _run('analyze')


@graph_bp.route('/classify', methods=['POST'])
@cross_origin()
def classify():
    return _run('classify')


@graph_bp.route('/color', methods=['POST'])
@cross_origin()
def color():
    """Coloration par niveaux ; ``?trust=true`` saute la vérification préalable."""
    trust = request.args.get('trust') == 'true'
    verify = request.args.get('verify') == 'true'
    return _run('color', trust=trust, verify=verify)


@graph_bp.route('/chip', methods=['POST'])
@cross_origin()
def chip():
    return _run('chip')


@graph_bp.route('/nice', methods=['POST'])
@cross_origin()
def nice():
    return _run('nice')


@graph_bp.route('/slack', methods=['POST'])
@cross_origin()
def slack():
    return _run('slack')


@graph_bp.route('/sweeps', methods=['GET'])
@cross_origin()
def list_sweeps():
    """Liste les dernières lignes du journal des campagnes."""
    try:
        command = request.args.get('command')
        limit = min(int(request.args.get('limit', 100)), 1000)
        records = SweepService.list_records(command, limit)
        return jsonify({
            "records": [r.to_dict() for r in records],
            "total": SweepRecord.query.count()
        })
    except ValueError:
        return jsonify({"error": "Paramètre 'limit' invalide", "type": "ValidationError"}), 400
    except Exception as e:
        logger.error(f"Erreur lecture du journal: {str(e)}")
        return jsonify({"error": str(e), "type": type(e).__name__}), 500
