"""
Interface en ligne de commande : une commande par famille d'opérations, un
graphe graph6 par ligne en entrée, une ligne de résultat par graphe en sortie.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence
import logging
import os
import sys
import click
from app import LOG_FORMAT, create_app
from app.models.graph import Graph
from app.services.class_lab_service import ClassLabService, SearchBudget
from app.services.corpus_service import CORPUS_KINDS, CorpusService
from app.services.generator_service import GeneratorService
from app.services.graph6_service import Graph6Service
from app.services.sweep_service import SweepService
from app.utils.exceptions import (CapExceededError, InvariantViolationError, LongHoleDetectedError,
                                  NoBisimplicialVertexError, SolverTimeoutError, ValidationError)
from app.utils.formatters import format_row, tsv_columns, tsv_header
from app.utils.validators import OUTPUT_FORMATS, validate_counts
from config.settings import Config, Limits

logger = logging.getLogger('holeforge')

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_LIMIT = 2
EXIT_INVARIANT = 3


@dataclass
class RunConfig:
    """Paramètres d'une exécution : bornes, graine, format et parallélisme."""
    limits: Limits
    fmt: str = 'json'
    jobs: int = 1

    @property
    def seed(self) -> int:
        return self.limits.seed


# Option, variable d'environnement, champ de Limits, aide
CAP_OPTIONS = (
    ('--enum-cap', 'HOLEFORGE_ENUM_CAP', 'enumeration_cap', "Ordre maximal de l'énumération exhaustive."),
    ('--nice-cap', 'HOLEFORGE_NICE_CAP', 'nice_cap', "Nombre maximal de sommets pour « nice »."),
    ('--slack-cap', 'HOLEFORGE_SLACK_CAP', 'slack_cap', "Nombre maximal de sommets pour l'écart de Gyárfás."),
    ('--perfect-cap', 'HOLEFORGE_PERFECT_CAP', 'perfect_cap', "Nombre maximal de sommets pour chi_p."),
    ('--canon-cap', 'HOLEFORGE_CANON_CAP', 'canonical_cap', "Nombre maximal de sommets du code canonique."),
    ('--line-cap', 'HOLEFORGE_LINE_CAP', 'line_complete_cap', "Plus grand n pour L(K_n) et son complémentaire."),
)


def _cap_options(command):
    for flag, envvar, name, text in reversed(CAP_OPTIONS):
        command = click.option(flag, name, envvar=envvar, type=click.IntRange(min=1),
                               default=None, help=text)(command)
    return command


def _graphs_from(source: Optional[str]) -> Iterator[Graph]:
    """Fichier graph6, ``-`` (entrée standard) ou graphe en ligne (graph6 ou liste d'arêtes)."""
    if source is None or source == '-':
        buffer = getattr(sys.stdin, 'buffer', None)
        if buffer is not None:
            yield from Graph6Service.read_binary(buffer)
        else:
            yield from Graph6Service.read_stream(sys.stdin)
    elif os.path.isfile(source):
        with open(source, 'rb') as stream:
            yield from Graph6Service.read_binary(stream)
    else:
        yield Graph6Service.parse_any(source)


def _graphs(sources: Sequence[str]) -> Iterator[Graph]:
    for source in sources or ['-']:
        yield from _graphs_from(source)


def _emit_rows(run: RunConfig, rows) -> List[dict]:
    """Écrit les lignes ; en TSV, l'en-tête de la première ligne fixe les colonnes."""
    emitted = []
    columns = None
    for row in rows:
        if run.fmt == 'tsv' and columns is None:
            columns = tsv_columns(row)
            click.echo(tsv_header(columns))
        click.echo(format_row(row, run.fmt, columns))
        emitted.append(row)
    return emitted


def _sweep(ctx: click.Context, command: str, sources, **options) -> List[dict]:
    run: RunConfig = ctx.obj
    service = SweepService(run.limits)
    return _emit_rows(run, service.run(command, _graphs(sources), run.jobs, options))


@click.group()
@click.option('--vcap', envvar='HOLEFORGE_VCAP', type=click.IntRange(min=1), default=None,
              help="Nombre maximal de sommets des solveurs exacts.")
@click.option('--timeout', envvar='HOLEFORGE_TIMEOUT', type=click.FloatRange(min=0), default=None,
              help="Délai par recherche en secondes (0 = illimité).")
@click.option('--cycle-cap', envvar='HOLEFORGE_CYCLE_CAP', type=click.IntRange(min=1), default=None,
              help="Nombre maximal de cycles énumérés.")
@_cap_options
@click.option('--seed', envvar='HOLEFORGE_SEED', type=int, default=None, help="Graine des corpus.")
@click.option('--format', 'fmt', type=click.Choice(OUTPUT_FORMATS), default='json', show_default=True)
@click.option('--jobs', type=click.IntRange(min=1), default=1, show_default=True,
              help="Processus de travail (sortie toujours dans l'ordre d'entrée).")
@click.option('--verbose', is_flag=True, help="Journalisation DEBUG sur stderr.")
@click.pass_context
def cli(ctx, vcap, timeout, cycle_cap, seed, fmt, jobs, verbose, **caps):
    """holeforge : laboratoire des classes héréditaires de graphes."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO,
                        format=LOG_FORMAT, stream=sys.stderr, force=True)
    limits = Limits.from_config(Config)
    changes = {name: value for name, value in caps.items() if value is not None}
    if vcap is not None:
        changes['vertex_cap'] = vcap
    if timeout is not None:
        changes['timeout'] = timeout if timeout > 0 else None
    if cycle_cap is not None:
        changes['cycle_cap'] = cycle_cap
    if seed is not None:
        changes['seed'] = seed
    ctx.obj = RunConfig(limits=limits.replace(**changes), fmt=fmt, jobs=jobs)


@cli.command()
@click.argument('sources', nargs=-1)
@click.pass_context
def analyze(ctx, sources):
    """Invariants exacts omega, chi, alpha, theta."""
    _sweep(ctx, 'analyze', sources)


@cli.command()
@click.argument('sources', nargs=-1)
@click.pass_context
def classify(ctx, sources):
    """Appartenance aux classes héréditaires (cordal, sans trou long, parfait...)."""
    _sweep(ctx, 'classify', sources)


@cli.command()
@click.argument('sources', nargs=-1)
@click.option('--trust', is_flag=True, help="Ne pas vérifier l'absence de trou long.")
@click.option('--verify', is_flag=True, help="Comparer au nombre chromatique exact.")
@click.pass_context
def color(ctx, sources, trust, verify):
    """Coloration par niveaux d'un graphe sans trou de longueur >= 5."""
    run: RunConfig = ctx.obj
    if run.fmt != 'human':
        rows = _sweep(ctx, 'color', sources, trust=trust, verify=verify)
    else:
        rows = []
        for row in SweepService(run.limits).run('color', _graphs(sources), run.jobs,
                                                {'trust': trust, 'verify': verify}):
            for v, c in enumerate(row['coloring']['coloring']['colors']):
                click.echo(f"{v} {c}")
            summary = {k: v for k, v in row.items() if k != 'coloring'}
            summary['colors_used'] = row['coloring']['colors_used']
            summary['palette_bound'] = row['coloring']['palette_bound']
            click.echo(format_row(summary, 'human'))
            rows.append(row)
    if verify and any(not row.get('verified', True) for row in rows):
        raise InvariantViolationError("Une coloration n'a pas passé la vérification")


@cli.command()
@click.argument('sources', nargs=-1)
@click.pass_context
def chip(ctx, sources):
    """Nombre chromatique parfait et partition témoin."""
    _sweep(ctx, 'chip', sources)


@cli.command()
@click.argument('sources', nargs=-1)
@click.pass_context
def nice(ctx, sources):
    """Vérifie chi(H) - omega(H) <= 1 pour tout sous-graphe induit H."""
    _sweep(ctx, 'nice', sources)


@cli.command()
@click.argument('sources', nargs=-1)
@click.pass_context
def slack(ctx, sources):
    """Écart de Gyárfás et trous impairs anticomplets."""
    _sweep(ctx, 'slack', sources)


@cli.command()
@click.argument('sources', nargs=-1)
@click.option('--corpus', 'kind', type=click.Choice(CORPUS_KINDS), default=None,
              help="Balayer un corpus généré au lieu de l'entrée.")
@click.option('--count', type=click.IntRange(min=0), default=20, show_default=True)
@click.option('-n', '--vertices', type=click.IntRange(min=1), default=8, show_default=True)
@click.option('--fn', 'fn_omega', type=click.IntRange(min=1), default=None,
              help="Chercher une borne inférieure sur f(omega).")
@click.option('--record', is_flag=True, help="Enregistrer les lignes dans le journal SQL.")
@click.pass_context
def search(ctx, sources, kind, count, vertices, fn_omega, record):
    """Preuves pour les conjectures (chi <= omega², bipartition, f(omega))."""
    run: RunConfig = ctx.obj
    if fn_omega is not None:
        lab = ClassLabService(run.limits)
        report = lab.fn_search(fn_omega, SearchBudget(seed=run.seed))
        row = {'schema_version': 1, 'command': 'search', 'fn': report.to_dict()}
        _emit_rows(run, [row])
        return

    service = SweepService(run.limits)
    if kind is not None:
        graphs = CorpusService(run.limits).generate(kind, count=count, n=vertices, seed=run.seed)
    else:
        graphs = _graphs(sources)
    rows = _emit_rows(run, service.run('search', graphs, run.jobs))

    violations = [r for r in rows if r.get('verdict') == 'violation']
    unknown = sum(1 for r in rows if r.get('verdict') == 'unknown')
    if violations:
        logger.warning(f"{len(violations)} violation(s) de conjecture : revue humaine requise")
    logger.info(f"{len(rows)} graphes, {len(violations)} violation(s), {unknown} inconnu(s)")

    if record:
        app = create_app(os.environ.get('FLASK_ENV', 'production'))
        with app.app_context():
            for row in rows:
                service.record(row, seed=run.seed)
        logger.info(f"{len(rows)} lignes enregistrées")


@cli.command()
@click.argument('sources', nargs=-1)
@click.option('--four-regular', 'four_regular', type=click.IntRange(min=5), default=None,
              help="Graphes 4-réguliers connexes à N sommets.")
@click.option('--trees', type=click.IntRange(min=1), default=None, help="Arbres T_1..T_K.")
@click.option('--cycles', type=click.IntRange(min=3), default=None, help="Cycles C_3..C_K.")
@click.option('--sequence', default=None, help="Suite f_1,f_2,... à réaliser.")
@click.pass_context
def antichain(ctx, sources, four_regular, trees, cycles, sequence):
    """Vérifie qu'une famille de graphes est une antichaîne pour l'ordre induit."""
    run: RunConfig = ctx.obj
    lab = ClassLabService(run.limits)
    row = {'schema_version': 1, 'command': 'antichain'}
    if sequence is not None:
        counts = validate_counts(sequence)
        realization = lab.realize_forbidden_sequence([counts[n] for n in sorted(counts)])
        row['realization'] = realization.to_dict(Graph6Service.write_graph6)
        graphs = realization.forbidden()
    elif four_regular is not None:
        graphs = lab.enumerate_connected_4_regular(four_regular, jobs=run.jobs)
    elif trees is not None:
        graphs = [GeneratorService.tree_T(k) for k in range(1, trees + 1)]
    elif cycles is not None:
        graphs = [GeneratorService.cycle(k) for k in range(3, cycles + 1)]
    else:
        graphs = list(_graphs(sources))
    row['graphs'] = [Graph6Service.write_graph6(g) for g in graphs]
    row['antichain'] = lab.verify_antichain(graphs).to_dict()
    _emit_rows(run, [row])


@cli.command()
@click.argument('kind', type=click.Choice(CORPUS_KINDS))
@click.option('--count', type=click.IntRange(min=0), default=10, show_default=True)
@click.option('-n', '--vertices', type=click.IntRange(min=0), default=8, show_default=True)
@click.option('--max-vertices', type=click.IntRange(min=1), default=60, show_default=True)
@click.pass_context
def corpus(ctx, kind, count, vertices, max_vertices):
    """Écrit un corpus reproductible en graph6 (une ligne par graphe)."""
    run: RunConfig = ctx.obj
    service = CorpusService(run.limits)
    for g in service.generate(kind, count=count, n=vertices, seed=run.seed, max_vertices=max_vertices):
        click.echo(Graph6Service.write_graph6(g))


@cli.command()
@click.argument('sources', nargs=-1)
@click.option('--to', 'target', type=click.Choice(['graph6', 'edges']), default='graph6', show_default=True)
@click.pass_context
def convert(ctx, sources, target):
    """Convertit entre graph6 et liste d'arêtes."""
    for g in _graphs(sources):
        if target == 'graph6':
            click.echo(Graph6Service.write_graph6(g))
        else:
            click.echo(Graph6Service.write_edge_list(g), nl=False)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Exécute la CLI et renvoie le code de sortie.

    Returns:
        0 succès ; 1 entrée invalide ; 2 borne ou délai dépassé ; 3 invariant violé
    """
    try:
        cli.main(args=list(argv) if argv is not None else None, prog_name='holeforge',
                 standalone_mode=False)
        return EXIT_OK
    except click.exceptions.UsageError as e:
        e.show()
        return EXIT_INPUT
    except click.ClickException as e:
        e.show()
        return EXIT_INPUT
    except click.exceptions.Abort:
        return EXIT_INPUT
    except LongHoleDetectedError as e:
        logger.error(f"{e} ; témoin: {list(e.witness) if e.witness else None}")
        return EXIT_INVARIANT if e.under_trust else EXIT_INPUT
    except ValidationError as e:
        logger.error(f"Entrée invalide: {e}")
        return EXIT_INPUT
    except (CapExceededError, SolverTimeoutError) as e:
        logger.error(f"Borne atteinte: {e}")
        return EXIT_LIMIT
    except (InvariantViolationError, NoBisimplicialVertexError) as e:
        logger.error(f"Invariant violé: {e}")
        return EXIT_INVARIANT
