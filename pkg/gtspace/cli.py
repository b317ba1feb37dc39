"""Command line entry point: `gtspace <command> ...`."""
import logging
import sys
from pathlib import Path
from typing import Optional

import click

from gtspace.axioms import classify as classify_space
from gtspace.core import GTSpace
from gtspace.errors import GTSpaceError
from gtspace.explorer import enumerate_spaces, mine_counterexamples, sample_spaces
from gtspace.realfn import urysohn_construct
from gtspace.settings import Settings, load_settings
from gtspace.spacefile import read_space, render_space
from gtspace.theorems import verify_population, verify_theorems

logger = logging.getLogger(__name__)

FAMILY_KINDS = {
    'gamma': 'gamma',
    'gamma-closed': 'gamma_closed',
    'sγ-open': 's_gamma_open',
    'sγ-closed': 's_gamma_closed',
    'sλ-closed': 's_lambda_closed',
    'sλ-open': 's_lambda_open',
    'sg_λ-closed': 'sg_lambda_closed',
    'sg_λ-open': 'sg_lambda_open',
    'sλGδ': 's_lambda_g_delta',
}

FAMILY_ALIASES = {
    's-gamma-open': 'sγ-open',
    's-gamma-closed': 'sγ-closed',
    's-lambda-closed': 'sλ-closed',
    's-lambda-open': 'sλ-open',
    'sg-lambda-closed': 'sg_λ-closed',
    'sg-lambda-open': 'sg_λ-open',
    's-lambda-g-delta': 'sλGδ',
}


class GTSpaceGroup(click.Group):
    """Usage, parse and engine errors leave with exit status 1; 2 is kept for FAILED theorems."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent, **extra)
        except click.UsageError as e:
            e.exit_code = 1
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = 1
            raise
        except (GTSpaceError, OSError) as e:
            raise click.ClickException(str(e).removeprefix("Error: ")) from e


def _subset(space: GTSpace, text: str):
    return space.ground.subset(token for token in text.replace(',', ' ').split())


def _emit(lines):
    for line in lines:
        click.echo(line)


@click.group(cls=GTSpaceGroup)
@click.option('--env-file', type=click.Path(dir_okay=False, path_type=Path), default=None,
              help='Read GT_* settings from this file instead of ./.env')
@click.pass_context
def cli(ctx, env_file: Optional[Path]):
    """Exact engine for finite generalized topological spaces."""
    try:
        settings = load_settings(env_file)
    except ValueError as e:
        raise click.ClickException(str(e).removeprefix("Error: ")) from e

    # Set up logging; stdout carries only results
    logging.basicConfig(level=getattr(logging, settings.log_level),
                        format='%(asctime)s - %(levelname)s - %(message)s', stream=sys.stderr)
    ctx.obj = settings


@cli.command()
@click.argument('space_file', type=click.Path(path_type=Path))
@click.option('--machine', is_flag=True, help='Results only, no headers')
@click.pass_obj
def classify(settings: Settings, space_file: Path, machine: bool):
    """Decide every separation axiom for a space."""
    space = read_space(space_file)
    if not machine:
        click.echo(f"# axioms of {space.name}")
    _emit(classify_space(space, settings.cover_limit).lines())


@cli.command()
@click.argument('space_file', type=click.Path(path_type=Path))
@click.option('--kind', default='sλ-closed', show_default=True,
              help=f"One of: {', '.join(list(FAMILY_KINDS) + list(FAMILY_ALIASES))}")
@click.option('--machine', is_flag=True, help='Results only, no headers')
def families(space_file: Path, kind: str, machine: bool):
    """Print a derived family, one set per line."""
    kind = FAMILY_ALIASES.get(kind, kind)
    if kind not in FAMILY_KINDS:
        raise click.UsageError(f"unknown family kind '{kind}'")
    space = read_space(space_file)
    family = getattr(space, FAMILY_KINDS[kind])
    if not machine:
        click.echo(f"# {kind} sets of {space.name} ({len(family)})")
    _emit(space.render(member) for member in family)


@cli.command()
@click.argument('space_file', required=False, type=click.Path(path_type=Path))
@click.option('--n', 'points', type=int, default=None, help='Verify over every space on n points')
@click.option('--sample', is_flag=True, help='Use the deterministic sampler (needed for n = 5)')
@click.option('--seed', type=int, default=None, help='Sampler seed (default GT_SAMPLE_SEED)')
@click.option('--workers', type=int, default=None, help='Worker processes (default GT_WORKERS)')
@click.option('--machine', is_flag=True, help='Results only, no headers or progress bar')
@click.pass_context
def verify(ctx, space_file: Optional[Path], points: Optional[int], sample: bool,
           seed: Optional[int], workers: Optional[int], machine: bool):
    """Check every theorem on one space or on a population; exit 2 on any FAILED."""
    settings: Settings = ctx.obj
    if (space_file is None) == (points is None):
        raise click.UsageError("give either a space file or --n")

    if space_file is not None:
        space = read_space(space_file)
        spaces = [space]
        reports = verify_theorems(space, settings.urysohn_depth, settings.cover_limit)
        header = f"# theorems on {space.name}"
    else:
        if sample:
            spaces = sample_spaces(points, settings.sample_size, settings.sample_seed if seed is None else seed)
        else:
            spaces = enumerate_spaces(points)
        progress = not machine and sys.stderr.isatty()
        reports = verify_population(spaces, settings.urysohn_depth, settings.cover_limit,
                                    workers or settings.workers, progress)
        header = f"# theorems over {len(spaces)} spaces on {points} points"

    hits = sum(space.empty_intersections for space in spaces)
    logger.info(f"sker used the empty-intersection convention {hits} times")

    if not machine:
        click.echo(header)
        click.echo(f"# empty-intersection convention: {hits}")
    for report in reports:
        _emit(report.lines())
    failed = [report.id for report in reports if report.status == 'FAILED']
    if not machine:
        click.echo(f"# {len(failed)} FAILED")
    if failed:
        ctx.exit(2)


@cli.command()
@click.option('--property', 'property_id', required=True, help='Phenomenon to search for')
@click.option('--n', 'points', type=int, required=True, help='Number of points')
@click.option('--limit', type=int, default=None, help='Witnesses to return (default GT_MINE_LIMIT)')
@click.pass_obj
def mine(settings: Settings, property_id: str, points: int, limit: Optional[int]):
    """Search the enumerated spaces for minimal witnesses."""
    witnesses = mine_counterexamples(points, property_id, limit or settings.mine_limit)
    if not witnesses:
        click.echo(f"# no witness on {points} points")
    for index, witness in enumerate(witnesses, start=1):
        _emit(witness.lines(f"W{index}"))


@cli.command()
@click.argument('space_file', type=click.Path(path_type=Path))
@click.option('--a', 'lower', required=True, help='Points of A, e.g. "a,b"')
@click.option('--b', 'upper', required=True, help='Points of B')
@click.option('--depth', type=int, default=None, help='Dyadic depth (default GT_URYSOHN_DEPTH)')
@click.pass_obj
def urysohn(settings: Settings, space_file: Path, lower: str, upper: str, depth: Optional[int]):
    """Build the dyadic family V(q) and the function f separating A from B."""
    space = read_space(space_file)
    family, f = urysohn_construct(space, _subset(space, lower), _subset(space, upper), depth or settings.urysohn_depth)
    _emit(family.lines(space))
    _emit(f.lines(space))


@cli.command('enumerate')
@click.option('--n', 'points', type=int, required=True, help='Number of points')
@click.option('--dedup', is_flag=True, help='One space per relabelling orbit')
def enumerate_command(points: int, dedup: bool):
    """Stream every GT-space on n points as space blocks."""
    for index, space in enumerate(enumerate_spaces(points, dedup), start=1):
        click.echo(render_space(space, f"n{points}-{index}"), nl=False)


def main(argv=None) -> int:
    try:
        code = cli.main(args=argv, prog_name='gtspace', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
