"""
abflux Command Line Interface
Sweeps, figure data, amplitudes and invariant checks
"""

import json
import logging
import math
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import click
from pydantic import ValidationError

from ..channels import TruncationPolicy
from ..config import LOG_LEVELS, load_config, save_config
from ..cross_section import Statistics
from ..errors import ConvergenceError, DegeneracyError, PresetError
from ..scattering import (
    EQUATORIAL,
    model_names,
    optical_theorem_residual,
    scatterer_model,
    scattering_amplitude,
)
from ..sweep import (
    EvaluationPath,
    OutputFormat,
    SweepRecord,
    SweepSpec,
    format_csv,
    format_json,
    get_preset,
    list_presets,
    run_checks,
    run_sweep,
    sweep_exit_status,
    write_text,
)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class AbfluxCli:
    """abflux CLI state: effective configuration and logging"""

    def __init__(self, config_file: Optional[Path] = None):
        self.config_file = Path(config_file) if config_file else None
        self._load_config()

    def _load_config(self):
        """Load configuration from the config file, if one was given"""
        try:
            self.config = load_config(self.config_file)
        except (OSError, json.JSONDecodeError, ValidationError) as e:
            raise click.BadParameter(str(e), param_hint="--config") from e

    def _save_config(self, path: Path):
        """Save the effective configuration"""
        save_config(self.config, path)

    def setup_logging(self, level: Optional[str], log_file: Optional[Path]):
        """Route abflux log records to stderr or a log file"""
        package_logger = logging.getLogger("abflux")
        for handler in list(package_logger.handlers):
            package_logger.removeHandler(handler)
            handler.close()

        effective = (level or self.config.log_level).upper()
        package_logger.setLevel(getattr(logging, effective, logging.WARNING))
        if level is None and log_file is None:
            return
        handler = logging.FileHandler(log_file) if log_file else logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        package_logger.addHandler(handler)

    def policy(self, **overrides) -> TruncationPolicy:
        """Config policy with command-line overrides applied"""
        values = self.config.policy.model_dump()
        values.update({key: value for key, value in overrides.items() if value is not None})
        try:
            return TruncationPolicy(**values)
        except ValidationError as e:
            raise click.UsageError(f"invalid truncation policy: {e}") from e


def _parse_range(text: str, option: str) -> List[float]:
    """START:STOP:STEPS, STEPS points including both ends"""
    parts = text.split(":")
    try:
        if len(parts) != 3:
            raise ValueError
        start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise click.BadParameter(f"expected START:STOP:STEPS, got {text!r}", param_hint=option)
    if steps < 1:
        raise click.BadParameter("STEPS must be >= 1", param_hint=option)
    if steps == 1:
        return [start]
    return [start + (stop - start) * i / (steps - 1) for i in range(steps)]


def _grid(values: Sequence[float], range_text: Optional[str], option: str) -> List[float]:
    grid = list(values)
    if range_text:
        grid.extend(_parse_range(range_text, option))
    if not grid:
        raise click.UsageError(f"give {option} or {option}-range")
    return sorted(set(grid))


def _emit(text: str, out: Optional[Path]):
    if out:
        write_text(text, out)
    else:
        click.echo(text, nl=False)


def _summary(records: Sequence[SweepRecord], out: Optional[Path]):
    """Human summary; goes to stderr when the data itself is on stdout"""
    to_stderr = out is None
    converged = sum(record.converged for record in records)
    degenerate = sum(record.degenerate_flag for record in records)
    click.echo("📊 Sweep Summary", err=to_stderr)
    click.echo("=" * 50, err=to_stderr)
    click.echo(f"Points: {len(records)}", err=to_stderr)
    click.echo(f"Converged: {converged}", err=to_stderr)
    click.echo(f"Degenerate: {degenerate}", err=to_stderr)
    if out:
        click.echo(f"📄 Output: {out}", err=to_stderr)


def _render(records: Sequence[SweepRecord], spec: SweepSpec, comments: Optional[List[str]] = None) -> str:
    if spec.output_format is OutputFormat.JSON:
        return format_json(records, spec)
    return format_csv(records, comments)


@click.group()
@click.option('--config', 'config_file', type=click.Path(dir_okay=False, path_type=Path),
              help='JSON configuration file')
@click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False), help='Log level')
@click.option('--log-file', type=click.Path(dir_okay=False, path_type=Path), help='Write logs to this file')
@click.pass_context
def cli(ctx, config_file, log_level, log_file):
    """abflux - Aharonov-Bohm flux scattering

    Partial-wave amplitudes and total cross sections for a hard sphere
    threaded by a magnetic flux line.
    """
    ctx.obj = AbfluxCli(config_file)
    ctx.obj.setup_logging(log_level, log_file)


@cli.command()
@click.option('--ka', 'ka_values', type=float, multiple=True, help='ka value (repeatable)')
@click.option('--ka-range', help='ka grid as START:STOP:STEPS')
@click.option('--mu0', 'mu0_values', type=float, multiple=True, help='Flux mu0 (repeatable)')
@click.option('--mu0-range', help='mu0 grid as START:STOP:STEPS')
@click.option('--statistics', '-s', type=click.Choice([s.value for s in Statistics]), default='dist',
              help='Particle statistics')
@click.option('--rel-tol', type=float, help='Relative truncation tolerance')
@click.option('--q-max', type=int, help='Cap on q~')
@click.option('--m-max', type=int, help='Cap on |m|')
@click.option('--format', 'output_format', type=click.Choice([f.value for f in OutputFormat]), default='csv',
              help='Output format')
@click.option('--out', '-o', type=click.Path(dir_okay=False, path_type=Path), help='Output file (default stdout)')
@click.option('--workers', '-w', type=int, help='Worker threads')
@click.option('--path', 'evaluation_path', type=click.Choice([p.value for p in EvaluationPath]),
              default='closed-form', help='Closed-form Bessel sum or model phase shifts')
@click.option('--model', type=click.Choice(model_names()), default='hard-sphere', help='Scatterer model')
@click.option('--normalize/--no-normalize', default=True, help='Report sigma/2 pi a^2 (default) or sigma/a^2')
@click.pass_obj
def sweep(abflux: AbfluxCli, ka_values, ka_range, mu0_values, mu0_range, statistics, rel_tol, q_max,
          m_max, output_format, out, workers, evaluation_path, model, normalize):
    """Sweep the total cross section over ka and mu0"""
    try:
        spec = SweepSpec(
            ka_grid=_grid(ka_values, ka_range, '--ka'),
            mu0_grid=_grid(mu0_values, mu0_range, '--mu0'),
            statistics=Statistics(statistics),
            policy=abflux.policy(rel_tol=rel_tol, q_max=q_max, m_max=m_max),
            output_format=OutputFormat(output_format),
            normalization=normalize,
            path=EvaluationPath(evaluation_path),
            model=model,
            workers=workers or abflux.config.workers,
        )
    except ValidationError as e:
        raise click.UsageError(f"invalid sweep: {e}") from e

    records = run_sweep(spec)
    _emit(_render(records, spec), out)
    _summary(records, out)
    sys.exit(sweep_exit_status(records))


@cli.command()
@click.option('--name', '-n', required=True, help='Figure preset (fig1 ... fig6)')
@click.option('--out', '-o', type=click.Path(dir_okay=False, path_type=Path), help='Output file (default stdout)')
@click.option('--format', 'output_format', type=click.Choice([f.value for f in OutputFormat]), default='csv',
              help='Output format')
@click.option('--workers', '-w', type=int, help='Worker threads')
@click.pass_obj
def figure(abflux: AbfluxCli, name, out, output_format, workers):
    """Emit the data behind a figure preset"""
    try:
        preset = get_preset(name)
        spec = preset.to_spec(abflux.policy(), workers or abflux.config.workers, OutputFormat(output_format))
    except PresetError as e:
        raise click.BadParameter(str(e), param_hint='--name') from e
    except ValidationError as e:
        raise click.UsageError(f"invalid figure options: {e}") from e

    records = run_sweep(spec)
    _emit(_render(records, spec, preset.comments()), out)
    _summary(records, out)
    sys.exit(sweep_exit_status(records))


@cli.command()
@click.option('--ka', type=float, required=True, help='Wave number times radius')
@click.option('--mu0', type=float, default=0.0, help='Flux in units of the flux quantum')
@click.option('--theta', type=float, default=math.pi / 2, help='Polar angle')
@click.option('--phi', type=float, default=0.0, help='Azimuthal angle')
@click.option('--model', type=click.Choice(model_names()), default='hard-sphere', help='Scatterer model')
@click.option('--rel-tol', type=float, help='Relative truncation tolerance')
@click.option('--q-max', type=int, help='Cap on q~')
@click.option('--m-max', type=int, help='Cap on |m|')
@click.pass_obj
def amplitude(abflux: AbfluxCli, ka, mu0, theta, phi, model, rel_tol, q_max, m_max):
    """Scattering amplitude at one direction, with the optical theorem residual"""
    if not ka > 0 or not 0.0 <= theta <= math.pi:
        raise click.UsageError("need ka > 0 and theta in [0, pi]")
    if not (math.isfinite(ka) and math.isfinite(mu0) and math.isfinite(phi)):
        raise click.UsageError("ka, mu0 and phi must be finite")
    policy = abflux.policy(rel_tol=rel_tol, q_max=q_max, m_max=m_max)
    scatterer = scatterer_model(model)

    try:
        value = scattering_amplitude(scatterer, ka, mu0, EQUATORIAL, theta, phi, policy)
        check = optical_theorem_residual(scatterer, ka, mu0, policy)
    except ConvergenceError as e:
        click.echo(f"❌ Not converged: {e}", err=True)
        sys.exit(3)
    except DegeneracyError as e:
        click.echo(f"❌ Degenerate channel without closed form: {e}", err=True)
        sys.exit(4)

    click.echo("🎯 Scattering Amplitude")
    click.echo("=" * 50)
    click.echo(f"ka={ka!r}  mu0={mu0!r}  theta={theta!r}  phi={phi!r}")
    click.echo(f"k f      = {value.value.real!r} + {value.value.imag!r}j")
    click.echo(f"f / a    = {value.f_over_a.real!r} + {value.f_over_a.imag!r}j")
    click.echo(f"Channels: {value.channels_used}  residual: {value.residual:.3e}")
    if value.degenerate:
        click.echo("Degenerate channels resolved in closed form")
    kind = "absolute" if check.absolute else "relative"
    click.echo(f"Optical theorem {kind} residual: {check.residual:.3e}")


@cli.command()
@click.option('--rel-tol', type=float, help='Relative truncation tolerance')
@click.pass_obj
def check(abflux: AbfluxCli, rel_tol):
    """Run the invariant suite"""
    click.echo("🔍 Invariant Checks")
    click.echo("=" * 50)
    results = run_checks(abflux.policy(rel_tol=rel_tol))
    for result in results:
        mark = "✅" if result.passed else "❌"
        click.echo(f"{mark} {result.name:<28} {result.detail}")
    failed = [result for result in results if not result.passed]
    click.echo(f"\n{len(results) - len(failed)}/{len(results)} checks passed")
    sys.exit(1 if failed else 0)


@cli.command()
def presets():
    """List figure presets"""
    click.echo("📋 Figure Presets")
    click.echo("=" * 50)
    for preset in list_presets():
        click.echo(f"\n{preset.name}: {preset.title}")
        click.echo(f"  Statistics: {preset.statistics.value}")
        click.echo(f"  Grid: {len(preset.ka_grid)} ka x {len(preset.mu0_grid)} mu0 = {preset.size} points")
        click.echo(f"  Expected: {preset.claim}")


@cli.command()
@click.option('--write', 'write_path', type=click.Path(dir_okay=False, path_type=Path),
              help='Save the effective configuration here')
@click.pass_obj
def config(abflux: AbfluxCli, write_path):
    """Show current configuration"""
    click.echo("⚙️  abflux Configuration")
    click.echo("=" * 50)
    click.echo(abflux.config.model_dump_json(indent=2))
    click.echo(f"\nConfig file: {abflux.config_file or '(built-in defaults)'}")
    if write_path:
        abflux._save_config(write_path)
        click.echo(f"✅ Saved to {write_path}")


@cli.command()
def version():
    """Show abflux version"""
    from .. import __version__
    click.echo(f"abflux - Aharonov-Bohm flux scattering v{__version__}")


def main():
    """Main CLI entry point"""
    cli()


if __name__ == '__main__':
    main()
