"""
Commands - eos-vacuum 명령행 하위 명령

spectrum, variance, delay-scan, density, sweep, ingest 를 제공합니다.
라이브러리 예외는 여기서만 종료 코드(2 설정, 3 수렴, 4 입출력)로 바뀝니다.
"""

import functools
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

import click
import numpy as np
import pandas as pd
from loguru import logger
from rich.console import Console
from rich.table import Table

from ..core import __version__
from ..core.constants import (
    FS,
    NORMALIZED_COLUMNS,
    UM,
    angular_to_thz,
    thz_to_angular,
)
from ..core.exceptions import ConfigurationError, EXIT_CONFIG, VacuumSamplingError, exit_code_for
from ..core.logging import setup_logging
from ..core.settings import get_settings
from ..core.types import GridSpacing, PlaneChoice, SignalComponent
from ..scan.delay_scan import roundtrip_residual, spectrum_from_delay_scan, synthesize_delay_scan
from ..scan.ingest import ingest_experimental_scan
from ..signal.config import ExperimentConfig
from ..signal.density import density_maps
from ..signal.spectrum import compute_spectrum, frequency_grid, integrate_spectrum, normalization_sqrt_c
from ..signal.sweep import dominant_regimes, duration_sweep
from .builders import build_delays, build_experiment, build_grid
from .config import load_run_config
from .output import run_metadata, write_table

console = Console()
COMPONENT_CHOICES = [c.value for c in SignalComponent if c != SignalComponent.DELAY_SCAN]


def handle_errors(func: Callable) -> Callable:
    """예외 → 한 줄 메시지 + 종료 코드"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except VacuumSamplingError as e:
            code = exit_code_for(e)
            message = str(e)
        except OSError as e:
            code = exit_code_for(e)
            message = f"I/O error: {e}"
        except ValueError as e:
            code = EXIT_CONFIG
            message = f"Invalid parameters: {e}"
        logger.error(message)
        click.echo(f"Error: {message}", err=True)
        sys.exit(code)
    return wrapper


def common_options(func: Callable) -> Callable:
    """모든 하위 명령의 공통 옵션"""
    options = [
        click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False, path_type=Path),
                     help="YAML run configuration."),
        click.option("--preset", type=click.Choice(["riek2015", "benea2019"]), help="Scenario preset."),
        click.option("--out", "out_dir", type=click.Path(file_okay=False, path_type=Path),
                     help="Output directory (overrides output_dir)."),
        click.option("--threads", type=click.IntRange(min=1), help="Worker threads (default: hardware)."),
        click.option("--set", "overrides", multiple=True, metavar="KEY=VALUE",
                     help="Override a config value, e.g. --set crystal.length_um=10."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


class RunContext:
    """한 명령 실행에 필요한 설정 묶음"""

    def __init__(self, preset: Optional[str], config_file: Optional[Path], overrides: Sequence[str],
                 out_dir: Optional[Path], threads: Optional[int]):
        self.overrides = list(overrides)
        self.run, _ = load_run_config(preset, config_file, self.overrides)
        self.experiment: ExperimentConfig = build_experiment(self.run)
        self.out_dir = Path(out_dir or self.run.output_dir)
        self.threads = threads or get_settings().resolved_threads()
        logger.info(f"{self.run.scenario}: {self.experiment.describe()}")

    def metadata(self, **extra):
        return run_metadata(self.run, self.overrides, extra)

    def components(self, requested: Sequence[str]) -> List[SignalComponent]:
        components = [SignalComponent(c) for c in requested] or list(self.run.components)
        if SignalComponent.DELAY_SCAN in components:
            raise ConfigurationError("delay_scan is produced by the delay-scan command, not computed pointwise")
        return components


def _normalized(frame: pd.DataFrame, ctx: RunContext) -> pd.DataFrame:
    cfg = ctx.experiment
    frame = frame.copy()
    frame[NORMALIZED_COLUMNS[0]] = frame["s2"] / cfg.photon_number ** 2
    frame[NORMALIZED_COLUMNS[1]] = frame["s2"] / normalization_sqrt_c(cfg)
    return frame


@click.group(name="eos-vacuum")
@click.option("--log-level", default=None, help="Log level (default from EOS_VACUUM_LOG_LEVEL).")
@click.version_option(version=__version__, message="%(version)s")
def cli(log_level: Optional[str]):
    """Electro-optic sampling of the vacuum inside a nonlinear crystal."""
    setup_logging(log_level or get_settings().log_level)


@cli.command()
@common_options
@click.option("--component", "component_list", multiple=True, type=click.Choice(COMPONENT_CHOICES),
              help="Component to compute (repeatable; default from config).")
@click.option("--normalize/--no-normalize", default=True, help="Add s2/N^2 and s2/sqrt(C) columns.")
@handle_errors
def spectrum(preset, config_file, out_dir, threads, overrides, component_list, normalize):
    """Signal spectrum s2(Omega) for each component."""
    ctx = RunContext(preset, config_file, overrides, out_dir, threads)
    components = ctx.components(component_list)
    result = compute_spectrum(ctx.experiment, components, build_grid(ctx.run.grid), ctx.threads, progress=True)
    frame = result.to_frame()
    if normalize:
        frame = _normalized(frame, ctx)
    path = write_table(ctx.out_dir / "spectrum.csv", frame, ctx.metadata(components=",".join(c.value for c in components)))
    click.echo(str(path))


def _variance_rows(ctx: RunContext, components: List[SignalComponent]) -> List[Tuple[str, float]]:
    result = compute_spectrum(ctx.experiment, components, build_grid(ctx.run.grid), ctx.threads, progress=True)
    return [(c.value, integrate_spectrum(result.omegas, result.values[c])) for c in components]


@cli.command()
@common_options
@click.option("--component", "component_list", multiple=True, type=click.Choice(COMPONENT_CHOICES),
              help="Component to integrate (repeatable; default from config).")
@handle_errors
def variance(preset, config_file, out_dir, threads, overrides, component_list):
    """Integrated variances and their ratios to the full result."""
    ctx = RunContext(preset, config_file, overrides, out_dir, threads)
    components = ctx.components(component_list)
    rows = _variance_rows(ctx, components)
    reference_name = SignalComponent.FULL.value if SignalComponent.FULL in components else rows[0][0]
    reference = dict(rows)[reference_name]
    frame = pd.DataFrame({
        "component": [name for name, _ in rows],
        "variance": [value for _, value in rows],
        "ratio": [value / reference if reference else np.nan for _, value in rows],
    })

    table = Table(title=f"Variance ({ctx.run.scenario}), ratios to {reference_name}")
    table.add_column("component")
    table.add_column("variance", justify="right")
    table.add_column("ratio", justify="right")
    for row in frame.itertuples(index=False):
        table.add_row(row.component, f"{row.variance:.4e}", f"{row.ratio:.4f}")
    console.print(table)

    path = write_table(ctx.out_dir / "variance.csv", frame, ctx.metadata(reference=reference_name))
    click.echo(str(path))


@cli.command(name="delay-scan")
@common_options
@handle_errors
def delay_scan(preset, config_file, out_dir, threads, overrides):
    """Synthesize S2(dt) from a spectrum, invert it and report the roundtrip residual."""
    ctx = RunContext(preset, config_file, overrides, out_dir, threads)
    section = ctx.run.scan
    omegas = frequency_grid(section.f_min_thz, section.f_max_thz, section.spectrum_points, GridSpacing.LINEAR)
    result = compute_spectrum(ctx.experiment, [section.component], omegas, ctx.threads, progress=True)
    scan = synthesize_delay_scan(result, build_delays(ctx.run), section.component)
    recovered = spectrum_from_delay_scan(scan, apply_taper=section.taper)
    residual = roundtrip_residual(result, scan, section.component, apply_taper=section.taper)
    total = integrate_spectrum(result.omegas, result.values[section.component])
    logger.info(f"S2(0)={scan.at_zero():.6e}, variance={total:.6e}, roundtrip residual={residual:.2e}")

    metadata = ctx.metadata(component=section.component.value, taper=section.taper,
                            roundtrip_residual=f"{residual:.3e}", variance=f"{total:.10e}")
    write_table(ctx.out_dir / "delay_scan.csv", pd.DataFrame({"delay_fs": scan.delays_fs, "s2": scan.values}), metadata)
    write_table(ctx.out_dir / "delay_scan_source.csv", result.to_frame(), metadata)
    path = write_table(ctx.out_dir / "delay_scan_spectrum.csv", recovered.to_frame(), metadata)
    click.echo(str(path))


@cli.command()
@common_options
@click.option("--plane", type=click.Choice([p.value for p in PlaneChoice]), multiple=True,
              help="Plane(s) to map (default: both).")
@handle_errors
def density(preset, config_file, out_dir, threads, overrides, plane):
    """Normalized filter, vacuum correlation and signal density maps."""
    ctx = RunContext(preset, config_file, overrides, out_dir, threads)
    section = ctx.run.density
    planes = [PlaneChoice(p) for p in plane] or [PlaneChoice.XY, PlaneChoice.Z_FREQ]
    for choice in planes:
        if choice == PlaneChoice.XY:
            extent = section.extent_xy_um * UM if section.extent_xy_um else None
            maps = density_maps(ctx.experiment, choice, thz_to_angular(section.freq_thz), extent, section.points)
            name = "density_xy.csv"
        else:
            extent = section.extent_z_um * UM if section.extent_z_um else None
            grid = frequency_grid(section.f_min_thz, section.f_max_thz, section.freq_points, GridSpacing.LINEAR)
            maps = density_maps(ctx.experiment, choice, grid, extent, section.points)
            name = "density_zf.csv"
        scales = ", ".join(f"{k}={v:.6e}" for k, v in maps.scales.items())
        path = write_table(ctx.out_dir / name, maps.to_frame(), ctx.metadata(plane=choice.value, scales=scales))
        click.echo(str(path))


@cli.command()
@common_options
@handle_errors
def sweep(preset, config_file, out_dir, threads, overrides):
    """Total, longitudinal and transverse variance versus pulse duration."""
    ctx = RunContext(preset, config_file, overrides, out_dir, threads)
    section = ctx.run.sweep
    table_frame = duration_sweep(
        ctx.experiment,
        [d * FS for d in section.delta_t_fs],
        section.mapping,
        section.points,
        section.absorption_enabled,
        threads=ctx.threads,
    )
    regimes = dominant_regimes(table_frame)

    table = Table(title="Duration sweep")
    for column in ("dt (fs)", "total", "longitudinal", "transverse", "dominant"):
        table.add_column(column, justify="right")
    for row, regime in zip(table_frame.itertuples(index=False), regimes):
        table.add_row(f"{row.delta_t_fs:.1f}", f"{row.variance_total:.4e}",
                      f"{row.variance_longitudinal:.4e}", f"{row.variance_transverse:.4e}", regime)
    console.print(table)

    metadata = ctx.metadata(absorption_enabled=section.absorption_enabled)
    path = write_table(ctx.out_dir / "sweep.csv", table_frame, metadata)
    click.echo(str(path))


@cli.command()
@common_options
@click.option("--file", "scan_file", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              help="Experimental scan (delay_fs,s2); default ingest.file.")
@handle_errors
def ingest(preset, config_file, out_dir, threads, overrides, scan_file):
    """Invert an experimental delay scan and overlay it with the theory spectrum."""
    ctx = RunContext(preset, config_file, overrides, out_dir, threads)
    source = scan_file or ctx.run.ingest.file
    if not source:
        raise ConfigurationError("ingest needs --file or ingest.file")
    scan = ingest_experimental_scan(source)
    experiment = spectrum_from_delay_scan(scan, apply_taper=ctx.run.scan.taper)

    band = ctx.run.scan
    omegas = experiment.omegas
    inside = (omegas >= thz_to_angular(band.f_min_thz)) & (omegas <= thz_to_angular(band.f_max_thz))
    if not np.any(inside):
        raise ConfigurationError("No recovered frequency lies inside the scan band; widen scan.f_min_thz/f_max_thz")
    component = ctx.run.ingest.component
    theory = compute_spectrum(ctx.experiment, [component], omegas[inside], ctx.threads, progress=True)
    theory_values = theory.values[component]
    peak = angular_to_thz(float(theory.omegas[int(np.argmax(theory_values))]))
    logger.info(f"Theory peak at {peak:.3f} THz")

    metadata = ctx.metadata(source=str(source), taper=ctx.run.scan.taper, theory_peak_thz=f"{peak:.6f}",
                            **{f"scan.{k}": v for k, v in scan.flags.items()})
    write_table(ctx.out_dir / "ingested_scan.csv", pd.DataFrame({"delay_fs": scan.delays_fs, "s2": scan.values}),
                metadata)
    write_table(ctx.out_dir / "experiment_spectrum.csv", experiment.to_frame(), metadata)
    overlay = pd.DataFrame({
        "freq_thz": angular_to_thz(omegas[inside]),
        "experiment": experiment.values[SignalComponent.DELAY_SCAN][inside],
        "theory": theory_values,
    })
    path = write_table(ctx.out_dir / "overlay.csv", overlay, metadata)
    click.echo(str(path))
