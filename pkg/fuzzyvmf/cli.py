"""
Command-line front end.

    python -m fuzzyvmf noise in.ppm noisy.ppm --density 0.1 --seed 42
    python -m fuzzyvmf filter --kind fvmlf-scheme --K 1024 --window 3 noisy.ppm out.ppm
    python -m fuzzyvmf eval in.ppm out.ppm
    python -m fuzzyvmf sweep in.ppm --config sweep.yaml --output output/sweep.csv
    python -m fuzzyvmf axioms --seeds 1,2,3 --samples 1000

Exit status: 0 success, 1 usage error, 2 data error, 3 axiom violation.
"""

import argparse
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import yaml
from tqdm import tqdm

from .errors import (
    DimensionMismatchError,
    FuzzyVMFError,
    ImageFormatError,
    UndefinedMetricError,
    UsageError,
)
from .filters import FILTERS, filter_image, scheme_agreement
from .harness import format_reports, run_default_suite
from .image import RgbImage
from .image_io import read_image, write_image
from .noise import NOISE_KINDS, NoiseSpec, add_impulse
from .quality import CSV_HEADER, evaluate, format_value
from .synthetic import synthetic_image, two_cluster_windows
from .utils import logger

DEFAULT_K = float(os.getenv("FUZZYVMF_K", "1024"))
DEFAULT_WINDOW = int(os.getenv("FUZZYVMF_WINDOW", "3"))
DEFAULT_P = float(os.getenv("FUZZYVMF_P", "2"))
DEFAULT_DENSITY = float(os.getenv("FUZZYVMF_DENSITY", "0.1"))
DEFAULT_SEED = int(os.getenv("FUZZYVMF_SEED", "42"))
OUTPUT_DIR = os.getenv("FUZZYVMF_OUTPUT_DIR", "./output")

DEFAULT_K_VALUES = (256.0, 1024.0, 4096.0)
DEFAULT_DENSITIES = (0.05, 0.1, 0.2)
DEFAULT_SWEEP_FILTERS = ('vmf', 'fvmf', 'fvmlf-scheme')
SWEEP_HEADER = 'K,density,filter,mae,psnr,ncd'
AGREEMENT_HEADER = 'windows,agreement,agreement_k_ge_7'

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_AXIOM = 3

COMMANDS = ('noise', 'filter', 'eval', 'sweep', 'axioms', 'synth', 'agreement')
DATA_ERRORS = (ImageFormatError, DimensionMismatchError, UndefinedMetricError)


@dataclass
class RunConfig:
    command: str
    inputs: List[str] = field(default_factory=list)
    output: Optional[str] = None
    kind: str = 'fvmlf-scheme'
    p: float = DEFAULT_P
    K: float = DEFAULT_K
    r: int = 3
    window: int = DEFAULT_WINDOW
    noise: NoiseSpec = field(default_factory=lambda: NoiseSpec(density=DEFAULT_DENSITY, seed=DEFAULT_SEED))
    k_values: Tuple[float, ...] = DEFAULT_K_VALUES
    densities: Tuple[float, ...] = DEFAULT_DENSITIES
    filters: Tuple[str, ...] = DEFAULT_SWEEP_FILTERS
    seeds: Tuple[int, ...] = (1, 2, 3)
    samples: int = 1000
    count: int = 10000
    width: int = 64
    height: int = 64
    enable_pbar: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}, available: {list(COMMANDS)}")
        required = {'noise': 2, 'filter': 2, 'eval': 2, 'synth': 1}.get(self.command, 0)
        if len(self.inputs) < required:
            raise UsageError(f"{self.command} needs {required} path argument(s), got {len(self.inputs)}")
        for kind in (self.kind,) + tuple(self.filters):
            if kind not in FILTERS:
                raise UsageError(f"unsupported filter kind {kind!r}, available: {list(FILTERS.keys())}")
        if not self.k_values or not self.densities or not self.filters or not self.seeds:
            raise UsageError("sweep grids and seed lists must not be empty")


class CliArgumentParser(argparse.ArgumentParser):
    """Raises instead of exiting so ``main`` owns the exit status."""

    def error(self, message):
        raise UsageError(message)


def _floats(text: str) -> Tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(',') if v.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from e


def _ints(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(',') if v.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from e


def _names(text: str) -> Tuple[str, ...]:
    return tuple(v.strip() for v in text.split(',') if v.strip())


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog='fuzzyvmf',
        description="Fuzzy vector median-like filtering of impulse noise in RGB images.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    parser.add_argument('--pbar', action='store_true', help="Show progress bars.")
    subparsers = parser.add_subparsers(dest='command', required=True, metavar='command')

    noise = subparsers.add_parser(
        'noise', help="Corrupt an image with seeded impulse noise.",
        description="Impulse noise drawn from SplitMix64 (seed -> state, state += 0x9E3779B97F4A7C15 per draw).\n"
                    "One float per pixel decides hits, then values are drawn for hit pixels in row-major order.",
        formatter_class=argparse.RawTextHelpFormatter)
    noise.add_argument('input')
    noise.add_argument('output')
    noise.add_argument('--noise-kind', choices=NOISE_KINDS, default='fixed-value')
    noise.add_argument('--density', type=float, default=DEFAULT_DENSITY)
    noise.add_argument('--per-channel', action='store_true', help="Corrupt channels independently.")
    noise.add_argument('--seed', type=int, default=DEFAULT_SEED)

    filt = subparsers.add_parser('filter', help="Filter an image with a vector filter.")
    filt.add_argument('input')
    filt.add_argument('output')
    filt.add_argument('--kind', choices=list(FILTERS.keys()), default='fvmlf-scheme')
    filt.add_argument('--K', type=float, default=DEFAULT_K, help="Fuzzy metric constant.")
    filt.add_argument('--p', type=float, default=DEFAULT_P, help="L_p exponent for vmf.")
    filt.add_argument('--r', type=int, default=3, help="Tuple size for fvmlf-full.")
    filt.add_argument('--window', type=int, default=DEFAULT_WINDOW)

    ev = subparsers.add_parser('eval', help="Print MAE, PSNR and NCD of a test image against a reference.")
    ev.add_argument('reference')
    ev.add_argument('test')

    sweep = subparsers.add_parser('sweep', help="Noise, filter and evaluate over a K x density grid.")
    sweep.add_argument('reference', nargs='?', help="Reference image; the synthetic image when omitted.")
    sweep.add_argument('--config', help="YAML file with k_values, densities, filters, noise, window, p.")
    sweep.add_argument('--output', help="CSV path (default: $FUZZYVMF_OUTPUT_DIR/sweep.csv).")
    sweep.add_argument('--k-values', type=_floats)
    sweep.add_argument('--densities', type=_floats)
    sweep.add_argument('--filters', type=_names)
    sweep.add_argument('--noise-kind', choices=NOISE_KINDS)
    sweep.add_argument('--per-channel', action='store_true', default=None)
    sweep.add_argument('--seed', type=int)
    sweep.add_argument('--window', type=int)
    sweep.add_argument('--p', type=float)

    axioms = subparsers.add_parser('axioms', help="Run the axiom harness over every construction.")
    axioms.add_argument('--seed', type=int, action='append', dest='seed_list')
    axioms.add_argument('--seeds', type=_ints)
    axioms.add_argument('--samples', type=int, default=1000)
    axioms.add_argument('--output', help="Also write the reports to this file.")

    synth = subparsers.add_parser('synth', help="Write the synthetic test image.")
    synth.add_argument('output')
    synth.add_argument('--width', type=int, default=64)
    synth.add_argument('--height', type=int, default=64)

    agreement = subparsers.add_parser('agreement', help="Scheme vs full-aggregate selection agreement on "
                                                        "random two-cluster windows.")
    agreement.add_argument('--count', type=int, default=10000)
    agreement.add_argument('--seed', type=int, default=DEFAULT_SEED)
    agreement.add_argument('--K', type=float, default=DEFAULT_K)
    return parser


def _noise_section(section) -> dict:
    if not isinstance(section, dict):
        raise TypeError(f"expected a mapping, got {section!r}")
    unknown = set(section) - {'kind', 'per_channel', 'seed'}
    if unknown:
        raise ValueError(f"unknown noise keys {sorted(unknown)}")
    out = {}
    if 'kind' in section:
        out['kind'] = str(section['kind'])
    if 'per_channel' in section:
        if not isinstance(section['per_channel'], bool):
            raise ValueError(f"per_channel must be true or false, got {section['per_channel']!r}")
        out['per_channel'] = section['per_channel']
    if 'seed' in section:
        out['seed'] = int(section['seed'])
    return out


SWEEP_CONFIG_KEYS = {
    'k_values': lambda v: tuple(float(k) for k in v),
    'densities': lambda v: tuple(float(d) for d in v),
    'filters': lambda v: tuple(str(f) for f in v),
    'noise': _noise_section,
    'window': int,
    'p': float,
}


def load_sweep_config(path: str) -> dict:
    """Read a sweep YAML file; values come back converted to the types ``RunConfig`` expects."""
    try:
        with open(path, 'r') as f:
            data = yaml.safe_load(f) or {}
    except OSError as e:
        raise UsageError(f"cannot read config {path}: {e.strerror}") from e
    except yaml.YAMLError as e:
        raise UsageError(f"malformed YAML in {path}: {e}") from e
    if not isinstance(data, dict):
        raise UsageError(f"config {path} must be a mapping")
    unknown = set(data) - set(SWEEP_CONFIG_KEYS)
    if unknown:
        raise UsageError(f"unknown config keys in {path}: {sorted(unknown)}")
    config = {}
    for key, value in data.items():
        if isinstance(value, (str, bytes)) and key in ('k_values', 'densities', 'filters'):
            raise UsageError(f"{key} in {path} must be a list, got {value!r}")
        try:
            config[key] = SWEEP_CONFIG_KEYS[key](value)
        except (TypeError, ValueError) as e:
            raise UsageError(f"bad value for {key} in {path}: {e}") from e
    return config


def _pick(flag, config: dict, key: str, default):
    return flag if flag is not None else config.get(key, default)


def config_from_args(args: argparse.Namespace) -> RunConfig:
    command = args.command
    if command == 'noise':
        spec = NoiseSpec(args.noise_kind, args.density, args.per_channel, args.seed)
        return RunConfig(command, [args.input, args.output], noise=spec, enable_pbar=args.pbar)
    if command == 'filter':
        return RunConfig(command, [args.input, args.output], kind=args.kind, p=args.p, K=args.K,
                         r=args.r, window=args.window, enable_pbar=args.pbar)
    if command == 'eval':
        return RunConfig(command, [args.reference, args.test])
    if command == 'sweep':
        data = load_sweep_config(args.config) if args.config else {}
        noise = data.get('noise') or {}
        spec = NoiseSpec(
            _pick(args.noise_kind, noise, 'kind', 'fixed-value'),
            DEFAULT_DENSITY,
            _pick(args.per_channel, noise, 'per_channel', False),
            _pick(args.seed, noise, 'seed', DEFAULT_SEED),
        )
        return RunConfig(
            command,
            [args.reference] if args.reference else [],
            output=args.output or os.path.join(OUTPUT_DIR, 'sweep.csv'),
            p=_pick(args.p, data, 'p', DEFAULT_P),
            window=_pick(args.window, data, 'window', DEFAULT_WINDOW),
            noise=spec,
            k_values=tuple(_pick(args.k_values, data, 'k_values', DEFAULT_K_VALUES)),
            densities=tuple(_pick(args.densities, data, 'densities', DEFAULT_DENSITIES)),
            filters=tuple(_pick(args.filters, data, 'filters', DEFAULT_SWEEP_FILTERS)),
            enable_pbar=args.pbar,
        )
    if command == 'axioms':
        seeds = tuple(args.seed_list or ()) + tuple(args.seeds or ())
        return RunConfig(command, output=args.output, seeds=seeds or (1, 2, 3), samples=args.samples,
                         enable_pbar=args.pbar)
    if command == 'synth':
        return RunConfig(command, [args.output], width=args.width, height=args.height)
    return RunConfig(command, K=args.K, count=args.count, noise=NoiseSpec(seed=args.seed))


def _filter_params(config: RunConfig, kind: str, K: float) -> dict:
    if kind == 'vmf':
        return {'p': config.p}
    if kind == 'fvmlf-full':
        return {'K': K, 'r': config.r}
    return {'K': K}


def run_sweep(config: RunConfig, reference: RgbImage) -> List[str]:
    """One CSV row per (K, density, filter) cell plus a ``noisy`` baseline row per density."""
    rows = [SWEEP_HEADER]
    mae_by_filter = {}
    cells = [(d, k, f) for d in config.densities for k in config.k_values for f in config.filters]
    noisy_cache, vmf_cache = {}, {}
    for density, K, kind in tqdm(cells, disable=not config.enable_pbar, desc="Sweep:"):
        if density not in noisy_cache:
            spec = NoiseSpec(config.noise.kind, density, config.noise.per_channel, config.noise.seed)
            noisy_cache[density] = add_impulse(reference, spec)
            rows.append(f',{format_value(density)},noisy,{evaluate(reference, noisy_cache[density]).csv_row()}')
        noisy = noisy_cache[density]
        # vmf ignores K, so it runs once per density
        if kind == 'vmf' and density in vmf_cache:
            filtered = vmf_cache[density]
        else:
            filtered = filter_image(noisy, kind, config.window, **_filter_params(config, kind, K))
            if kind == 'vmf':
                vmf_cache[density] = filtered
        report = evaluate(reference, filtered)
        rows.append(f'{format_value(K)},{format_value(density)},{kind},{report.csv_row()}')
        mae_by_filter.setdefault(kind, {}).setdefault(K, []).append(report.mae)
    for kind, by_K in mae_by_filter.items():
        best = min(by_K, key=lambda k: sum(by_K[k]) / len(by_K[k]))
        logger.info(f'Best K for {kind} by mean MAE: {format_value(best)}')
    return rows


def run_agreement(config: RunConfig) -> List[str]:
    windows, majority = two_cluster_windows(config.count, config.noise.seed)
    overall = scheme_agreement(windows, config.K)
    strong = majority >= 7
    strong_rate = scheme_agreement(windows[strong], config.K) if strong.any() else 1.0
    return [AGREEMENT_HEADER, f'{config.count},{format_value(overall)},{format_value(strong_rate)}']


def run(config: RunConfig, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    command = config.command
    logger.info(f'Running {command}')
    if command == 'noise':
        write_image(add_impulse(read_image(config.inputs[0]), config.noise), config.inputs[1])
    elif command == 'filter':
        image = read_image(config.inputs[0])
        params = _filter_params(config, config.kind, config.K)
        write_image(filter_image(image, config.kind, config.window, config.enable_pbar, **params), config.inputs[1])
    elif command == 'eval':
        report = evaluate(read_image(config.inputs[0]), read_image(config.inputs[1]))
        stdout.write(f'{CSV_HEADER}\n{report.csv_row()}\n')
    elif command == 'sweep':
        reference = read_image(config.inputs[0]) if config.inputs else synthetic_image()
        rows = run_sweep(config, reference)
        folder = os.path.dirname(config.output)
        if folder:
            os.makedirs(folder, exist_ok=True)
        with open(config.output, 'w', newline='\n') as f:
            f.write('\n'.join(rows) + '\n')
        logger.info(f'Wrote {len(rows) - 1} sweep rows to {config.output}')
    elif command == 'axioms':
        reports = run_default_suite(config.seeds, config.samples, config.enable_pbar)
        text = format_reports(reports)
        stdout.write(text)
        if config.output:
            with open(config.output, 'w', newline='\n') as f:
                f.write(text)
        failed = [r for r in reports if not r.passed]
        for r in failed:
            logger.error(f'{r.axiom_id} violated {len(r.violations)} times for {r.subject} (seed {r.seed})')
        if failed:
            return EXIT_AXIOM
    elif command == 'synth':
        write_image(synthetic_image(config.width, config.height), config.inputs[0])
    elif command == 'agreement':
        stdout.write('\n'.join(run_agreement(config)) + '\n')
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return run(config_from_args(args))
    except UsageError as e:
        code, message = EXIT_USAGE, f'usage error: {e}'
    except DATA_ERRORS as e:
        code, message = EXIT_DATA, f'data error: {e}'
    except FuzzyVMFError as e:
        code, message = EXIT_USAGE, f'invalid parameter: {e}'
    except OSError as e:
        code, message = EXIT_DATA, f'I/O error: {e}'
    logger.error(message)
    print(f'fuzzyvmf: {message}', file=sys.stderr)
    return code
