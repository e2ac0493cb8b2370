"""Command-line front end.

    semiinf fibers --type A2 --mu-height 4 --chain-max 10 --format json
    semiinf --cartan m.json --suites fibers,plucker --out report.json --format json

Exit codes: 0 all PASS/REPORT, 1 some FAIL, 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__
from .errors import MalformedCartan, NotFiniteType, SemiInfError
from .fibers import DEFAULT_GENERATOR_SCALE, DEFAULT_K_MAX, LambdaChain
from .report import ReportDocument, emit
from .rootdatum import build_root_datum, cartan_from_type, load_cartan
from .suites import SUITE_ORDER, delta0_suite, fibers_suite, plucker_suite, selftest_suite, tensor_suite

COMMANDS = ("datum",) + SUITE_ORDER
STABILIZING = {"fibers", "plucker"}
FORMATS = ("json", "csv", "table")
CONFIG_KEYS = {"type", "cartan", "mu_height", "chain_max", "chain_gen", "suites", "out", "format",
               "lattice", "timings"}


class UsageError(SemiInfError):
    pass


@dataclass(frozen=True)
class RunConfig:
    cartan_source: str
    mu_height_bound: int = 4
    chain_max: int = DEFAULT_K_MAX
    chain_generator: tuple[int, ...] | None = None
    suites: tuple[str, ...] = SUITE_ORDER
    output_path: str | None = None
    format: str = "table"
    lattice: str = "weight"
    timings: bool = False

    def to_json(self) -> dict:
        d = asdict(self)
        d["suites"] = list(self.suites)
        d["chain_generator"] = None if self.chain_generator is None else list(self.chain_generator)
        d.pop("output_path")
        d.pop("timings")
        return d


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D401 - argparse hook
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semiinf", description="Fiber computations for the semi-infinite IC sheaf.")
    p.add_argument("command", nargs="?", choices=COMMANDS)
    p.add_argument("--type", dest="type")
    p.add_argument("--cartan", dest="cartan", help="JSON file holding an integer matrix")
    p.add_argument("--mu-height", dest="mu_height", type=int)
    p.add_argument("--chain-max", dest="chain_max", type=int)
    p.add_argument("--chain-gen", dest="chain_gen", help="comma-separated fundamental coordinates")
    p.add_argument("--suites", dest="suites", help="comma-separated subset of " + ",".join(SUITE_ORDER))
    p.add_argument("--out", dest="out")
    p.add_argument("--format", dest="format", choices=FORMATS)
    p.add_argument("--lattice", dest="lattice", choices=("weight", "root"))
    p.add_argument("--timings", dest="timings", action="store_true", default=None,
                   help="record wall-clock per suite (makes output non-reproducible)")
    p.add_argument("--config", dest="config", help="JSON file with defaults for any of the flags")
    p.add_argument("--version", action="version", version=f"semiinf {__version__}")
    return p


def _ints(text, what: str) -> tuple[int, ...]:
    if isinstance(text, (list, tuple)):
        items = text
    else:
        items = [t for t in str(text).split(",") if t.strip()]
    try:
        return tuple(int(x) for x in items)
    except ValueError as exc:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from exc


def _suites(text) -> tuple[str, ...]:
    items = text if isinstance(text, (list, tuple)) else [t.strip() for t in str(text).split(",") if t.strip()]
    bad = [s for s in items if s not in SUITE_ORDER]
    if bad:
        raise UsageError(f"unknown suite(s): {','.join(bad)}")
    return tuple(s for s in SUITE_ORDER if s in items)


def parse_config(argv: list[str] | None = None, config_file: str | Path | None = None) -> RunConfig:
    """CLI flags override values from the config file, which override defaults."""
    args = build_parser().parse_args(argv)
    settings: dict = {}
    path = config_file or args.config
    if path:
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = sorted(set(data) - CONFIG_KEYS)
        if unknown:
            raise UsageError(f"unknown config key(s): {', '.join(unknown)}")
        settings.update(data)
    for key in CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    if args.type is not None:
        settings.pop("cartan", None)
    elif args.cartan is not None:
        settings.pop("type", None)

    if settings.get("type") and settings.get("cartan"):
        raise UsageError("give either --type or --cartan, not both")
    if settings.get("type"):
        try:
            cartan_from_type(settings["type"])
        except MalformedCartan as exc:
            raise UsageError(str(exc)) from exc
        source = str(settings["type"]).strip().upper()
    elif settings.get("cartan"):
        source = str(settings["cartan"])
    else:
        raise UsageError("one of --type or --cartan is required")

    if "suites" in settings:
        suites = _suites(settings["suites"])
    elif args.command == "datum":
        suites = ()
    elif args.command:
        suites = (args.command,)
    else:
        suites = SUITE_ORDER

    mu_height = int(settings.get("mu_height", 4))
    chain_max = int(settings.get("chain_max", DEFAULT_K_MAX))
    if mu_height < 0:
        raise UsageError("--mu-height must be >= 0")
    if chain_max < 1:
        raise UsageError("--chain-max must be positive")
    if chain_max < 3 and STABILIZING & set(suites):
        raise UsageError("--chain-max must be >= 3 for the fibers and plucker suites")
    gen = _ints(settings["chain_gen"], "--chain-gen") if settings.get("chain_gen") is not None else None
    fmt = settings.get("format", "table")
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}")
    lattice = settings.get("lattice", "weight")
    if lattice not in ("weight", "root"):
        raise UsageError(f"unknown lattice {lattice!r}")
    return RunConfig(
        cartan_source=source,
        mu_height_bound=mu_height,
        chain_max=chain_max,
        chain_generator=gen,
        suites=suites,
        output_path=settings.get("out"),
        format=fmt,
        lattice=lattice,
        timings=bool(settings.get("timings", False)),
    )


def make_datum(config: RunConfig):
    try:
        cartan, label = load_cartan(config.cartan_source)
        return build_root_datum(cartan, label=label, lattice=config.lattice)
    except (MalformedCartan, NotFiniteType) as exc:
        raise UsageError(str(exc)) from exc


def make_chain(datum, config: RunConfig) -> LambdaChain:
    gen = config.chain_generator or (DEFAULT_GENERATOR_SCALE,) * datum.rank
    if len(gen) != datum.rank:
        raise UsageError(f"--chain-gen needs {datum.rank} coordinates, got {len(gen)}")
    if not datum.in_lattice(gen):
        raise UsageError(f"--chain-gen {gen} is not in the {datum.lattice} lattice")
    try:
        return LambdaChain(tuple(gen), config.chain_max)
    except SemiInfError as exc:
        raise UsageError(str(exc)) from exc


def run_suites(config: RunConfig) -> ReportDocument:
    datum = make_datum(config)
    chain = make_chain(datum, config) if STABILIZING & set(config.suites) else None
    runners = {
        "fibers": lambda: fibers_suite(datum, config.mu_height_bound, chain),
        "delta0": lambda: delta0_suite(datum, config.mu_height_bound),
        "tensor": lambda: tensor_suite(datum, config.mu_height_bound),
        "plucker": lambda: plucker_suite(datum, config.mu_height_bound, chain),
        "selftest": lambda: selftest_suite(datum),
    }
    suites, timings = {}, {}
    for name in SUITE_ORDER:
        if name not in config.suites:
            continue
        start = time.perf_counter()
        try:
            suites[name] = runners[name]()
        except SemiInfError as exc:
            suites[name] = {"status": "FAIL", "entries": [{"key": name, "summary": str(exc), "status": "FAIL"}]}
        timings[name] = round(time.perf_counter() - start, 6)
    return ReportDocument(
        tool_version=__version__,
        datum=datum.summary(),
        config=config.to_json(),
        suites=suites,
        timings=timings if config.timings else None,
    )


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_config(argv)
        report = run_suites(config)
        emit(report, config.format, config.output_path)
    except UsageError as exc:
        print(f"semiinf: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"semiinf: error: {exc}", file=sys.stderr)
        return 2
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
