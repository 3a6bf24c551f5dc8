"""cellforge command line.

Exit codes: 0 pass, 1 verification failure, 2 usage or input error.
"""

import argparse
import json
import logging
import sys
from typing import Any

from .builders.builders_service import BuildersService
from .census.census_service import CensusService
from .classify.classify_service import ClassifyService
from .config import setup_logging
from .constructions.constructions_service import KINDS, ConstructionsService
from .constructions.quotient import parse_pairing
from .errors import ComplexError
from .kernel import FlagSystem, IncidenceComplex, KernelService
from .kernel import serialization as ser
from .verify.export_service import FORMATS, ExportService
from .verify.pipeline_service import PipelineService, parse_params
from .verify.verify_service import VerifyService

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _read(path: str) -> IncidenceComplex | FlagSystem:
    with open(path) as f:
        return ser.load(f.read())


def _write(X: IncidenceComplex | FlagSystem, path: str | None) -> str:
    fmt, text = ser.dump(X)
    if path:
        with open(path, "w") as f:
            f.write(text)
    return fmt


def _summary(X: IncidenceComplex | FlagSystem) -> dict[str, Any]:
    fv = KernelService.f_vector(X)
    return {"fvector": fv.counts, "p5": fv.p5, "p6": fv.p6, "view": "flags" if isinstance(X, FlagSystem) else "cells"}


def _emit(args, payload: Any, text: str) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True) if args.json else text)


def cmd_build(args) -> int:
    X = BuildersService.build(args.name, parse_params(args.param, 0))
    fmt = _write(X, args.out)
    info = _summary(X) | {"format": fmt, "out": args.out}
    _emit(args, info, f"{args.name}: f-vector {tuple(info['fvector'])}, p5={info['p5']}, p6={info['p6']}")
    return EXIT_OK


def cmd_construct(args) -> int:
    X = _read(args.input) if args.input else None
    params: dict[str, Any] = parse_params(args.param, 0)
    for key in ("n", "twist", "times", "steps", "facet"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    if args.pairing:
        with open(args.pairing) as f:
            params["pairs"] = parse_pairing(f.read())
    result = ConstructionsService.construct(args.kind, X, params)
    fmt = _write(result, args.out)
    info = _summary(result) | {"format": fmt, "out": args.out}
    _emit(args, info, f"construct {args.kind}: f-vector {tuple(info['fvector'])} ({fmt})")
    return EXIT_OK


def cmd_census(args) -> int:
    X = _read(args.input)
    if not isinstance(X, IncidenceComplex):
        raise ComplexError("census needs a regular complex (CXC)")
    report = CensusService.census(X)
    lines = [f"{e.count:6d}  {e.name}  {tuple(e.fvector)}" for e in report.entries]
    _emit(args, report.model_dump(), "\n".join(lines + [f"{report.total:6d}  total"]))
    return EXIT_OK


def cmd_classify(args) -> int:
    result = ClassifyService.classify_3fullerene(_read(args.input))
    if result.accepted:
        text = f"{result.surface.value}: p5={result.p5}, p6={result.p6}, chi={result.euler_characteristic}"
    else:
        text = f"rejected: {result.rejection}"
    _emit(args, result.model_dump(mode="json"), text)
    return EXIT_OK if result.accepted else EXIT_FAIL


def cmd_verify_table(args) -> int:
    records = VerifyService.verify_table(args.rows or None, args.deep or None)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name:16s} {tuple(r.observed_fvector)}  {r.duration:.2f}s"
        + (f"  {r.error}" if r.error else "")
        for r in records
    ]
    _emit(args, [r.model_dump(mode="json") for r in records], "\n".join(lines))
    return EXIT_OK if all(r.passed for r in records) else EXIT_FAIL


def cmd_pipeline(args) -> int:
    with open(args.script) as f:
        manifest = PipelineService.run(f.read(), args.out_dir)
    lines = [f"line {s.line}: {s.text}" + (f" -> {s.result}" if s.result is not None else "") for s in manifest.steps]
    _emit(args, manifest.model_dump(mode="json"), "\n".join(lines))
    return EXIT_OK


def cmd_export(args) -> int:
    body = ExportService.export(_read(args.input), args.format, args.strict)
    if args.out:
        with open(args.out, "w") as f:
            f.write(body)
    else:
        sys.stdout.write(body)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cellforge", description="Construction kit for d-fullerenes.")
    ap.add_argument("--log-level", default=None, help="overrides CELLFORGE_LOG_LEVEL")
    sub = ap.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(handler=handler)
        return p

    p = command("build", cmd_build, "build a seed complex")
    p.add_argument("name")
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--out")

    p = command("construct", cmd_construct, "run a construction")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--in", dest="input")
    p.add_argument("--n", type=int)
    p.add_argument("--twist", type=int, help="tenths of a turn (odd)")
    p.add_argument("--steps", type=int, help="raw rotation steps instead of --twist")
    p.add_argument("--times", type=int, help="repeat subdivision")
    p.add_argument("--facet", type=int)
    p.add_argument("--pairing", help="file of 'pair <faceA> <faceB> <twist>' lines")
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--out")

    p = command("census", cmd_census, "cell census of a rank-3 complex")
    p.add_argument("--in", dest="input", required=True)

    p = command("classify", cmd_classify, "classify a 3-fullerene surface")
    p.add_argument("--in", dest="input", required=True)

    p = command("verify-table", cmd_verify_table, "reproduce the f-vector table")
    p.add_argument("--rows", nargs="*", default=[])
    p.add_argument("--deep", action="store_true", help="include long-running rows")

    p = command("pipeline", cmd_pipeline, "run a pipeline script")
    p.add_argument("script")
    p.add_argument("--out-dir")

    p = command("export", cmd_export, "convert a complex to another format")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--format", choices=FORMATS, required=True)
    p.add_argument("--strict", action="store_true", help="refuse lossy formats")
    p.add_argument("--out")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level.upper() if args.log_level else None)
    try:
        return args.handler(args)
    except (ValueError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
