"""Scripted pipelines.

One step per line, # starts a comment:

    <out> = build <name> [key=value ...]
    <out> = construct <A|B|C|fold|quotient> <in|-> [key=value ...]
    census <in>
    classify <in>
    export <in> <format>

Assignments need spaces around "=". Every named intermediate is written to the
output directory as CXC (or CXF for flag systems) and manifest.json records the
sha256 of each step's inputs and outputs in that canonical form.
"""

import hashlib
import logging
import os
import re
from typing import Any

from ..builders.builders_service import BuildersService
from ..census.census_service import CensusService
from ..classify.classify_service import ClassifyService
from ..config import AppConfig
from ..constructions.constructions_service import ConstructionsService
from ..errors import PipelineError
from ..kernel import FlagSystem, IncidenceComplex
from ..kernel import serialization as ser
from .export_service import ExportService
from .verify_model import PipelineManifest, PipelineStep

logger = logging.getLogger(__name__)

_NAME = re.compile(r"^[A-Za-z_][\w-]*$")
_EXTENSIONS = {"cxc": "cxc", "cxf": "cxf", "edge-list": "edges", "face-list": "faces"}


def content_hash(X: IncidenceComplex | FlagSystem) -> str:
    return hashlib.sha256(ser.dump(X)[1].encode()).hexdigest()


def parse_params(tokens: list[str], line: int) -> dict[str, Any]:
    params: dict[str, Any] = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep or not key:
            raise PipelineError(f"line {line}: expected key=value, got {token!r}")
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = value
    return params


class PipelineService:
    """流水线执行服务"""

    @staticmethod
    def run(script: str, out_dir: str | None = None) -> PipelineManifest:
        out_dir = out_dir or AppConfig.OUTPUT_DIR
        os.makedirs(out_dir, exist_ok=True)
        env: dict[str, IncidenceComplex | FlagSystem] = {}
        manifest = PipelineManifest()

        def fetch(name: str, line: int):
            if name not in env:
                raise PipelineError(f"line {line}: no intermediate named {name!r}")
            return env[name]

        def store(name: str, X, line: int) -> str:
            if not _NAME.match(name):
                raise PipelineError(f"line {line}: bad intermediate name {name!r}")
            env[name] = X
            fmt, text = ser.dump(X)
            with open(os.path.join(out_dir, f"{name}.{fmt}"), "w") as f:
                f.write(text)
            return content_hash(X)

        for n, raw in enumerate(script.splitlines(), 1):
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            step = PipelineStep(line=n, text=text, op="")
            words = text.split()
            target = None
            if len(words) >= 2 and words[1] == "=":
                target, words = words[0], words[2:]
            if not words:
                raise PipelineError(f"line {n}: nothing to the right of '='")
            step.op = words[0]

            if step.op == "build":
                if target is None or len(words) < 2:
                    raise PipelineError(f"line {n}: usage '<out> = build <name> [key=value ...]'")
                X = BuildersService.build(words[1], parse_params(words[2:], n))
                step.outputs[target] = store(target, X, n)
            elif step.op == "construct":
                if target is None or len(words) < 3:
                    raise PipelineError(f"line {n}: usage '<out> = construct <kind> <in|-> [key=value ...]'")
                source = None
                if words[2] != "-":
                    source = fetch(words[2], n)
                    step.inputs[words[2]] = content_hash(source)
                X = ConstructionsService.construct(words[1], source, parse_params(words[3:], n))
                step.outputs[target] = store(target, X, n)
            elif step.op in ("census", "classify", "export"):
                if target is not None or len(words) < 2:
                    raise PipelineError(f"line {n}: {step.op} takes an intermediate and assigns nothing")
                source = fetch(words[1], n)
                step.inputs[words[1]] = content_hash(source)
                if step.op == "census":
                    if isinstance(source, FlagSystem):
                        raise PipelineError(f"line {n}: census needs a regular complex")
                    step.result = CensusService.census(source).counts()
                elif step.op == "classify":
                    step.result = ClassifyService.classify_3fullerene(source).model_dump(mode="json")
                else:
                    if len(words) != 3:
                        raise PipelineError(f"line {n}: usage 'export <in> <format>'")
                    fmt = words[2]
                    body = ExportService.export(source, fmt)
                    path = os.path.join(out_dir, f"{words[1]}.{_EXTENSIONS.get(fmt, fmt)}")
                    with open(path, "w") as f:
                        f.write(body)
                    step.result = path
            else:
                raise PipelineError(f"line {n}: unknown step {step.op!r}")
            logger.info(f"pipeline line {n}: {step.op} done")
            manifest.steps.append(step)

        with open(os.path.join(out_dir, "manifest.json"), "w") as f:
            f.write(manifest.model_dump_json(indent=2))
        return manifest
