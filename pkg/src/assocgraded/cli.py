"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 Hilbert data did not stabilize,
3 precondition violation, 4 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import jsonschema

from . import report as rep
from .errors import NotStabilized, ParseError, PreconditionError
from .hypersurface import HypersurfaceModule
from .laurent import DEFAULT_WINDOW
from .monomial import DEFAULT_MAX_N, MonomialIdeal, minimalize
from .semigroup import NumericalSemigroup

EXIT_OK, EXIT_INPUT, EXIT_UNSTABLE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3, 4

KINDS = ("semigroup", "monomial", "hypersurface", "verify")

DEFAULTS = {
    "window": DEFAULT_WINDOW,
    "max_n": DEFAULT_MAX_N,
    "format": "json",
    "corpus_max_e": 6,
    "corpus_max_mu": 4,
    "seed": 1729,
    "semigroups": 100,
    "max_generator": 30,
}

ENV_PREFIX = "ASSOCGRADED_"

_int = {"type": "integer"}
_pos = {"type": "integer", "minimum": 1}

REQUEST_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "semigroup": {
            "type": "object",
            "additionalProperties": False,
            "required": ["generators"],
            "properties": {"generators": {"type": "array", "items": _pos, "minItems": 1}},
        },
        "monomial": {
            "type": "object",
            "additionalProperties": False,
            "required": ["nvars", "gens"],
            "properties": {
                "nvars": {"enum": [2, 3]},
                "gens": {
                    "type": "array",
                    "minItems": 1,
                    "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                },
            },
        },
        "hypersurface": {
            "type": "object",
            "additionalProperties": False,
            "required": ["e", "a"],
            "properties": {"e": _pos, "a": {"type": "array", "items": _pos, "minItems": 1}},
        },
        "verify": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "max_e": _int,
                "max_mu": {"type": "integer", "minimum": 0},
                "seed": _int,
                "semigroups": {"type": "integer", "minimum": 0},
                "max_generator": {"type": "integer", "minimum": 3},
            },
        },
        "options": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "window": _pos,
                "max_n": _pos,
                "format": {"enum": ["json", "text"]},
            },
        },
    },
}


@dataclass
class AnalysisRequest:
    kind: str
    payload: dict
    options: dict = field(default_factory=dict)
    model: object = None  # validated backend object


def _path(parts) -> str:
    out = "$"
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def validate_request(doc) -> AnalysisRequest:
    try:
        jsonschema.validate(doc, REQUEST_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ParseError(exc.message, path=_path(exc.absolute_path)) from None
    kinds = [k for k in KINDS if k in doc]
    if len(kinds) != 1:
        raise ParseError(f"request must contain exactly one of {', '.join(KINDS)}", path="$")
    kind = kinds[0]
    payload = doc[kind]
    try:
        if kind == "semigroup":
            model = NumericalSemigroup.generated_by(payload["generators"])
        elif kind == "monomial":
            gens = [tuple(g) for g in payload["gens"]]
            if any(len(g) != payload["nvars"] for g in gens):
                raise ParseError("exponent vectors must have length nvars", path=f"$.{kind}.gens")
            model = MonomialIdeal(payload["nvars"], minimalize(gens))
        elif kind == "hypersurface":
            model = HypersurfaceModule(payload["e"], tuple(payload["a"]))
        else:
            model = None
    except PreconditionError as exc:
        raise ParseError(str(exc), path=f"$.{kind}") from None
    return AnalysisRequest(kind, payload, dict(doc.get("options", {})), model)


def parse_request(text: str) -> AnalysisRequest | list[AnalysisRequest]:
    """Parse one request object, or a list of them for batch mode."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if isinstance(doc, list):
        out = []
        for i, item in enumerate(doc):
            try:
                out.append(validate_request(item))
            except ParseError as exc:
                raise ParseError(str(exc).split(" (")[0], path=f"[{i}]" + (exc.path or "$")[1:]) from None
        return out
    return validate_request(doc)


def resolve(name: str, flags: dict, options: dict | None = None):
    """Flag, then request option, then environment, then built-in default."""
    if flags.get(name) is not None:
        return flags[name]
    if options and name in options:
        return options[name]
    env = os.environ.get(ENV_PREFIX + name.upper())
    if env is not None:
        return env if name == "format" else int(env)
    return DEFAULTS[name]


def run(request: AnalysisRequest, flags: dict | None = None) -> tuple[dict, int]:
    """Dispatch to a backend; returns ``(report, exit_code)``."""
    flags = flags or {}
    opts = request.options
    window = resolve("window", flags, opts)
    max_n = resolve("max_n", flags, opts)
    started = time.perf_counter()
    code = EXIT_OK
    try:
        if request.kind == "semigroup":
            body = rep.semigroup_report(request.model, window)
        elif request.kind == "monomial":
            body = rep.monomial_report(request.model, window, max_n)
        elif request.kind == "hypersurface":
            body = rep.hypersurface_report(request.model)
        else:
            p = request.payload
            body = rep.verify_report(
                max_e=p.get("max_e", resolve("corpus_max_e", flags)),
                max_mu=p.get("max_mu", resolve("corpus_max_mu", flags)),
                seed=p.get("seed", resolve("seed", flags)),
                semigroups=p.get("semigroups", resolve("semigroups", flags)),
                max_generator=p.get("max_generator", resolve("max_generator", flags)),
                window=window,
            )
            if not body.pop("ok"):
                code = EXIT_VERIFY
    except NotStabilized as exc:
        body, code = {"error": {"type": "NotStabilized", "message": str(exc)}}, EXIT_UNSTABLE
    except PreconditionError as exc:
        body = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        code = EXIT_PRECONDITION
    report = {
        "engine": rep.engine(),
        "request": {request.kind: request.payload},
        "options": {"window": window, "max_n": max_n},
        **body,
    }
    if flags.get("timing"):
        report["timing_ms"] = int((time.perf_counter() - started) * 1000)
    return report, code


def run_batch(requests: list[AnalysisRequest], flags: dict | None = None, workers: int = 4):
    """Process requests concurrently; results keep input order."""
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda r: run(r, flags), requests))
    code = max((c for _, c in results), default=EXIT_OK)
    return [r for r, _ in results], code


def _text_lines(report: dict) -> list[str]:
    lines = [f"{report['engine']['name']} {report['engine']['version']}"]
    lines.append("request: " + json.dumps(report["request"], sort_keys=True))
    if "error" in report:
        lines.append(f"error: {report['error']['type']}: {report['error']['message']}")
    for key, value in sorted(report.get("invariants", {}).items()):
        lines.append(f"  {key} = {json.dumps(value, sort_keys=True)}")
    for v in report.get("verdicts", []):
        lines.append(f"verdict {v['name']}: {json.dumps(v['value'])}  [{v['tag']}]")
    if "timing_ms" in report:
        lines.append(f"time: {report['timing_ms']} ms")
    return lines


def emit(report, fmt: str = "json") -> bytes:
    """Serialize a report (or a list of reports) deterministically."""
    if fmt == "json":
        return (json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode()
    reports = report if isinstance(report, list) else [report]
    blocks = ["\n".join(_text_lines(r)) for r in reports]
    return ("\n\n".join(blocks) + "\n").encode()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="assocgraded",
        description="Hilbert functions and associated graded invariants.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--window", type=int, help="stabilization window for h-polynomial fits")
    common.add_argument("--max-n", dest="max_n", type=int, help="largest Hilbert function index tried")
    common.add_argument("--format", choices=["json", "text"])
    common.add_argument("--timing", action="store_true", help="include wall time in reports")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[common], help="analyze JSON requests")
    analyze.add_argument("files", nargs="*", help="request files; stdin when omitted")

    verify = sub.add_parser("verify", parents=[common], help="run the verification corpora")
    verify.add_argument("--corpus-max-e", dest="corpus_max_e", type=int)
    verify.add_argument("--corpus-max-mu", dest="corpus_max_mu", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--semigroups", type=int, help="size of the random semigroup corpus")
    verify.add_argument("--max-generator", dest="max_generator", type=int)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    flags = {k: v for k, v in vars(args).items() if k not in ("command", "files")}
    out = sys.stdout.buffer

    if args.command == "verify":
        req = AnalysisRequest("verify", {})
        report, code = run(req, flags)
        out.write(emit(report, resolve("format", flags)))
        out.flush()
        return code

    texts = []
    try:
        if args.files:
            for path in args.files:
                with open(path, encoding="utf-8") as fh:
                    texts.append(fh.read())
        else:
            texts.append(sys.stdin.read())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    requests = []
    try:
        for text in texts:
            parsed = parse_request(text)
            requests.extend(parsed if isinstance(parsed, list) else [parsed])
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return EXIT_INPUT

    batch = len(requests) != 1
    if batch:
        reports, code = run_batch(requests, flags)
        fmt = resolve("format", flags)
        out.write(emit(reports, fmt))
    else:
        report, code = run(requests[0], flags)
        out.write(emit(report, resolve("format", flags, requests[0].options)))
    out.flush()
    return code
