"""Operator command line: ingest corpora, build/inspect indexes, emit pennants, serve.

All diagnostics go to stderr and all payloads to stdout so commands compose
in pipelines. Exit codes are a stable scripting contract:

    0  success
    1  I/O or other fatal error
    2  empty or degenerate input
    3  unknown seed

Defaults resolve as flag > environment variable (PENNANT_K, PENNANT_MIN_TF,
PENNANT_LOG_BASE) > built-in.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__, render
from .core import PennantConfig, build_pennant
from .errors import (
    DegenerateAxisError,
    EmptyCorpusError,
    IndexFormatError,
    SeedNotFoundError,
)
from .index import INDEX_FORMAT_VERSION, MODES, build_index, load_index, save_index
from .ingest import parse_corpus

__all__ = ["main", "build_parser"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FATAL = 1
EXIT_EMPTY = 2
EXIT_NO_SEED = 3

_ENV_VARS = {
    "k": ("PENNANT_K", int),
    "min_tf": ("PENNANT_MIN_TF", int),
    "log_base": ("PENNANT_LOG_BASE", float),
}


class _ConfigError(Exception):
    pass


def _env_default(name: str):
    var, convert = _ENV_VARS[name]
    raw = os.environ.get(var)
    if raw is None:
        return None
    try:
        return convert(raw)
    except ValueError:
        raise _ConfigError(f"invalid value for {var}: {raw!r}") from None


def _resolve(flag_value, name: str, builtin):
    if flag_value is not None:
        return flag_value
    env_value = _env_default(name)
    return env_value if env_value is not None else builtin


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pennant", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--quiet", action="store_true", help="only log errors")
    parser.add_argument(
        "--log-level",
        choices=["debug", "info", "warning", "error"],
        default="info",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="validate a corpus and write an ingest report")
    p_ingest.add_argument("--corpus", required=True, help="path to JSONL corpus")
    p_ingest.add_argument("--report", help="write report JSON here instead of stdout")
    p_ingest.set_defaults(func=cmd_ingest)

    p_build = sub.add_parser("build-index", help="build a co-mention index file")
    p_build.add_argument("--corpus", required=True)
    p_build.add_argument("--mode", required=True, choices=list(MODES))
    p_build.add_argument("--out", required=True, help="index file to write")
    p_build.set_defaults(func=cmd_build_index)

    p_pennant = sub.add_parser("pennant", help="emit a pennant diagram for a seed")
    p_pennant.add_argument("--index", required=True)
    p_pennant.add_argument("--seed", required=True)
    p_pennant.add_argument("--k", type=int)
    p_pennant.add_argument("--min-tf", type=int, dest="min_tf")
    p_pennant.add_argument("--log-base", type=float, dest="log_base")
    p_pennant.add_argument("--idf-style", choices=["n_over_df", "inverse_df"], dest="idf_style")
    p_pennant.add_argument("--sectors", help="absolute sector bounds as b1,b2")
    p_pennant.add_argument("--format", choices=["json", "svg"], default="json")
    p_pennant.add_argument("--out", help="write output here instead of stdout")
    p_pennant.set_defaults(func=cmd_pennant)

    p_stats = sub.add_parser("stats", help="print stats for one or two index files")
    p_stats.add_argument("--index", required=True)
    p_stats.add_argument("--index2")
    p_stats.set_defaults(func=cmd_stats)

    p_serve = sub.add_parser("serve", help="serve the HTTP API (and optionally the UI)")
    p_serve.add_argument("--index", required=True)
    p_serve.add_argument("--index2", help="second index file (the other mode)")
    p_serve.add_argument("--bind", default="127.0.0.1:8000", help="addr:port to listen on")
    p_serve.add_argument("--static", help="directory with the UI bundle to serve at /")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def _pennant_config_from(args: argparse.Namespace) -> PennantConfig:
    if args.sectors is not None:
        pieces = args.sectors.split(",")
        if len(pieces) != 2:
            raise _ConfigError("--sectors must be two comma-separated numbers: b1,b2")
        try:
            bounds = (float(pieces[0]), float(pieces[1]))
        except ValueError:
            raise _ConfigError(f"invalid --sectors value: {args.sectors!r}") from None
        policy = "absolute"
    else:
        bounds = None
        policy = "terciles_of_range"
    try:
        return PennantConfig(
            k=_resolve(args.k, "k", 100),
            min_tf=_resolve(args.min_tf, "min_tf", 1),
            log_base=_resolve(args.log_base, "log_base", 2.0),
            idf_style=args.idf_style or "n_over_df",
            sector_policy=policy,
            sector_bounds=bounds,
        )
    except ValueError as exc:
        raise _ConfigError(str(exc)) from None


def cmd_ingest(args: argparse.Namespace) -> int:
    with open(args.corpus, "rb") as fh:
        records, report = parse_corpus(fh)
    payload = json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n"
    if args.report:
        Path(args.report).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    for line, reason in report.rejects:
        logger.warning("line %d rejected: %s", line, reason)
    if report.records_accepted == 0:
        logger.error("no records accepted")
        return EXIT_EMPTY
    return EXIT_OK


def cmd_build_index(args: argparse.Namespace) -> int:
    with open(args.corpus, "rb") as fh:
        records, report = parse_corpus(fh)
    for line, reason in report.rejects:
        logger.warning("line %d rejected: %s", line, reason)
    if not records:
        logger.error("no records accepted; nothing to index")
        return EXIT_EMPTY
    index = build_index(records, args.mode)
    save_index(index, args.out)
    sys.stdout.write(f"n_docs={index.n_docs} n_keys={index.n_keys}\n")
    if index.n_keys == 0:
        logger.warning("index has zero keys (no %s mentions in corpus)", args.mode)
        return EXIT_EMPTY
    return EXIT_OK


def cmd_pennant(args: argparse.Namespace) -> int:
    config = _pennant_config_from(args)
    index = load_index(args.index)
    diagram = build_pennant(index, args.seed, config)
    if args.format == "json":
        payload = render.emit_json(diagram)
    else:
        payload = render.emit_svg(diagram)
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.buffer.write(payload.encode("utf-8"))
        sys.stdout.flush()
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    indexes = [load_index(args.index)]
    if args.index2:
        indexes.append(load_index(args.index2))
    modes = [index.mode for index in indexes]
    if len(set(modes)) != len(modes):
        logger.error("both index files have mode %r", modes[0])
        return EXIT_FATAL
    obj: dict = {"modes": sorted(modes), "index_version": INDEX_FORMAT_VERSION}
    for index in indexes:
        obj[index.mode] = {"n_docs": index.n_docs, "n_keys": index.n_keys}
    sys.stdout.write(json.dumps(obj, ensure_ascii=False, indent=2) + "\n")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import ServiceConfig, create_app

    addr, sep, port_text = args.bind.rpartition(":")
    if not sep or not addr:
        raise _ConfigError(f"--bind must be addr:port, got {args.bind!r}")
    try:
        port = int(port_text)
    except ValueError:
        raise _ConfigError(f"invalid port in --bind: {port_text!r}") from None

    indexes = {}
    for path in filter(None, [args.index, args.index2]):
        index = load_index(path)
        if index.mode in indexes:
            logger.error("both index files have mode %r", index.mode)
            return EXIT_FATAL
        indexes[index.mode] = index
        logger.info("loaded %s index: %d docs, %d keys", index.mode, index.n_docs, index.n_keys)

    try:
        defaults = PennantConfig(
            k=_resolve(None, "k", 100),
            min_tf=_resolve(None, "min_tf", 1),
            log_base=_resolve(None, "log_base", 2.0),
        )
    except ValueError as exc:
        raise _ConfigError(str(exc)) from None

    service_config = ServiceConfig(
        indexes=indexes,
        defaults=defaults,
        static_dir=Path(args.static) if args.static else None,
    )
    app = create_app(service_config)
    try:
        uvicorn.run(app, host=addr, port=port, log_level="warning" if args.quiet else "info")
    except SystemExit as exc:  # uvicorn raises on bind failure
        return exc.code if isinstance(exc.code, int) else EXIT_FATAL
    except OSError as exc:
        logger.error("bind failed: %s", exc)
        return EXIT_FATAL
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.ERROR if args.quiet else getattr(logging, args.log_level.upper())
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.func(args)
    except SeedNotFoundError:
        sys.stderr.write(json.dumps({"error": "seed not found"}) + "\n")
        return EXIT_NO_SEED
    except (EmptyCorpusError, DegenerateAxisError) as exc:
        logger.error("%s", exc)
        return EXIT_EMPTY
    except IndexFormatError as exc:
        logger.error("%s", exc)
        return EXIT_FATAL
    except _ConfigError as exc:
        logger.error("%s", exc)
        return EXIT_FATAL
    except OSError as exc:
        logger.error("%s", exc)
        return EXIT_FATAL


if __name__ == "__main__":
    sys.exit(main())
