# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

import argparse
import hashlib
import os
import sys
from typing import Any, Sequence

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from two_fundamental import __version__
from two_fundamental.utils.command_registry import COMMAND_REGISTRY
from two_fundamental.utils.errors import TwoFundamentalError
from two_fundamental.utils.formats import NAMED_PREFIX
from two_fundamental.utils.serialization import _failure_envelope, dumps, is_failure
from two_fundamental.utils.settings import get_settings, set_settings

LOG_FILE = os.environ.get("TWOFUND_LOG_FILE")

REPORT_SCHEMA = "two-fundamental/report@1"

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2


class Report(BaseModel):
    """The JSON document written to standard output for a successful run."""

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    schema_: str = Field(default=REPORT_SCHEMA, alias="schema")
    version: str = __version__
    command: str
    inputs: dict[str, str] = Field(default_factory=dict)
    result: Any = None


def _load_commands() -> None:
    from two_fundamental.tools.chromatic import commands as chromatic_commands  # noqa: F401
    from two_fundamental.tools.complexes import commands as complexes_commands  # noqa: F401
    from two_fundamental.tools.covering import commands as covering_commands  # noqa: F401
    from two_fundamental.tools.graph_core import commands as graph_core_commands  # noqa: F401
    from two_fundamental.tools.integer_homology import commands as homology_commands  # noqa: F401
    from two_fundamental.tools.path_homotopy import commands as path_homotopy_commands  # noqa: F401
    from two_fundamental.tools.presentation import commands as presentation_commands  # noqa: F401


def build_parser() -> argparse.ArgumentParser:
    _load_commands()
    parser = argparse.ArgumentParser(prog="two-fundamental", description="2-fundamental groups of graphs")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--budget", type=int, default=None, help="Path enumeration budget (TWOFUND_PATH_BUDGET)")
    parser.add_argument("--depth", type=int, default=None, help="Square decomposition depth (TWOFUND_DECOMPOSE_DEPTH)")
    parser.add_argument("--threads", type=int, default=None, help="Worker threads (TWOFUND_THREADS)")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in sorted(COMMAND_REGISTRY):
        command = COMMAND_REGISTRY[name]
        sub = subparsers.add_parser(name, help=command.help, description=command.help)
        for argument in command.args:
            sub.add_argument(*argument.flags, **argument.options)
    return parser


def _digest(location: str) -> str:
    if location.startswith(NAMED_PREFIX):
        data = location.encode("utf-8")
    else:
        with open(location, "rb") as handle:
            data = handle.read()
    return hashlib.sha256(data).hexdigest()


def input_digests(args: argparse.Namespace, dests: Sequence[str]) -> dict[str, str]:
    """sha256 of every input file; comma lists (``--pieces``) are digested per entry."""
    digests: dict[str, str] = {}
    for dest in dests:
        value = getattr(args, dest, None)
        if value is None:
            continue
        entries = value.split(",") if dest == "pieces" else [value]
        for index, location in enumerate(entries):
            key = dest if len(entries) == 1 else f"{dest}[{index}]"
            digests[key] = _digest(location)
    return digests


def _check_overrides(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    for flag, value, minimum in (("--budget", args.budget, 1), ("--depth", args.depth, 0), ("--threads", args.threads, 1)):
        if value is not None and value < minimum:
            parser.error(f"{flag} must be at least {minimum}")


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    """Parse ``argv``, run one subcommand and write its JSON report.

    Returns 0 on success, 1 when the operation failed with a domain error and
    2 on usage errors.
    """
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_overrides(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        settings = get_settings().with_overrides(
            path_budget=args.budget, decompose_depth=args.depth, threads=args.threads
        )
    except TwoFundamentalError as exc:
        logger.exception("Invalid configuration")
        stdout.write(dumps(_failure_envelope(args.command, exc)))
        return EXIT_DOMAIN_ERROR

    command = COMMAND_REGISTRY[args.command]
    previous = get_settings()
    set_settings(settings)
    try:
        logger.info(f"Running {command.name}")
        result = command.handler(args, settings)
    finally:
        set_settings(previous)

    if is_failure(result):
        stdout.write(dumps(result))
        return EXIT_DOMAIN_ERROR
    report = Report(command=command.name, inputs=input_digests(args, command.inputs), result=result)
    stdout.write(dumps(report.model_dump(by_alias=True, mode="json")))
    return EXIT_OK


def main():
    """Run the two-fundamental command-line interface."""
    logger.remove()

    level = os.environ.get("TWOFUND_LOG_LEVEL", "INFO")
    if LOG_FILE:
        logger.add(
            LOG_FILE,
            mode="w",
            level=level,
            retention="5 days",
            enqueue=True,
            serialize=True,
        )

    logger.add(sys.stderr, level=level, format="{time} {level} {message}", serialize=True)

    sys.exit(run(sys.argv[1:]))
