# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Command registry for the two-fundamental CLI.

``COMMAND_REGISTRY`` is the single source of truth mapping every subcommand
name to its handler and argparse arguments.  Each ``tools/<area>/commands.py``
module registers its handlers on import through :func:`register`; ``cli.main``
imports those modules before building the parser.

Handlers take ``(args, settings)`` and return any value :func:`to_jsonable`
accepts.  They are wrapped in :func:`json_response`, so a domain error becomes
a failure envelope instead of a traceback.
"""

from dataclasses import dataclass, field
from typing import Any, Callable

from loguru import logger

from two_fundamental.utils.serialization import json_response


@dataclass(frozen=True)
class Arg:
    """One ``add_argument`` call: positional flags plus keyword options."""

    flags: tuple[str, ...]
    options: dict[str, Any] = field(default_factory=dict)


def arg(*flags: str, **options: Any) -> Arg:
    return Arg(flags, options)


@dataclass(frozen=True)
class Command:
    name: str
    help: str
    handler: Callable
    args: tuple[Arg, ...]
    # argparse dests whose values are files digested into the report
    inputs: tuple[str, ...] = ()


COMMAND_REGISTRY: dict[str, Command] = {}


def register(name: str, *args: Arg, inputs: tuple[str, ...] = ()) -> Callable:
    """Register the decorated handler as subcommand ``name``.

    The first line of the handler's docstring becomes the subcommand help.
    """

    def decorator(fn: Callable) -> Callable:
        if name in COMMAND_REGISTRY:
            raise ValueError(f"Subcommand {name!r} is registered twice")
        fn.command_name = name
        summary = (fn.__doc__ or "").strip().splitlines()
        COMMAND_REGISTRY[name] = Command(
            name=name,
            help=summary[0] if summary else name,
            handler=json_response(fn),
            args=args,
            inputs=inputs,
        )
        logger.trace(f"Registered subcommand {name}")
        return fn

    return decorator


# Arguments shared by most subcommands
GRAPH_ARG = arg("--graph", required=True, help="Graph file, or named:<family> (e.g. named:K4)")
BASE_ARG = arg("--base", type=int, default=0, help="Basepoint vertex id (default 0)")
MAP_ARGS = (
    arg("--source", required=True, help="Source graph file or named:<family>"),
    arg("--target", required=True, help="Target graph file or named:<family>"),
    arg("--map", required=True, help="Map file ('M <n_src> <n_tgt>' then 'F <x> <y>' lines)"),
)
