# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

# This module reads the runtime budgets and switches from environment variables.
# CLI flags override individual fields through Settings.with_overrides().

import os
from dataclasses import dataclass, field, replace

from loguru import logger

from two_fundamental.utils.errors import ConfigurationError
from two_fundamental.utils.messages import INVALID_SETTING

ENV_PREFIX = "TWOFUND_"

_TRUTHY = {"1", "true", "yes", "on"}


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.environ.get(ENV_PREFIX + name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(INVALID_SETTING.format(name=ENV_PREFIX + name, value=raw, kind="integer")) from None
    if value < minimum:
        raise ConfigurationError(
            INVALID_SETTING.format(name=ENV_PREFIX + name, value=raw, kind=f"integer >= {minimum}")
        )
    return value


def env_flag(name: str) -> bool:
    """Return True when ``TWOFUND_<name>`` holds one of ``1``, ``true``, ``yes``, ``on``."""
    return os.environ.get(ENV_PREFIX + name, "").strip().lower() in _TRUTHY


@dataclass(frozen=True)
class Settings:
    """Budgets and limits shared by every operation."""

    path_budget: int = 5_000_000
    decompose_depth: int = 4
    hom_budget: int = 200_000
    iso_max_vertices: int = 64
    coloring_exhaustive_vertices: int = 20
    coloring_samples: int = 2000
    seed: int = 0
    threads: int = 1
    log_level: str = field(default="INFO")

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from ``TWOFUND_*`` environment variables, falling back to defaults."""
        settings = cls(
            path_budget=_env_int("PATH_BUDGET", cls.path_budget, minimum=1),
            decompose_depth=_env_int("DECOMPOSE_DEPTH", cls.decompose_depth),
            hom_budget=_env_int("HOM_BUDGET", cls.hom_budget, minimum=1),
            iso_max_vertices=_env_int("ISO_MAX_VERTICES", cls.iso_max_vertices, minimum=1),
            coloring_exhaustive_vertices=_env_int(
                "COLORING_EXHAUSTIVE_VERTICES", cls.coloring_exhaustive_vertices
            ),
            coloring_samples=_env_int("COLORING_SAMPLES", cls.coloring_samples, minimum=1),
            seed=_env_int("SEED", cls.seed),
            threads=_env_int("THREADS", cls.threads, minimum=1),
            log_level=os.environ.get(ENV_PREFIX + "LOG_LEVEL", "INFO").strip() or "INFO",
        )
        logger.debug(f"Loaded settings: {settings}")
        return settings

    def with_overrides(self, **overrides) -> "Settings":
        """Return a copy with every non-None override applied."""
        applied = {key: value for key, value in overrides.items() if value is not None}
        if not applied:
            return self
        logger.debug(f"Settings overrides: {applied}")
        return replace(self, **applied)


_current: Settings | None = None


def get_settings() -> Settings:
    """Return the process-wide settings, reading the environment on first use."""
    global _current
    if _current is None:
        _current = Settings.from_env()
    return _current


def set_settings(settings: Settings | None) -> None:
    """Install ``settings`` as the process-wide value; ``None`` forces a re-read."""
    global _current
    _current = settings
