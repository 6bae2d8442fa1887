# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Tests for environment-driven settings."""

import pytest

from two_fundamental.utils.errors import ConfigurationError
from two_fundamental.utils.settings import Settings, env_flag, get_settings, set_settings


def test_defaults_without_environment():
    settings = Settings.from_env()
    assert settings == Settings()
    assert settings.path_budget == 5_000_000
    assert settings.decompose_depth == 4
    assert settings.threads == 1


def test_environment_overrides_defaults(monkeypatch):
    monkeypatch.setenv("TWOFUND_PATH_BUDGET", " 1000 ")
    monkeypatch.setenv("TWOFUND_DECOMPOSE_DEPTH", "0")
    monkeypatch.setenv("TWOFUND_THREADS", "4")
    monkeypatch.setenv("TWOFUND_LOG_LEVEL", "DEBUG")
    settings = Settings.from_env()
    assert (settings.path_budget, settings.decompose_depth, settings.threads) == (1000, 0, 4)
    assert settings.log_level == "DEBUG"


def test_blank_values_fall_back(monkeypatch):
    monkeypatch.setenv("TWOFUND_HOM_BUDGET", "   ")
    monkeypatch.setenv("TWOFUND_LOG_LEVEL", "")
    settings = Settings.from_env()
    assert settings.hom_budget == Settings.hom_budget
    assert settings.log_level == "INFO"


@pytest.mark.parametrize(
    ("name", "value", "message"),
    [
        ("TWOFUND_PATH_BUDGET", "lots", "not a valid integer"),
        ("TWOFUND_PATH_BUDGET", "0", "integer >= 1"),
        ("TWOFUND_THREADS", "-2", "integer >= 1"),
        ("TWOFUND_DECOMPOSE_DEPTH", "-1", "integer >= 0"),
        ("TWOFUND_SEED", "1.5", "not a valid integer"),
    ],
)
def test_invalid_values_raise(monkeypatch, name, value, message):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigurationError, match=message):
        Settings.from_env()


class TestOverrides:
    def test_none_is_ignored(self):
        base = Settings()
        assert base.with_overrides(path_budget=None, threads=None) is base

    def test_applied_values_replace_fields(self):
        settings = Settings().with_overrides(path_budget=10, decompose_depth=None, threads=2)
        assert settings.path_budget == 10
        assert settings.decompose_depth == Settings.decompose_depth
        assert settings.threads == 2

    def test_zero_is_an_override(self):
        assert Settings().with_overrides(decompose_depth=0).decompose_depth == 0


class TestProcessSettings:
    def test_read_once_and_cached(self, monkeypatch):
        first = get_settings()
        monkeypatch.setenv("TWOFUND_PATH_BUDGET", "7")
        assert get_settings() is first

    def test_reset_forces_a_reread(self, monkeypatch):
        get_settings()
        monkeypatch.setenv("TWOFUND_PATH_BUDGET", "7")
        set_settings(None)
        assert get_settings().path_budget == 7

    def test_installed_settings_win(self):
        installed = Settings(coloring_samples=3)
        set_settings(installed)
        assert get_settings() is installed


@pytest.mark.parametrize(("raw", "expected"), [("1", True), ("TRUE", True), (" yes ", True), ("on", True), ("0", False), ("", False), ("nah", False)])
def test_env_flag(monkeypatch, raw, expected):
    monkeypatch.setenv("TWOFUND_INCLUDE_RAW", raw)
    assert env_flag("INCLUDE_RAW") is expected
