"""
Configuration Module

This module handles the loading and management of configuration settings for hyposharp.
Non-secret defaults live in a YAML file; environment variables (optionally loaded from a
.env file) override the handful of settings that are useful to tweak per shell.
"""

import copy
import os
import sys
from functools import lru_cache
from typing import Any, Dict, Optional

import yaml
from dotenv import find_dotenv, load_dotenv

DEFAULTS: Dict[str, Any] = {
    "logging": {
        "level": "INFO",
        "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    },
    "oracle": {"max_vars": 3, "max_isoterm_length": 8},
    "checker": {"default_monoid": "hypoN"},
    "semiring": {"default": "tropical"},
    "rendering": {"color": "auto", "cell_width": 0},
}

# environment variable -> dotted config key
ENV_OVERRIDES: Dict[str, str] = {
    "HYPOSHARP_LOG_LEVEL": "logging.level",
    "HYPOSHARP_MAX_VARS": "oracle.max_vars",
}


def get_config_path(config_file: str = "config.yaml") -> Optional[str]:
    """
    Get the path to the config.yaml file.

    Looks next to the package first, then in the repository root, then in the
    current working directory.

    Returns:
        Optional[str]: The path to the config file, or None if it cannot be found.
    """
    package_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    for base_path in (package_dir, os.path.dirname(package_dir), os.getcwd()):
        config_path = os.path.join(base_path, config_file)
        if os.path.exists(config_path):
            return config_path
    return None


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _coerce(raw: str, current: Any) -> Any:
    if isinstance(current, bool):
        return raw.strip().lower() in ("1", "true", "yes", "on")
    if isinstance(current, int):
        return int(raw)
    return raw


class Config:
    def __init__(self, config_file: str = "config.yaml"):
        """
        Initialize the Config class by loading the YAML configuration and environment overrides.

        Args:
            config_file (str): Name of the YAML configuration file. Defaults to 'config.yaml'.
        """
        dotenv_path = find_dotenv(usecwd=True)
        if dotenv_path:
            load_dotenv(dotenv_path)

        config_path = get_config_path(config_file)
        loaded: Dict[str, Any] = {}
        if config_path:
            with open(config_path, "r") as file:
                loaded = yaml.safe_load(file) or {}
        self.config: Dict[str, Any] = _merge(DEFAULTS, loaded)

        for env_name, key in ENV_OVERRIDES.items():
            raw = os.getenv(env_name)
            if raw:
                self._assign(key, _coerce(raw, self.get(key)))

        self._set_attributes()

    def _set_attributes(self):
        """Set attributes based on the current configuration."""
        for key, value in self.config.items():
            setattr(self, key.upper(), value)

    def _assign(self, key: str, value: Any) -> None:
        *parents, leaf = key.split(".")
        node = self.config
        for part in parents:
            node = node.setdefault(part, {})
        node[leaf] = value

    def configure(self, **kwargs):
        """
        Update configuration values.

        Keys may be top-level sections or dotted paths written with double
        underscores, e.g. ``configure(oracle__max_vars=4)``.

        Raises:
            ValueError: If a key is unknown.
        """
        for raw_key, value in kwargs.items():
            key = raw_key.replace("__", ".")
            if self.get(key) is None:
                raise ValueError(f"Unknown configuration key: {raw_key}")
            self._assign(key, value)

        self._set_attributes()

    def get(self, key: str, default: Optional[Any] = None) -> Any:
        """
        Get a configuration value by key; dotted keys walk into sections.

        Args:
            key (str): The configuration key, e.g. "oracle.max_vars".
            default (Optional[Any]): The value returned when the key is absent.

        Returns:
            Any: The configured value or the default.
        """
        node: Any = self.config
        for part in key.split("."):
            if not isinstance(node, dict) or part not in node:
                return default
            node = node[part]
        return node

    def color_enabled(self) -> bool:
        """
        Whether tableau rendering emits ANSI colour.

        NO_COLOR always wins. With ``rendering.color`` left at ``auto`` colour
        follows whether stdout is a terminal.
        """
        if "NO_COLOR" in os.environ:
            return False
        setting = self.get("rendering.color", "auto")
        if setting is None or setting == "auto":
            return sys.stdout.isatty()
        return bool(setting)


@lru_cache(maxsize=None)
def load_config() -> Config:
    """
    Load and return the shared Config instance.

    The file and environment are read once; call ``load_config.cache_clear()``
    after changing either. Use ``Config()`` for a private copy to configure.

    Returns:
        Config: An instance of the Config class.
    """
    return Config()
