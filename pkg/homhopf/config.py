# -*- coding: UTF-8 -*-
# cSpell:ignore homhopf
import logging
from pathlib import Path
from typing import Any

from jsonschema import Draft202012Validator
from yaml import YAMLError, load
try:
    from yaml import CLoader as Loader
except ImportError:
    from yaml import Loader

from homhopf.exactlin import parse_scalar
from homhopf.schema import config_schema


class Configuration:
    """Settings of the command line, read from an optional YAML file."""

    def __init__(self, data: dict | None = None) -> None:
        """Create the configuration from a dictionary, usually read from YAML.

        Missing sections and keys fall back to the defaults.
        """
        data = data or {}
        self.log = logging.getLogger()
        v = Draft202012Validator(config_schema)
        errors = sorted(v.iter_errors(data), key=lambda e: e.path)
        if errors:
            self.log.error("Failed to validate the configuration using json schema.")
            for error in errors:
                s = f"{list(error.schema_path)}, {list(error.absolute_path)}, {error.message}"
                self.log.error("  %s", s)
            raise ValueError("Failed to validate the configuration.")

        self.log_level: str = data.get('logging', {}).get('level', 'WARNING')
        self.default_k: str = data.get('catalog', {}).get('default_k', '2')
        parse_scalar(self.default_k)
        output = data.get('output', {})
        self.indent: int = output.get('indent', 2)
        self.witnesses: bool = output.get('witnesses', True)

    @classmethod
    def from_file(cls, path: str | Path | None) -> "Configuration":
        """Load the YAML file at ``path``; ``None`` gives the defaults."""
        if path is None:
            return cls()
        with open(path, "r", encoding="utf-8") as f:
            try:
                data = load(f, Loader=Loader)
            except YAMLError as e:
                raise ValueError(f"Cannot parse configuration file {path}: {e}") from e
        if data is not None and not isinstance(data, dict):
            raise ValueError(f"Configuration file {path} must hold a mapping")
        return cls(data)

    def __eq__(self, other: Any):
        if isinstance(other, Configuration):
            return all([
                self.log_level == other.log_level,
                self.default_k == other.default_k,
                self.indent == other.indent,
                self.witnesses == other.witnesses,
            ])
        return False

    def __repr__(self) -> str:
        return (f"Configuration(log_level={self.log_level!r}, default_k={self.default_k!r}, "
                f"indent={self.indent}, witnesses={self.witnesses})")
