"""
Solver Configuration Module
Lagroot - Certified Polynomial Root Finding

Reads config/lagroot.yaml and config/logging.yaml, with ${VAR} and
${VAR:default} placeholders resolved from the environment (and .env).
"""

import os
import re
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv


_ENV_PATTERN = re.compile(r"^\$\{([A-Za-z_][A-Za-z0-9_]*)(?::([^}]*))?\}$")
_DEFAULT_DIR = Path(__file__).resolve().parents[2] / "config"


class ConfigManager:
    """Lazily loaded view of the solver, oracle, CLI, parallel and logging settings."""

    def __init__(self, config_dir: Optional[str] = None):
        """
        Args:
            config_dir: Where the YAML files live. Falls back to
                $LAGROOT_CONFIG_DIR, then to the repository's config/
        """
        load_dotenv()
        chosen = config_dir or os.getenv("LAGROOT_CONFIG_DIR")
        self.config_dir = Path(chosen) if chosen else _DEFAULT_DIR
        self._files: Dict[str, Dict[str, Any]] = {}

    def _read(self, filename: str) -> Dict[str, Any]:
        """
        Parse one YAML file from config_dir, caching the result.

        Raises:
            FileNotFoundError: if the file is absent
        """
        if filename not in self._files:
            path = self.config_dir / filename
            if not path.exists():
                raise FileNotFoundError(f"missing configuration file {path}")
            with open(path, 'r', encoding='utf-8') as handle:
                raw = yaml.safe_load(handle) or {}
            self._files[filename] = self._resolve(raw)
        return self._files[filename]

    def _resolve(self, node: Any) -> Any:
        """
        Replace placeholder strings throughout a parsed YAML tree.

        A resolved value is parsed again as a YAML scalar, so "4" becomes
        an int and "true" a bool. Unset variables without a default are
        left as written.
        """
        if isinstance(node, dict):
            return {key: self._resolve(value) for key, value in node.items()}
        if isinstance(node, list):
            return [self._resolve(item) for item in node]
        if not isinstance(node, str):
            return node
        match = _ENV_PATTERN.match(node)
        if match is None:
            return node
        name, fallback = match.groups()
        value = os.getenv(name, fallback)
        if value is None:
            return node
        return yaml.safe_load(value) if value else value

    @property
    def lagroot(self) -> Dict[str, Any]:
        return self._read('lagroot.yaml')

    @property
    def solver(self) -> Dict[str, Any]:
        return self.lagroot.get('solver', {})

    @property
    def oracle(self) -> Dict[str, Any]:
        return self.lagroot.get('oracle', {})

    @property
    def cli(self) -> Dict[str, Any]:
        return self.lagroot.get('cli', {})

    @property
    def parallel(self) -> Dict[str, Any]:
        return self.lagroot.get('parallel', {})

    @property
    def logging(self) -> Dict[str, Any]:
        return self._read('logging.yaml')

    def get_solver_setting(self, section: str, key: str, default: Any = None) -> Any:
        """
        One value from a solver subsection.

        Args:
            section: constants, bounds, spiderweb, isolation, refinement or expansion
            key: Setting name
            default: Returned when the setting is absent

        Returns:
            Configured value or default
        """
        return self.solver.get(section, {}).get(key, default)


_shared: Optional[ConfigManager] = None


def get_config() -> ConfigManager:
    """Process-wide ConfigManager, created on first use."""
    global _shared
    if _shared is None:
        _shared = ConfigManager()
    return _shared


def reset_config() -> None:
    """Forget the shared instance; the next get_config() re-reads the files."""
    global _shared
    _shared = None
