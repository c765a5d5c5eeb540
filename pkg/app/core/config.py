import json
import os
from pathlib import Path
from typing import Dict, Any

from dotenv import load_dotenv


# Environment variables that override a configuration key for this process
ENV_OVERRIDES = {
    "GRADEDLIE_MAX_GROUP_ORDER": ("groups.max_order", int),
    "GRADEDLIE_MAX_CYCLOTOMIC_ORDER": ("linalg.max_cyclotomic_order", int),
    "GRADEDLIE_LOG_LEVEL": ("logging.level", str),
}


class Config:
    """Configuration manager for the library and the command line tool"""

    def __init__(self, config_file: str = None):
        load_dotenv()
        if config_file is None:
            config_file = os.environ.get("GRADEDLIE_CONFIG")
        if config_file is None:
            # Use appropriate config directory based on OS
            self.config_file = self._get_config_path()
        else:
            self.config_file = Path(config_file)

        self._config = self._load_config()
        self._overrides: Dict[str, Any] = {}
        self._apply_environment()

    def _get_config_path(self) -> Path:
        """Get appropriate config file path based on OS"""
        app_name = "GradedLie"

        if os.name == 'nt':  # Windows
            # Use %APPDATA%\GradedLie\config.json
            config_dir = Path(os.environ.get('APPDATA', Path.home() / 'AppData' / 'Roaming'))
        elif os.name == 'posix':
            if os.uname().sysname == 'Darwin':  # macOS
                # Use ~/Library/Application Support/GradedLie/config.json
                config_dir = Path.home() / 'Library' / 'Application Support'
            else:  # Linux and other Unix-like
                # Use ~/.config/GradedLie/config.json (XDG Base Directory)
                config_dir = Path(os.environ.get('XDG_CONFIG_HOME', Path.home() / '.config'))
        else:
            # Fallback to home directory
            config_dir = Path.home()

        return config_dir / app_name / 'config.json'

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from file, layered over the defaults"""
        defaults = self._get_default_config()
        if not self.config_file.exists():
            return defaults
        try:
            with open(self.config_file, 'r', encoding='utf-8') as f:
                stored = json.load(f)
        except (json.JSONDecodeError, IOError):
            # If config file is corrupted, return default config
            return defaults
        if not isinstance(stored, dict):
            return defaults
        return _merge(defaults, stored)

    def _get_default_config(self) -> Dict[str, Any]:
        """Get default configuration"""
        return {
            "linalg": {
                "max_cyclotomic_order": 10000,  # lcm bound when embedding Q(zeta_m) into Q(zeta_n)
            },
            "groups": {
                "max_order": 64,  # Cayley-table algorithms are cubic in the order
            },
            "lemma": {
                "max_chain": 3,  # Default chain length for the commutation certificate
            },
            "classify": {
                "max_candidates": 4000,  # Elements tried when searching a split Cartan subalgebra
            },
            "catalog": {
                "default_seed": 0,
            },
            "logging": {"level": "WARNING"},
        }

    def _apply_environment(self):
        """Read GRADEDLIE_* variables (a local .env file is honoured too)"""
        for variable, (key, kind) in ENV_OVERRIDES.items():
            raw = os.environ.get(variable)
            if raw is None or not raw.strip():
                continue
            try:
                self._overrides[key] = kind(raw.strip())
            except ValueError:
                # Malformed override: keep the file/default value
                continue

    def save_config(self):
        """Save configuration to file"""
        try:
            self.config_file.parent.mkdir(parents=True, exist_ok=True)
            with open(self.config_file, 'w', encoding='utf-8') as f:
                json.dump(self._config, f, indent=2, ensure_ascii=False)
        except IOError as e:
            raise OSError(f"Error saving config: {e}") from e

    def get(self, key: str, default=None):
        """Get configuration value"""
        if key in self._overrides:
            return self._overrides[key]

        keys = key.split('.')
        value = self._config

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def set(self, key: str, value: Any, persist: bool = False):
        """Set configuration value; only written to disk when persist is True"""
        keys = key.split('.')
        config = self._config

        # Navigate to the parent of the target key
        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]

        # Set the value
        config[keys[-1]] = value
        self._overrides.pop(key, None)
        if persist:
            self.save_config()

    def get_int(self, key: str, default: int) -> int:
        """Integer setting; strings such as "64" are accepted, junk falls back to default"""
        raw = self.get(key, default)
        # bool is a subclass of int, so handle it explicitly.
        if isinstance(raw, bool):
            return default
        if isinstance(raw, (int, float)):
            return int(raw) if int(raw) > 0 else default
        if isinstance(raw, str) and raw.strip().isdigit():
            parsed = int(raw.strip())
            return parsed if parsed > 0 else default
        return default

    @property
    def max_group_order(self) -> int:
        """Largest group order accepted by the group constructors"""
        return self.get_int("groups.max_order", 64)

    @property
    def max_cyclotomic_order(self) -> int:
        """Largest n for which Q(zeta_n) arithmetic is attempted"""
        return self.get_int("linalg.max_cyclotomic_order", 10000)

    @property
    def max_chain(self) -> int:
        """Default chain length for check_lemma1"""
        return self.get_int("lemma.max_chain", 3)

    @property
    def log_level(self) -> str:
        """Logging level name for the command line tool"""
        level = self.get("logging.level", "WARNING")
        return level.upper() if isinstance(level, str) else "WARNING"

    def get_config_location(self) -> str:
        """Get the full path of the configuration file"""
        return str(self.config_file)


def _merge(base: Dict[str, Any], update: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


# Global config instance
config = Config()
