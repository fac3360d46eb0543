"""Engine settings from defaults, environment (.env) and CLI overrides."""
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass

import logging
import os
from dataclasses import dataclass, fields

from homology import CoefficientField

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

ENV_KEYS = {
    "field": "STANLEY_FIELD",
    "shelling_cap": "STANLEY_SHELLING_CAP",
    "generator_cap": "STANLEY_GENERATOR_CAP",
    "box_cap": "STANLEY_BOX_CAP",
    "threads": "STANLEY_THREADS",
    "log_level": "STANLEY_LOG_LEVEL",
}


@dataclass
class EngineConfig:
    """Search caps and coefficient field shared by every command."""
    field: str = "q"
    shelling_cap: int = 24      # facets in the shelling DP
    generator_cap: int = 24     # generators in the linear-quotient DP
    box_cap: int = 4096         # candidate monomials in filtration search
    threads: int = 1
    log_level: str = "INFO"

    @property
    def coefficient_field(self):
        return parse_field(self.field)

    def to_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def parse_field(text):
    """"q" or "p:<prime>"; raises ValueError for anything else."""
    return CoefficientField.parse(text)


def _positive_int(name, raw):
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def _coerce(attr, name, raw):
    if attr == "field":
        parse_field(str(raw))
        return str(raw).strip().lower()
    if attr == "log_level":
        level = str(raw).strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"{name} must be one of {', '.join(LOG_LEVELS)}, got {raw!r}")
        return level
    return _positive_int(name, raw)


def build_engine_config(overrides=None):
    """Defaults < STANLEY_* environment variables < explicit overrides (None skipped)."""
    values = {}
    for attr, env_name in ENV_KEYS.items():
        raw = os.environ.get(env_name)
        if raw:
            values[attr] = _coerce(attr, env_name, raw)
    for attr, raw in (overrides or {}).items():
        if raw is None:
            continue
        if attr not in ENV_KEYS:
            raise ValueError(f"Unknown setting: {attr}")
        values[attr] = _coerce(attr, f"--{attr.replace('_', '-')}", raw)
    config = EngineConfig(**values)
    logger.debug("Engine config: %s", config.to_dict())
    return config
