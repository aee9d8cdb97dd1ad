"""
Run configuration

Search caps, worker count, seed, cache location and output format. Values
come from (lowest to highest priority) built-in defaults, a `.env` file,
process environment variables and explicit overrides from the CLI.

Environment variables:
- BERGE_TURAN_CACHE: cache file path
- BERGE_TURAN_WORKERS: worker processes for searches and restarts
- BERGE_TURAN_SEED: base random seed
- BERGE_TURAN_GRAPH_CAP: largest n for ex / ex-gen
- BERGE_TURAN_COLORED_CAP: largest n for ex-col
- BERGE_TURAN_BERGE_CAPS: "k:n" pairs, e.g. "3:7,4:6,5:6"
- BERGE_TURAN_LOG_LEVEL: logging level name

Usage:
    config = RunConfig.from_env(workers=4)
    cap = config.caps.berge_cap(3)
"""
import logging
import os
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from src.errors import CapExceededError, InvalidParameterError

DEFAULT_CACHE_PATH = ".berge_turan_cache.jsonl"
OUTPUT_FORMATS = ("json", "csv", "human")


def _parse_berge_caps(raw: str) -> Dict[int, int]:
    caps: Dict[int, int] = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            k, n = item.split(":")
            caps[int(k)] = int(n)
        except ValueError:
            raise InvalidParameterError(f"bad Berge cap entry {item!r}, expected k:n")
    return caps


@dataclass(frozen=True)
class SearchCaps:
    """Largest n each exact search accepts before refusing"""

    graph: int = 9
    colored: int = 8
    berge: Dict[int, int] = field(default_factory=lambda: {3: 7, 4: 6, 5: 6})

    def __post_init__(self):
        values = [self.graph, self.colored, *self.berge.values()]
        if any(v < 1 for v in values):
            raise InvalidParameterError(f"search caps must be >= 1, got {values}")

    def berge_cap(self, k: int) -> int:
        """Cap for k-uniform Berge searches; uniformities without a cap are refused"""
        if k not in self.berge:
            raise CapExceededError(f"no Berge search cap configured for uniformity k={k}")
        return self.berge[k]


@dataclass(frozen=True)
class RunConfig:
    """Everything a CLI run or a test needs to drive the searches"""

    caps: SearchCaps = field(default_factory=SearchCaps)
    workers: int = 1
    seed: int = 0
    cache_path: str = DEFAULT_CACHE_PATH
    output_format: str = "json"
    use_cache: bool = True
    verify_cache: bool = False
    progress: bool = False
    log_level: str = "WARNING"

    def __post_init__(self):
        if self.workers < 1:
            raise InvalidParameterError(f"worker count must be >= 1, got {self.workers}")
        if self.output_format not in OUTPUT_FORMATS:
            raise InvalidParameterError(
                f"output format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}"
            )
        if not isinstance(logging.getLevelName(self.log_level.upper()), int):
            raise InvalidParameterError(f"unknown log level {self.log_level!r}")

    @classmethod
    def from_env(cls, env_file: Optional[str] = None, **overrides: Any) -> "RunConfig":
        """
        Build a configuration from .env / environment, then apply overrides

        Args:
            env_file: Optional explicit .env path (defaults to dotenv discovery)
            **overrides: Field values that win over the environment; None is ignored

        Returns:
            RunConfig
        """
        load_dotenv(env_file)

        def env_int(name: str, default: int) -> int:
            raw = os.getenv(name)
            if raw is None or raw == "":
                return default
            try:
                return int(raw)
            except ValueError:
                raise InvalidParameterError(f"{name} must be an integer, got {raw!r}")

        default_caps = SearchCaps()
        berge_raw = os.getenv("BERGE_TURAN_BERGE_CAPS")
        caps = SearchCaps(
            graph=env_int("BERGE_TURAN_GRAPH_CAP", default_caps.graph),
            colored=env_int("BERGE_TURAN_COLORED_CAP", default_caps.colored),
            berge=_parse_berge_caps(berge_raw) if berge_raw else dict(default_caps.berge),
        )
        config = cls(
            caps=caps,
            workers=env_int("BERGE_TURAN_WORKERS", 1),
            seed=env_int("BERGE_TURAN_SEED", 0),
            cache_path=os.getenv("BERGE_TURAN_CACHE") or DEFAULT_CACHE_PATH,
            log_level=os.getenv("BERGE_TURAN_LOG_LEVEL") or "WARNING",
        )
        return config.with_overrides(**overrides)

    def with_overrides(self, **overrides: Any) -> "RunConfig":
        """Return a copy with the non-None overrides applied"""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes) if changes else self
