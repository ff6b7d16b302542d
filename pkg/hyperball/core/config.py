"""
HyperBall - Configuration Management

Licensed under the MIT License.
"""

import os
from dataclasses import dataclass, field

from dotenv import load_dotenv

# Load environment variables from .env if present
load_dotenv()


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(name, str(default)))


def _env_bool(name: str, default: bool) -> bool:
    return os.getenv(name, "true" if default else "false").lower() == "true"


@dataclass
class Settings:
    # Solver limits
    brute_limit: int = field(default_factory=lambda: _env_int("BHC_BRUTE_LIMIT", 22))
    branch_limit: int = field(default_factory=lambda: _env_int("BHC_BRANCH_LIMIT", 22))
    auto_brute_dim: int = field(default_factory=lambda: _env_int("BHC_AUTO_BRUTE_DIM", 16))

    # Treewidth DP
    dp_check_table_bounds: bool = field(default_factory=lambda: _env_bool("BHC_DP_CHECK_BOUNDS", True))

    # Benchmark harness
    bench_workers: int = field(default_factory=lambda: _env_int("BHC_BENCH_WORKERS", 4))
    bench_timeout: float = field(default_factory=lambda: float(os.getenv("BHC_BENCH_TIMEOUT", "60")))
    bench_isolate: bool = field(default_factory=lambda: _env_bool("BHC_BENCH_ISOLATE", True))

    # Logging
    log_level: str = field(default_factory=lambda: os.getenv("LOG_LEVEL", "WARNING"))


settings = Settings()
