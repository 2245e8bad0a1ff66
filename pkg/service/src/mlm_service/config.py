"""Service configuration: flags > FUSENORM_* environment variables > defaults."""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_PREFIX = "FUSENORM_"


@dataclass(frozen=True)
class ServiceConfig:
    model: str = "bert-base-uncased"
    port: int = 8000
    host: str = "0.0.0.0"
    device: str = "cpu"
    max_batch: int = 32
    max_tokens: int = 128

    @classmethod
    def from_env(cls, **overrides) -> "ServiceConfig":
        def env(name, cast, default):
            raw = os.environ.get(ENV_PREFIX + name)
            return cast(raw) if raw is not None else default

        values = {
            "model": env("MODEL", str, cls.model),
            "port": env("PORT", int, cls.port),
            "host": env("HOST", str, cls.host),
            "device": env("DEVICE", str, cls.device),
            "max_batch": env("MAX_BATCH", int, cls.max_batch),
            "max_tokens": env("MAX_TOKENS", int, cls.max_tokens),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
