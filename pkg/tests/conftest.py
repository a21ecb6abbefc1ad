import numpy as np
import pytest
from beartype.typing import Any, Callable
from omegaconf import DictConfig, OmegaConf

from monowidth import CONFIG_DIR, CONFIG_NAME
from monowidth.linalg.scalars import Field

SEED = 20240607


def pytest_make_parametrize_id(config, val, argname):
    # Field overrides str.encode, which pytest's default id generation calls on str values.
    if isinstance(val, Field):
        return val.value
    return None


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(SEED)


@pytest.fixture
def make_config(tmp_path) -> Callable[..., DictConfig]:
    """Default config for a command; dotted keyword overrides such as ``oracle__kind`` set ``oracle.kind``."""

    def make(command: str, **overrides: Any) -> DictConfig:
        config = OmegaConf.load(CONFIG_DIR / f"{CONFIG_NAME}.yaml")
        OmegaConf.update(config, "command", command)
        OmegaConf.update(config, "seed", 7)
        OmegaConf.update(config, "output", str(tmp_path / f"{command}.out"))
        for key, value in overrides.items():
            OmegaConf.update(config, key.replace("__", "."), str(value) if hasattr(value, "suffix") else value)
        return config

    return make
