import os

from beartype import beartype
from omegaconf import OmegaConf


@beartype
def get_env_variable(name: str, default: str | int | float | bool | None = None) -> str | int | float | bool | None:
    """Get environment variable, e.g. ``${env:MONOWIDTH_SEED,0}`` in the YAML config.

    Args:
        name (str): Name of environment variable.
        default (str | int | float | bool | None, optional): Value when the variable is unset. Defaults to None.

    Returns:
        str | int | float | bool | None: Environment variable value.
    """

    return os.environ.get(name, default)


OmegaConf.register_new_resolver("env", get_env_variable, replace=True)
