import re
import sys

import hydra
from beartype import beartype
from loguru import logger as log
from omegaconf import DictConfig
from rich.pretty import pretty_repr

from monowidth import CONFIG_DIR, CONFIG_NAME
from monowidth.cli.commands import run_command
from monowidth.utils.custom_logging import setup_custom_hydra_logging

FLAG_ALIASES = {"in": "input", "out": "output"}
HYDRA_VALUE_FLAGS = {"--config-name", "-cn", "--config-path", "-cp", "--config-dir", "-cd", "--cfg", "-c", "--package"}
HYDRA_SWITCHES = {"--help", "-h", "--hydra-help", "--version", "--resolve", "--info", "-i", "--multirun", "-m", "--run"}
UNQUOTED_VALUE = re.compile(r"^[\w./\-+:@%]*$")


def _override(key: str, value: str) -> str:
    key = ".".join(FLAG_ALIASES.get(part, part) for part in key.replace("-", "_").split("."))
    if not UNQUOTED_VALUE.match(value):
        value = "'" + value.replace("\\", "\\\\").replace("'", "\\'") + "'"
    return f"{key}={value}"


@beartype
def adapt_argv(argv: list[str]) -> list[str]:
    """Rewrite ``monowidth rankwidth --in k4.json --field gf2`` into hydra overrides.

    The first bare word becomes ``command=...``, ``--flag value`` and ``--flag=value`` become ``flag=value`` with
    dashes turned into underscores, and a ``--flag`` without a value becomes ``flag=true``. Hydra's own flags and
    plain ``key=value`` overrides pass through untouched.

    Args:
        argv (list[str]): Arguments without the program name.

    Returns:
        list[str]: Arguments for hydra.
    """

    adapted = []
    rest = list(argv)
    if rest and not rest[0].startswith("-") and "=" not in rest[0]:
        adapted.append(f"command={rest.pop(0)}")
    while rest:
        argument = rest.pop(0)
        if argument in HYDRA_VALUE_FLAGS:
            adapted.append(argument)
            if rest:
                adapted.append(rest.pop(0))
        elif argument in HYDRA_SWITCHES or not argument.startswith("--"):
            adapted.append(argument)
        elif "=" in argument:
            key, _, value = argument[2:].partition("=")
            adapted.append(_override(key, value))
        elif rest and not rest[0].startswith("--"):
            adapted.append(_override(argument[2:], rest.pop(0)))
        else:
            adapted.append(_override(argument[2:], "true"))
    return adapted


@hydra.main(CONFIG_DIR.as_posix(), CONFIG_NAME, version_base="1.3")
@beartype
def monowidth_entrypoint(config: DictConfig):
    """Entrypoint for monowidth commands configured by hydra YAML config file.

    Args:
        config (DictConfig): Hydra config object.
    """

    setup_custom_hydra_logging(config)

    log.info(f"Found {CONFIG_NAME} configuration file in {CONFIG_DIR}")
    log.debug(f"Configuration:\n{pretty_repr(config)}")

    exit_code = run_command(config)
    if exit_code:
        sys.exit(exit_code)


def main():
    """Entrypoint for monowidth configured by hydra YAML config file."""

    try:
        hydra_working_dir = "./monowidth_out/${now:%Y-%m-%d}/${now:%H-%M-%S}/"
        sys.argv = [sys.argv[0], *adapt_argv(sys.argv[1:]), f"hydra.run.dir={hydra_working_dir}"]

        monowidth_entrypoint()
    except KeyboardInterrupt:
        log.info("Exiting...")
        exit(0)
    except Exception:
        log.exception("An unhandled runtime exception occurred.")
        exit(1)


if __name__ == "__main__":
    main()
