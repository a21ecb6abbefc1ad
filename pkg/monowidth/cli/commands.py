"""Subcommands of the ``monowidth`` application.

Every command reads its inputs from the hydra config and returns a :class:`CommandOutput` whose payload is
``{"result": ..., "certificate": ..., "metadata": ...}``. Certificates are JSON objects
``{"kind", "field", "width", "instance", ...}`` carrying the instance they certify, so that ``verify`` can run on
a certificate alone or against a separate ``--against`` file.
"""

import io
import json
import sys
from fractions import Fraction
from pathlib import Path

import pydot
from beartype import beartype
from beartype.typing import Any, Callable, NamedTuple
from loguru import logger as log
from omegaconf import DictConfig
from rich.console import Console
from rich.table import Table

from monowidth.bialg.constructions import flagged_leaves
from monowidth.bialg.factorize import best_decomposition, tensor_factorize
from monowidth.bialg.oracle import mwd_oracle
from monowidth.bialg.prop import BialgProp
from monowidth.cli.evaluate import eval_expr, expr_to_decomposition, make_prop
from monowidth.cli.expressions import parse, to_text
from monowidth.cli.instances import make_rng, random_bounded_graph, random_build, random_dangling_graph, random_matrix
from monowidth.decomposition.io import decomposition_from_json, decomposition_to_dot, decomposition_to_json
from monowidth.decomposition.tree import Decomposition, PropInterface
from monowidth.decomposition.width import validate, width
from monowidth.graphs.dangling import DanglingGraph
from monowidth.graphs.families import FAMILIES, random_boundary
from monowidth.graphs.io import (
    graph_from_json,
    graph_to_json,
    load_graph,
    recursive_to_dot,
    recursive_to_json,
    tree_from_json,
    tree_to_dot,
    tree_to_json,
)
from monowidth.graphs.rank_tree import rank_dec_width
from monowidth.graphs.recursive import RecRankDec, rec_width, to_rank_dec, to_recursive
from monowidth.graphs.solver import rrwd_exact, rwd_enumerate_oracle, rwd_exact
from monowidth.grph.bounded import BoundedGraph, from_dangling
from monowidth.grph.io import bounded_from_json, bounded_to_json
from monowidth.grph.prop import GrphProp
from monowidth.grph.translate import monoidal_to_rank, mwd_graph_bounds, rank_to_monoidal
from monowidth.linalg.elimination import rank
from monowidth.linalg.matrix import Matrix
from monowidth.linalg.scalars import Field
from monowidth.utils.errors import CapExceededError, CertificateError, InputFormatError, MonowidthError

RANK_DECOMPOSITION = "rank_decomposition"
RECURSIVE_DECOMPOSITION = "recursive_rank_decomposition"
MONOIDAL_DECOMPOSITION = "monoidal_decomposition"

CONVERT_TARGETS = {"rank": RANK_DECOMPOSITION, "recursive": RECURSIVE_DECOMPOSITION, "monoidal": MONOIDAL_DECOMPOSITION}


class CommandOutput(NamedTuple):
    payload: dict[str, Any]
    dot: pydot.Dot | None = None
    exit_code: int = 0


def _field(config: DictConfig) -> Field:
    return Field.parse(config.field)


def _require(config: DictConfig, key: str) -> Any:
    value = config.get(key)
    if value is None or value == "":
        raise InputFormatError(f"Command {config.command!r} needs --{key.replace('_', '-')}")
    return value


def _vertex_cap(config: DictConfig) -> int:
    cap = config.get("max_vertices")
    return int(cap) if cap is not None else int(config.caps.exact_vertices)


def _metadata(config: DictConfig, **extra: Any) -> dict[str, Any]:
    return {"command": config.command, "field": _field(config).value, "seed": int(config.seed), **extra}


def _certificate(kind: str, field: Field, claimed: int, instance: Any, **payload: Any) -> dict[str, Any]:
    return {"kind": kind, "field": field.value, "width": claimed, "instance": instance, **payload}


def _read_json(path: str | Path) -> Any:
    path = Path(path)
    if not path.is_file():
        raise InputFormatError(f"No such file: {path}")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise InputFormatError(f"{path} is not valid JSON: {e}") from e


def _entry(certificate: dict[str, Any], key: str) -> Any:
    if key not in certificate:
        raise CertificateError(f"Certificate of kind {certificate.get('kind')!r} lacks {key!r}")
    return certificate[key]


@beartype
def matrix_to_json(f: Matrix) -> dict[str, Any]:
    return {"matrix": f.to_json(), "rows": f.rows, "cols": f.cols}


@beartype
def matrix_from_json(payload: Any, field: Field) -> Matrix:
    """Read ``{"matrix": rows, "cols": c}`` or a bare list of rows."""

    if isinstance(payload, list):
        return Matrix.from_rows(payload, field)
    if isinstance(payload, dict) and isinstance(payload.get("matrix"), list):
        return Matrix.from_rows(payload["matrix"], field, cols=payload.get("cols"))
    raise InputFormatError("A matrix is a list of rows or an object with a 'matrix' key")


def load_matrix(path: str | Path, field: Field) -> Matrix:
    matrix = matrix_from_json(_read_json(path), field)
    log.debug(f"Loaded a {matrix.rows}x{matrix.cols} matrix from {path}")
    return matrix


def _load_certificate(config: DictConfig) -> tuple[dict[str, Any], Field, Any]:
    """Certificate from ``--in``, its field, and the instance from ``--against`` or from the certificate itself."""

    certificate = _read_json(_require(config, "input"))
    if not isinstance(certificate, dict) or "kind" not in certificate:
        raise CertificateError("A certificate is a JSON object with a 'kind'")
    field = Field.parse(certificate.get("field", config.field))
    against = config.get("against")
    if against:
        path = Path(against)
        instance = _read_json(path) if path.suffix == ".json" else graph_to_json(load_graph(path, field))
    else:
        instance = _entry(certificate, "instance")
    return certificate, field, instance


def _graph_instance(instance: Any, field: Field) -> DanglingGraph:
    return graph_from_json(instance.get("graph", instance) if isinstance(instance, dict) else instance, field)


def _grph_instance(instance: Any, field: Field) -> BoundedGraph:
    if isinstance(instance, dict) and {"n", "m", "k"} <= set(instance):
        return bounded_from_json(instance, field)
    return from_dangling(_graph_instance(instance, field))


def _monoidal_instance(prop: PropInterface, instance: Any, field: Field) -> Matrix | BoundedGraph:
    return _grph_instance(instance, field) if prop.name == "grph" else matrix_from_json(instance, field)


def _recursive_certificate(decomposition: RecRankDec) -> dict[str, Any]:
    return _certificate(
        RECURSIVE_DECOMPOSITION,
        decomposition.graph.field,
        rec_width(decomposition),
        graph_to_json(decomposition.graph),
        shape=recursive_to_json(decomposition)["shape"],
    )


def _monoidal_certificate(d: Decomposition, prop: PropInterface, field: Field, instance: Any) -> dict[str, Any]:
    return _certificate(
        MONOIDAL_DECOMPOSITION,
        field,
        width(d, prop),
        instance,
        prop=prop.name,
        decomposition=decomposition_to_json(d, prop),
    )


@beartype
def rankwidth_command(config: DictConfig) -> CommandOutput:
    """Exact rank width of a graph with a witness rank decomposition."""

    field = _field(config)
    graph = load_graph(_require(config, "input"), field)
    value, tree = rwd_exact(graph, _vertex_cap(config))
    certificate = _certificate(RANK_DECOMPOSITION, field, value, graph_to_json(graph), tree=tree_to_json(tree))
    payload = {"result": value, "certificate": certificate, "metadata": _metadata(config, vertices=graph.vertices)}
    return CommandOutput(payload, tree_to_dot(tree, graph))


@beartype
def rrwd_command(config: DictConfig) -> CommandOutput:
    """Exact recursive rank width of a graph with dangling edges."""

    graph = load_graph(_require(config, "input"), _field(config))
    value, decomposition = rrwd_exact(graph, _vertex_cap(config))
    metadata = _metadata(config, vertices=graph.vertices, ports=graph.ports)
    payload = {"result": value, "certificate": _recursive_certificate(decomposition), "metadata": metadata}
    return CommandOutput(payload, recursive_to_dot(decomposition))


@beartype
def mwd_matrix_command(config: DictConfig) -> CommandOutput:
    """Decomposition of a matrix through its ⊗-factors, bracketed by the largest factor rank."""

    field = _field(config)
    f = load_matrix(_require(config, "input"), field)
    prop = BialgProp(field)
    d = best_decomposition(f)
    ranks = [rank(factor) for factor in tensor_factorize(f)]
    lower = max(ranks, default=0)
    flagged = flagged_leaves(d)
    if flagged:
        log.warning(f"{len(flagged)} leaves hold scalars outside the natural numbers")
    result = {
        "width": width(d, prop),
        "factor_ranks": ranks,
        "lower": lower,
        "upper": lower + 1,
        "flagged_leaves": [path for path, _ in flagged],
    }
    certificate = _monoidal_certificate(d, prop, field, matrix_to_json(f))
    payload = {"result": result, "certificate": certificate, "metadata": _metadata(config, shape=list(f.shape))}
    return CommandOutput(payload, decomposition_to_dot(d, prop))


@beartype
def mwd_graph_command(config: DictConfig) -> CommandOutput:
    """Bounds on the monoidal width of a graph's state from its rank width."""

    field = _field(config)
    graph = load_graph(_require(config, "input"), field)
    bounds = mwd_graph_bounds(graph, _vertex_cap(config), int(config.translate.leaf_size))
    prop = GrphProp(field, int(config.caps.equality))
    result = {"lower": Field.RAT.encode(bounds.lower), "upper": bounds.upper, "rank_width": bounds.rank_width}
    instance = graph_to_json(graph.without_boundary())
    certificate = _monoidal_certificate(bounds.certificate, prop, field, instance)
    payload = {"result": result, "certificate": certificate, "metadata": _metadata(config, vertices=graph.vertices)}
    return CommandOutput(payload, decomposition_to_dot(bounds.certificate, prop))


def _as_recursive(certificate: dict[str, Any], field: Field, instance: Any, config: DictConfig) -> RecRankDec:
    kind = certificate["kind"]
    if kind == RANK_DECOMPOSITION:
        return to_recursive(tree_from_json(_entry(certificate, "tree")), _graph_instance(instance, field))
    if kind == RECURSIVE_DECOMPOSITION:
        return RecRankDec(_graph_instance(instance, field), _entry(certificate, "shape"))
    if kind == MONOIDAL_DECOMPOSITION:
        if certificate.get("prop") != "grph":
            raise CertificateError("Only decompositions of graphs with boundaries convert to rank decompositions")
        prop = GrphProp(field, int(config.caps.equality))
        d = decomposition_from_json(_entry(certificate, "decomposition"), prop)
        return monoidal_to_rank(d, _grph_instance(instance, field))
    raise CertificateError(f"Unknown certificate kind {kind!r}")


@beartype
def convert_command(config: DictConfig) -> CommandOutput:
    """Convert between rank decompositions, recursive rank decompositions and monoidal decompositions."""

    target = config.convert.to
    if target not in CONVERT_TARGETS:
        raise InputFormatError(f"Unknown conversion target {target!r}, expected one of {', '.join(CONVERT_TARGETS)}")
    certificate, field, instance = _load_certificate(config)
    decomposition = _as_recursive(certificate, field, instance, config)
    graph = decomposition.graph
    log.info(f"Converting a {certificate['kind']} certificate over {graph.vertices} vertices to {target}")

    if target == "recursive":
        converted, dot = _recursive_certificate(decomposition), recursive_to_dot(decomposition)
    elif target == "rank":
        tree = to_rank_dec(decomposition)
        value = rank_dec_width(graph, tree)
        converted = _certificate(RANK_DECOMPOSITION, field, value, graph_to_json(graph), tree=tree_to_json(tree))
        dot = tree_to_dot(tree, graph)
    else:
        prop = GrphProp(field, int(config.caps.equality))
        d = rank_to_monoidal(decomposition, int(config.translate.leaf_size))
        converted, dot = _monoidal_certificate(d, prop, field, graph_to_json(graph)), decomposition_to_dot(d, prop)

    metadata = _metadata(config, source=certificate["kind"], target=converted["kind"])
    return CommandOutput({"result": converted["width"], "certificate": converted, "metadata": metadata}, dot)


@beartype
def recompute_width(certificate: dict[str, Any], field: Field, instance: Any, equality_cap: int) -> int:
    """Check a certificate against its instance and recompute its width.

    Raises:
        CertificateError: The certificate is malformed or does not decompose the instance.

    Returns:
        int: Width of the certified decomposition.
    """

    kind = certificate["kind"]
    if kind == RANK_DECOMPOSITION:
        return rank_dec_width(_graph_instance(instance, field), tree_from_json(_entry(certificate, "tree")))
    if kind == RECURSIVE_DECOMPOSITION:
        return rec_width(RecRankDec(_graph_instance(instance, field), _entry(certificate, "shape")))
    if kind == MONOIDAL_DECOMPOSITION:
        prop = make_prop(_entry(certificate, "prop"), field, equality_cap)
        d = decomposition_from_json(_entry(certificate, "decomposition"), prop)
        if not validate(d, _monoidal_instance(prop, instance, field), prop):
            raise CertificateError("The decomposition does not evaluate to the instance")
        return width(d, prop)
    raise CertificateError(f"Unknown certificate kind {kind!r}")


@beartype
def verify_command(config: DictConfig) -> CommandOutput:
    """Exit 0 iff the certificate decomposes its instance and claims exactly the recomputed width."""

    certificate, field, instance = _load_certificate(config)
    claimed = certificate.get("width")
    recomputed, reason = None, None
    try:
        recomputed = recompute_width(certificate, field, instance, int(config.caps.equality))
    except CapExceededError:
        raise
    except MonowidthError as e:
        reason = f"{type(e).__name__}: {e}"
        log.warning(f"Certificate does not validate: {reason}")
    if recomputed is not None and claimed != recomputed:
        reason = f"Claimed width {claimed} but the decomposition has width {recomputed}"
        log.warning(reason)
    valid = reason is None
    result = {"valid": valid, "claimed": claimed, "width": recomputed, "reason": reason}
    metadata = _metadata(config, kind=certificate["kind"])
    return CommandOutput({"result": result, "certificate": None, "metadata": metadata}, exit_code=0 if valid else 2)


@beartype
def oracle_command(config: DictConfig) -> CommandOutput:
    """Tiny exhaustive searches: rank width by tree enumeration or monoidal width of a matrix."""

    field = _field(config)
    kind = config.oracle.kind
    if kind == "rank_width":
        graph = load_graph(_require(config, "input"), field)
        value = rwd_enumerate_oracle(graph, int(config.caps.oracle_vertices))
    elif kind == "monoidal_width":
        caps = {key: int(config.oracle[key]) for key in ("max_dim", "max_entry") if config.oracle.get(key) is not None}
        value = mwd_oracle(load_matrix(_require(config, "input"), field), int(config.oracle.width_budget), caps)
    else:
        raise InputFormatError(f"Unknown oracle {kind!r}, expected 'rank_width' or 'monoidal_width'")
    return CommandOutput({"result": value, "certificate": None, "metadata": _metadata(config, oracle=kind)})


@beartype
def random_command(config: DictConfig) -> CommandOutput:
    """A seeded random instance; ``family`` draws from a named graph family and ``build`` also emits the
    decomposition it was built from."""

    field = _field(config)
    settings = config.random
    rng = make_rng(int(config.seed))
    certificate = None
    match settings.kind:
        case "graph":
            graph = random_dangling_graph(
                rng,
                int(settings.vertices),
                int(settings.ports),
                field,
                float(settings.edge_probability),
                float(settings.boundary_probability),
            )
            result = graph_to_json(graph)
        case "matrix":
            f = random_matrix(rng, int(settings.rows), int(settings.cols), field, int(settings.max_entry))
            result = matrix_to_json(f)
        case "bounded":
            ports, vertices = int(settings.ports), int(settings.vertices)
            g = random_bounded_graph(rng, ports, ports, vertices, field, float(settings.edge_probability))
            result = bounded_to_json(g)
        case "family":
            if settings.family not in FAMILIES:
                raise InputFormatError(f"Unknown graph family {settings.family!r}, expected one of {sorted(FAMILIES)}")
            graph = FAMILIES[settings.family](int(settings.vertices), field)
            if int(settings.ports) > 0:
                graph = random_boundary(graph, int(settings.ports), rng, float(settings.boundary_probability))
            result = graph_to_json(graph)
        case "build":
            d, g = random_build(rng, int(settings.pieces), field)
            result = bounded_to_json(g)
            certificate = _monoidal_certificate(d, GrphProp(field, int(config.caps.equality)), field, result)
        case kind:
            raise InputFormatError(f"Unknown random instance kind {kind!r}")
    metadata = _metadata(config, kind=settings.kind)
    return CommandOutput({"result": result, "certificate": certificate, "metadata": metadata})


@beartype
def eval_command(config: DictConfig) -> CommandOutput:
    """Parse and evaluate a diagram expression; the expression itself is the certificate."""

    field = _field(config)
    expr = parse(_require(config, "expression"))
    prop = make_prop(config.prop, field, int(config.caps.equality))
    value = eval_expr(expr, prop.name, field)
    d = expr_to_decomposition(expr, prop.name, field)
    instance = bounded_to_json(value) if isinstance(value, BoundedGraph) else matrix_to_json(value)
    result = {"expression": to_text(expr), "dom": prop.dom(value), "cod": prop.cod(value), "value": instance}
    certificate = _monoidal_certificate(d, prop, field, instance)
    payload = {"result": result, "certificate": certificate, "metadata": _metadata(config, prop=prop.name)}
    return CommandOutput(payload, decomposition_to_dot(d, prop))


COMMANDS: dict[str, Callable[[DictConfig], CommandOutput]] = {
    "rankwidth": rankwidth_command,
    "rrwd": rrwd_command,
    "mwd-matrix": mwd_matrix_command,
    "mwd-graph": mwd_graph_command,
    "convert": convert_command,
    "verify": verify_command,
    "oracle": oracle_command,
    "random": random_command,
    "eval": eval_command,
}


def _encode(value: Any) -> Any:
    if isinstance(value, Fraction):
        return Field.RAT.encode(value)
    raise TypeError(f"Cannot encode {type(value).__name__} as JSON")


def _text_report(config: DictConfig, payload: dict[str, Any]) -> str:
    console = Console(file=io.StringIO(), record=True, width=120)
    table = Table(title=f"monowidth {config.command}")
    table.add_column("Quantity", style="cyan")
    table.add_column("Value")
    result = payload["result"]
    for key, value in (result.items() if isinstance(result, dict) else [("result", result)]):
        table.add_row(str(key), json.dumps(value, default=_encode))
    certificate = payload.get("certificate")
    if certificate is not None:
        table.add_row("certificate", f"{certificate['kind']} of width {certificate['width']}")
    for key, value in payload["metadata"].items():
        table.add_row(str(key), str(value), style="dim")
    console.print(table)
    return console.export_text()


@beartype
def render(output: CommandOutput, config: DictConfig) -> str:
    """Serialise a command output as ``json``, ``dot`` or a ``text`` table."""

    match config.format:
        case "json":
            return json.dumps(output.payload, sort_keys=True, indent=2, default=_encode) + "\n"
        case "dot":
            if output.dot is None:
                raise InputFormatError(f"Command {config.command!r} has no DOT rendering")
            return output.dot.to_string()
        case "text":
            return _text_report(config, output.payload)
    raise InputFormatError(f"Unknown output format {config.format!r}, expected 'json', 'dot' or 'text'")


@beartype
def write_output(text: str, config: DictConfig) -> None:
    if config.get("output"):
        path = Path(config.output)
        path.write_text(text)
        log.info(f"Wrote {config.command} output to {path.resolve()}")
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


@beartype
def run_command(config: DictConfig) -> int:
    """Run the configured command and write its output.

    Args:
        config (DictConfig): Hydra config object.

    Returns:
        int: Exit status; 0 on success, 1 on usage or input errors, 2 when verification fails, 3 on a cap refusal.
    """

    try:
        command = config.get("command")
        if command not in COMMANDS:
            raise InputFormatError(f"Unknown command {command!r}, expected one of {', '.join(COMMANDS)}")
        output = COMMANDS[command](config)
        write_output(render(output, config), config)
        return output.exit_code
    except MonowidthError as e:
        log.error(f"{type(e).__name__}: {e}")
        if config.get("error_json"):
            error = {"error": type(e).__name__, "message": str(e), "exit_code": e.exit_code}
            sys.stdout.write(json.dumps(error, sort_keys=True) + "\n")
        return e.exit_code
