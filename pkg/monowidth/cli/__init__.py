from monowidth.cli.commands import COMMANDS, CommandOutput, recompute_width, render, run_command
from monowidth.cli.evaluate import PROPS, eval_expr, expr_to_decomposition, generator_value, make_prop
from monowidth.cli.expressions import DiagramExpr, Generator, Parallel, Sequential, parse, to_text
from monowidth.cli.instances import make_rng, random_bounded_graph, random_build, random_dangling_graph, random_matrix

__all__ = [
    "COMMANDS",
    "PROPS",
    "CommandOutput",
    "DiagramExpr",
    "Generator",
    "Parallel",
    "Sequential",
    "eval_expr",
    "expr_to_decomposition",
    "generator_value",
    "make_prop",
    "make_rng",
    "parse",
    "random_bounded_graph",
    "random_build",
    "random_dangling_graph",
    "random_matrix",
    "recompute_width",
    "render",
    "run_command",
    "to_text",
]
