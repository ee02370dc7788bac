"""k-limited packings in graphs: randomized construction, bounds and exact oracles."""
from .bounds import BoundReport, bound_report, exact_binomial, log_binomial
from .errors import CapacityError, InputError, ParseError, UndefinedParameterError
from .graph import Graph, VertexSet, generate, parse_graph, write_graph
from .packing import (
    PackingInstance,
    PackingResult,
    compute_p,
    exact_Lk,
    exact_ktuple_domination,
    extend_to_maximal,
    randomized_packing,
    verify_ktuple_dominating,
    verify_packing,
)

__all__ = [
    "BoundReport", "bound_report", "exact_binomial", "log_binomial",
    "CapacityError", "InputError", "ParseError", "UndefinedParameterError",
    "Graph", "VertexSet", "generate", "parse_graph", "write_graph",
    "PackingInstance", "PackingResult", "compute_p", "exact_Lk",
    "exact_ktuple_domination", "extend_to_maximal", "randomized_packing",
    "verify_ktuple_dominating", "verify_packing",
]
