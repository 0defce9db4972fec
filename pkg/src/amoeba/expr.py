"""Construction expressions such as ``union(path(4), plus_edge(copy(path(4)), 1, 4))``.

Vertex arguments are 1-based.  Parsing goes through ``ast`` in eval mode and
accepts only calls to the names in ``FUNCTIONS``, integer and string
literals, and lists.
"""

from __future__ import annotations

import ast
import warnings
from typing import Any, Callable

from . import constructions as C
from .graph import Graph, add_isolates, complement, graph_from_edge_list, union_all
from .graph6 import from_graph6


class ExpressionError(ValueError):
    pass


def _graph(x: Any, fn: str) -> Graph:
    if isinstance(x, C.RootedGraph):
        return x.graph
    if isinstance(x, Graph):
        return x
    raise ExpressionError(f"{fn}: expected a graph, got {type(x).__name__}")


def _int(x: Any, fn: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ExpressionError(f"{fn}: expected an integer, got {x!r}")
    return x


def _ints(x: Any, fn: str) -> list[int]:
    if not isinstance(x, list):
        raise ExpressionError(f"{fn}: expected a list of integers")
    return [_int(v, fn) - 1 for v in x]


def _rooted(x: Any, fn: str) -> C.RootedGraph:
    if isinstance(x, C.RootedGraph):
        return x
    raise ExpressionError(f"{fn}: expected a rooted graph (use rooted(G, r) or fib(i))")


def _edges(n, pairs):
    if not isinstance(pairs, list) or not all(isinstance(p, list) and len(p) == 2 for p in pairs):
        raise ExpressionError("edges: expected a list of [i, j] pairs")
    return graph_from_edge_list(_int(n, "edges"), [tuple(p) for p in pairs])


def _expand(g, roots, h):
    return C.expand(_graph(g, "expand"), _ints(roots, "expand"), _rooted(h, "expand")).graph


def _plus_minus(plus: bool):
    name = "union_plus" if plus else "union_minus"

    def f(g, part, i, j):
        fn = C.union_copy_plus_edge if plus else C.union_copy_minus_edge
        return fn(_graph(g, name), _ints(part, name), (_int(i, name) - 1, _int(j, name) - 1))
    return f


def _edge_op(plus: bool):
    name = "plus_edge" if plus else "minus_edge"

    def f(g, i, j):
        g = _graph(g, name)
        a, b = _int(i, name) - 1, _int(j, name) - 1
        if not (0 <= a < g.n and 0 <= b < g.n) or a == b:
            raise ExpressionError(f"{name}: bad pair ({i}, {j})")
        if g.has_edge(a, b) == plus:
            raise ExpressionError(f"{name}: ({i}, {j}) is {'already' if plus else 'not'} an edge")
        return g.add_edge(a, b) if plus else g.remove_edge(a, b)
    return f


def _unary_int(fn: Callable, name: str):
    return lambda k: fn(_int(k, name))


FUNCTIONS: dict[str, tuple[Callable, tuple[int, ...]]] = {}


def _reg(names: str, fn: Callable, arity: int | tuple[int, ...]) -> None:
    ar = (arity,) if isinstance(arity, int) else arity
    for name in names.split():
        FUNCTIONS[name] = (fn, ar)


_reg("path", _unary_int(C.path, "path"), 1)
_reg("cycle", _unary_int(C.cycle, "cycle"), 1)
_reg("tadpole", _unary_int(C.tadpole, "tadpole"), 1)
_reg("star", _unary_int(C.star, "star"), 1)
_reg("complete", _unary_int(C.complete, "complete"), 1)
_reg("empty", _unary_int(C.empty, "empty"), 1)
_reg("complete_minus_matching kmm",
     lambda n, t: C.complete_minus_matching(_int(n, "kmm"), _int(t, "kmm")), 2)
_reg("c5_plus", C.c5_plus, 0)
_reg("h h_graph", _unary_int(C.h_graph, "h"), 1)
_reg("g g_graph", _unary_int(C.g_graph, "g"), 1)
_reg("fib fib_tree fibonacci_tree", _unary_int(C.fibonacci_tree, "fib"), 1)
_reg("star_forest", _unary_int(C.star_forest, "star_forest"), 1)
_reg("edges", _edges, 2)
_reg("graph6", lambda s: from_graph6(s) if isinstance(s, str) else _graph(None, "graph6"), 1)
_reg("rooted", lambda g, r: C.RootedGraph(_graph(g, "rooted"), _int(r, "rooted") - 1), 2)
_reg("union", lambda *gs: union_all(_graph(g, "union") for g in gs), (1, -1))
_reg("complement", lambda g: complement(_graph(g, "complement")), 1)
_reg("isolates add_isolates", lambda g, t: add_isolates(_graph(g, "isolates"), _int(t, "isolates")), 2)
_reg("repeat", lambda g, t: C.repeat(_graph(g, "repeat"), _int(t, "repeat")), 2)
_reg("copy", lambda g: g, 1)
_reg("plus_edge", _edge_op(True), 3)
_reg("minus_edge", _edge_op(False), 3)
_reg("expand", _expand, 3)
_reg("union_plus union_copy_plus_edge", _plus_minus(True), 4)
_reg("union_minus union_copy_minus_edge", _plus_minus(False), 4)
_reg("embed embed_component", lambda g: C.embed_as_component(_graph(g, "embed")), 1)
_reg("with_deleted", lambda g, v: C.union_with_vertex_deleted(_graph(g, "with_deleted"),
                                                              _int(v, "with_deleted") - 1), 2)


def _eval(node: ast.AST) -> Any:
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, str)) \
            and not isinstance(node.value, bool):
        return node.value
    if isinstance(node, (ast.List, ast.Tuple)):
        return [_eval(e) for e in node.elts]
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        name = node.func.id
        if name not in FUNCTIONS:
            raise ExpressionError(f"unknown function {name!r}")
        if node.keywords:
            raise ExpressionError(f"{name}: keyword arguments are not supported")
        fn, arity = FUNCTIONS[name]
        k = len(node.args)
        ok = k >= arity[0] if arity[-1] == -1 else k in arity
        if not ok:
            want = f"at least {arity[0]}" if arity[-1] == -1 else str(arity[0])
            raise ExpressionError(f"{name} takes {want} argument(s), got {k}")
        args = [_eval(a) for a in node.args]
        try:
            return fn(*args)
        except ExpressionError:
            raise
        except ValueError as exc:
            raise ExpressionError(f"{name}: {exc}") from exc
    raise ExpressionError(f"unsupported syntax: {ast.dump(node)[:60]}")


def evaluate(text: str) -> Graph | C.RootedGraph:
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc.msg}") from exc
    with warnings.catch_warnings():
        warnings.simplefilter("default")
        return _eval(tree.body)


def parse_expression(text: str) -> Graph:
    """Evaluate an expression to a plain graph (roots are dropped)."""
    return _graph(evaluate(text), "expression")
