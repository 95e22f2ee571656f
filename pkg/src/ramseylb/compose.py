"""Blow-up products of complete-graph colorings with disjoint palettes."""

from __future__ import annotations

from functools import reduce
from typing import Sequence

from .coloring import EdgeColoring
from .errors import ParameterError


def blowup_product(outer: EdgeColoring, inner: EdgeColoring) -> EdgeColoring:
    """Replace each vertex of ``outer`` by a copy of ``inner``.

    Vertex (a, b) maps to index a * inner.n + b (row-major).  Edges
    between different copies keep the outer color; edges inside one copy
    take the inner color shifted past the outer palette.  Outer-color
    clique sizes are preserved exactly, and so are inner-color ones.
    """
    n1, n2 = outer.n, inner.n
    shift = outer.num_colors
    n = n1 * n2
    rows = []
    for x in range(n - 1):
        a, b = divmod(x, n2)
        row = []
        for y in range(x + 1, n):
            a2, b2 = divmod(y, n2)
            row.append(outer.color(a, a2) if a != a2 else shift + inner.color(b, b2))
        rows.append(tuple(row))
    note = (
        f"blowup outer(n={n1} colors={outer.num_colors}) "
        f"inner(n={n2} colors={inner.num_colors})"
    )
    return EdgeColoring(n, outer.num_colors + inner.num_colors, tuple(rows), (note,))


def iterate_product(colorings: Sequence[EdgeColoring]) -> EdgeColoring:
    """Left fold of blowup_product over a non-empty sequence."""
    items = list(colorings)
    if not items:
        raise ParameterError("iterate_product needs at least one coloring")
    return reduce(blowup_product, items)
