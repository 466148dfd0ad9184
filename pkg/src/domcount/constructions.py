"""Extremal graph constructions and their closed-form set counts.

Two families do all the work:

* ``complete_graph(r)`` — domination number 1, with r minimum dominating sets.
* ``pair_extremal_graph(r)`` — domination number 2, attaining the maximum
  possible number of dominating (and total dominating) 2-sets at order r.
  For even r this is the cocktail party graph K_{2,...,2}; for odd r it is
  the complete multipartite graph with parts 3,2,...,2 plus one extra edge
  inside the size-3 part.

Graphs with any larger target domination number x are produced as disjoint
unions of these two kinds of components, with the domination numbers of the
components summing to x; minimum dominating sets then multiply across
components.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import InfeasibleOrderError
from .graphs import Graph, GraphBuilder, complete_graph, disjoint_union

KIND_COMPLETE = "complete"
KIND_PAIR = "pair"


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts occupy consecutive vertex indices."""
    if any(size < 1 for size in part_sizes):
        raise InfeasibleOrderError("every part must have at least one vertex")
    n = sum(part_sizes)
    builder = GraphBuilder(n)
    starts = []
    offset = 0
    for size in part_sizes:
        starts.append(offset)
        offset += size
    for a, size_a in enumerate(part_sizes):
        for b in range(a + 1, len(part_sizes)):
            for u in range(starts[a], starts[a] + size_a):
                for v in range(starts[b], starts[b] + part_sizes[b]):
                    builder.add_edge(u, v)
    return builder.build()


def cocktail_party(n: int) -> Graph:
    """K_{2,...,2} with n/2 parts {2i, 2i+1}: K_n minus a perfect matching."""
    if n < 4 or n % 2:
        raise InfeasibleOrderError(f"cocktail party graph needs even n >= 4, got {n}")
    return complete_multipartite([2] * (n // 2))


def pair_extremal_graph(r: int) -> Graph:
    """Order-r graph maximizing the number of (total) dominating 2-sets.

    Even r: the cocktail party graph.  Odd r: parts {0,1,2}, {3,4}, ...,
    {r-2, r-1} made complete multipartite, plus the single extra edge {0,1}.
    Orders below 4 are rejected (r=3 would leave vertex 2 isolated, with no
    total dominating set at all).
    """
    if r < 4:
        raise InfeasibleOrderError(f"pair-extremal graph needs r >= 4, got {r}")
    if r % 2 == 0:
        return cocktail_party(r)
    base = complete_multipartite([3] + [2] * ((r - 3) // 2))
    builder = GraphBuilder(r)
    for u, v in base.edges():
        builder.add_edge(u, v)
    builder.add_edge(0, 1)
    return builder.build()


def max_dominating_pairs(n: int) -> int:
    """Maximum number of dominating 2-sets over n-vertex graphs with
    domination number 2: C(n,2) for even n, C(n,2) - 1 for odd n."""
    if n < 4:
        raise InfeasibleOrderError(f"closed form needs n >= 4, got {n}")
    return comb(n, 2) if n % 2 == 0 else comb(n, 2) - 1


def max_total_dominating_pairs(n: int) -> int:
    """Maximum number of total dominating 2-sets over n-vertex graphs with
    total domination number 2: n(n-2)/2 for even n, (n(n-2)-3)/2 for odd n."""
    if n < 4:
        raise InfeasibleOrderError(f"closed form needs n >= 4, got {n}")
    if n % 2 == 0:
        return n * (n - 2) // 2
    return (n * (n - 2) - 3) // 2


def max_edges_gamma2(n: int) -> int:
    """Maximum edge count of an n-vertex graph with domination number >= 2:
    n(n-2)/2 for even n, (n(n-2)-1)/2 for odd n."""
    if n < 3:
        raise InfeasibleOrderError(f"edge bound needs n >= 3, got {n}")
    if n % 2 == 0:
        return n * (n - 2) // 2
    return (n * (n - 2) - 1) // 2


def component_count(kind: str, size: int) -> int:
    """Number of minimum dominating sets contributed by one component."""
    if kind == KIND_COMPLETE:
        if size < 1:
            raise InfeasibleOrderError("complete component needs size >= 1")
        return size
    if kind == KIND_PAIR:
        return max_dominating_pairs(size)
    raise ValueError(f"unknown component kind {kind!r}")


@dataclass(frozen=True)
class Component:
    """One component of a union construction: a complete graph (domination
    number 1, ``size`` minimum sets) or a pair-extremal graph (domination
    number 2, ``max_dominating_pairs(size)`` minimum sets)."""

    kind: str
    size: int

    def __post_init__(self):
        component_count(self.kind, self.size)  # validates kind and size
        if self.kind == KIND_PAIR and self.size < 4:
            raise InfeasibleOrderError("pair component needs size >= 4")

    @property
    def gamma(self) -> int:
        return 1 if self.kind == KIND_COMPLETE else 2

    @property
    def count(self) -> int:
        return component_count(self.kind, self.size)


@dataclass(frozen=True)
class PartitionPlan:
    """A multiset of components realizing total order n and domination
    number x; ``total_count`` is the product of per-component counts."""

    n: int
    x: int
    components: tuple[Component, ...]

    def __post_init__(self):
        if sum(c.size for c in self.components) != self.n:
            raise ValueError("component sizes must sum to n")
        if sum(c.gamma for c in self.components) != self.x:
            raise ValueError("component domination numbers must sum to x")

    @property
    def total_count(self) -> int:
        product = 1
        for c in self.components:
            product *= c.count
        return product

    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted(c.size for c in self.components))


def predicted_count(plan: PartitionPlan) -> int:
    """Product of component counts, using exact parity-aware values
    (C(r,2) - 1 for odd pair components, not the asymptotic C(r,2))."""
    return plan.total_count


def require_feasible(n: int, x: int) -> None:
    """Raise unless some union construction with domination number x fits
    on exactly n vertices (see :func:`component_plan` for the bounds)."""
    if x < 1:
        raise InfeasibleOrderError(f"target domination number must be >= 1, got {x}")
    if x == 1:
        minimum = 1
    elif x == 2:
        minimum = 4
    elif x % 2 == 0:
        minimum = 2 * x
    else:
        minimum = 2 * (x - 1) + 1
    if n < minimum:
        raise InfeasibleOrderError(
            f"no construction with domination number {x} on {n} vertices "
            f"(needs n >= {minimum})"
        )


def component_plan(n: int, x: int) -> PartitionPlan:
    """The prescribed allocation of n vertices to components summing to
    domination number x.

    x=1: one complete component.  x=2: one pair component.  Even x >= 4:
    x/2 pair components with sizes as equal as possible (extra vertices to
    lower-index components).  Odd x >= 3: one complete component of size
    floor(n/x) and (x-1)/2 pair components of base size 2*floor(n/x); the
    n mod x leftover vertices go to the pair components as evenly as
    possible, lower index first.
    """
    require_feasible(n, x)
    if x == 1:
        return PartitionPlan(n, x, (Component(KIND_COMPLETE, n),))
    if x == 2:
        return PartitionPlan(n, x, (Component(KIND_PAIR, n),))
    if x % 2 == 0:
        pairs = x // 2
        base, extra = divmod(n, pairs)
        sizes = [base + 1 if i < extra else base for i in range(pairs)]
        return PartitionPlan(n, x, tuple(Component(KIND_PAIR, s) for s in sizes))
    pairs = (x - 1) // 2
    base, leftover = divmod(n, x)
    each, extra = divmod(leftover, pairs)
    sizes = [2 * base + each + (1 if i < extra else 0) for i in range(pairs)]
    components = (Component(KIND_COMPLETE, base),) + tuple(
        Component(KIND_PAIR, s) for s in sizes
    )
    return PartitionPlan(n, x, components)


def graph_from_plan(plan: PartitionPlan) -> Graph:
    """Materialize a plan as the disjoint union of its components, in plan
    order (vertices of later components are offset by earlier sizes)."""
    graph: Graph | None = None
    for component in plan.components:
        if component.kind == KIND_COMPLETE:
            piece = complete_graph(component.size)
        else:
            piece = pair_extremal_graph(component.size)
        graph = piece if graph is None else disjoint_union(graph, piece)
    if graph is None:
        raise InfeasibleOrderError("plan has no components")
    return graph


def build_component_graph(n: int, x: int) -> tuple[Graph, PartitionPlan]:
    """Build the union construction for (n, x) and return it with its plan.

    The result has domination number exactly x and ``predicted_count(plan)``
    dominating x-sets.  The construction is intentionally disconnected for
    x >= 3; adding connector edges would change the counts.
    """
    plan = component_plan(n, x)
    return graph_from_plan(plan), plan
