"""Matching generating functions of dual graphs."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
import logging
from typing import TYPE_CHECKING

import networkx as nx

from .const import DEFAULT_BRUTE_VERTEX_CAP, ONE, ZERO
from .exceptions import InvalidCut, ResourceCapExceeded
from .lattice import ReducedRegion, Region, TriCell

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator

LOG = logging.getLogger(__name__)

Edge = tuple[TriCell, TriCell]


class Engine(str, Enum):
    """Class to represent the counting engines."""

    brute = "brute"
    dp = "dp"


class DualGraph:
    """Weighted bipartite graph with a vertex per triangle and an edge per lozenge."""

    def __init__(self, graph: nx.Graph) -> None:
        """Initialize a dual graph from a networkx graph with weighted edges."""

        self.graph = graph

    def __len__(self) -> int:
        """Return the number of vertices."""

        return self.graph.number_of_nodes()

    @property
    def up_vertices(self) -> list[TriCell]:
        """Return the vertices of up-pointing triangles."""

        return sorted(cell for cell in self.graph if cell.is_up)

    @property
    def down_vertices(self) -> list[TriCell]:
        """Return the vertices of down-pointing triangles."""

        return sorted(cell for cell in self.graph if not cell.is_up)

    def edges(self) -> Iterator[tuple[TriCell, TriCell, Fraction]]:
        """Yield (up, down, weight) for every edge."""

        for first, second, weight in self.graph.edges(data="weight"):
            up, down = (first, second) if first.is_up else (second, first)
            yield up, down, weight

    def components(self) -> list[DualGraph]:
        """Split the graph into its connected components."""

        return [
            DualGraph(self.graph.subgraph(nodes).copy())
            for nodes in nx.connected_components(self.graph)
        ]

    def indexed_adjacency(
        self,
        key: Callable[[TriCell], tuple[int, int]],
    ) -> list[list[tuple[int, Fraction | int]]]:
        """Index vertices in key order and list each vertex's weighted neighbors."""

        order = sorted(self.graph, key=key)
        index = {cell: position for position, cell in enumerate(order)}
        adjacency: list[list[tuple[int, Fraction | int]]] = []
        for cell in order:
            adjacency.append(
                sorted(
                    (index[nbr], _compact(data["weight"]))
                    for nbr, data in self.graph[cell].items()
                ),
            )
        return adjacency


def _compact(weight: Fraction) -> Fraction | int:
    """Use plain ints for integral weights."""

    return weight.numerator if weight.denominator == 1 else weight


def _row_major(cell: TriCell) -> tuple[int, int]:
    return (cell.row, cell.col)


def _column_major(cell: TriCell) -> tuple[int, int]:
    return (cell.col, cell.row)


def dual_graph(region: Region) -> DualGraph:
    """Return the dual graph of a region."""

    graph = nx.Graph()
    graph.add_nodes_from(sorted(region.cells))
    for cell in region.up_cells:
        for nbr in region.neighbors_in(cell):
            graph.add_edge(cell, nbr, weight=region.weight(cell, nbr))
    return graph_from_networkx(graph)


def graph_from_networkx(graph: nx.Graph) -> DualGraph:
    """Wrap a networkx graph, defaulting missing edge weights to 1."""

    for _, _, data in graph.edges(data=True):
        data["weight"] = Fraction(data.get("weight", ONE))
    return DualGraph(graph)


def _check_cap(graph: DualGraph, cap: int | None) -> None:
    if cap is not None and len(graph) > cap:
        msg = f"Graph has {len(graph)} vertices, above the brute-force cap of {cap}"
        raise ResourceCapExceeded(msg)


def _is_balanced(graph: DualGraph) -> bool:
    return len(graph.up_vertices) == len(graph.down_vertices)


def count_brute(graph: DualGraph, cap: int | None = DEFAULT_BRUTE_VERTEX_CAP) -> Fraction:
    """Sum the weights of all perfect matchings by exhaustive recursion.

    The lowest uncovered vertex in row-major order is matched to each of its
    uncovered neighbors in turn.
    """

    _check_cap(graph, cap)
    if not _is_balanced(graph):
        return ZERO

    adjacency = graph.indexed_adjacency(_row_major)
    size = len(adjacency)

    def recurse(covered: int, start: int) -> Fraction | int:
        while start < size and covered >> start & 1:
            start += 1
        if start == size:
            return 1

        total: Fraction | int = 0
        for nbr, weight in adjacency[start]:
            if not covered >> nbr & 1:
                total += weight * recurse(covered | 1 << start | 1 << nbr, start + 1)
        return total

    return Fraction(recurse(0, 0))


def first_matching(
    graph: DualGraph,
    cap: int | None = DEFAULT_BRUTE_VERTEX_CAP,
) -> list[Edge] | None:
    """Return the first perfect matching in brute-force branch order, if any."""

    _check_cap(graph, cap)
    if not _is_balanced(graph):
        return None

    order = sorted(graph.graph, key=_row_major)
    adjacency = graph.indexed_adjacency(_row_major)
    size = len(adjacency)

    def recurse(covered: int, start: int) -> list[tuple[int, int]] | None:
        while start < size and covered >> start & 1:
            start += 1
        if start == size:
            return []

        for nbr, _ in adjacency[start]:
            if covered >> nbr & 1:
                continue
            if (rest := recurse(covered | 1 << start | 1 << nbr, start + 1)) is not None:
                return [(start, nbr), *rest]
        return None

    if (pairs := recurse(0, 0)) is None:
        return None
    return [(order[first], order[second]) for first, second in pairs]


def count_dp(graph: DualGraph) -> Fraction:
    """Sum the weights of all perfect matchings by a column sweep.

    Vertices are visited column by column. The state is the set of
    not-yet-visited vertices already covered by a lozenge reaching across the
    sweep line, each state carrying the weighted number of partial matchings.
    """

    adjacency = graph.indexed_adjacency(_column_major)
    states: dict[int, Fraction | int] = {0: 1}
    widest = 1

    for position, neighbors in enumerate(adjacency):
        bit = 1 << position
        ahead = [(1 << nbr, weight) for nbr, weight in neighbors if nbr > position]
        following: defaultdict[int, Fraction | int] = defaultdict(int)

        for covered, total in states.items():
            if covered & bit:
                following[covered ^ bit] += total
                continue
            for nbr_bit, weight in ahead:
                if not covered & nbr_bit:
                    following[covered | nbr_bit] += total * weight

        if not (states := following):
            return ZERO
        widest = max(widest, len(states))

    LOG.debug("Column sweep over %d vertices kept at most %d states", len(adjacency), widest)
    return Fraction(states.get(0, 0))


def count_graph(
    graph: DualGraph,
    engine: Engine = Engine.dp,
    cap: int | None = DEFAULT_BRUTE_VERTEX_CAP,
) -> Fraction:
    """Count a dual graph with the requested engine."""

    if Engine(engine) is Engine.brute:
        return count_brute(graph, cap)
    return count_dp(graph)


def count(
    region: Region | ReducedRegion,
    engine: Engine = Engine.dp,
    cap: int | None = DEFAULT_BRUTE_VERTEX_CAP,
) -> Fraction:
    """Return M of a region, applying the prefactor of a reduced region."""

    if isinstance(region, ReducedRegion):
        if region.is_zero:
            return ZERO
        return region.prefactor * count_graph(dual_graph(region.region), engine, cap)
    return count_graph(dual_graph(region), engine, cap)


@dataclass
class SplitOutcome:
    """Class to represent the counts compared by a split check."""

    whole: Fraction
    part: Fraction
    rest: Fraction
    zero_case: bool

    @property
    def passed(self) -> bool:
        """Return whether M(G) = M(H) M(G - H), and M(G) = 0 in the zero case."""

        if self.zero_case and self.whole != ZERO:
            return False
        return self.whole == self.part * self.rest


def split_counts(
    region: Region,
    cut: Callable[[TriCell], bool],
    engine: Engine = Engine.dp,
    cap: int | None = DEFAULT_BRUTE_VERTEX_CAP,
) -> SplitOutcome:
    """Count a region and the two sides of a cut.

    The cut selects H. One class of vertices of H (up or down) must have no
    neighbor outside H and must be at least as numerous in H as the other.
    """

    part = frozenset(cell for cell in region.cells if cut(cell))
    classes = {
        True: sorted(cell for cell in part if cell.is_up),
        False: sorted(cell for cell in part if not cell.is_up),
    }

    offending: dict[bool, Edge] = {}
    for is_up, cells in classes.items():
        if edge := next(
            ((cell, nbr) for cell in cells for nbr in region.neighbors_in(cell) if nbr not in part),
            None,
        ):
            offending[is_up] = edge

    separated = [
        is_up
        for is_up in classes
        if is_up not in offending and len(classes[is_up]) >= len(classes[not is_up])
    ]
    if not separated:
        if len(offending) == len(classes):
            first, second = offending[True]
            msg = f"Cut edge {first}-{second} leaves the separated side"
        else:
            first, second = next(iter(offending.values()))
            msg = (
                f"Cut edge {first}-{second} leaves the separated side and the"
                " other vertex class is outnumbered inside the cut"
            )
        raise InvalidCut(msg)

    is_up = separated[0]
    zero_case = len(classes[is_up]) > len(classes[not is_up])
    outcome = SplitOutcome(
        whole=count(region, engine, cap),
        part=count(region.restrict(part), engine, cap),
        rest=count(region.without(part), engine, cap),
        zero_case=zero_case,
    )
    LOG.debug("Split check %s (zero case: %s)", outcome, zero_case)
    return outcome


def split_check(
    region: Region,
    cut: Callable[[TriCell], bool],
    engine: Engine = Engine.dp,
    cap: int | None = DEFAULT_BRUTE_VERTEX_CAP,
) -> bool:
    """Verify M(G) = M(H) M(G - H) for a cut satisfying the separating condition."""

    return split_counts(region, cut, engine, cap).passed
