"""Module with functions for 'levelgraph' subpackage."""

from __future__ import annotations

from ..errors import DuplicateNodeError, InactiveNodeError, InvalidConfigError, NodeRangeError
from ..knn_index import KnnIndex


class LevelGraph:
    """Mutual k-NN graph over active points that only grows.

    Components are kept in disjoint-set forest with union by size and path compression. Every root keeps
    list of members (smaller list is merged into larger one) and flag whether the component was already seen,
    flag of merged component is OR of the parts.

    Example:
        >>> graph = LevelGraph(5)
        >>> graph.n_components
        0
        >>> graph.add_node(3)
        >>> graph.component_members(3)
        [3]
        >>> graph.component_seen(3), graph.component_seen(3)
        (False, True)
    """

    def __init__(self, n: int) -> None:
        """Create empty graph for points 0 .. n - 1.

        Args:
            n (int): Capacity.
        """
        if n < 1:
            raise InvalidConfigError(f"Graph capacity must be at least 1, got {n}.")

        self.capacity = n
        self.active = [False] * n
        self.parent = list(range(n))
        self.size = [1] * n
        self.members: dict[int, list[int]] = {}
        self.seen: dict[int, bool] = {}
        self.n_active = 0

    def _check_range(self, i: int) -> None:
        if isinstance(i, bool) or not 0 <= i < self.capacity:
            raise NodeRangeError(f"Node {i!r} is out of range, graph has capacity {self.capacity}.")

    def _check_active(self, i: int) -> None:
        self._check_range(i)
        if not self.active[i]:
            raise InactiveNodeError(f"Node {i} is not in the graph yet.")

    def _find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]

        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]

        return root

    @property
    def n_components(self) -> int:
        """Number of connected components."""
        return len(self.members)

    def roots(self) -> list[int]:
        """Canonical representatives of all components, ascending."""
        return sorted(self.members)

    def is_active(self, i: int) -> bool:
        """Whether node was added."""
        self._check_range(i)
        return self.active[i]

    def add_node(self, i: int) -> None:
        """Activate point ``i`` as singleton unseen component.

        Raises:
            NodeRangeError: If ``i`` is not in ``[0, capacity)``.
            DuplicateNodeError: If node is already active.
        """
        self._check_range(i)
        if self.active[i]:
            raise DuplicateNodeError(f"Node {i} is already in the graph.")

        self.active[i] = True
        self.members[i] = [i]
        self.seen[i] = False
        self.n_active += 1

    def union(self, i: int, j: int) -> int:
        """Add edge between two active nodes and return root of the merged component."""
        self._check_active(i)
        self._check_active(j)

        root_i, root_j = self._find(i), self._find(j)
        if root_i == root_j:
            return root_i

        if self.size[root_i] < self.size[root_j]:
            root_i, root_j = root_j, root_i

        self.parent[root_j] = root_i
        self.size[root_i] += self.size[root_j]
        self.members[root_i].extend(self.members.pop(root_j))
        seen_j = self.seen.pop(root_j)
        self.seen[root_i] = self.seen[root_i] or seen_j

        return root_i

    def add_mutual_edges(self, i: int, index: KnnIndex) -> None:
        """Connect ``i`` with every active point it shares mutual k-NN edge with. Repeated call is harmless.

        Raises:
            InactiveNodeError: If ``i`` is not active.
        """
        self._check_active(i)
        for j in index.mutual_neighbors[i].tolist():
            if self.active[j]:
                self.union(i, j)

    def component_of(self, i: int) -> int:
        """Root of the component containing ``i``. Stable until next union."""
        self._check_active(i)
        return self._find(i)

    def component_members(self, i: int) -> list[int]:
        """Sorted members of the component containing ``i``."""
        return sorted(self.members[self.component_of(i)])

    def component_seen(self, i: int) -> bool:
        """Return whether component of ``i`` was seen and mark it as seen."""
        root = self.component_of(i)
        previous = self.seen[root]
        self.seen[root] = True
        return previous


def new_graph(n: int) -> LevelGraph:
    """Create empty graph with capacity ``n``."""
    return LevelGraph(n)
