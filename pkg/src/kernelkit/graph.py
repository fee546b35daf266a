"""Bitset-backed simple undirected graphs with stable vertex labels.

Vertices are ids ``0..n-1`` and adjacency is one Python-int bitmask per
vertex.  Every vertex carries a label from the original input; deleting
vertices compacts ids but never touches labels, so reduction traces can
always talk about vertices of the original instance.  Graphs are
immutable: every mutating operation returns a new graph.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("n", "rows", "labels", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)
        lab = tuple(range(n)) if labels is None else tuple(labels)
        if len(lab) != n or len(set(lab)) != n:
            raise ValueError("labels must be injective and cover every vertex")
        self.labels = lab
        self._index = None

    @classmethod
    def _make(cls, n: int, rows: tuple[int, ...], labels: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        g.labels = labels
        g._index = None
        return g

    # -- basic queries -------------------------------------------------

    @property
    def label_index(self) -> dict:
        idx = self._index
        if idx is None:
            idx = {lab: i for i, lab in enumerate(self.labels)}
            self._index = idx
        return idx

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def mask_of(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            self._check(v)
            mask |= 1 << v
        return mask

    def mask_of_labels(self, labels: Iterable[int]) -> int:
        idx = self.label_index
        mask = 0
        for lab in labels:
            mask |= 1 << idx[lab]
        return mask

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check(v)
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return tuple(bits(self.rows[v]))

    def closed_mask(self, v: int) -> int:
        self._check(v)
        return self.rows[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            above = self.rows[u] >> (u + 1) << (u + 1)
            out.extend((u, v) for v in bits(above))
        return out

    def edges_within(self, mask: int) -> list[tuple[int, int]]:
        out = []
        for u in bits(mask):
            above = self.rows[u] & mask
            above = above >> (u + 1) << (u + 1)
            out.extend((u, v) for v in bits(above))
        return out

    def edge_count_within(self, mask: int) -> int:
        return sum((self.rows[u] & mask).bit_count() for u in bits(mask)) // 2

    def label_pair(self, u: int, v: int) -> tuple[int, int]:
        a, b = self.labels[u], self.labels[v]
        return (a, b) if a < b else (b, a)

    # -- structural predicates ----------------------------------------

    def boundary_degree(self, vertices: Iterable[int]) -> int:
        """Number of edges with exactly one endpoint in ``vertices``."""
        mask = self.mask_of(vertices)
        return sum((self.rows[u] & ~mask).bit_count() for u in bits(mask))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        mask = self.mask_of(vertices)
        for v in bits(mask):
            if mask & ~self.rows[v] & ~(1 << v):
                return False
        return True

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = self.mask_of(vertices)
        for v in bits(mask):
            if self.rows[v] & mask:
                return False
        return True

    def is_simplicial(self, v: int) -> bool:
        """True iff the closed neighborhood of ``v`` is a clique."""
        self._check(v)
        nb = self.rows[v]
        for u in bits(nb):
            if nb & ~self.rows[u] & ~(1 << u):
                return False
        return True

    def is_universal(self, v: int) -> bool:
        self._check(v)
        return self.rows[v] == self.full_mask & ~(1 << v)

    def true_twins(self) -> list[tuple[int, int]]:
        """All pairs with identical closed neighborhoods."""
        closed = [self.rows[v] | (1 << v) for v in range(self.n)]
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if closed[u] == closed[v]
        ]

    def is_module(self, vertices: Iterable[int]) -> bool:
        """True iff every member sees the same vertex set outside."""
        mask = self.mask_of(vertices)
        outside = None
        for v in bits(mask):
            seen = self.rows[v] & ~mask
            if outside is None:
                outside = seen
            elif seen != outside:
                return False
        return True

    # -- derived graphs ------------------------------------------------

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.rows)
        for u, v in pairs:
            self._check(u)
            self._check(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph._make(self.n, tuple(rows), self.labels)

    def remove_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.rows)
        for u, v in pairs:
            self._check(u)
            self._check(v)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph._make(self.n, tuple(rows), self.labels)

    def add_edges_by_labels(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        idx = self.label_index
        return self.add_edges((idx[a], idx[b]) for a, b in pairs)

    def remove_edges_by_labels(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        idx = self.label_index
        return self.remove_edges((idx[a], idx[b]) for a, b in pairs)

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = self.mask_of(vertices)
        keep = [v for v in range(self.n) if not (drop >> v & 1)]
        rows = []
        for u in keep:
            row = 0
            for j, old in enumerate(keep):
                if self.rows[u] >> old & 1:
                    row |= 1 << j
            rows.append(row)
        labels = tuple(self.labels[v] for v in keep)
        return Graph._make(len(keep), tuple(rows), labels)

    def delete_labels(self, labels: Iterable[int]) -> "Graph":
        idx = self.label_index
        return self.delete_vertices(idx[lab] for lab in labels)

    def add_vertices(self, new_labels, adjacency) -> "Graph":
        """Append vertices; ``adjacency[i]`` lists neighbor labels (old or new)."""
        combined = self.labels + tuple(new_labels)
        if len(set(combined)) != len(combined):
            raise ValueError("new labels collide with existing ones")
        idx = {lab: i for i, lab in enumerate(combined)}
        rows = list(self.rows) + [0] * len(new_labels)
        for i, nbrs in enumerate(adjacency):
            w = self.n + i
            for lab in nbrs:
                u = idx[lab]
                if u == w:
                    raise ValueError("self-loop in added adjacency")
                rows[w] |= 1 << u
                rows[u] |= 1 << w
        return Graph._make(len(combined), tuple(rows), combined)

    def complement(self) -> "Graph":
        full = self.full_mask
        rows = tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows))
        return Graph._make(self.n, rows, self.labels)

    # -- dunder --------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.rows == other.rows
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows, self.labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
