"""Small undirected simple graphs and their JSON edge-list format.

``{"parts": [n1, n2], "edges": [[u, v], ...]}`` for a bipartite graph whose
left part is vertices ``0..n1-1``; a general graph may give ``"n"`` instead
of ``"parts"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np


class GraphFormatError(ValueError):
    """Malformed graph file or edge list."""


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    parts: tuple[int, int] | None = None
    name: str | None = field(default=None, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges, parts=None, name: str | None = None) -> SimpleGraph:
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) outside 0..{n - 1}")
            norm.add((min(u, v), max(u, v)))
        if parts is not None:
            parts = (int(parts[0]), int(parts[1]))
            if sum(parts) != n:
                raise GraphFormatError("part sizes do not add up to the vertex count")
            for u, v in norm:
                if (u < parts[0]) == (v < parts[0]):
                    raise GraphFormatError(f"edge ({u}, {v}) inside one part")
        return cls(n, tuple(sorted(norm)), parts, name)

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for a in adj:
            a.sort()
        return adj

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def is_regular(self, k: int | None = None) -> bool:
        d = set(self.degrees())
        return len(d) <= 1 and (k is None or d <= {k})

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def bipartition(self) -> tuple[list[int], list[int]] | None:
        """The two colour classes of a connected bipartite graph, or None."""
        colour = [-1] * self.n
        for start in range(self.n):
            if colour[start] >= 0:
                continue
            colour[start] = 0
            stack = [start]
            while stack:
                u = stack.pop()
                for v in self.adjacency[u]:
                    if colour[v] < 0:
                        colour[v] = 1 - colour[u]
                        stack.append(v)
                    elif colour[v] == colour[u]:
                        return None
        return [v for v in range(self.n) if colour[v] == 0], [v for v in range(self.n) if colour[v] == 1]

    def neighbour_array(self) -> np.ndarray:
        """n x maxdeg array of neighbours, padded with -1."""
        d = max(self.degrees(), default=0)
        out = np.full((self.n, d), -1, dtype=np.int64)
        for u, a in enumerate(self.adjacency):
            out[u, : len(a)] = a
        return out

    def is_automorphism(self, images) -> bool:
        es = self.edge_set
        for u, v in self.edges:
            a, b = images[u], images[v]
            if (min(a, b), max(a, b)) not in es:
                return False
        return True

    def disjoint_union(self, other: SimpleGraph) -> SimpleGraph:
        n = self.n
        edges = list(self.edges) + [(u + n, v + n) for u, v in other.edges]
        return SimpleGraph.from_edges(n + other.n, edges)

    def to_dict(self) -> dict:
        out: dict = {}
        if self.name:
            out["name"] = self.name
        if self.parts is not None:
            out["parts"] = list(self.parts)
        else:
            out["n"] = self.n
        out["edges"] = [list(e) for e in self.edges]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> SimpleGraph:
        try:
            parts = data.get("parts")
            n = sum(parts) if parts is not None else int(data["n"])
            return cls.from_edges(n, data["edges"], parts, data.get("name"))
        except (KeyError, TypeError) as exc:
            raise GraphFormatError(f"malformed graph description: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def loads(cls, text: str) -> SimpleGraph:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"not JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise GraphFormatError("graph file must hold a JSON object")
        return cls.from_dict(data)

    def to_dot(self) -> str:
        lines = ["graph G {"]
        for v in range(self.n):
            colour = "black"
            if self.parts is not None:
                colour = "red" if v < self.parts[0] else "blue"
            lines.append(f"  {v} [color={colour}];")
        for u, v in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)], (a, b), f"K{a},{b}")


def petersen_graph() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph.from_edges(10, outer + spokes + inner, name="Petersen")
