"""Finitely presented groupoids: a quiver of generators plus closed-path relations.

These supply the instances with nonzero 2-characters.  Everything is done at
the level of generators: a 1-character is a vector of edge values, and it
descends from the free groupoid exactly when every relation word sums to zero.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from .linalg import SparseMatrix


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    name: str
    src: str
    dst: str


@dataclass(frozen=True)
class Quiver:
    objects: Tuple[str, ...]
    edges: Tuple[Edge, ...]


RelationWord = Tuple[Tuple[str, int], ...]


@dataclass(frozen=True, eq=False)
class PresentedGroupoid:
    quiver: Quiver
    relations: Tuple[RelationWord, ...]

    @property
    def objects(self) -> Tuple[str, ...]:
        return self.quiver.objects

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self.quiver.edges

    @cached_property
    def object_index(self) -> Dict[str, int]:
        return {o: i for i, o in enumerate(self.quiver.objects)}

    @cached_property
    def edge_index(self) -> Dict[str, int]:
        return {e.name: i for i, e in enumerate(self.quiver.edges)}

    @cached_property
    def components(self) -> Tuple[Tuple[int, ...], ...]:
        """Object indices of each connected component of the underlying graph, by lowest object."""
        n = len(self.objects)
        adj: List[List[int]] = [[] for _ in range(n)]
        for e in self.edges:
            s, t = self.object_index[e.src], self.object_index[e.dst]
            adj[s].append(t)
            adj[t].append(s)
        comp = [-1] * n
        out = []
        for start in range(n):
            if comp[start] >= 0:
                continue
            cid = len(out)
            comp[start] = cid
            members = [start]
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if comp[y] < 0:
                        comp[y] = cid
                        members.append(y)
                        stack.append(y)
            out.append(tuple(sorted(members)))
        return tuple(out)

    def component_of_object(self, i: int) -> int:
        for cid, members in enumerate(self.components):
            if i in members:
                return cid
        raise IndexError(i)

    @cached_property
    def component_edges(self) -> Tuple[Tuple[int, ...], ...]:
        out: List[List[int]] = [[] for _ in self.components]
        for k, e in enumerate(self.edges):
            out[self.component_of_object(self.object_index[e.src])].append(k)
        return tuple(tuple(x) for x in out)

    @cached_property
    def _forest(self) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Dict[int, int], ...]]:
        """Spanning tree per component and the signed tree path from its root to each object."""
        oi = self.object_index
        trees = []
        paths: List[Dict[int, int]] = [dict() for _ in self.objects]
        for members in self.components:
            root = members[0]
            seen = {root}
            tree: List[int] = []
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for k, e in enumerate(self.edges):
                    s, t = oi[e.src], oi[e.dst]
                    if s == x and t not in seen:
                        nxt, sign = t, 1
                    elif t == x and s not in seen:
                        nxt, sign = s, -1
                    else:
                        continue
                    seen.add(nxt)
                    tree.append(k)
                    p = dict(paths[x])
                    p[k] = p.get(k, 0) + sign
                    paths[nxt] = p
                    queue.append(nxt)
            trees.append(tuple(sorted(tree)))
        return tuple(trees), tuple(paths)

    def spanning_forest(self) -> Tuple[Tuple[int, ...], ...]:
        """Edge indices of a spanning tree for each component.

        Breadth first from the lowest-indexed object; at each object the edges
        are scanned in declaration order, in either direction.
        """
        return self._forest[0]

    @cached_property
    def tree_edges(self) -> frozenset:
        return frozenset(k for t in self.spanning_forest() for k in t)

    @cached_property
    def non_tree_edges(self) -> Tuple[int, ...]:
        return tuple(k for k in range(len(self.edges)) if k not in self.tree_edges)

    def tree_path(self, a: int, b: int) -> Dict[int, int]:
        """Signed edge counts of the tree path from object ``a`` to object ``b``."""
        paths = self._forest[1]
        out = dict(paths[b])
        for k, c in paths[a].items():
            out[k] = out.get(k, 0) - c
        return {k: c for k, c in out.items() if c}

    def __repr__(self):
        return f"PresentedGroupoid({len(self.objects)} objects, {len(self.edges)} edges, {len(self.relations)} relations)"


def validate_presentation(quiver: Quiver, relations: Sequence[Sequence[Tuple[str, int]]]) -> PresentedGroupoid:
    objs = set()
    for o in quiver.objects:
        if o in objs:
            raise PresentationError(f"duplicate object {o!r}")
        objs.add(o)
    names = {}
    for e in quiver.edges:
        if e.name in names:
            raise PresentationError(f"duplicate edge {e.name!r}")
        for end in (e.src, e.dst):
            if end not in objs:
                raise PresentationError(f"edge {e.name!r} has dangling endpoint {end!r}")
        names[e.name] = e
    rels = []
    for r, word in enumerate(relations):
        word = tuple((str(name), int(exp)) for name, exp in word)
        here = start = None
        for pos, (name, exp) in enumerate(word):
            if name not in names:
                raise PresentationError(f"relation {r}, position {pos}: unknown edge {name!r}")
            if exp not in (1, -1):
                raise PresentationError(f"relation {r}, position {pos}: exponent must be +1 or -1")
            e = names[name]
            s, t = (e.src, e.dst) if exp == 1 else (e.dst, e.src)
            if here is None:
                start = s
            elif here != s:
                raise PresentationError(
                    f"relation {r}, position {pos}: {name}^{exp:+d} starts at {s!r} but the path is at {here!r} (not composable)"
                )
            here = t
        if word and here != start:
            raise PresentationError(f"relation {r} is not closed: starts at {start!r}, ends at {here!r}")
        rels.append(word)
    return PresentedGroupoid(quiver, tuple(rels))


def presentation_from_descriptor(desc: dict) -> PresentedGroupoid:
    """Parse ``{"objects": [...], "edges": [{"name", "src", "dst"}], "relations": [[["a", 1], ...]]}``."""
    if not isinstance(desc, dict):
        raise PresentationError("presentation descriptor must be a JSON object")
    try:
        objects = tuple(str(o) for o in desc["objects"])
        edges = tuple(Edge(str(e["name"]), str(e["src"]), str(e["dst"])) for e in desc.get("edges", []))
        relations = [[(str(n), int(x)) for n, x in word] for word in desc.get("relations", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise PresentationError(f"malformed presentation descriptor: {exc}") from None
    return validate_presentation(Quiver(objects, edges), relations)


def rose(petals: int) -> PresentedGroupoid:
    """One object with ``petals`` free loops."""
    edges = tuple(Edge(f"e{i}", "x", "x") for i in range(petals))
    return validate_presentation(Quiver(("x",), edges), [])


def parallel_pair() -> PresentedGroupoid:
    """Two objects joined by two free parallel edges."""
    return validate_presentation(Quiver(("x", "y"), (Edge("a", "x", "y"), Edge("b", "x", "y"))), [])


def relation_matrix(g: PresentedGroupoid) -> SparseMatrix:
    """Rows are relations, columns edges, entries signed exponent sums."""
    rows = []
    for word in g.relations:
        r: Dict[int, int] = {}
        for name, exp in word:
            k = g.edge_index[name]
            r[k] = r.get(k, 0) + exp
        rows.append(r)
    return SparseMatrix.from_row_dicts(rows, len(g.edges))
