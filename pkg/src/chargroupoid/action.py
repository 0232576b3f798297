"""The action 2-groupoid of a finite group.

Objects are group elements.  A 1-map is a pair ``(u, v)`` with source
``v^-1 u`` and target ``u v^-1``; equivalently ``v`` conjugates the source
into the target and ``u = v * source``.  Between two parallel 1-maps there is
exactly one 2-cell, so 2-cells are just ordered pairs of parallel 1-maps and
are never stored as a set.

Composition is diagrammatic: for ``phi = (u1, v1): a -> b`` and
``psi = (u2, v2): b -> c``, ``compose(phi, psi) = (u2 v1, v2 v1): a -> c``.
"""
from __future__ import annotations

from functools import cached_property
from typing import Dict, List, NamedTuple, Optional, Tuple

from .groups import ConjugacyClassification, GroupTable, centralizer


class CompositionError(ValueError):
    pass


class Morphism(NamedTuple):
    u: int
    v: int


class TwoCell(NamedTuple):
    src: Morphism
    dst: Morphism


class ActionGroupoid:
    def __init__(self, group: GroupTable):
        self.group = group
        self.classes: ConjugacyClassification = group.conjugacy

    # -- 1-maps ---------------------------------------------------------------

    def source(self, m: Morphism) -> int:
        g = self.group
        return g.product[g.inverse[m.v]][m.u]

    def target(self, m: Morphism) -> int:
        g = self.group
        return g.product[m.u][g.inverse[m.v]]

    def compose(self, phi: Morphism, psi: Morphism) -> Morphism:
        if self.target(phi) != self.source(psi):
            raise CompositionError(
                f"cannot compose {self.describe(phi)} with {self.describe(psi)}: "
                f"target {self.group.labels[self.target(phi)]} != source {self.group.labels[self.source(psi)]}"
            )
        p = self.group.product
        return Morphism(p[psi.u][phi.v], p[psi.v][phi.v])

    def identity_at(self, a: int) -> Morphism:
        return Morphism(a, 0)

    def inverse_morphism(self, m: Morphism) -> Morphism:
        g = self.group
        vi = g.inverse[m.v]
        return Morphism(g.product[g.product[vi][m.u]][vi], vi)

    def morphism_from(self, a: int, v: int) -> Morphism:
        """The 1-map out of ``a`` whose conjugating element is ``v``."""
        return Morphism(self.group.product[v][a], v)

    def hom_set(self, a: int, b: int) -> List[Morphism]:
        g = self.group
        return [Morphism(g.product[v][a], v) for v in range(g.order) if g.conj(v, a) == b]

    def loops(self, a: int) -> List[Morphism]:
        return [self.morphism_from(a, z) for z in centralizer(self.group, a)]

    def components(self) -> List[Tuple[int, Tuple[int, ...]]]:
        return list(enumerate(self.classes.classes))

    def component_of(self, a: int) -> int:
        return self.classes.class_of[a]

    def describe(self, m: Morphism) -> str:
        lab = self.group.labels
        return f"({lab[m.u]}, {lab[m.v]})"

    # -- canonical coordinates --------------------------------------------------

    @cached_property
    def morphisms(self) -> Tuple[Morphism, ...]:
        """All 1-maps, ordered lexicographically by ``(v, u)``."""
        n = self.group.order
        return tuple(Morphism(u, v) for v in range(n) for u in range(n))

    def index(self, m: Morphism) -> int:
        return m.v * self.group.order + m.u

    @cached_property
    def component_morphisms(self) -> Tuple[Tuple[int, ...], ...]:
        """Morphism indices per component, ascending."""
        out: List[List[int]] = [[] for _ in self.classes.classes]
        cls = self.classes.class_of
        for k, m in enumerate(self.morphisms):
            out[cls[self.source(m)]].append(k)
        return tuple(tuple(x) for x in out)

    # -- the tree-like subgroupoid used to lift 2-characters ---------------------

    @cached_property
    def _base_paths(self) -> Dict[int, Morphism]:
        """For each object b, the 1-map from its class representative with the least ``v``."""
        g = self.group
        out: Dict[int, Morphism] = {}
        for rep in self.classes.representatives:
            for v in range(g.order):
                b = g.conj(v, rep)
                if b not in out:
                    out[b] = Morphism(g.product[v][rep], v)
        return out

    def spanning_representative(self, a: int, b: int) -> Morphism:
        """The chosen 1-map ``a -> b`` in the subgroupoid F: ``f_a^-1`` then ``f_b``.

        F holds one 1-map per hom-set, contains the identities and is closed
        under inverses and composition.
        """
        if self.component_of(a) != self.component_of(b):
            raise CompositionError(f"objects {a} and {b} lie in different components")
        fa = self._base_paths[a]
        fb = self._base_paths[b]
        return self.compose(self.inverse_morphism(fa), fb)

    @cached_property
    def spanning_set(self) -> frozenset:
        """Indices of the morphisms that belong to F."""
        return frozenset(
            self.index(self.spanning_representative(a, b))
            for cls in self.classes.classes
            for a in cls
            for b in cls
        )

    # -- 2-cells ----------------------------------------------------------------

    def parallel(self, phi: Morphism, psi: Morphism) -> bool:
        return self.source(phi) == self.source(psi) and self.target(phi) == self.target(psi)

    def two_cell(self, phi: Morphism, psi: Morphism) -> Optional[TwoCell]:
        return TwoCell(phi, psi) if self.parallel(phi, psi) else None

    def identity_cell(self, phi: Morphism) -> TwoCell:
        return TwoCell(phi, phi)

    def vcompose(self, alpha: TwoCell, beta: TwoCell) -> TwoCell:
        if alpha.dst != beta.src:
            raise CompositionError(
                f"vertical composition needs {self.describe(alpha.dst)} == {self.describe(beta.src)}"
            )
        return TwoCell(alpha.src, beta.dst)

    def hcompose(self, alpha: TwoCell, beta: TwoCell) -> TwoCell:
        return TwoCell(self.compose(alpha.src, beta.src), self.compose(alpha.dst, beta.dst))

    def __repr__(self):
        return f"ActionGroupoid({self.group!r})"
