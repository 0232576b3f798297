"""Character spaces X0, X1, X2, the boundary maps between them, and exactness.

A 0-character is any function on objects, a 1-character is additive under
composition of 1-maps, and a 2-character is additive under both vertical and
horizontal composition of 2-cells.

Level-2 coordinates.  In a groupoid with a unique 2-cell between parallel
1-maps, a 2-character is fixed by its values on the cells ``f => psi`` where
``f`` is the chosen representative of the hom-set of ``psi`` (the subgroupoid
F for action groupoids, the spanning-forest path for presentations) and
``psi`` is not itself chosen.  Those cells are the level-2 coordinates; the
boundary ``phi2`` sends a 1-character ``chi`` to ``chi(psi) - chi(f)``.

Everything is computed one connected component at a time and assembled as a
direct sum, because no composition crosses components.
"""
from __future__ import annotations

import random
import weakref
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from .action import ActionGroupoid
from .linalg import (
    SparseMatrix,
    Subspace,
    image_basis,
    kernel_basis,
    quotient_dim,
    subspace_equal,
)
from .presented import PresentedGroupoid, relation_matrix

DEFAULT_MAX_ROWS = 5_000_000

Source = Union[ActionGroupoid, PresentedGroupoid]


class SizeLimitError(ValueError):
    pass


class CharacterValidationError(ValueError):
    pass


@dataclass(frozen=True)
class CharacterSpace:
    level: int
    coordinates: Tuple[str, ...]
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim


@dataclass(frozen=True)
class BoundaryMap:
    from_level: int
    to_level: int
    matrix: SparseMatrix

    def __call__(self, vec: Sequence) -> Tuple[Fraction, ...]:
        return self.matrix.apply(vec)


@dataclass
class PositionCheck:
    position: str
    image_dim: int
    kernel_dim: int
    equal: bool

    def to_dict(self):
        return {
            "position": self.position,
            "image_dim": self.image_dim,
            "kernel_dim": self.kernel_dim,
            "equal": self.equal,
        }


@dataclass
class ComponentReport:
    component: int
    objects: Tuple[str, ...]
    dims: Tuple[int, int, int]
    positions: List[PositionCheck]
    coboundaries_are_characters: bool
    quotient_dim_x2: int

    @property
    def exact(self) -> bool:
        return (
            all(p.equal for p in self.positions)
            and self.coboundaries_are_characters
            and self.quotient_dim_x2 == self.dims[2]
        )

    def to_dict(self):
        return {
            "component": self.component,
            "objects": list(self.objects),
            "dims": list(self.dims),
            "positions": [p.to_dict() for p in self.positions],
            "coboundaries_are_characters": self.coboundaries_are_characters,
            "quotient_dim_x2": self.quotient_dim_x2,
            "exact": self.exact,
        }


@dataclass
class ExactnessReport:
    dims: Tuple[int, int, int]
    components: List[ComponentReport]
    x0_kernel_dim: int
    x0_image_dim: int
    verdict: bool = field(init=False)

    def __post_init__(self):
        self.verdict = all(c.exact for c in self.components)

    @property
    def x0_defect(self) -> int:
        """Dimension of ker(phi1) / im(phi0) for the whole groupoid; one less than the component count."""
        return self.x0_kernel_dim - self.x0_image_dim

    def to_dict(self):
        return {
            "dims": list(self.dims),
            "verdict": self.verdict,
            "components": [c.to_dict() for c in self.components],
            "full_groupoid": {
                "x0_image_dim": self.x0_image_dim,
                "x0_kernel_dim": self.x0_kernel_dim,
                "x0_defect": self.x0_defect,
            },
        }


# -- per-source adapters --------------------------------------------------------


class _Component:
    """Local coordinates of one connected component."""

    def __init__(self, objects: Sequence[int], level1: Sequence[int], level2: Sequence[int]):
        self.objects = tuple(objects)
        self.level1 = tuple(level1)
        self.level2 = tuple(level2)
        self.obj_pos = {o: i for i, o in enumerate(self.objects)}
        self.l1_pos = {m: i for i, m in enumerate(self.level1)}


class _Complex:
    """Source-independent cache of local matrices and spaces."""

    def __init__(self, source: Source):
        self.source = source
        self._x1: Dict[int, Subspace] = {}
        self._x2_solutions: Dict[int, Subspace] = {}

    # subclasses fill these in
    object_labels: Tuple[str, ...]
    level1_labels: Tuple[str, ...]
    level2_labels: Tuple[str, ...]
    components: Tuple[_Component, ...]

    def endpoints(self, k: int) -> Tuple[int, int]:
        raise NotImplementedError

    def phi2_row(self, k: int) -> Dict[int, int]:
        raise NotImplementedError

    def x1_rows(self, comp: _Component):
        raise NotImplementedError

    def row_count(self) -> int:
        raise NotImplementedError

    def check_size(self, max_rows: int) -> None:
        n = self.row_count()
        if n > max_rows:
            raise SizeLimitError(f"constraint system needs {n} rows, cap is {max_rows}")

    # local matrices
    def phi0(self, comp: _Component) -> SparseMatrix:
        return SparseMatrix.from_row_dicts([{0: 1} for _ in comp.objects], 1)

    def phi1(self, comp: _Component) -> SparseMatrix:
        rows = []
        for k in comp.level1:
            s, t = self.endpoints(k)
            r: Dict[int, int] = {}
            r[comp.obj_pos[t]] = r.get(comp.obj_pos[t], 0) + 1
            r[comp.obj_pos[s]] = r.get(comp.obj_pos[s], 0) - 1
            rows.append(r)
        return SparseMatrix.from_row_dicts(rows, len(comp.objects))

    def phi2(self, comp: _Component) -> SparseMatrix:
        rows = [{comp.l1_pos[j]: c for j, c in self.phi2_row(k).items()} for k in comp.level2]
        return SparseMatrix.from_row_dicts(rows, len(comp.level1))

    def x1(self, c: int) -> Subspace:
        if c not in self._x1:
            comp = self.components[c]
            m = SparseMatrix.from_row_dicts(list(self.x1_rows(comp)), len(comp.level1))
            self._x1[c] = kernel_basis(m)
        return self._x1[c]

    def x2(self, c: int) -> Subspace:
        return self.x1(c).image(self.phi2(self.components[c]))

    def x2_solutions(self, c: int) -> Subspace:
        """The 2-character space computed from its own defining constraints."""
        return self.x2(c)


class _ActionComplex(_Complex):
    def __init__(self, g: ActionGroupoid):
        super().__init__(g)
        self.g = g
        lab = g.group.labels
        self.object_labels = tuple(lab)
        self.level1_labels = tuple(g.describe(m) for m in g.morphisms)
        spanning = g.spanning_set
        comps = []
        for cid, objs in g.components():
            l1 = g.component_morphisms[cid]
            l2 = tuple(k for k in l1 if k not in spanning)
            comps.append(_Component(objs, l1, l2))
        self.components = tuple(comps)
        self.level2 = tuple(k for comp in comps for k in comp.level2)
        self.level2_labels = tuple(f"F=>{self.level1_labels[k]}" for k in self.level2)
        self._f_of = {}
        for k in self.level2:
            m = g.morphisms[k]
            f = g.spanning_representative(g.source(m), g.target(m))
            self._f_of[k] = g.index(f)

    def endpoints(self, k):
        m = self.g.morphisms[k]
        return self.g.source(m), self.g.target(m)

    def phi2_row(self, k):
        return {k: 1, self._f_of[k]: -1}

    def row_count(self):
        return self.g.group.order ** 3

    def composable_pairs(self, comp: _Component):
        g = self.g
        grp = g.group
        n = grp.order
        prod = grp.product
        inv = grp.inverse
        for a in comp.objects:
            for v1 in range(n):
                u1 = prod[v1][a]
                b = prod[u1][inv[v1]]
                phi = v1 * n + u1
                for v2 in range(n):
                    u2 = prod[v2][b]
                    psi = v2 * n + u2
                    comp_idx = prod[v2][v1] * n + prod[u2][v1]
                    yield phi, psi, comp_idx

    def x1_rows(self, comp):
        pos = comp.l1_pos
        for phi, psi, both in self.composable_pairs(comp):
            r = {pos[both]: 1}
            r[pos[phi]] = r.get(pos[phi], 0) - 1
            r[pos[psi]] = r.get(pos[psi], 0) - 1
            yield r

    def x2_solutions(self, c, samples: int = 2000, seed: int = 0):
        """Solve for 2-characters directly.

        Unknowns are the values ``c(psi)`` of the cells ``f => psi`` (zero on
        F itself).  Vertical additivity forces ``cell(phi => psi) = c(psi) -
        c(phi)``; horizontal additivity is imposed on every composite of
        F-rooted cells plus a seeded sample of general cell pairs.
        """
        if c in self._x2_solutions:
            return self._x2_solutions[c]
        g = self.g
        comp = self.components[c]
        pos = comp.l1_pos
        spanning = g.spanning_set
        rows: List[Dict[int, int]] = [{pos[k]: 1} for k in comp.level1 if k in spanning]

        def add(r, k, s):
            j = pos[k]
            r[j] = r.get(j, 0) + s

        pairs = list(self.composable_pairs(comp))
        for phi, psi, both in pairs:
            r: Dict[int, int] = {}
            add(r, both, 1)
            add(r, phi, -1)
            add(r, psi, -1)
            rows.append(r)
        rng = random.Random(seed)
        hom: Dict[Tuple[int, int], List[int]] = {}
        for k in comp.level1:
            hom.setdefault(self.endpoints(k), []).append(k)
        morph = g.morphisms
        for _ in range(min(samples, len(pairs))):
            psi1, psi2, both = pairs[rng.randrange(len(pairs))]
            phi1 = rng.choice(hom[self.endpoints(psi1)])
            phi2 = rng.choice(hom[self.endpoints(psi2)])
            other = g.index(g.compose(morph[phi1], morph[phi2]))
            r = {}
            add(r, both, 1)
            add(r, other, -1)
            add(r, psi1, -1)
            add(r, phi1, 1)
            add(r, psi2, -1)
            add(r, phi2, 1)
            rows.append({j: v for j, v in r.items() if v})
        sol = kernel_basis(SparseMatrix.from_row_dicts(rows, len(comp.level1)))
        keep = [pos[k] for k in comp.level2]
        projected = Subspace.span([[v[j] for j in keep] for v in sol.basis], len(keep))
        if projected.dim != sol.dim:
            raise AssertionError("2-character solutions do not vanish on F")
        self._x2_solutions[c] = projected
        return projected


class _PresentedComplex(_Complex):
    def __init__(self, g: PresentedGroupoid):
        super().__init__(g)
        self.g = g
        self.object_labels = g.objects
        self.level1_labels = tuple(e.name for e in g.edges)
        comps = []
        non_tree = set(g.non_tree_edges)
        for cid, objs in enumerate(g.components):
            l1 = g.component_edges[cid]
            comps.append(_Component(objs, l1, tuple(k for k in l1 if k in non_tree)))
        self.components = tuple(comps)
        self.level2 = tuple(k for comp in comps for k in comp.level2)
        self.level2_labels = tuple(f"tree=>{self.level1_labels[k]}" for k in self.level2)
        self._rel = relation_matrix(g)

    def endpoints(self, k):
        e = self.g.edges[k]
        return self.g.object_index[e.src], self.g.object_index[e.dst]

    def phi2_row(self, k):
        s, t = self.endpoints(k)
        r = {j: -c for j, c in self.g.tree_path(s, t).items()}
        r[k] = r.get(k, 0) + 1
        return r

    def row_count(self):
        return len(self.g.relations)

    def x1_rows(self, comp):
        for r in self._rel.row_dicts():
            if r and next(iter(r)) in comp.l1_pos:
                yield {comp.l1_pos[j]: v for j, v in r.items()}


_cache: "weakref.WeakKeyDictionary[Source, _Complex]" = weakref.WeakKeyDictionary()


def _complex(source: Source, max_rows: int = DEFAULT_MAX_ROWS) -> _Complex:
    cx = _cache.get(source)
    if cx is None:
        if isinstance(source, ActionGroupoid):
            cx = _ActionComplex(source)
        elif isinstance(source, PresentedGroupoid):
            cx = _PresentedComplex(source)
        else:
            raise TypeError(f"not a groupoid source: {source!r}")
        _cache[source] = cx
    cx.check_size(max_rows)
    return cx


def _embed(local: Subspace, coords: Sequence[int], ambient: int) -> List[List[Fraction]]:
    out = []
    for v in local.basis:
        w = [Fraction(0)] * ambient
        for j, x in zip(coords, v):
            w[j] = x
        out.append(w)
    return out


def _global(cx: _Complex, which: str, spaces: Sequence[Subspace]) -> Subspace:
    ambient = len(cx.level1_labels) if which == "l1" else len(cx.level2)
    vectors = []
    for comp, sub in zip(cx.components, spaces):
        coords = comp.level1 if which == "l1" else [cx.level2.index(k) for k in comp.level2]
        vectors.extend(_embed(sub, coords, ambient))
    return Subspace.span(vectors, ambient)


# -- public operations --------------------------------------------------------------


def component_count(source: Source) -> int:
    return len(_complex(source).components)


def x0_space(source: Source) -> CharacterSpace:
    cx = _complex(source)
    return CharacterSpace(0, cx.object_labels, Subspace.full(len(cx.object_labels)))


def x1_space(source: Source, max_rows: int = DEFAULT_MAX_ROWS) -> CharacterSpace:
    """All 1-characters, in the coordinates of the 1-maps (action) or edges (presentation)."""
    cx = _complex(source, max_rows)
    space = _global(cx, "l1", [cx.x1(c) for c in range(len(cx.components))])
    return CharacterSpace(1, cx.level1_labels, space)


def x2_space(source: Source, max_rows: int = DEFAULT_MAX_ROWS, check: bool = True) -> CharacterSpace:
    """2-characters as the image of phi2 on X1.

    For action groupoids ``check`` also solves the 2-character constraints
    independently and raises if the two spaces differ.  For presentations
    the image is X1 modulo the coboundaries, written in fundamental-cycle
    coordinates.
    """
    cx = _complex(source, max_rows)
    n = len(cx.components)
    images = [cx.x2(c) for c in range(n)]
    if check:
        for c in range(n):
            if images[c] != cx.x2_solutions(c):
                raise AssertionError(f"component {c}: image of phi2 differs from the 2-character space")
    return CharacterSpace(2, cx.level2_labels, _global(cx, "l2", images))


def boundary(level: int, source: Source) -> BoundaryMap:
    """phi0 (scalars -> X0), phi1 (X0 -> X1) or phi2 (X1 -> X2) as a global matrix."""
    cx = _complex(source)
    n0, n1, n2 = len(cx.object_labels), len(cx.level1_labels), len(cx.level2)
    if level == 0:
        return BoundaryMap(-1, 0, SparseMatrix.from_row_dicts([{0: 1} for _ in range(n0)], 1))
    if level == 1:
        rows = []
        for k in range(n1):
            s, t = cx.endpoints(k)
            r = {t: 1}
            r[s] = r.get(s, 0) - 1
            rows.append(r)
        return BoundaryMap(0, 1, SparseMatrix.from_row_dicts(rows, n0))
    if level == 2:
        return BoundaryMap(1, 2, SparseMatrix.from_row_dicts([cx.phi2_row(k) for k in cx.level2], n1))
    raise ValueError(f"no boundary map at level {level}")


def coboundary_space(source: Source) -> Subspace:
    """Image of phi1: the 1-characters that are trivial on loops."""
    return image_basis(boundary(1, source).matrix)


def is_trivial_on_loops(chi: Sequence, source: Source) -> bool:
    if isinstance(source, ActionGroupoid):
        for a in range(source.group.order):
            for m in source.loops(a):
                if chi[source.index(m)]:
                    return False
        return True
    return tuple(Fraction(x) for x in chi) in coboundary_space(source)


def _validate_character(source: Source, chi: Sequence) -> Tuple[Fraction, ...]:
    cx = _complex(source)
    if len(chi) != len(cx.level1_labels):
        raise CharacterValidationError(f"vector of length {len(chi)} for {len(cx.level1_labels)} coordinates")
    chi = tuple(Fraction(x) for x in chi)
    if chi not in x1_space(source).space:
        raise CharacterValidationError("vector is not a 1-character")
    return chi


def lift_two_character(source: Source, chi2: Sequence) -> Tuple[Fraction, ...]:
    """A 1-character mapping onto ``chi2`` under phi2, zero on the chosen representatives.

    Values: 0 on every chosen representative (F, or the spanning forest) and
    ``chi2(f => psi)`` on every other 1-map ``psi``.
    """
    cx = _complex(source)
    if len(chi2) != len(cx.level2):
        raise CharacterValidationError(f"vector of length {len(chi2)} for {len(cx.level2)} level-2 coordinates")
    out = [Fraction(0)] * len(cx.level1_labels)
    for k, x in zip(cx.level2, chi2):
        out[k] = Fraction(x)
    out = tuple(out)
    if out not in x1_space(source).space:
        raise CharacterValidationError("level-2 vector is not a 2-character: its lift is not additive")
    return out


def canonical_representative(source: Source, chi: Sequence) -> Tuple[Fraction, ...]:
    """The representative of ``chi`` modulo coboundaries that vanishes on the chosen representatives."""
    chi = _validate_character(source, chi)
    return lift_two_character(source, boundary(2, source)(chi))


def verify_exactness(source: Source, max_rows: int = DEFAULT_MAX_ROWS) -> ExactnessReport:
    """Check ``0 -> Q -> X0 -> X1 -> X2 -> 0`` on every connected component."""
    cx = _complex(source, max_rows)
    reports = []
    for c, comp in enumerate(cx.components):
        p0, p1, p2 = cx.phi0(comp), cx.phi1(comp), cx.phi2(comp)
        x1 = cx.x1(c)
        positions = []

        im_s = Subspace.zero(1)
        ker_0 = kernel_basis(p0)
        positions.append(PositionCheck("Q", im_s.dim, ker_0.dim, subspace_equal(im_s, ker_0)))

        im_0 = image_basis(p0)
        ker_1 = kernel_basis(p1)
        positions.append(PositionCheck("X0", im_0.dim, ker_1.dim, subspace_equal(im_0, ker_1)))

        im_1 = image_basis(p1)
        ker_2 = x1.within_kernel(p2)
        positions.append(PositionCheck("X1", im_1.dim, ker_2.dim, subspace_equal(im_1, ker_2)))

        im_2 = x1.image(p2)
        x2 = cx.x2_solutions(c)
        positions.append(PositionCheck("X2", im_2.dim, x2.dim, subspace_equal(im_2, x2)))

        cob_ok = x1.contains_subspace(im_1)
        qdim = quotient_dim(x1, im_1) if cob_ok else -1
        reports.append(ComponentReport(
            component=c,
            objects=tuple(cx.object_labels[o] for o in comp.objects),
            dims=(len(comp.objects), x1.dim, x2.dim),
            positions=positions,
            coboundaries_are_characters=cob_ok,
            quotient_dim_x2=qdim,
        ))
    dims = tuple(sum(r.dims[i] for r in reports) for i in range(3))
    phi1 = boundary(1, source).matrix
    phi0 = boundary(0, source).matrix
    return ExactnessReport(
        dims=dims,
        components=reports,
        x0_kernel_dim=kernel_basis(phi1).dim,
        x0_image_dim=image_basis(phi0).dim,
    )
