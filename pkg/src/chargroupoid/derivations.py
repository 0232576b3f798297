"""Derivations of the rational group algebra and their 1-characters.

Conventions (fixed here and used everywhere):

* A derivation is stored by its coefficients ``coeff[h][g] = d^h_g``, the
  coefficient of ``g`` in ``d(h)``.  Applying ``d`` to ``u = sum lambda^h h``
  is the row-vector product ``lambda @ coeff``, so the matrix product
  ``C1 @ C2`` is "apply d1, then d2" and the bracket of two derivations is the
  matrix commutator ``C1 @ C2 - C2 @ C1``.
* The coefficient ``d^h_g`` is the value of the character on the 1-map
  ``(u, v) = (g, h)``.  This is the orientation under which the Leibniz rule
  turns into additivity under composition, one equation for one composable
  pair.  In the canonical ``(v, u)`` ordering of 1-maps this is the identity
  on coordinates.
* The inner derivation of ``a`` is ``x -> x a - a x``, the sign for which its
  character equals the point character ``chi^a``.
"""
from __future__ import annotations

import weakref
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .action import ActionGroupoid, Morphism
from .complex import (
    DEFAULT_MAX_ROWS,
    CharacterValidationError,
    SizeLimitError,
    coboundary_space,
    x1_space,
)
from .groups import GroupTable, centralizer
from .linalg import SparseMatrix, Subspace, complement_in, kernel_basis, quotient_dim

PAIR_ORIENTATION = "chi((u, v)) = d^v_u"
INNER_CONVENTION = "d_a(x) = x*a - a*x"


class DerivationError(ValueError):
    pass


# -- the group algebra ------------------------------------------------------------


class GroupAlgebraElement:
    """A finitely supported rational combination of group elements."""

    __slots__ = ("group", "coefficients")

    def __init__(self, group: GroupTable, coefficients: Mapping[int, object] = ()):
        self.group = group
        coeffs = {}
        for g, c in dict(coefficients).items():
            c = Fraction(c)
            if c:
                coeffs[g] = c
        self.coefficients: Dict[int, Fraction] = coeffs

    @classmethod
    def basis(cls, group: GroupTable, g: int) -> "GroupAlgebraElement":
        return cls(group, {g: 1})

    @classmethod
    def from_vector(cls, group: GroupTable, vec: Sequence[object]) -> "GroupAlgebraElement":
        return cls(group, dict(enumerate(vec)))

    def vector(self) -> Tuple[Fraction, ...]:
        return tuple(self.coefficients.get(g, Fraction(0)) for g in range(self.group.order))

    def __add__(self, other):
        out = dict(self.coefficients)
        for g, c in other.coefficients.items():
            out[g] = out.get(g, 0) + c
        return GroupAlgebraElement(self.group, out)

    def __neg__(self):
        return GroupAlgebraElement(self.group, {g: -c for g, c in self.coefficients.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            p = self.group.product
            out: Dict[int, Fraction] = {}
            for a, x in self.coefficients.items():
                for b, y in other.coefficients.items():
                    ab = p[a][b]
                    out[ab] = out.get(ab, 0) + x * y
            return GroupAlgebraElement(self.group, out)
        return GroupAlgebraElement(self.group, {g: c * other for g, c in self.coefficients.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.group is other.group and self.coefficients == other.coefficients

    def __repr__(self):
        if not self.coefficients:
            return "0"
        lab = self.group.labels
        return " + ".join(f"{c}*{lab[g]}" for g, c in sorted(self.coefficients.items()))


# -- derivation matrices -----------------------------------------------------------


def _leibniz_violation(group: GroupTable, coeff) -> Optional[Tuple[int, int, int]]:
    n = group.order
    p, inv = group.product, group.inverse
    for x in range(n):
        for y in range(n):
            row = coeff[p[x][y]]
            cx, cy = coeff[x], coeff[y]
            for g in range(n):
                if row[g] != cx[p[g][inv[y]]] + cy[p[inv[x]][g]]:
                    return x, y, g
    return None


class DerivationMatrix:
    """Coefficients ``coeff[h][g] = d^h_g`` of a derivation of Q[G]."""

    __slots__ = ("group", "coeff")

    def __init__(self, group: GroupTable, coeff: Sequence[Sequence[object]], validate: bool = True):
        n = group.order
        if len(coeff) != n or any(len(r) != n for r in coeff):
            raise DerivationError(f"coefficient matrix must be {n}x{n}")
        self.group = group
        self.coeff: Tuple[Tuple[Fraction, ...], ...] = tuple(tuple(Fraction(x) for x in r) for r in coeff)
        if validate:
            bad = _leibniz_violation(group, self.coeff)
            if bad is not None:
                lab = group.labels
                x, y, g = bad
                raise DerivationError(
                    f"Leibniz rule fails for d({lab[x]}*{lab[y]}) at coefficient of {lab[g]}"
                )

    @classmethod
    def zero(cls, group: GroupTable) -> "DerivationMatrix":
        n = group.order
        return cls(group, [[0] * n for _ in range(n)], validate=False)

    @classmethod
    def from_vector(cls, group: GroupTable, vec: Sequence[object], validate: bool = True) -> "DerivationMatrix":
        n = group.order
        return cls(group, [vec[h * n:(h + 1) * n] for h in range(n)], validate)

    def vector(self) -> Tuple[Fraction, ...]:
        return tuple(x for r in self.coeff for x in r)

    def apply(self, u: GroupAlgebraElement) -> GroupAlgebraElement:
        out: Dict[int, Fraction] = {}
        for h, lam in u.coefficients.items():
            for g, d in enumerate(self.coeff[h]):
                if d:
                    out[g] = out.get(g, 0) + d * lam
        return GroupAlgebraElement(self.group, out)

    def then(self, other: "DerivationMatrix") -> List[List[Fraction]]:
        """Coefficients of the linear map "apply self, then other" (not a derivation in general)."""
        n = self.group.order
        a, b = self.coeff, other.coeff
        out = []
        for h in range(n):
            row = [Fraction(0)] * n
            for k, x in enumerate(a[h]):
                if x:
                    bk = b[k]
                    for g in range(n):
                        if bk[g]:
                            row[g] += x * bk[g]
            out.append(row)
        return out

    def bracket(self, other: "DerivationMatrix") -> "DerivationMatrix":
        """The matrix commutator ``C1 @ C2 - C2 @ C1``."""
        ab = self.then(other)
        ba = other.then(self)
        n = self.group.order
        return DerivationMatrix(self.group, [[ab[h][g] - ba[h][g] for g in range(n)] for h in range(n)], validate=False)

    def __add__(self, other):
        return DerivationMatrix(self.group, [[x + y for x, y in zip(r, s)] for r, s in zip(self.coeff, other.coeff)], validate=False)

    def __sub__(self, other):
        return DerivationMatrix(self.group, [[x - y for x, y in zip(r, s)] for r, s in zip(self.coeff, other.coeff)], validate=False)

    def scale(self, c) -> "DerivationMatrix":
        c = Fraction(c)
        return DerivationMatrix(self.group, [[x * c for x in r] for r in self.coeff], validate=False)

    def is_leibniz(self) -> bool:
        return _leibniz_violation(self.group, self.coeff) is None

    def __eq__(self, other):
        if not isinstance(other, DerivationMatrix):
            return NotImplemented
        return self.group is other.group and self.coeff == other.coeff

    def __repr__(self):
        nz = sum(1 for r in self.coeff for x in r if x)
        return f"DerivationMatrix({self.group!r}, nnz={nz})"


_der_cache: "weakref.WeakKeyDictionary[GroupTable, Subspace]" = weakref.WeakKeyDictionary()


def leibniz_matrix(group: GroupTable, max_rows: int = DEFAULT_MAX_ROWS) -> SparseMatrix:
    """One row per ``(x, y, g)``: ``d^{xy}_g - d^x_{g y^-1} - d^y_{x^-1 g} = 0``."""
    n = group.order
    if n ** 3 > max_rows:
        raise SizeLimitError(f"Leibniz system needs {n ** 3} rows, cap is {max_rows}")
    p, inv = group.product, group.inverse
    rows = []
    for x in range(n):
        for y in range(n):
            xy = p[x][y]
            for g in range(n):
                r = {xy * n + g: 1}
                k = x * n + p[g][inv[y]]
                r[k] = r.get(k, 0) - 1
                k = y * n + p[inv[x]][g]
                r[k] = r.get(k, 0) - 1
                rows.append(r)
    return SparseMatrix.from_row_dicts(rows, n * n)


def derivation_space(group: GroupTable, max_rows: int = DEFAULT_MAX_ROWS) -> Subspace:
    """All derivations, as vectors of coefficients ``d^h_g`` at position ``h*n + g``."""
    space = _der_cache.get(group)
    if space is None:
        space = kernel_basis(leibniz_matrix(group, max_rows))
        _der_cache[group] = space
    return space


def derivation_basis(group: GroupTable) -> List[DerivationMatrix]:
    return [DerivationMatrix.from_vector(group, v, validate=False) for v in derivation_space(group).basis]


# -- characters on the action groupoid ----------------------------------------------


class CharacterOnGamma:
    """A vector of values on the 1-maps of the action groupoid, in canonical order."""

    __slots__ = ("groupoid", "values")

    def __init__(self, groupoid: ActionGroupoid, values: Sequence[object], validate: bool = True):
        n = groupoid.group.order
        if len(values) != n * n:
            raise CharacterValidationError(f"{len(values)} values for {n * n} 1-maps")
        self.groupoid = groupoid
        self.values: Tuple[Fraction, ...] = tuple(Fraction(x) for x in values)
        if validate and self.values not in x1_space(groupoid).space:
            raise CharacterValidationError("values are not additive under composition")

    def __call__(self, m: Morphism) -> Fraction:
        return self.values[self.groupoid.index(m)]

    def coefficient(self, h: int, g: int) -> Fraction:
        """The derivation coefficient ``d^h_g``: the value on the 1-map ``(g, h)``."""
        return self.values[self.groupoid.index(Morphism(g, h))]

    def __add__(self, other):
        return CharacterOnGamma(self.groupoid, [a + b for a, b in zip(self.values, other.values)], validate=False)

    def __sub__(self, other):
        return CharacterOnGamma(self.groupoid, [a - b for a, b in zip(self.values, other.values)], validate=False)

    def scale(self, c) -> "CharacterOnGamma":
        return CharacterOnGamma(self.groupoid, [x * c for x in self.values], validate=False)

    def is_zero(self) -> bool:
        return not any(self.values)

    def __eq__(self, other):
        if not isinstance(other, CharacterOnGamma):
            return NotImplemented
        return self.groupoid is other.groupoid and self.values == other.values

    def __repr__(self):
        return f"CharacterOnGamma(support={sum(1 for x in self.values if x)})"


def char_from_derivation(d: DerivationMatrix, groupoid: ActionGroupoid) -> CharacterOnGamma:
    if groupoid.group is not d.group:
        raise DerivationError("derivation and groupoid are over different groups")
    values = [d.coeff[m.v][m.u] for m in groupoid.morphisms]
    return CharacterOnGamma(groupoid, values, validate=False)


def derivation_from_char(c: CharacterOnGamma) -> DerivationMatrix:
    if c.values not in x1_space(c.groupoid).space:
        raise CharacterValidationError("not a 1-character")
    n = c.groupoid.group.order
    return DerivationMatrix(c.groupoid.group, [[c.coefficient(h, g) for g in range(n)] for h in range(n)], validate=False)


def is_locally_finite(c: CharacterOnGamma) -> bool:
    """Every ``v`` has finitely many ``u`` with ``chi((u, v)) != 0``.

    Always true over a finite group; the support count is still taken so the
    check stays meaningful.
    """
    n = c.groupoid.group.order
    support = [0] * n
    for m, x in zip(c.groupoid.morphisms, c.values):
        if x:
            support[m.v] += 1
    return all(s <= n for s in support)


# -- inner derivations and point characters --------------------------------------------


def inner_derivation(a: GroupAlgebraElement) -> DerivationMatrix:
    """``x -> x a - a x``."""
    g = a.group
    n = g.order
    p, inv = g.product, g.inverse
    coeff = a.coefficients
    rows = []
    for h in range(n):
        rows.append([coeff.get(p[inv[h]][x], 0) - coeff.get(p[x][inv[h]], 0) for x in range(n)])
    return DerivationMatrix(g, rows, validate=False)


def inner_derivation_of(group: GroupTable, a: int) -> DerivationMatrix:
    return inner_derivation(GroupAlgebraElement.basis(group, a))


def _commutator_derivation(a: GroupAlgebraElement, left: bool) -> DerivationMatrix:
    """``x -> a x - x a`` when ``left`` else ``x -> x a - a x``; used to settle the sign."""
    d = inner_derivation(a)
    return d.scale(-1) if left else d


def resolve_inner_sign(groupoid: ActionGroupoid, a: int) -> Dict[str, bool]:
    """Compare both commutator signs against the point character of ``a``.

    Returns which of ``[x, a]`` and ``[a, x]`` has character equal to
    ``chi^a`` on the 1-maps out of ``a``.
    """
    target = chi_point(groupoid, a)
    out_of_a = [groupoid.index(groupoid.morphism_from(a, v)) for v in range(groupoid.group.order)]
    into_a = [groupoid.index(groupoid.inverse_morphism(groupoid.morphism_from(a, v))) for v in range(groupoid.group.order)]
    coords = out_of_a + into_a
    result = {}
    for name, left in (("[x,a]", False), ("[a,x]", True)):
        ch = char_from_derivation(_commutator_derivation(GroupAlgebraElement.basis(groupoid.group, a), left), groupoid)
        result[name] = all(ch.values[k] == target.values[k] for k in coords)
    return result


def chi_point(groupoid: ActionGroupoid, a: int) -> CharacterOnGamma:
    """``+1`` on 1-maps ``a -> b`` and ``-1`` on ``b -> a`` for ``b != a``, else 0."""
    values = []
    for m in groupoid.morphisms:
        s, t = groupoid.source(m), groupoid.target(m)
        if s == a and t != a:
            values.append(1)
        elif t == a and s != a:
            values.append(-1)
        else:
            values.append(0)
    return CharacterOnGamma(groupoid, values, validate=False)


# -- the character bracket ---------------------------------------------------------------


def _sparse_rows(c: CharacterOnGamma) -> List[Dict[int, Fraction]]:
    n = c.groupoid.group.order
    rows = []
    for x in range(n):
        r = {}
        for y in range(n):
            v = c.coefficient(x, y)
            if v:
                r[y] = v
        rows.append(r)
    return rows


def bracket_characters(c1: CharacterOnGamma, c2: CharacterOnGamma, validate: bool = True) -> CharacterOnGamma:
    """``{c1, c2}(a, g) = sum_h c1(a, h) c2(h, g) - c2(a, h) c1(h, g)``.

    Pairs ``(x, y)`` here are derivation coefficients, i.e. the value on the
    1-map ``(y, x)``; see :meth:`CharacterOnGamma.coefficient`.
    """
    if c1.groupoid is not c2.groupoid:
        raise CharacterValidationError("characters live on different groupoids")
    gpd = c1.groupoid
    if validate:
        space = x1_space(gpd).space
        for c in (c1, c2):
            if c.values not in space:
                raise CharacterValidationError("bracket arguments must be 1-characters")
    n = gpd.group.order
    A = _sparse_rows(c1)
    B = _sparse_rows(c2)
    values = [Fraction(0)] * (n * n)
    for a in range(n):
        acc: Dict[int, Fraction] = {}
        for h, x in A[a].items():
            for g, y in B[h].items():
                acc[g] = acc.get(g, 0) + x * y
        for h, x in B[a].items():
            for g, y in A[h].items():
                acc[g] = acc.get(g, 0) - x * y
        for g, s in acc.items():
            values[gpd.index(Morphism(g, a))] = s
    return CharacterOnGamma(gpd, values, validate=False)


def point_bracket_table(groupoid: ActionGroupoid) -> List[dict]:
    """``{chi^a, chi^b}`` for every ordered pair, checked against ``chi^{ab} - chi^{ba}``."""
    g = groupoid.group
    lab = g.labels
    points = [chi_point(groupoid, a) for a in range(g.order)]
    table = []
    for a in range(g.order):
        for b in range(g.order):
            ab, ba = g.product[a][b], g.product[b][a]
            got = bracket_characters(points[a], points[b], validate=False)
            expected = points[ab] - points[ba]
            terms = [] if ab == ba else [[lab[ab], 1], [lab[ba], -1]]
            table.append({"a": lab[a], "b": lab[b], "terms": terms, "verified": got == expected})
    return table


# -- Lie structure: inner, weak inner, outer ---------------------------------------------


@dataclass(frozen=True)
class LieStructure:
    der_space: Subspace
    inner: Subspace
    weak_inner: Subspace


def loop_coordinates(groupoid: ActionGroupoid) -> List[int]:
    g = groupoid.group
    return sorted(groupoid.index(m) for a in range(g.order) for m in groupoid.loops(a))


def inner_space(group: GroupTable) -> Subspace:
    return Subspace.span([inner_derivation_of(group, a).vector() for a in range(group.order)], group.order ** 2)


def inner_map_kernel(group: GroupTable) -> Subspace:
    """Kernel of ``a -> d_a`` on Q[G], as a subspace of Q^|G|."""
    n = group.order
    cols = [inner_derivation_of(group, a).vector() for a in range(n)]
    m = SparseMatrix.from_row_dicts([{a: cols[a][i] for a in range(n) if cols[a][i]} for i in range(n * n)], n)
    return kernel_basis(m)


def weak_inner_space(group: GroupTable, groupoid: Optional[ActionGroupoid] = None) -> Subspace:
    """Derivations whose character vanishes on every loop."""
    groupoid = groupoid or ActionGroupoid(group)
    der = derivation_space(group)
    # derivation coordinate h*n + g is the 1-map (g, h), whose canonical index is the same number
    loops = loop_coordinates(groupoid)
    select = SparseMatrix.from_row_dicts([{k: 1} for k in loops], group.order ** 2)
    return der.within_kernel(select)


def lie_structure(group: GroupTable, groupoid: Optional[ActionGroupoid] = None) -> LieStructure:
    return LieStructure(derivation_space(group), inner_space(group), weak_inner_space(group, groupoid))


@dataclass
class IdealReport:
    pairs_checked: int
    brackets_in_weak_inner: bool
    loop_triples: int
    loop_identity: bool
    composition_identity: bool

    @property
    def verdict(self) -> bool:
        return self.brackets_in_weak_inner and self.loop_identity and self.composition_identity

    def to_dict(self):
        return {
            "pairs_checked": self.pairs_checked,
            "brackets_in_weak_inner": self.brackets_in_weak_inner,
            "loop_triples": self.loop_triples,
            "loop_identity": self.loop_identity,
            "composition_identity": self.composition_identity,
            "verdict": self.verdict,
        }


def loop_triples(group: GroupTable):
    """All ``(a, b, z)`` with ``z`` in the centralizer of ``b``."""
    for b in range(group.order):
        zs = centralizer(group, b)
        for a in range(group.order):
            for z in zs:
                yield a, b, z


def composition_identity_holds(groupoid: ActionGroupoid, a: int, b: int, z: int) -> bool:
    """``(a^-1 b z, z) o (b z, z a) == (b z, a z) o (b z a^-1, z)``, composability checked first."""
    g = groupoid.group
    p, inv = g.product, g.inverse
    bz = p[b][z]
    lhs = (Morphism(p[inv[a]][bz], z), Morphism(bz, p[z][a]))
    rhs = (Morphism(bz, p[a][z]), Morphism(p[bz][inv[a]], z))
    for phi, psi in (lhs, rhs):
        if groupoid.target(phi) != groupoid.source(psi):
            return False
    return groupoid.compose(*lhs) == groupoid.compose(*rhs)


def verify_ideal(group: GroupTable, groupoid: Optional[ActionGroupoid] = None) -> IdealReport:
    """Weak-inner derivations form an ideal, plus the two identities behind it.

    Checks ``[d0, d]`` and ``[d, d0]`` for every pair of basis vectors, that
    ``{chi_d, chi^a}`` vanishes on each loop ``(b z, z)``, and the groupoid
    identity that makes it vanish.
    """
    groupoid = groupoid or ActionGroupoid(group)
    der = derivation_basis(group)
    weak = weak_inner_space(group, groupoid)
    weak_basis = [DerivationMatrix.from_vector(group, v, validate=False) for v in weak.basis]
    pairs = 0
    in_ideal = True
    for d0 in weak_basis:
        for d in der:
            pairs += 1
            if d0.bracket(d).vector() not in weak or d.bracket(d0).vector() not in weak:
                in_ideal = False
    triples = list(loop_triples(group))
    loop_ok = True
    chars = [char_from_derivation(d, groupoid) for d in der]
    points = [chi_point(groupoid, a) for a in range(group.order)]
    for chi_d in chars:
        brackets = [bracket_characters(chi_d, pt, validate=False) for pt in points]
        for a, b, z in triples:
            if brackets[a](Morphism(group.product[b][z], z)):
                loop_ok = False
    comp_ok = all(composition_identity_holds(groupoid, a, b, z) for a, b, z in triples)
    return IdealReport(pairs, in_ideal, len(triples), loop_ok, comp_ok)


@dataclass
class QuotientDescription:
    dim: int
    representatives: Subspace
    character_dim: int
    character_representatives: Subspace

    def to_dict(self, emit_bases: bool = False):
        out = {"dim": self.dim, "character_dim": self.character_dim}
        if emit_bases:
            out["representatives"] = [[str(x) for x in v] for v in self.representatives.basis]
            out["character_representatives"] = [[str(x) for x in v] for v in self.character_representatives.basis]
        return out


def outer_quotient(group: GroupTable, groupoid: Optional[ActionGroupoid] = None) -> QuotientDescription:
    """Der / Der*_Inn and, computed separately, X1 / (trivial-on-loops characters)."""
    groupoid = groupoid or ActionGroupoid(group)
    der = derivation_space(group)
    weak = weak_inner_space(group, groupoid)
    x1 = x1_space(groupoid).space
    cob = coboundary_space(groupoid)
    return QuotientDescription(
        dim=quotient_dim(der, weak),
        representatives=complement_in(der, weak),
        character_dim=quotient_dim(x1, cob),
        character_representatives=complement_in(x1, cob),
    )


@dataclass
class IsomorphismReport:
    image_is_x1: bool
    weak_inner_to_coboundaries: bool
    dims_match: bool
    bracket_preserved: bool
    quotient_bracket_preserved: bool
    outer_dim: int

    @property
    def verdict(self) -> bool:
        return (self.image_is_x1 and self.weak_inner_to_coboundaries and self.dims_match
                and self.bracket_preserved and self.quotient_bracket_preserved)

    def to_dict(self):
        return {
            "image_is_x1": self.image_is_x1,
            "weak_inner_to_coboundaries": self.weak_inner_to_coboundaries,
            "dims_match": self.dims_match,
            "bracket_preserved": self.bracket_preserved,
            "quotient_bracket_preserved": self.quotient_bracket_preserved,
            "outer_dim": self.outer_dim,
            "verdict": self.verdict,
        }


def verify_quotient_isomorphism(group: GroupTable, groupoid: Optional[ActionGroupoid] = None) -> IsomorphismReport:
    """The character map descends to a bracket-preserving bijection Der*_Out -> X2^fin."""
    groupoid = groupoid or ActionGroupoid(group)
    n2 = group.order ** 2
    der = derivation_basis(group)
    weak = weak_inner_space(group, groupoid)
    x1 = x1_space(groupoid).space
    cob = coboundary_space(groupoid)

    def F(d: DerivationMatrix) -> Tuple[Fraction, ...]:
        return char_from_derivation(d, groupoid).values

    image = Subspace.span([F(d) for d in der], n2)
    weak_image = Subspace.span(
        [F(DerivationMatrix.from_vector(group, v, validate=False)) for v in weak.basis], n2
    )
    q = outer_quotient(group, groupoid)
    bracket_ok = all(
        F(d1.bracket(d2)) == bracket_characters(char_from_derivation(d1, groupoid),
                                                char_from_derivation(d2, groupoid), validate=False).values
        for d1 in der for d2 in der
    )
    reps = [DerivationMatrix.from_vector(group, v, validate=False) for v in q.representatives.basis]
    quotient_ok = True
    for r1 in reps:
        for r2 in reps:
            lhs = bracket_characters(char_from_derivation(r1, groupoid), char_from_derivation(r2, groupoid), validate=False)
            rhs = F(r1.bracket(r2))
            diff = tuple(x - y for x, y in zip(lhs.values, rhs))
            if diff not in cob:
                quotient_ok = False
    return IsomorphismReport(
        image_is_x1=image == x1,
        weak_inner_to_coboundaries=weak_image == cob,
        dims_match=q.dim == q.character_dim,
        bracket_preserved=bracket_ok,
        quotient_bracket_preserved=quotient_ok,
        outer_dim=q.dim,
    )
