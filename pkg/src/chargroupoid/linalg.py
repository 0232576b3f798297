"""Exact sparse linear algebra over the rationals.

Every character space, kernel, image and quotient in the package is computed
here.  Scalars are :class:`fractions.Fraction`; nothing is ever rounded.

Elimination is fraction-free: rows are kept as primitive integer vectors and
the echelon form is maintained fully reduced as rows arrive, so the result is
the unique reduced row echelon form of the row space regardless of the order
in which rows are fed in.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

Rational = Fraction

Row = Dict[int, int]


class ContractError(ValueError):
    """A precondition of a linear-algebra operation was violated."""


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class SparseMatrix:
    """A rows x cols matrix with rational entries stored sparsely by row.

    ``entries`` is the canonical coordinate list: strictly sorted by
    ``(row, col)``, without explicit zeros.
    """

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: int, cols: int, entries: Iterable[Tuple[int, int, object]] = ()):
        if rows < 0 or cols < 0:
            raise ContractError(f"negative shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        data: List[Dict[int, Fraction]] = [dict() for _ in range(rows)]
        for i, j, value in entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise ContractError(f"entry ({i}, {j}) outside {rows}x{cols}")
            if j in data[i]:
                raise ContractError(f"duplicate entry ({i}, {j})")
            value = _as_fraction(value)
            if value:
                data[i][j] = value
        self._rows = data

    @classmethod
    def from_row_dicts(cls, rows: Sequence[Mapping[int, object]], cols: int) -> "SparseMatrix":
        """Build from one ``{col: value}`` mapping per row; repeated keys are impossible."""
        m = cls(0, cols)
        m.rows = len(rows)
        data = []
        for i, r in enumerate(rows):
            d = {}
            for j, value in r.items():
                if not 0 <= j < cols:
                    raise ContractError(f"entry ({i}, {j}) outside {len(rows)}x{cols}")
                value = _as_fraction(value)
                if value:
                    d[j] = value
            data.append(d)
        m._rows = data
        return m

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[object]], cols: Optional[int] = None) -> "SparseMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ContractError("ragged dense matrix")
        return cls.from_row_dicts([{j: v for j, v in enumerate(r) if v} for r in rows], cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    @property
    def entries(self) -> List[Tuple[int, int, Fraction]]:
        return [(i, j, r[j]) for i, r in enumerate(self._rows) for j in sorted(r)]

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def row(self, i: int) -> Dict[int, Fraction]:
        return dict(self._rows[i])

    def row_dicts(self) -> List[Dict[int, Fraction]]:
        return [dict(r) for r in self._rows]

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for i, r in enumerate(self._rows):
            for j, v in r.items():
                out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrix":
        cols: List[Dict[int, Fraction]] = [dict() for _ in range(self.cols)]
        for i, r in enumerate(self._rows):
            for j, v in r.items():
                cols[j][i] = v
        return SparseMatrix.from_row_dicts(cols, self.rows)

    def apply(self, x: Sequence[object]) -> Tuple[Fraction, ...]:
        """Matrix-vector product ``m @ x``."""
        if len(x) != self.cols:
            raise ContractError(f"vector of length {len(x)} for {self.rows}x{self.cols} matrix")
        return tuple(sum((v * x[j] for j, v in r.items()), Fraction(0)) for r in self._rows)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ContractError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for r in self._rows:
            acc: Dict[int, Fraction] = {}
            for k, a in r.items():
                for j, b in other._rows[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            out.append(acc)
        return SparseMatrix.from_row_dicts(out, other.cols)

    def select_rows(self, indices: Iterable[int]) -> "SparseMatrix":
        return SparseMatrix.from_row_dicts([self._rows[i] for i in indices], self.cols)

    def select_cols(self, indices: Sequence[int]) -> "SparseMatrix":
        where = {j: k for k, j in enumerate(indices)}
        out = [{where[j]: v for j, v in r.items() if j in where} for r in self._rows]
        return SparseMatrix.from_row_dicts(out, len(indices))

    def is_zero(self) -> bool:
        return not any(self._rows)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self._rows == other._rows

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


# -- fraction-free incremental elimination ----------------------------------


def _primitive(row: Row) -> Row:
    """Divide by the content and make the leading (lowest column) entry positive."""
    g = math.gcd(*row.values())
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {j: v // g for j, v in row.items()}
    return row


def _integer_row(values: Mapping[int, object]) -> Row:
    fr = {j: _as_fraction(v) for j, v in values.items() if v}
    if not fr:
        return {}
    den = math.lcm(*(v.denominator for v in fr.values()))
    return {j: int(v * den) for j, v in fr.items()}


class Echelon:
    """Fully reduced echelon form of a row space, grown one row at a time.

    Invariants: each stored row is a primitive integer vector whose lowest
    column is its pivot, and no pivot column occurs in any other stored row.
    Together these make the final normalized rows the RREF of the span.
    """

    def __init__(self, cols: int):
        self.cols = cols
        self.pivots: Dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, values: Mapping[int, object]) -> Row:
        """Return the integer row reduced against the current pivots (up to scale)."""
        row = _integer_row(values)
        pivots = self.pivots
        hits = [c for c in row if c in pivots]
        for c in hits:
            a = row.get(c)
            if not a:
                continue
            p = pivots[c]
            pc = p[c]
            if pc != 1:
                row = {j: v * pc for j, v in row.items()}
            for j, v in p.items():
                nv = row.get(j, 0) - a * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
        return row

    def add(self, values: Mapping[int, object]) -> bool:
        """Add a row; return True if it increased the rank."""
        row = self.reduce(values)
        if not row:
            return False
        row = _primitive(row)
        c0 = min(row)
        r0 = row[c0]
        for pc, q in self.pivots.items():
            b = q.get(c0)
            if b is None:
                continue
            if r0 != 1:
                q = {j: v * r0 for j, v in q.items()}
            for j, v in row.items():
                nv = q.get(j, 0) - b * v
                if nv:
                    q[j] = nv
                else:
                    q.pop(j, None)
            self.pivots[pc] = _primitive(q)
        self.pivots[c0] = row
        return True

    def rref_rows(self) -> List[Tuple[Fraction, ...]]:
        """Dense RREF rows, pivot columns ascending, pivots equal to 1."""
        out = []
        for c in sorted(self.pivots):
            q = self.pivots[c]
            lead = q[c]
            vec = [Fraction(0)] * self.cols
            for j, v in q.items():
                vec[j] = Fraction(v, lead)
            out.append(tuple(vec))
        return out


def _echelon_of(rows: Iterable[Mapping[int, object]], cols: int) -> Echelon:
    e = Echelon(cols)
    for r in rows:
        e.add(r)
    return e


# -- subspaces ----------------------------------------------------------------


class Subspace:
    """A linear subspace of Q^n held as its canonical RREF basis.

    Two subspaces are equal exactly when their bases are identical, so
    equality is a plain tuple comparison.
    """

    __slots__ = ("ambient_dim", "basis", "_pivots", "_sparse")

    def __init__(self, ambient_dim: int, basis: Sequence[Sequence[object]] = ()):
        basis = tuple(tuple(_as_fraction(x) for x in v) for v in basis)
        pivots = []
        for v in basis:
            if len(v) != ambient_dim:
                raise ContractError(f"basis vector of length {len(v)} in ambient dimension {ambient_dim}")
            nz = [j for j, x in enumerate(v) if x]
            if not nz:
                raise ContractError("zero vector in basis")
            if v[nz[0]] != 1:
                raise ContractError("pivot entry is not 1")
            pivots.append(nz[0])
        if any(a >= b for a, b in zip(pivots, pivots[1:])):
            raise ContractError("pivot columns not strictly increasing")
        for i, p in enumerate(pivots):
            for k, w in enumerate(basis):
                if k != i and w[p]:
                    raise ContractError(f"pivot column {p} not cleared in row {k}")
        self.ambient_dim = ambient_dim
        self.basis = basis
        self._pivots = tuple(pivots)
        self._sparse = None

    @classmethod
    def _trusted(cls, ambient_dim: int, basis: Sequence[Tuple[Fraction, ...]]) -> "Subspace":
        s = cls.__new__(cls)
        s.ambient_dim = ambient_dim
        s.basis = tuple(basis)
        s._pivots = tuple(next(j for j, x in enumerate(v) if x) for v in s.basis)
        s._sparse = None
        return s

    @classmethod
    def span(cls, vectors: Iterable[Sequence[object]], ambient_dim: int) -> "Subspace":
        rows = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise ContractError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
            rows.append({j: x for j, x in enumerate(v) if x})
        return cls._trusted(ambient_dim, _echelon_of(rows, ambient_dim).rref_rows())

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls._trusted(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls._trusted(
            ambient_dim,
            [tuple(Fraction(int(i == j)) for j in range(ambient_dim)) for i in range(ambient_dim)],
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return self._pivots

    def _nonzeros(self) -> Tuple[Tuple[Tuple[int, Fraction], ...], ...]:
        if self._sparse is None:
            self._sparse = tuple(tuple((j, x) for j, x in enumerate(b) if x) for b in self.basis)
        return self._sparse

    def reduce(self, v: Sequence[object]) -> Tuple[Fraction, ...]:
        """Canonical representative of ``v`` modulo this subspace (zero on every pivot)."""
        if len(v) != self.ambient_dim:
            raise ContractError("ambient dimension mismatch")
        out = [_as_fraction(x) for x in v]
        for p, nz in zip(self._pivots, self._nonzeros()):
            c = out[p]
            if c:
                for j, x in nz:
                    out[j] -= c * x
        return tuple(out)

    def coordinates(self, v: Sequence[object]) -> Optional[Tuple[Fraction, ...]]:
        """Coefficients of ``v`` in the basis, or None if ``v`` is not in the span."""
        if any(self.reduce(v)):
            return None
        return tuple(_as_fraction(v[p]) for p in self._pivots)

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        _check_same_ambient(self, other)
        return all(v in self for v in other.basis)

    def combine(self, coeffs: Sequence[object]) -> Tuple[Fraction, ...]:
        out = [Fraction(0)] * self.ambient_dim
        for c, nz in zip(coeffs, self._nonzeros()):
            if c:
                for j, x in nz:
                    out[j] += c * x
        return tuple(out)

    def sum(self, other: "Subspace") -> "Subspace":
        _check_same_ambient(self, other)
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def within_kernel(self, m: SparseMatrix) -> "Subspace":
        """The subspace of vectors in ``self`` annihilated by ``m``."""
        if m.cols != self.ambient_dim:
            raise ContractError("matrix columns do not match ambient dimension")
        images = [m.apply(b) for b in self.basis]
        # columns of the restricted map are the images of the basis vectors
        restricted = SparseMatrix.from_row_dicts(
            [{k: img[i] for k, img in enumerate(images) if img[i]} for i in range(m.rows)],
            self.dim,
        )
        coeffs = kernel_basis(restricted)
        return Subspace.span([self.combine(c) for c in coeffs.basis], self.ambient_dim)

    def intersection(self, other: "Subspace") -> "Subspace":
        _check_same_ambient(self, other)
        # vectors of ``other`` are exactly those killed by its annihilator
        ann = kernel_basis(SparseMatrix.from_dense(other.basis, self.ambient_dim))
        return self.within_kernel(SparseMatrix.from_dense(ann.basis, self.ambient_dim))

    def image(self, m: SparseMatrix) -> "Subspace":
        if m.cols != self.ambient_dim:
            raise ContractError("matrix columns do not match ambient dimension")
        return Subspace.span([m.apply(b) for b in self.basis], m.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def _check_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ContractError(f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")


# -- operations -----------------------------------------------------------------


def row_echelon(m: SparseMatrix) -> Echelon:
    return _echelon_of(m.row_dicts(), m.cols)


def rank(m: SparseMatrix) -> int:
    return row_echelon(m).rank


def kernel_basis(m: SparseMatrix) -> Subspace:
    """Solution space of ``m x = 0`` in canonical RREF basis."""
    e = row_echelon(m)
    n = m.cols
    free = [j for j in range(n) if j not in e.pivots]
    # pivot rows reference only free columns besides their own pivot
    by_free: Dict[int, List[Tuple[int, Fraction]]] = {f: [] for f in free}
    for p, q in e.pivots.items():
        lead = q[p]
        for j, v in q.items():
            if j != p:
                by_free[j].append((p, Fraction(-v, lead)))
    vectors = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for p, v in by_free[f]:
            vec[p] = v
        vectors.append(vec)
    return Subspace.span(vectors, n)


def image_basis(m: SparseMatrix) -> Subspace:
    """RREF basis of the column space; ambient dimension is ``m.rows``."""
    t = m.transpose()
    return Subspace._trusted(m.rows, row_echelon(t).rref_rows())


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    _check_same_ambient(a, b)
    return a.basis == b.basis


def quotient_dim(whole: Subspace, part: Subspace) -> int:
    _check_same_ambient(whole, part)
    for v in part.basis:
        if v not in whole:
            raise ContractError("part is not contained in whole")
    return whole.dim - part.dim


def complement_in(whole: Subspace, part: Subspace) -> Subspace:
    """Canonical complement of ``part`` inside ``whole``.

    Each basis vector of ``whole`` is reduced modulo ``part`` (cleared on the
    pivot columns of ``part``); the span of the results is a complement of
    ``part`` in ``whole`` and depends only on the two subspaces.
    """
    quotient_dim(whole, part)
    return Subspace.span([part.reduce(v) for v in whole.basis], whole.ambient_dim)


def solve(m: SparseMatrix, rhs: Sequence[object]) -> Optional[Tuple[Fraction, ...]]:
    """Some ``x`` with ``m x = rhs``, or None when the system is inconsistent.

    The solution returned has every free variable set to zero.
    """
    if len(rhs) != m.rows:
        raise ContractError(f"rhs of length {len(rhs)} for {m.rows} rows")
    n = m.cols
    rows = []
    for i, r in enumerate(m.row_dicts()):
        if rhs[i]:
            r[n] = rhs[i]
        rows.append(r)
    e = _echelon_of(rows, n + 1)
    if n in e.pivots:
        return None
    x = [Fraction(0)] * n
    for p, q in e.pivots.items():
        x[p] = Fraction(q.get(n, 0), q[p])
    return tuple(x)
