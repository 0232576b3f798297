"""Finite groups as indexed Cayley tables.

Elements are dense integer indices and index 0 is always the identity.  The
Cayley table is the only source of truth; labels are for display.

Permutations compose right to left: ``(s * t)(x) = s(t(x))``.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

DEFAULT_MAX_ORDER = 10000


class GroupValidationError(ValueError):
    pass


class GroupSizeError(ValueError):
    pass


@dataclass(frozen=True)
class ConjugacyClassification:
    class_of: Tuple[int, ...]
    classes: Tuple[Tuple[int, ...], ...]
    representatives: Tuple[int, ...]

    def __len__(self):
        return len(self.classes)


@dataclass(frozen=True, eq=False)
class GroupTable:
    order: int
    product: Tuple[Tuple[int, ...], ...]
    inverse: Tuple[int, ...]
    labels: Tuple[str, ...]
    name: str = ""

    identity = 0

    def mul(self, a: int, b: int) -> int:
        return self.product[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, v: int, a: int) -> int:
        """``v a v^-1``."""
        return self.product[self.product[v][a]][self.inverse[v]]

    def element(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def is_abelian(self) -> bool:
        p = self.product
        return all(p[a][b] == p[b][a] for a in range(self.order) for b in range(a))

    @cached_property
    def conjugacy(self) -> ConjugacyClassification:
        return conjugacy_classes(self)

    def __repr__(self):
        return f"GroupTable({self.name or 'order ' + str(self.order)})"


def _build(product, labels, name="") -> GroupTable:
    n = len(product)
    inverse = [0] * n
    for a in range(n):
        row = product[a]
        for b in range(n):
            if row[b] == 0:
                inverse[a] = b
                break
    return GroupTable(
        order=n,
        product=tuple(tuple(r) for r in product),
        inverse=tuple(inverse),
        labels=tuple(labels),
        name=name,
    )


def from_cayley_table(table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None,
                      name: str = "") -> GroupTable:
    """Validate a Cayley table and return the group with its identity moved to index 0.

    Raises :class:`GroupValidationError` naming the first failing row,
    column or triple.
    """
    n = len(table)
    if n == 0:
        raise GroupValidationError("empty table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise GroupValidationError(f"row {i} has length {len(row)}, expected {n}")
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise GroupValidationError(f"entry ({i}, {j}) = {x!r} outside [0, {n})")
    full = set(range(n))
    for i, row in enumerate(table):
        if set(row) != full:
            raise GroupValidationError(f"row {i} is not a permutation")
    for j in range(n):
        if {table[i][j] for i in range(n)} != full:
            raise GroupValidationError(f"column {j} is not a permutation")
    ident = next(
        (e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))),
        None,
    )
    if ident is None:
        raise GroupValidationError("no identity element")
    for a in range(n):
        if not any(table[a][b] == ident and table[b][a] == ident for b in range(n)):
            raise GroupValidationError(f"element {a} has no two-sided inverse")
    for a in range(n):
        ta = table[a]
        for b in range(n):
            ab = ta[b]
            tb = table[b]
            tab = table[ab]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    raise GroupValidationError(f"not associative at triple ({a}, {b}, {c})")
    if labels is None:
        labels = [str(i) for i in range(n)]
    elif len(labels) != n:
        raise GroupValidationError(f"{len(labels)} labels for {n} elements")
    # swap the identity into slot 0
    perm = list(range(n))
    perm[0], perm[ident] = perm[ident], perm[0]
    product = [[perm[table[perm[a]][perm[b]]] for b in range(n)] for a in range(n)]
    return _build(product, [labels[perm[a]] for a in range(n)], name)


def cycle_label(perm: Sequence[int]) -> str:
    """Cycle notation with points numbered from 1; ``e`` for the identity."""
    n = len(perm)
    sep = "" if n <= 9 else ","
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(str(x + 1))
            x = perm[x]
        parts.append("(" + sep.join(cyc) + ")")
    return "".join(parts) or "e"


def from_permutation_generators(degree: int, generators: Sequence[Sequence[int]],
                                max_order: int = DEFAULT_MAX_ORDER, name: str = "") -> GroupTable:
    """Close the generators under composition.

    Elements are discovered breadth first: each known element is multiplied
    on the right by every generator, in input order.
    """
    gens = []
    for k, g in enumerate(generators):
        g = tuple(g)
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise GroupValidationError(f"generator {k} is not a permutation of [0, {degree})")
        gens.append(g)
    ident = tuple(range(degree))
    elements: List[Tuple[int, ...]] = [ident]
    index: Dict[Tuple[int, ...], int] = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(x[g[i]] for i in range(degree))
            if y not in index:
                if len(elements) >= max_order:
                    raise GroupSizeError(f"closure exceeds {max_order} elements")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    product = [
        [index[tuple(s[t[i]] for i in range(degree))] for t in elements] for s in elements
    ]
    return _build(product, [cycle_label(p) for p in elements], name)


def _quaternion_table() -> GroupTable:
    # unit quaternions as (sign, axis) with axis in {1, i, j, k}
    axes = ["1", "i", "j", "k"]
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, a) for a in axes for s in (1, -1)]
    labels = [("" if s > 0 else "-") + a for s, a in elems]
    pos = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, a1 in elems:
        row = []
        for s2, a2 in elems:
            s, a = mult[a1, a2]
            row.append(pos[(s * s1 * s2, a)])
        table.append(row)
    return from_cayley_table(table, labels, name="Q8")


_NAME = re.compile(r"^(?P<kind>[CDSA])_?(?P<n>\d+)$")


def named_group(name: str, max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    """``C_n``, ``D_n`` (order 2n), ``S_n``, ``A_n`` or ``Q8``; underscores optional."""
    if name.upper() == "Q8":
        return _quaternion_table()
    m = _NAME.match(name.strip())
    if not m:
        raise GroupValidationError(f"unknown group name {name!r}")
    kind, n = m["kind"], int(m["n"])
    canon = f"{kind}{n}"
    if n < 1:
        raise GroupValidationError(f"{name}: parameter must be positive")
    expected = {"C": n, "D": 2 * n, "S": math.factorial(n), "A": max(1, math.factorial(n) // 2)}[kind]
    if expected > max_order:
        raise GroupSizeError(f"{canon} has order {expected} > cap {max_order}")
    if kind == "C":
        gens = [[(i + 1) % n for i in range(n)]] if n > 1 else []
        return from_permutation_generators(n, gens, max_order, canon)
    if kind == "D":
        if n == 1:
            return from_permutation_generators(2, [[1, 0]], max_order, canon)
        if n == 2:
            return from_permutation_generators(4, [[1, 0, 3, 2], [2, 3, 0, 1]], max_order, canon)
        rot = [(i + 1) % n for i in range(n)]
        ref = [(-i) % n for i in range(n)]
        return from_permutation_generators(n, [rot, ref], max_order, canon)
    if kind == "S":
        if n == 1:
            return from_permutation_generators(1, [], max_order, canon)
        swap = [1, 0] + list(range(2, n))
        cyc = [(i + 1) % n for i in range(n)]
        return from_permutation_generators(n, [swap, cyc], max_order, canon)
    if n < 3:
        return from_permutation_generators(n, [], max_order, canon)
    gens = []
    for k in range(2, n):
        g = list(range(n))
        g[0], g[1], g[k] = 1, k, 0
        gens.append(g)
    return from_permutation_generators(n, gens, max_order, canon)


def group_from_descriptor(desc: dict, max_order: int = DEFAULT_MAX_ORDER) -> GroupTable:
    """Build a group from its JSON descriptor.

    ``{"kind": "named", "name": "S3"}``,
    ``{"kind": "cayley", "table": [[...]], "labels": [...]}`` or
    ``{"kind": "permutation", "degree": 3, "generators": [[1, 0, 2], ...]}``.
    """
    if not isinstance(desc, dict):
        raise GroupValidationError("group descriptor must be a JSON object")
    kind = desc.get("kind")
    name = desc.get("name", "")
    if kind == "named":
        if not isinstance(name, str):
            raise GroupValidationError("named group needs a string 'name'")
        return named_group(name, max_order)
    if kind == "cayley":
        table = desc.get("table")
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise GroupValidationError("cayley descriptor needs a 'table' list of lists")
        if len(table) > max_order:
            raise GroupSizeError(f"table of order {len(table)} > cap {max_order}")
        return from_cayley_table(table, desc.get("labels"), name)
    if kind == "permutation":
        degree = desc.get("degree")
        gens = desc.get("generators", [])
        if not isinstance(degree, int) or degree < 0:
            raise GroupValidationError("permutation descriptor needs a non-negative 'degree'")
        return from_permutation_generators(degree, gens, max_order, name)
    raise GroupValidationError(f"unknown group descriptor kind {kind!r}")


def conjugacy_classes(g: GroupTable) -> ConjugacyClassification:
    """Partition by ``a ~ x a x^-1``; classes are numbered by their lowest element."""
    class_of = [-1] * g.order
    classes = []
    for a in range(g.order):
        if class_of[a] >= 0:
            continue
        cid = len(classes)
        members = sorted({g.conj(x, a) for x in range(g.order)})
        for m in members:
            class_of[m] = cid
        classes.append(tuple(members))
    return ConjugacyClassification(
        class_of=tuple(class_of),
        classes=tuple(classes),
        representatives=tuple(c[0] for c in classes),
    )


def centralizer(g: GroupTable, a: int) -> List[int]:
    p = g.product
    return [z for z in range(g.order) if p[z][a] == p[a][z]]


def center(g: GroupTable) -> List[int]:
    p = g.product
    n = g.order
    return [z for z in range(n) if all(p[z][x] == p[x][z] for x in range(n))]
