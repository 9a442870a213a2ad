"""Finite groups as validated multiplication tables.

Elements are dense integer indices ``0..order-1``; for the built-in
constructors index 0 is the identity.  ``table[a, b]`` holds the index of
the product of elements ``a`` and ``b``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InvalidTable, ParseError


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    name: str
    order: int
    table: np.ndarray
    identity: int
    inverse: np.ndarray

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def elements(self) -> range:
        return range(self.order)

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


@dataclass(frozen=True, eq=False)
class ConjugacyClasses:
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    class_of: np.ndarray

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


def validate_table(table) -> tuple[int, np.ndarray]:
    """Full validity scan of a multiplication table, O(order^3).

    Returns the identity index and the inverse array.  Raises
    :class:`InvalidTable` with a witness on the first failure.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise InvalidTable(f"table must be a nonempty square matrix, got shape {t.shape}")
    if not np.issubdtype(t.dtype, np.integer):
        rounded = np.rint(t)
        if not np.array_equal(rounded, t):
            raise InvalidTable("table entries must be integers")
        t = rounded.astype(np.int64)
    else:
        t = t.astype(np.int64)
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        bad = np.argwhere((t < 0) | (t >= n))[0]
        raise InvalidTable(f"entry {t[tuple(bad)]} at {tuple(bad)} out of range 0..{n - 1}")

    ar = np.arange(n)
    row_ok = np.all(np.sort(t, axis=1) == ar[None, :], axis=1)
    if not row_ok.all():
        raise InvalidTable(f"row {int(np.argmin(row_ok))} is not a permutation (Latin square fails)")
    col_ok = np.all(np.sort(t, axis=0) == ar[:, None], axis=0)
    if not col_ok.all():
        raise InvalidTable(f"column {int(np.argmin(col_ok))} is not a permutation (Latin square fails)")

    candidates = [e for e in range(n) if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar)]
    if not candidates:
        raise InvalidTable("no two-sided identity element")
    e = candidates[0]

    # left[a,b,c] = t[t[a,b], c],  right[a,b,c] = t[a, t[b,c]]
    left = t[t]
    right = t[:, t]
    if not np.array_equal(left, right):
        a, b, c = (int(x) for x in np.argwhere(left != right)[0])
        raise InvalidTable(f"associativity fails at triple ({a}, {b}, {c}): (ab)c={left[a, b, c]} a(bc)={right[a, b, c]}")

    inverse = np.empty(n, dtype=np.int64)
    for g in range(n):
        inverse[g] = int(np.nonzero(t[g] == e)[0][0])
    return e, inverse


def make_group(name: str, table) -> FiniteGroup:
    """Build a :class:`FiniteGroup` from a table after the full validity scan."""
    e, inverse = validate_table(table)
    t = np.asarray(table, dtype=np.int64)
    t.setflags(write=False)
    inverse.setflags(write=False)
    return FiniteGroup(name=name, order=t.shape[0], table=t, identity=e, inverse=inverse)


def cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n under addition mod n."""
    if n < 1:
        raise ValueError(f"cyclic group needs order >= 1, got {n}")
    idx = np.arange(n)
    return make_group(f"cyclic:{n}", (idx[:, None] + idx[None, :]) % n)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; element a*n + i encodes s^a r^i."""
    if n < 3:
        raise ValueError(f"dihedral group needs n >= 3, got {n}")
    order = 2 * n
    t = np.empty((order, order), dtype=np.int64)
    for a in range(2):
        for i in range(n):
            for b in range(2):
                for j in range(n):
                    rot = (j - i) % n if b else (i + j) % n
                    t[a * n + i, b * n + j] = (a ^ b) * n + rot
    return make_group(f"dihedral:{n}", t)


def symmetric(n: int) -> FiniteGroup:
    """Symmetric group on n letters, n <= 4, permutations in lexicographic order."""
    if not 1 <= n <= 4:
        raise ValueError(f"symmetric group supported for 1 <= n <= 4, got {n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    order = len(perms)
    t = np.empty((order, order), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            t[i, j] = index[tuple(p[q[x]] for x in range(n))]
    return make_group(f"symmetric:{n}", t)


def quaternion8() -> FiniteGroup:
    """Quaternion group {1, -1, i, -i, j, -j, k, -k} of order 8."""
    one = np.eye(2, dtype=complex)
    i_ = np.array([[1j, 0], [0, -1j]])
    j_ = np.array([[0, 1], [-1, 0]], dtype=complex)
    k_ = i_ @ j_
    mats = [one, -one, i_, -i_, j_, -j_, k_, -k_]

    def key(m):
        return tuple((round(z.real, 9), round(z.imag, 9)) for z in m.reshape(-1))

    index = {key(m): i for i, m in enumerate(mats)}
    t = np.empty((8, 8), dtype=np.int64)
    for a in range(8):
        for b in range(8):
            t[a, b] = index[key(mats[a] @ mats[b])]
    return make_group("quaternion8", t)


def product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Direct product; element (x, y) encodes as x * b.order + y."""
    ta, tb = a.table, b.table
    # t[(x1,y1),(x2,y2)] = (ta[x1,x2], tb[y1,y2])
    t = (ta[:, None, :, None] * b.order + tb[None, :, None, :]).reshape(a.order * b.order, a.order * b.order)
    return make_group(f"product({a.name},{b.name})", t)


def _split_top_level(s: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return s[:i], s[i + 1:]
    raise ParseError(f"expected a top-level comma in product arguments: {s!r}")


def build_group(descriptor: str) -> FiniteGroup:
    """Build a group from a descriptor string.

    Grammar: ``cyclic:N``, ``dihedral:N``, ``symmetric:N``, ``quaternion8``,
    ``product(A,B)`` or ``table:<path>`` where the file holds JSON
    ``{"order": n, "table": [[...]]}``.
    """
    s = descriptor.strip()
    if s == "quaternion8":
        return quaternion8()
    if s.startswith("product(") and s.endswith(")"):
        left, right = _split_top_level(s[len("product("):-1])
        return product(build_group(left), build_group(right))
    kind, sep, arg = s.partition(":")
    if not sep:
        raise ParseError(f"unrecognized group descriptor: {descriptor!r}")
    kind = kind.strip()
    arg = arg.strip()
    if kind == "table":
        try:
            payload = json.loads(Path(arg).read_text())
        except OSError as exc:
            raise ParseError(f"cannot read table file {arg!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"table file {arg!r} is not valid JSON: {exc}") from exc
        if not isinstance(payload, dict) or "table" not in payload:
            raise ParseError(f"table file {arg!r} must be a JSON object with a 'table' key")
        table = payload["table"]
        if "order" in payload and len(table) != payload["order"]:
            raise ParseError(f"table file {arg!r}: declared order {payload['order']} != table size {len(table)}")
        return make_group(f"table:{arg}", table)
    builders = {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric}
    if kind not in builders:
        raise ParseError(f"unrecognized group descriptor: {descriptor!r}")
    try:
        n = int(arg)
    except ValueError as exc:
        raise ParseError(f"descriptor {descriptor!r} needs an integer argument") from exc
    try:
        return builders[kind](n)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def conjugacy_classes(group: FiniteGroup) -> ConjugacyClasses:
    """Partition the elements into conjugacy orbits, sorted by (size, least element)."""
    t, inv, n = group.table, group.inverse, group.order
    seen = np.zeros(n, dtype=bool)
    classes = []
    for h in range(n):
        if seen[h]:
            continue
        orbit = np.unique(t[t[:, h], inv])  # x h x^{-1} over all x
        seen[orbit] = True
        classes.append(tuple(int(x) for x in orbit))
    classes.sort(key=lambda c: (len(c), c[0]))
    class_of = np.empty(n, dtype=np.int64)
    for idx, c in enumerate(classes):
        for g in c:
            class_of[g] = idx
    class_of.setflags(write=False)
    return ConjugacyClasses(
        classes=tuple(classes),
        representatives=tuple(c[0] for c in classes),
        class_of=class_of,
    )
