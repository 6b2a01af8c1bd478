"""Finite semigroups given by a Cayley table, plus classification predicates.

Elements are the dense indices ``0..n-1`` and ``table[a, b]`` is the product
``a*b``.  Every predicate here is an exact scan of the table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    IndexOutOfRange,
    NotAssociative,
    NotCompletelyRegular,
    NotInverseSemigroup,
    SemigroupError,
)

# Cells of the associativity cube materialised per numpy step.
_ASSOC_BUDGET = 1 << 22


def find_associativity_violation(table: np.ndarray) -> tuple[int, int, int] | None:
    """Return the lexicographically first ``(a, b, c)`` with ``(ab)c != a(bc)``."""
    n = table.shape[0]
    step = max(1, _ASSOC_BUDGET // (n * n))
    for start in range(0, n, step):
        rows = table[start:start + step]
        # lhs[a, b, c] = (a*b)*c ; rhs[a, b, c] = a*(b*c)
        lhs = table[rows]
        rhs = rows[:, table]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            a, b, c = bad[0]
            return int(a) + start, int(b), int(c)
    return None


class FiniteSemigroup:
    """An immutable finite semigroup on ``{0, ..., n-1}``.

    The constructor validates entries and associativity (full triple scan).
    ``labels`` are optional display names, one per element.
    """

    __slots__ = ("_table", "name", "_labels")

    def __init__(self, table, name: str | None = None,
                 labels: Sequence[str] | None = None, check: bool = True):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim == 1:
            n = int(round(len(arr) ** 0.5))
            if n * n != len(arr):
                raise SemigroupError(f"table length {len(arr)} is not a square")
            arr = arr.reshape(n, n)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise SemigroupError("table must be a non-empty n x n array")
        n = arr.shape[0]
        if check:
            bad = np.argwhere((arr < 0) | (arr >= n))
            if bad.size:
                a, b = bad[0]
                raise IndexOutOfRange(
                    f"entry ({a}, {b}) = {arr[a, b]} outside [0, {n})")
            triple = find_associativity_violation(arr)
            if triple is not None:
                raise NotAssociative(triple)
        arr.setflags(write=False)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise SemigroupError(f"expected {n} labels, got {len(labels)}")
        self._table = arr
        self.name = name
        self._labels = labels

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def order(self) -> int:
        return self._table.shape[0]

    def __len__(self) -> int:
        return self.order

    @property
    def labels(self) -> tuple[str, ...]:
        if self._labels is None:
            return tuple(str(i) for i in range(self.order))
        return self._labels

    def label(self, x: int) -> str:
        return self._labels[x] if self._labels is not None else str(x)

    def mul(self, *xs: int) -> int:
        """Product of one or more elements, left to right."""
        t = self._table
        acc = xs[0]
        for x in xs[1:]:
            acc = int(t[acc, x])
        return int(acc)

    def flat(self) -> list[int]:
        return [int(v) for v in self._table.ravel()]

    def with_name(self, name: str | None) -> "FiniteSemigroup":
        return FiniteSemigroup(self._table, name=name, labels=self._labels, check=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return np.array_equal(self._table, other._table)

    def __hash__(self) -> int:
        return hash(self._table.tobytes())

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<FiniteSemigroup{tag} order={self.order}>"


def make_semigroup(order: int, table: Sequence[int], name: str | None = None,
                   labels: Sequence[str] | None = None) -> FiniteSemigroup:
    """Validate a flat row-major table and wrap it."""
    if order < 1:
        raise SemigroupError("order must be positive")
    if len(table) != order * order:
        raise SemigroupError(f"table has {len(table)} entries, expected {order * order}")
    return FiniteSemigroup(np.asarray(table, dtype=np.int64).reshape(order, order),
                           name=name, labels=labels)


def subsemigroup(S: FiniteSemigroup, elements: Iterable[int]) -> FiniteSemigroup:
    """The subsemigroup on ``elements`` (sorted), relabelled to ``0..k-1``."""
    elems = sorted(set(int(e) for e in elements))
    index = {e: i for i, e in enumerate(elems)}
    sub = S.table[np.ix_(elems, elems)]
    try:
        relabelled = [[index[int(v)] for v in row] for row in sub]
    except KeyError as exc:
        raise SemigroupError(f"subset not closed under multiplication ({exc})") from None
    return FiniteSemigroup(relabelled, labels=[S.label(e) for e in elems], check=False)


# --------------------------------------------------------------------------
# Element sets


def commutation_matrix(S: FiniteSemigroup) -> np.ndarray:
    t = S.table
    return t == t.T


def center(S: FiniteSemigroup) -> frozenset[int]:
    """Elements commuting with every element."""
    return frozenset(np.flatnonzero(commutation_matrix(S).all(axis=1)).tolist())


def idempotents(S: FiniteSemigroup) -> frozenset[int]:
    t = S.table
    idx = np.arange(S.order)
    return frozenset(np.flatnonzero(t[idx, idx] == idx).tolist())


def inverses_of(S: FiniteSemigroup, x: int) -> frozenset[int]:
    """All ``y`` with ``xyx = x`` and ``yxy = y``."""
    t = S.table
    ys = np.arange(S.order)
    xy = t[x, ys]
    ok = (t[xy, x] == x) & (t[t[ys, x], ys] == ys)
    return frozenset(np.flatnonzero(ok).tolist())


# --------------------------------------------------------------------------
# Predicates


def is_commutative(S: FiniteSemigroup) -> bool:
    return bool(commutation_matrix(S).all())


def is_band(S: FiniteSemigroup) -> bool:
    return len(idempotents(S)) == S.order


def identity_element(S: FiniteSemigroup) -> int | None:
    t = S.table
    idx = np.arange(S.order)
    for e in range(S.order):
        if np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx):
            return e
    return None


def is_group(S: FiniteSemigroup) -> bool:
    e = identity_element(S)
    if e is None:
        return False
    hits = S.table == e
    # every x needs some y with xy = yx = e
    return bool((hits & hits.T).any(axis=1).all())


def is_regular(S: FiniteSemigroup) -> bool:
    t = S.table
    for x in range(S.order):
        if not (t[t[x], x] == x).any():
            return False
    return True


def _idempotents_commute(S: FiniteSemigroup, central: bool) -> bool:
    es = sorted(idempotents(S))
    comm = commutation_matrix(S)
    if central:
        return bool(comm[es].all())
    return bool(comm[np.ix_(es, es)].all())


def is_inverse_semigroup(S: FiniteSemigroup) -> bool:
    """Regular with pairwise commuting idempotents."""
    return is_regular(S) and _idempotents_commute(S, central=False)


def is_clifford(S: FiniteSemigroup) -> bool:
    """Regular with every idempotent central."""
    return is_regular(S) and _idempotents_commute(S, central=True)


def powers(S: FiniteSemigroup, x: int) -> tuple[int, int]:
    """Least ``(index, period)`` with ``x^(index+period) = x^index``."""
    seen: dict[int, int] = {}
    p, k = x, 1
    t = S.table
    while p not in seen:
        seen[p] = k
        p = int(t[p, x])
        k += 1
    i = seen[p]
    return i, k - i


def is_completely_regular(S: FiniteSemigroup) -> bool:
    return all(powers(S, x)[0] == 1 for x in range(S.order))


def principal_ideal(S: FiniteSemigroup, x: int) -> np.ndarray:
    """Boolean membership mask of ``S^1 x S^1``."""
    t = S.table
    mask = np.zeros(S.order, dtype=bool)
    mask[x] = True
    mask[t[:, x]] = True
    mask[t[x, :]] = True
    mask[t[t[:, x], :].ravel()] = True
    return mask


def is_simple(S: FiniteSemigroup) -> bool:
    return all(principal_ideal(S, x).all() for x in range(S.order))


def is_completely_simple(S: FiniteSemigroup) -> bool:
    return is_completely_regular(S) and is_simple(S)


# --------------------------------------------------------------------------
# Unary inverse operations


@dataclass(frozen=True)
class UnaryInverseMap:
    map: tuple[int, ...]
    kind: str  # "inverse-semigroup" or "completely-regular"

    def __getitem__(self, x: int) -> int:
        return self.map[x]

    def __len__(self) -> int:
        return len(self.map)


def inverse_map(S: FiniteSemigroup) -> UnaryInverseMap:
    """The unique-inverse map of an inverse semigroup."""
    if not is_inverse_semigroup(S):
        raise NotInverseSemigroup(f"{S!r} is not an inverse semigroup")
    inv = []
    for x in range(S.order):
        (y,) = inverses_of(S, x)
        inv.append(y)
    return UnaryInverseMap(tuple(inv), "inverse-semigroup")


def completely_regular_inverse_map(S: FiniteSemigroup) -> UnaryInverseMap:
    """Inverse of each ``x`` inside its cyclic group ``<x>``: ``x^(2p-1)``."""
    inv = []
    for x in range(S.order):
        index, period = powers(S, x)
        if index != 1:
            raise NotCompletelyRegular(f"element {x} has index {index}")
        y = x
        for _ in range(2 * period - 2):
            y = int(S.table[y, x])
        inv.append(y)
    return UnaryInverseMap(tuple(inv), "completely-regular")


# --------------------------------------------------------------------------
# Semilattice of completely simple components


@dataclass(frozen=True)
class SemilatticeDecomposition:
    components: tuple[tuple[int, ...], ...]
    meet_table: tuple[tuple[int, ...], ...]
    class_flags: tuple[bool, ...]

    def class_of(self, x: int) -> int:
        for k, comp in enumerate(self.components):
            if x in comp:
                return k
        raise KeyError(x)

    def meet(self, alpha: int, beta: int) -> int:
        return self.meet_table[alpha][beta]


def j_classes(S: FiniteSemigroup) -> list[tuple[int, ...]]:
    """J-classes ordered by smallest member."""
    groups: dict[bytes, list[int]] = {}
    for x in range(S.order):
        groups.setdefault(principal_ideal(S, x).tobytes(), []).append(x)
    return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])


def semilattice_decomposition(S: FiniteSemigroup) -> SemilatticeDecomposition:
    if not is_completely_regular(S):
        raise NotCompletelyRegular(f"{S!r} is not completely regular")
    comps = j_classes(S)
    owner = np.empty(S.order, dtype=np.int64)
    for k, comp in enumerate(comps):
        owner[list(comp)] = k
    t = S.table
    meet = []
    for a_comp in comps:
        row = []
        for b_comp in comps:
            classes = set(owner[t[np.ix_(a_comp, b_comp)]].ravel().tolist())
            if len(classes) != 1:
                raise SemigroupError("J-classes do not multiply into a single class")
            row.append(classes.pop())
        meet.append(tuple(row))
    flags = tuple(is_completely_simple(subsemigroup(S, comp)) for comp in comps)
    return SemilatticeDecomposition(tuple(comps), tuple(meet), flags)
