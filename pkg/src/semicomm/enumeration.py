"""Exhaustive enumeration of small semigroups.

Tables are filled cell by cell (row-major) and every associativity triple is
checked as soon as all four products it needs are known.  With ``dedup`` only
tables equal to their own canonical form are visited, one per isomorphism
class.  Anti-isomorphic tables are kept apart.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterator

import numpy as np

from .errors import OrderUnsupported
from .semigroup import (
    FiniteSemigroup,
    is_band,
    is_clifford,
    is_commutative,
    is_completely_regular,
    is_completely_simple,
    is_group,
    is_inverse_semigroup,
    is_regular,
)

MAX_ORDER = 5
LONG_ORDER = 5

CLASS_FILTERS: dict[str, Callable[[FiniteSemigroup], bool]] = {
    "any": lambda S: True,
    "band": is_band,
    "regular": is_regular,
    "inverse": is_inverse_semigroup,
    "clifford": is_clifford,
    "completely-regular": is_completely_regular,
    "completely-simple": is_completely_simple,
    "group": is_group,
    "commutative": is_commutative,
    "non-commutative": lambda S: not is_commutative(S),
}


def class_filter(spec: str) -> Callable[[FiniteSemigroup], bool]:
    """Predicate for ``spec``; ``+`` joins filters, e.g. ``inverse+non-commutative``."""
    parts = [p.strip() for p in spec.split("+") if p.strip()] or ["any"]
    try:
        preds = [CLASS_FILTERS[p] for p in parts]
    except KeyError as exc:
        raise ValueError(f"unknown class filter {exc.args[0]!r}; "
                         f"choose from {', '.join(CLASS_FILTERS)}") from None
    return lambda S: all(p(S) for p in preds)


@dataclass(frozen=True)
class EnumerationTask:
    order: int
    class_filter: str = "any"
    dedup: bool = True
    allow_long: bool = False

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise OrderUnsupported(f"order {self.order} outside [1, {MAX_ORDER}]")
        if self.order >= LONG_ORDER and not self.allow_long:
            raise OrderUnsupported(
                f"order {self.order} is long-running; pass allow_long to enable it")
        class_filter(self.class_filter)


# --------------------------------------------------------------------------
# Canonical forms


_PERM_CACHE: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def _perm_data(n: int):
    if n not in _PERM_CACHE:
        perms = np.array(list(permutations(range(n))), dtype=np.int64)
        inv = np.argsort(perms, axis=1)
        weights = n ** np.arange(n * n, dtype=np.int64)[::-1]
        _PERM_CACHE[n] = (perms, inv, weights)
    return _PERM_CACHE[n]


def relabelled_tables(table: np.ndarray) -> np.ndarray:
    """All ``n!`` relabellings, shape ``(n!, n, n)``.

    Under permutation ``p`` the new table is ``T'[p a, p b] = p T[a, b]``.
    """
    n = table.shape[0]
    perms, inv, _ = _perm_data(n)
    rows = inv[:, :, None]
    cols = inv[:, None, :]
    moved = table[rows, cols]
    return np.take_along_axis(perms[:, None, :].repeat(n, axis=1), moved, axis=2)


def canonical_form(table) -> np.ndarray:
    """Lexicographically least table over all relabellings."""
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    if n == 1:
        return t.copy()
    _, _, weights = _perm_data(n)
    cands = relabelled_tables(t).reshape(-1, n * n)
    codes = cands @ weights
    return cands[int(np.argmin(codes))].reshape(n, n)


def is_canonical(table) -> bool:
    t = np.asarray(table, dtype=np.int64)
    return np.array_equal(canonical_form(t), t)


# --------------------------------------------------------------------------
# Backtracking


def _raw_tables(n: int, first_cell: int | None = None) -> Iterator[list[list[int]]]:
    """Every associative table of order ``n`` (optionally with ``T[0][0]`` fixed)."""
    T = [[-1] * n for _ in range(n)]
    cells = [(a, b) for a in range(n) for b in range(n)]
    rng = range(n)

    def consistent(a: int, b: int) -> bool:
        v = T[a][b]
        # (ab)c = a(bc) for every c
        for c in rng:
            l1 = T[v][c]
            bc = T[b][c]
            if l1 >= 0 and bc >= 0:
                r = T[a][bc]
                if r >= 0 and r != l1:
                    return False
        # (xa)b = x(ab) for every x
        for x in rng:
            xa = T[x][a]
            if xa >= 0:
                l2 = T[xa][b]
                r = T[x][v]
                if l2 >= 0 and r >= 0 and l2 != r:
                    return False
        # cells whose value is a or b act as inner products
        for x in rng:
            row = T[x]
            for y in rng:
                if row[y] == a:
                    # (xy)b = x(yb)
                    yb = T[y][b]
                    if yb >= 0:
                        r = T[x][yb]
                        if r >= 0 and r != v:
                            return False
                if row[y] == b:
                    # a(xy) = (ax)y
                    ax = T[a][x]
                    if ax >= 0:
                        l3 = T[ax][y]
                        if l3 >= 0 and l3 != v:
                            return False
        return True

    def fill(k: int) -> Iterator[list[list[int]]]:
        if k == len(cells):
            yield [row[:] for row in T]
            return
        a, b = cells[k]
        values = [first_cell] if (k == 0 and first_cell is not None) else rng
        for v in values:
            T[a][b] = v
            if consistent(a, b):
                yield from fill(k + 1)
        T[a][b] = -1

    yield from fill(0)


def _partition(args: tuple[int, int, bool]) -> list[list[list[int]]]:
    n, first, dedup = args
    out = []
    for t in _raw_tables(n, first):
        if not dedup or is_canonical(t):
            out.append(t)
    return out


def iter_tables(order: int, dedup: bool = True, jobs: int = 1) -> Iterator[list[list[int]]]:
    """Associative tables in lexicographic order (canonical ones when ``dedup``)."""
    if jobs <= 1:
        for t in _raw_tables(order):
            if not dedup or is_canonical(t):
                yield t
        return
    # partition on the value of cell (0, 0); lexicographic order survives the merge
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for chunk in pool.map(_partition, [(order, v, dedup) for v in range(order)]):
            yield from chunk


def iter_semigroups(task: EnumerationTask, jobs: int = 1) -> Iterator[FiniteSemigroup]:
    keep = class_filter(task.class_filter)
    for t in iter_tables(task.order, task.dedup, jobs):
        S = FiniteSemigroup(t, check=False)
        if keep(S):
            yield S


def enumerate_semigroups(task: EnumerationTask,
                         visit: Callable[[FiniteSemigroup], None] | None = None,
                         jobs: int = 1) -> int:
    """Visit every matching semigroup of ``task``; return how many were visited."""
    count = 0
    for S in iter_semigroups(task, jobs):
        if visit is not None:
            visit(S)
        count += 1
    return count


def semigroups_up_to(max_order: int, class_spec: str = "any",
                     allow_long: bool = False) -> Iterator[FiniteSemigroup]:
    for n in range(1, max_order + 1):
        yield from iter_semigroups(EnumerationTask(n, class_spec, True, allow_long))
