"""Builders for the semigroup families used throughout the package.

Maps act on the right: ``x(ab) = (xa)b``, so the product ``a*b`` means
"apply ``a`` first, then ``b``".
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

import numpy as np

from .errors import (
    BadN,
    BadParams,
    InvalidSandwichEntry,
    NotInverseSemigroup,
    SemigroupError,
    TooLarge,
)
from .semigroup import FiniteSemigroup, inverse_map, is_group, is_inverse_semigroup

TRANSFORMATION_MAX_POINTS = 5
PARTIAL_INJECTION_MAX_POINTS = 4
PERMUTATION_MAX_POINTS = 6
DEFAULT_PRODUCT_CAP = 5000
# Above this order the O(n^3) associativity scan is skipped for tables that are
# associative by construction (composition of maps, componentwise products).
ASSOC_CHECK_LIMIT = 600


def product_cap() -> int:
    """Largest order a product-style builder will produce (``SGT_SIZE_CAP``)."""
    raw = os.environ.get("SGT_SIZE_CAP")
    if raw is None:
        return DEFAULT_PRODUCT_CAP
    try:
        return int(raw)
    except ValueError:
        raise BadParams(f"SGT_SIZE_CAP must be an integer, got {raw!r}") from None


def _checked(table, name, labels) -> FiniteSemigroup:
    n = len(table)
    return FiniteSemigroup(table, name=name, labels=labels, check=n <= ASSOC_CHECK_LIMIT)


# --------------------------------------------------------------------------
# Partial maps


@dataclass(frozen=True)
class PartialMap:
    """A partial map on ``{0, ..., degree-1}``; ``None`` marks an undefined point."""

    images: tuple[int | None, ...]

    def __post_init__(self):
        m = len(self.images)
        for v in self.images:
            if v is not None and not 0 <= v < m:
                raise BadParams(f"image {v} outside [0, {m})")

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.images) if v is not None)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(v for v in self.images if v is not None)

    def is_total(self) -> bool:
        return None not in self.images

    def is_injective(self) -> bool:
        defined = [v for v in self.images if v is not None]
        return len(defined) == len(set(defined))

    def __call__(self, x: int) -> int | None:
        return self.images[x]

    def __mul__(self, other: "PartialMap") -> "PartialMap":
        if other.degree != self.degree:
            raise BadParams("degree mismatch")
        return PartialMap(tuple(None if v is None else other.images[v] for v in self.images))

    def inverse(self) -> "PartialMap":
        if not self.is_injective():
            raise BadParams("only injective partial maps have inverses")
        inv: list[int | None] = [None] * self.degree
        for i, v in enumerate(self.images):
            if v is not None:
                inv[v] = i
        return PartialMap(tuple(inv))

    @classmethod
    def parse(cls, literal: str) -> "PartialMap":
        """Read ``"[2,0,1]"`` or ``"[1,-,0]"``."""
        text = literal.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise BadParams(f"not a map literal: {literal!r}")
        body = text[1:-1].strip()
        if not body:
            return cls(())
        out: list[int | None] = []
        for tok in body.split(","):
            tok = tok.strip()
            if tok == "-":
                out.append(None)
            else:
                try:
                    out.append(int(tok))
                except ValueError:
                    raise BadParams(f"bad map entry {tok!r}") from None
        return cls(tuple(out))

    def __str__(self) -> str:
        return "[" + ",".join("-" if v is None else str(v) for v in self.images) + "]"


def transformations(m: int) -> list[PartialMap]:
    """All total maps on ``m`` points, lexicographic by image tuple."""
    return [PartialMap(p) for p in product(range(m), repeat=m)]


def partial_injections(m: int) -> list[PartialMap]:
    """All injective partial maps on ``m`` points; the empty map comes first."""
    choices = [None, *range(m)]
    maps = (PartialMap(p) for p in product(choices, repeat=m))
    return [a for a in maps if a.is_injective()]


def semigroup_from_maps(maps: Sequence[PartialMap], name: str | None = None,
                        labels: Sequence[str] | None = None) -> FiniteSemigroup:
    """Multiplication table of a set of partial maps closed under composition."""
    if not maps:
        raise BadParams("need at least one map")
    m = maps[0].degree
    sentinel = m
    arr = np.array([[sentinel if v is None else v for v in a.images] + [sentinel]
                    for a in maps], dtype=np.int64)
    base = m + 1
    weights = base ** np.arange(m, dtype=np.int64)[::-1]
    codes = arr[:, :m] @ weights
    order = np.argsort(codes)
    sorted_codes = codes[order]
    if np.any(sorted_codes[1:] == sorted_codes[:-1]):
        raise BadParams("maps are not pairwise distinct")
    n = len(maps)
    table = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        # composite[b, k] = maps[b] applied to maps[a][k]
        composite = arr[:, arr[a, :m]]
        prod_codes = composite @ weights
        pos = np.searchsorted(sorted_codes, prod_codes)
        pos = np.minimum(pos, n - 1)
        if np.any(sorted_codes[pos] != prod_codes):
            raise SemigroupError("maps are not closed under composition")
        table[a] = order[pos]
    if labels is None:
        labels = [str(a) for a in maps]
    return _checked(table, name, labels)


def _size_guard(m: int, limit: int, what: str, allow_large: bool) -> None:
    if m < 1:
        raise BadParams(f"{what} needs at least one point")
    if m > limit and not allow_large:
        raise TooLarge(f"{what} on {m} points exceeds the cap of {limit}")


def full_transformation_monoid(m: int, allow_large: bool = False) -> FiniteSemigroup:
    _size_guard(m, TRANSFORMATION_MAX_POINTS, "full transformation monoid", allow_large)
    return semigroup_from_maps(transformations(m), name=f"T{m}")


def symmetric_inverse_monoid(m: int, allow_large: bool = False) -> FiniteSemigroup:
    _size_guard(m, PARTIAL_INJECTION_MAX_POINTS, "symmetric inverse monoid", allow_large)
    return semigroup_from_maps(partial_injections(m), name=f"I{m}")


# --------------------------------------------------------------------------
# Groups


def cycle_notation(perm: Sequence[int]) -> str:
    """1-based disjoint cycle notation; the identity is ``()``."""
    seen: set[int] = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        k = perm[start]
        while k != start:
            cyc.append(k)
            seen.add(k)
            k = perm[k]
        cycles.append("(" + " ".join(str(i + 1) for i in cyc) + ")")
    return "".join(cycles) or "()"


def _is_even(perm: Sequence[int]) -> bool:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return inversions % 2 == 0


def _permutation_group(perms: list[tuple[int, ...]], name: str) -> FiniteSemigroup:
    maps = [PartialMap(p) for p in perms]
    return semigroup_from_maps(maps, name=name, labels=[cycle_notation(p) for p in perms])


def symmetric_group(m: int, allow_large: bool = False) -> FiniteSemigroup:
    _size_guard(m, PERMUTATION_MAX_POINTS, "symmetric group", allow_large)
    return _permutation_group(list(permutations(range(m))), f"Sym{m}")


def alternating_group(m: int, allow_large: bool = False) -> FiniteSemigroup:
    _size_guard(m, PERMUTATION_MAX_POINTS, "alternating group", allow_large)
    perms = [p for p in permutations(range(m)) if _is_even(p)]
    return _permutation_group(perms, f"Alt{m}")


def cyclic_group(m: int) -> FiniteSemigroup:
    if m < 1:
        raise BadParams("cyclic group order must be positive")
    if m > product_cap():
        raise TooLarge(f"C{m} exceeds the size cap")
    idx = np.arange(m)
    table = (idx[:, None] + idx[None, :]) % m
    return _checked(table, f"C{m}", [f"g{k}" for k in range(m)])


# --------------------------------------------------------------------------
# Rees matrix semigroups


@dataclass(frozen=True)
class ReesMatrixData:
    group: FiniteSemigroup
    i_size: int
    lambda_size: int
    sandwich: tuple[tuple[int, ...], ...]  # lambda_size rows, i_size columns

    def __post_init__(self):
        if self.i_size < 1 or self.lambda_size < 1:
            raise BadParams("index sets must be non-empty")
        if not is_group(self.group):
            raise BadParams("Rees matrix construction needs a group")
        rows = tuple(tuple(int(v) for v in row) for row in self.sandwich)
        object.__setattr__(self, "sandwich", rows)
        if len(rows) != self.lambda_size or any(len(r) != self.i_size for r in rows):
            raise InvalidSandwichEntry(
                f"sandwich must be {self.lambda_size} x {self.i_size}")
        for lam, row in enumerate(rows):
            for i, v in enumerate(row):
                if not 0 <= v < self.group.order:
                    raise InvalidSandwichEntry(f"p[{lam}][{i}] = {v} is not a group element")


def rees_index(data: ReesMatrixData, i: int, g: int, lam: int) -> int:
    return (i * data.group.order + g) * data.lambda_size + lam


def rees_matrix(data: ReesMatrixData) -> FiniteSemigroup:
    """``(i, x, l)(j, y, m) = (i, x p[l][j] y, m)`` on ``I x G x Lambda``."""
    G = data.group.table
    g_n, n_i, n_l = data.group.order, data.i_size, data.lambda_size
    n = n_i * g_n * n_l
    if n > product_cap():
        raise TooLarge(f"Rees matrix semigroup of order {n} exceeds the size cap")
    P = np.array(data.sandwich, dtype=np.int64)
    coords = [(i, g, lam) for i in range(n_i) for g in range(g_n) for lam in range(n_l)]
    table = np.empty((n, n), dtype=np.int64)
    for a, (i, x, lam) in enumerate(coords):
        for b, (j, y, mu) in enumerate(coords):
            table[a, b] = rees_index(data, i, int(G[G[x, P[lam, j]], y]), mu)
    labels = [f"({i},{data.group.label(g)},{lam})" for i, g, lam in coords]
    return _checked(table, "Rees", labels)


# --------------------------------------------------------------------------
# Zero-unions and direct products


def zero_union(parts: Sequence[FiniteSemigroup]) -> FiniteSemigroup:
    """Disjoint union plus a new zero (element 0); cross products are 0."""
    if len(parts) < 1:
        raise BadParams("zero-union needs at least one part")
    n = 1 + sum(p.order for p in parts)
    if n > product_cap():
        raise TooLarge(f"zero-union of order {n} exceeds the size cap")
    table = np.zeros((n, n), dtype=np.int64)
    labels = ["0"]
    offset = 1
    for k, part in enumerate(parts, start=1):
        sl = slice(offset, offset + part.order)
        table[sl, sl] = part.table + offset
        labels.extend(f"S{k}:{lab}" for lab in part.labels)
        offset += part.order
    name = "0U(" + ",".join(p.name or "?" for p in parts) + ")"
    return _checked(table, name, labels)


def direct_product(parts: Sequence[FiniteSemigroup]) -> FiniteSemigroup:
    """Componentwise product; the first factor is the most significant digit."""
    if len(parts) < 1:
        raise BadParams("direct product needs at least one factor")
    n = math.prod(p.order for p in parts)
    if n > product_cap():
        raise TooLarge(f"direct product of order {n} exceeds the size cap")
    table = np.zeros((1, 1), dtype=np.int64)
    labels: list[tuple[str, ...]] = [()]
    for part in parts:
        m = part.order
        # (a, s)(b, t) = (ab, st) with index a*m + s
        table = (table[:, None, :, None] * m + part.table[None, :, None, :])
        table = table.reshape(table.shape[0] * m, table.shape[2] * m)
        labels = [lab + (p,) for lab in labels for p in part.labels]
    name = " x ".join(p.name or "?" for p in parts)
    return _checked(table, name, ["(" + ",".join(lab) + ")" for lab in labels])


# --------------------------------------------------------------------------
# Girth constructions


GIRTH4_LABELS = ("a1", "a2", "b1", "b2")
GIRTH4_TABLE = (
    (0, 1, 0, 0),
    (0, 1, 1, 1),
    (0, 1, 2, 2),
    (0, 1, 3, 3),
)
GIRTH4_MAPS = (
    PartialMap((0, 0, 0)),
    PartialMap((1, 1, 1)),
    PartialMap((0, 1, 0)),
    PartialMap((0, 1, 1)),
)


def girth4_band() -> FiniteSemigroup:
    """Four idempotent transformations of a 3-set whose commuting graph is a 4-cycle."""
    return FiniteSemigroup(GIRTH4_TABLE, name="girth4band", labels=GIRTH4_LABELS)


@dataclass(frozen=True)
class GirthFamilySpec:
    """Element naming for the girth ``2n`` band.

    ``alpha(i)`` is element ``i``; ``beta(i, j)`` with ``1 <= j < n`` follows.
    """

    n: int

    def __post_init__(self):
        if self.n < 3:
            raise BadN(f"n must be at least 3, got {self.n}")

    @property
    def order(self) -> int:
        return self.n * self.n

    def alpha(self, i: int) -> int:
        return i

    def beta(self, i: int, j: int) -> int:
        return self.n + i * (self.n - 1) + (j - 1)

    def decode(self, x: int) -> tuple[str, int, int | None]:
        if x < self.n:
            return ("a", x, None)
        i, j = divmod(x - self.n, self.n - 1)
        return ("b", i, j + 1)

    @property
    def labels(self) -> tuple[str, ...]:
        out = [f"a{i}" for i in range(self.n)]
        out += [f"b{i}^{j}" for i in range(self.n) for j in range(1, self.n)]
        return tuple(out)


def girth_2n_family(n: int) -> FiniteSemigroup:
    """Band of order ``n^2`` whose commuting graph has a unique cycle, of length ``2n``.

    Built straight from the product laws:
    ``a_i a_k = a_k``, ``b b' = b'``, ``a_i b_k^m = b_k^m`` and
    ``b_k^m a_i = b_k^1`` if ``k = i`` else ``b_k^l`` with ``l = k - i mod n``.
    """
    spec = GirthFamilySpec(n)
    size = spec.order
    table = np.empty((size, size), dtype=np.int64)
    for x in range(size):
        kind_x, k, m = spec.decode(x)
        for y in range(size):
            kind_y, i, _ = spec.decode(y)
            if kind_y == "b" or kind_x == "a":
                table[x, y] = y
            else:
                l = (k - i) % n
                table[x, y] = spec.beta(k, 1 if l == 0 else l)
    return _checked(table, f"girth2n({n})", spec.labels)


def girth_2n_transformations(n: int) -> list[PartialMap]:
    """The same family realised as maps on ``n(n-1)`` points, in label order.

    Point ``x_t^s`` has index ``t(n-1) + s - 1``.
    """
    spec = GirthFamilySpec(n)
    point = lambda t, s: t * (n - 1) + (s - 1)  # noqa: E731
    size = n * (n - 1)
    maps = []
    for i in range(n):
        images = []
        for p in range(size):
            t = p // (n - 1)
            j = (t - i) % n
            images.append(point(t, 1 if j == 0 else j))
        maps.append(PartialMap(tuple(images)))
    for i in range(n):
        for j in range(1, n):
            maps.append(PartialMap((point(i, j),) * size))
    assert len(maps) == spec.order
    return maps


def girth_2n_from_transformations(n: int) -> FiniteSemigroup:
    maps = girth_2n_transformations(n)
    return semigroup_from_maps(maps, name=f"girth2n-maps({n})", labels=GirthFamilySpec(n).labels)


# --------------------------------------------------------------------------
# Vagner-Preston


def vagner_preston(S: FiniteSemigroup) -> list[PartialMap]:
    """Right translations ``rho_x: s -> s x`` on ``{s : s x x^-1 = s}``.

    ``x -> rho_x`` embeds an inverse semigroup in the symmetric inverse monoid
    on its own elements.
    """
    if not is_inverse_semigroup(S):
        raise NotInverseSemigroup(f"{S!r} is not an inverse semigroup")
    inv = inverse_map(S)
    t = S.table
    out = []
    for x in range(S.order):
        e = int(t[x, inv[x]])
        out.append(PartialMap(tuple(
            int(t[s, x]) if int(t[s, e]) == s else None for s in range(S.order))))
    return out
