import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semicomm.constructions import (
    GIRTH4_MAPS,
    GIRTH4_TABLE,
    GirthFamilySpec,
    PartialMap,
    ReesMatrixData,
    alternating_group,
    cycle_notation,
    cyclic_group,
    direct_product,
    full_transformation_monoid,
    girth4_band,
    girth_2n_family,
    girth_2n_from_transformations,
    partial_injections,
    rees_index,
    rees_matrix,
    semigroup_from_maps,
    symmetric_group,
    symmetric_inverse_monoid,
    transformations,
    vagner_preston,
    zero_union,
)
from semicomm.errors import (
    BadN,
    BadParams,
    InvalidSandwichEntry,
    NotInverseSemigroup,
    SemigroupError,
    TooLarge,
)
from semicomm.semigroup import (
    center,
    idempotents,
    inverse_map,
    is_band,
    is_clifford,
    is_completely_simple,
    is_group,
    is_inverse_semigroup,
)


@pytest.mark.parametrize("build, m, order", [
    (full_transformation_monoid, 1, 1),
    (full_transformation_monoid, 2, 4),
    (full_transformation_monoid, 3, 27),
    (symmetric_inverse_monoid, 1, 2),
    (symmetric_inverse_monoid, 2, 7),
    (symmetric_inverse_monoid, 3, 34),
    (symmetric_inverse_monoid, 4, 209),
    (symmetric_group, 3, 6),
    (symmetric_group, 4, 24),
    (alternating_group, 4, 12),
    (cyclic_group, 5, 5),
])
def test_orders(build, m, order):
    assert build(m).order == order


def test_partial_injection_count_formula():
    for m in range(5):
        expected = sum(math.comb(m, k) ** 2 * math.factorial(k) for k in range(m + 1))
        assert len(partial_injections(m)) == expected


def test_size_guards():
    with pytest.raises(TooLarge):
        full_transformation_monoid(6)
    with pytest.raises(TooLarge):
        symmetric_inverse_monoid(5)
    with pytest.raises(TooLarge):
        symmetric_group(7)


def test_product_cap_env(monkeypatch, sym3):
    monkeypatch.setenv("SGT_SIZE_CAP", "30")
    assert direct_product([sym3, cyclic_group(5)]).order == 30
    with pytest.raises(TooLarge):
        direct_product([sym3, cyclic_group(6)])
    monkeypatch.setenv("SGT_SIZE_CAP", "lots")
    with pytest.raises(BadParams):
        zero_union([sym3])


def test_group_labels(sym3):
    assert sym3.labels[0] == "()"
    # points are printed 1-based
    assert cycle_notation((1, 2, 0)) == "(1 2 3)"
    assert cycle_notation((1, 0, 2, 3)) == "(1 2)"
    assert cyclic_group(3).labels == ("g0", "g1", "g2")


def test_groups_are_groups(alt4):
    for G in (symmetric_group(3), alt4, cyclic_group(4), symmetric_group(1)):
        assert is_group(G)


# --------------------------------------------------------------------------
# partial maps


def test_partial_map_literals():
    a = PartialMap.parse("[1,-,0]")
    assert a.images == (1, None, 0)
    assert str(a) == "[1,-,0]"
    assert a.domain == {0, 2} and a.image == {0, 1}
    assert not a.is_total() and a.is_injective()
    assert a.inverse() == PartialMap.parse("[2,0,-]")
    assert PartialMap.parse(" [ 2 , 0 , 1 ] ").is_total()
    for bad in ("1,2", "[1,x]", "[3,0]"):
        with pytest.raises(BadParams):
            PartialMap.parse(bad)


def test_composition_acts_on_the_right():
    a = PartialMap((1, 1, 2))
    b = PartialMap((0, 2, 2))
    # x -> a(x) -> b(a(x))
    assert (a * b).images == (2, 2, 2)
    assert (b * a).images == (1, 2, 2)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.tuples(
    *[st.lists(st.one_of(st.none(), st.integers(0, m - 1)), min_size=m, max_size=m)] * 3)))
def test_composition_is_associative(maps):
    a, b, c = (PartialMap(tuple(x)) for x in maps)
    assert (a * b) * c == a * (b * c)


def test_semigroup_from_maps_matches_composition():
    maps = partial_injections(2)
    S = semigroup_from_maps(maps)
    for x, y in itertools.product(range(len(maps)), repeat=2):
        assert maps[S.mul(x, y)] == maps[x] * maps[y]


def test_semigroup_from_maps_requires_closure():
    with pytest.raises(SemigroupError):
        semigroup_from_maps([PartialMap((1, 0))])


def test_transformation_order():
    assert [str(t) for t in transformations(2)] == ["[0,0]", "[0,1]", "[1,0]", "[1,1]"]
    assert str(partial_injections(2)[0]) == "[-,-]"


# --------------------------------------------------------------------------
# girth constructions


def test_girth4_band_table():
    S = girth4_band()
    assert S.table.tolist() == [list(r) for r in GIRTH4_TABLE]
    assert semigroup_from_maps(GIRTH4_MAPS).table.tolist() == S.table.tolist()
    assert is_band(S) and center(S) == frozenset()


def test_girth_family_indexing():
    spec = GirthFamilySpec(4)
    assert spec.order == 16
    assert [spec.alpha(i) for i in range(4)] == [0, 1, 2, 3]
    assert spec.beta(0, 1) == 4 and spec.beta(3, 3) == 15
    for x in range(16):
        kind, i, j = spec.decode(x)
        assert (spec.alpha(i) if kind == "a" else spec.beta(i, j)) == x
    with pytest.raises(BadN):
        GirthFamilySpec(2)
    with pytest.raises(BadN):
        girth_2n_family(1)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_girth_family_product_laws(n):
    S = girth_2n_family(n)
    spec = GirthFamilySpec(n)
    assert S.order == n * n and is_band(S)
    for i, k in itertools.product(range(n), repeat=2):
        assert S.mul(spec.alpha(i), spec.alpha(k)) == spec.alpha(k)
        for m in range(1, n):
            b = spec.beta(k, m)
            assert S.mul(spec.alpha(i), b) == b
            j = (k - i) % n
            assert S.mul(b, spec.alpha(i)) == spec.beta(k, 1 if j == 0 else j)
    bs = range(n, n * n)
    assert all(S.mul(b, c) == c for b in bs for c in bs)


def test_girth_family_worked_product():
    spec = GirthFamilySpec(4)
    S = girth_2n_family(4)
    a0, b = spec.alpha(0), spec.beta(2, 2)
    assert S.mul(a0, b) == b and S.mul(b, a0) == b


@pytest.mark.parametrize("n", [3, 4, 5])
def test_girth_family_matches_transformations(n):
    assert np.array_equal(girth_2n_family(n).table, girth_2n_from_transformations(n).table)


# --------------------------------------------------------------------------
# Rees matrices, zero-unions, direct products


def test_rectangular_band():
    data = ReesMatrixData(cyclic_group(1), 2, 3, ((0, 0),) * 3)
    S = rees_matrix(data)
    assert S.order == 6 and is_band(S) and is_completely_simple(S)
    for a, b in itertools.product(range(6), repeat=2):
        i, _ = divmod(a, 3)
        _, mu = divmod(b, 3)
        assert S.mul(a, b) == rees_index(data, i, 0, mu)


def test_rees_product_rule():
    C2 = cyclic_group(2)
    data = ReesMatrixData(C2, 2, 2, ((0, 0), (0, 1)))
    S = rees_matrix(data)
    assert S.order == 8 and is_completely_simple(S) and not is_group(S)
    for (i, x, l), (j, y, m) in itertools.product(
            itertools.product(range(2), range(2), range(2)), repeat=2):
        p = data.sandwich[l][j]
        expected = rees_index(data, i, (x + p + y) % 2, m)
        assert S.mul(rees_index(data, i, x, l), rees_index(data, j, y, m)) == expected


def test_rees_one_by_one_is_the_group(sym3):
    S = rees_matrix(ReesMatrixData(sym3, 1, 1, ((0,),)))
    assert np.array_equal(S.table, sym3.table)


def test_rees_validation(sym3, band4):
    with pytest.raises(InvalidSandwichEntry):
        ReesMatrixData(sym3, 2, 1, ((0, 6),))
    with pytest.raises(InvalidSandwichEntry):
        ReesMatrixData(sym3, 2, 2, ((0, 0),))
    with pytest.raises(BadParams):
        ReesMatrixData(band4, 1, 1, ((0,),))
    with pytest.raises(BadParams):
        ReesMatrixData(sym3, 0, 1, ())


def test_zero_union(sym3, alt4):
    S = zero_union([alt4, sym3, sym3])
    assert S.order == 25
    assert S.labels[0] == "0" and S.labels[1] == "S1:()"
    assert all(S.mul(0, x) == 0 == S.mul(x, 0) for x in range(25))
    assert S.mul(1, 13) == 0
    assert is_clifford(S)
    assert center(S) == {0, 1, 13, 19}
    assert len(idempotents(S)) == 4


def test_zero_union_of_one_part(sym3):
    assert zero_union([sym3]).order == 7


def test_direct_product(sym3):
    C3 = cyclic_group(3)
    S = direct_product([sym3, C3])
    assert S.order == 18 and is_group(S)
    assert S.labels[:2] == ("((),g0)", "((),g1)")
    for a, s, b, t in itertools.product(range(6), range(3), range(6), range(3)):
        assert S.mul(a * 3 + s, b * 3 + t) == sym3.mul(a, b) * 3 + C3.mul(s, t)
    assert len(center(S)) == 3


def test_direct_product_with_band(band4):
    S = direct_product([band4, cyclic_group(2)])
    assert S.order == 8 and not is_band(S)


# --------------------------------------------------------------------------
# Vagner-Preston


@pytest.mark.parametrize("m", [1, 2, 3])
def test_vagner_preston_embeds(m):
    S = symmetric_inverse_monoid(m)
    rho = vagner_preston(S)
    assert len(set(rho)) == S.order
    assert all(r.is_injective() for r in rho)
    inv = inverse_map(S)
    for x, y in itertools.product(range(S.order), repeat=2):
        assert rho[x] * rho[y] == rho[S.mul(x, y)]
    for x in range(S.order):
        assert rho[x].inverse() == rho[inv[x]]


def test_vagner_preston_of_zero(i2):
    rho = vagner_preston(i2)
    zero = i2.labels.index("[-,-]")
    assert rho[zero].domain == {zero}


def test_vagner_preston_needs_inverse(band4):
    with pytest.raises(NotInverseSemigroup):
        vagner_preston(band4)


def test_dom_im_idempotents_in_i3(i3):
    inv = inverse_map(i3)
    maps = partial_injections(3)
    checked = 0
    for x, a in enumerate(maps):
        if a.domain == a.image:
            continue
        e, f = i3.mul(x, inv[x]), i3.mul(inv[x], x)
        assert e != f
        assert i3.mul(e, x) != i3.mul(x, e)
        assert i3.mul(f, x) != i3.mul(x, f)
        checked += 1
    assert checked > 0


def test_i3_is_inverse(i3):
    assert is_inverse_semigroup(i3) and not is_clifford(i3)
