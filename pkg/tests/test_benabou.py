import itertools
from math import comb

import pytest

from artifact.benabou import (Tilde, TildeCell, bar_restricts, bar_transformation, chains,
                              count_strict_extensions, counit_unit_identity, eta_naturality,
                              interval_maps, is_interval_map, partial_axiom_check,
                              strictification_bijection_check, tensor_maps, tilde_cells,
                              tilde_functoriality, tilde_op_checks, triangle_identities,
                              validate_bar_transformation)
from artifact.generators import monotone_maps
from artifact.kernel import group_2cat, ordinal, point
from artifact.morphisms import (Transformation, enumerate_lax_functors, identity_functor,
                                validate_transformation)
from helpers import ordinal_map
from oracles import group_valued_lax_functors

Z2 = group_2cat(2)


def _interval_count(n, m):
    if n == 0:
        return int(m == 0)
    return comb(m + n - 1, n - 1)


@pytest.mark.parametrize("n,m", [(0, 0), (0, 2), (1, 0), (1, 3), (2, 2), (3, 4)])
def test_interval_maps(n, m):
    maps = interval_maps(n, m)
    assert len(maps) == _interval_count(n, m)
    brute = [p for p in itertools.product(range(m + 1), repeat=n + 1) if is_interval_map(p, n, m)]
    assert sorted(maps) == sorted(brute)


def test_tensor_of_interval_maps():
    assert tensor_maps((0, 1), (0, 0, 2)) == (0, 0, 2, 3)
    phi = tensor_maps((0, 2), (0, 1, 1))
    assert is_interval_map(phi, 3, 3)


@pytest.mark.parametrize("order,L", [(1, 3), (2, 3), (3, 2)])
def test_tilde_cell_counts_over_groups(order, L):
    # one object and one 1-cell: each target cell picks a group element
    want = sum(_interval_count(n, m) * order ** n for n in range(L + 1) for m in range(L + 1))
    A = point() if order == 1 else group_2cat(order)
    assert len(tilde_cells(A, L)) == want


def test_chains_of_ordinal():
    # chains of length L in [n] are walks along non-decreasing pairs
    xs = chains(ordinal(2), 2)
    assert len([x for x in xs if not x.cells]) == 3
    assert len([x for x in xs if len(x.cells) == 1]) == 6
    assert all(Tilde(ordinal(2)).chain(x.cells, x.source) == x for x in xs)


def test_tilde_cells_are_well_formed():
    A = monotone_maps((0, 1))
    T = Tilde(A)
    for c in tilde_cells(A, 2):
        assert T.is_cell(c)
    bad = TildeCell(T.i1(0), T.i1(0), (0, 1), ())
    assert not T.is_cell(bad)


@pytest.mark.parametrize("A,L", [(point(), 3), (ordinal(1), 3), (ordinal(2), 3), (Z2, 2),
                                 (monotone_maps((0, 1)), 2)],
                         ids=["point", "o1", "o2", "z2", "monotone"])
def test_tilde_is_a_strict_2category(A, L):
    assert partial_axiom_check(A, L).ok


@pytest.mark.parametrize("A,L", [(point(), 3), (ordinal(2), 3), (monotone_maps((0, 1)), 2)],
                         ids=["point", "o2", "monotone"])
def test_unit_and_counit(A, L):
    assert counit_unit_identity(A)
    assert all(triangle_identities(A, L).values())


def test_unit_and_counit_on_group():
    assert counit_unit_identity(Z2)
    assert all(triangle_identities(Z2, 2).values())


@pytest.mark.parametrize("A,order", [(point(), 1), (ordinal(1), 2), (ordinal(2), 2), (point(), 2),
                                     (ordinal(1), 3)])
def test_strictification_is_bijective(A, order):
    B = point() if order == 1 else group_2cat(order)
    r = strictification_bijection_check(A, B, 3)
    assert r["ok"]
    assert r["lax_functors"] == len(group_valued_lax_functors(A, order))


@pytest.mark.parametrize("u", list(enumerate_lax_functors(ordinal(1), Z2)), ids=str)
def test_strict_extension_is_unique(u):
    assert count_strict_extensions(ordinal(1), Z2, u, 3) == 1
    assert eta_naturality(u, 3)
    assert bar_restricts(u)


def test_tilde_is_functorial():
    u = ordinal_map(1, 2, (0, 2))
    v = ordinal_map(2, 3, (0, 1, 3))
    assert tilde_functoriality(v, u, 3)
    for w in list(enumerate_lax_functors(ordinal(2), Z2))[:4]:
        assert tilde_functoriality(w, ordinal_map(1, 2, (0, 1)), 2)


def test_bar_of_transformations():
    A = ordinal(2)
    us = list(enumerate_lax_functors(A, Z2))[:6]
    found = {"lax": 0, "colax": 0}
    for u, v in itertools.product(us, repeat=2):
        for kind in ("lax", "colax"):
            for vals in itertools.product(Z2.twos, repeat=len(A.one_cells)):
                s = Transformation(kind, u, v, {a: "id" for a in A.objects},
                                   dict(zip(A.one_cells, vals)))
                if validate_transformation(s).ok:
                    found[kind] += 1
                    assert validate_bar_transformation(bar_transformation(s), A, 3).ok
    assert found["lax"] and found["colax"]


def test_bar_transformation_detects_bad_components():
    A = ordinal(1)
    u = identity_functor(A)
    s = Transformation("lax", u, u, {0: (0, 0), 1: (1, 1)}, {(0, 0): (0, 0), (1, 1): (1, 1),
                                                            (0, 1): (0, 1)})
    assert validate_transformation(s).ok
    t = bar_transformation(s)
    assert validate_bar_transformation(t, A, 3).ok
    broken = bar_transformation(s)
    broken.obj = lambda a: (0, 1)
    assert not validate_bar_transformation(broken, A, 3).ok


@pytest.mark.parametrize("k", range(4))
def test_op_compatibility(k):
    u = list(enumerate_lax_functors(ordinal(2), Z2))[k]
    assert all(tilde_op_checks(ordinal(2), 3, u).values())


def test_op_compatibility_on_group():
    assert all(tilde_op_checks(Z2, 2, identity_functor(Z2)).values())
