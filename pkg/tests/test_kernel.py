import itertools
import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from artifact.generators import monotone_maps, random_monotone_sub
from artifact.kernel import (TwoCat, check_isomorphism, coproduct, decode_id, dual, dual_mul,
                             empty, encode_id, find_isomorphism, group_2cat, is_isomorphic,
                             ordinal, pi0, point, poset_category, product, relabel, stringify,
                             tau_b, tau_i, validate)
from artifact.mutations import mutate, mutation_detection_rate
from helpers import random_presentation, seeds, tables

DUALS = ("id", "op", "co", "coop")


@pytest.mark.parametrize("n", range(7))
def test_ordinals_validate(n):
    A = ordinal(n)
    assert validate(A).ok
    # 1-cells of a chain are pairs i <= j; all 2-cells are identities
    assert A.sizes() == (n + 1, comb(n + 2, 2), comb(n + 2, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4, (2, 2)])
def test_group_2cats_validate(n):
    G = group_2cat(n)
    assert validate(G).ok
    assert G.sizes()[:2] == (1, 1)


def test_monotone_maps_validate():
    M = monotone_maps((0, 1))
    assert validate(M).ok
    assert M.sizes() == (2, 7, 11)


def test_empty_and_point():
    assert validate(empty()).ok
    assert point().sizes() == (1, 1, 1)


def test_validate_reports_missing_entry_instead_of_raising():
    A = ordinal(1)
    comp1 = dict(A.comp1)
    del comp1[((1, 1), (0, 1))]
    B = TwoCat(A.objects, A.one_cells, A.two_cells, comp1, A.vcomp, A.hcomp, A.id1, A.id2)
    rep = validate(B)
    assert not rep.ok
    assert "MissingTableEntry" in rep.tags()


def test_validate_catches_broken_interchange():
    # horizontal composition given by subtraction breaks the group structure
    G = group_2cat(3)
    hcomp = {(x, y): (x - y) % 3 for (x, y) in G.hcomp}
    B = TwoCat(G.objects, G.one_cells, G.two_cells, G.comp1, G.vcomp, hcomp, G.id1, G.id2)
    assert not validate(B).ok


@pytest.mark.parametrize("A", [ordinal(2), group_2cat(2), group_2cat(3), monotone_maps((0, 1))],
                         ids=["ordinal2", "z2", "z3", "monotone"])
def test_single_mutations_are_detected(A):
    assert mutation_detection_rate(A, trials=150, rng=random.Random(7)) >= 0.99


def test_mutate_changes_exactly_one_entry():
    A = group_2cat(2)
    B, table, key = mutate(A, random.Random(3))
    assert getattr(A, table)[key] != getattr(B, table)[key]
    diffs = sum(1 for x, y in zip(tables(A), tables(B)) if x != y)
    assert diffs == 1


# -- dualities --------------------------------------------------------------

@given(seeds)
def test_dual_is_involutive(seed):
    A = random_presentation(seed)
    for k in ("op", "co", "coop"):
        assert dual(dual(A, k), k) == A


@given(seeds)
def test_dualities_form_klein_group(seed):
    A = random_presentation(seed)
    for j, k in itertools.product(DUALS, repeat=2):
        assert dual(dual(A, j), k) == dual(A, dual_mul(j, k))
    assert dual(dual(A, "op"), "co") == dual(dual(A, "co"), "op") == dual(A, "coop")


@given(seeds)
def test_duals_validate(seed):
    A = random_presentation(seed)
    for k in ("op", "co", "coop"):
        assert validate(dual(A, k)).ok


def test_ordinal_one_is_self_dual_by_swapping_ends():
    A = ordinal(1)
    ob = {0: 1, 1: 0}
    one = {(0, 0): (1, 1), (1, 1): (0, 0), (0, 1): (0, 1)}
    assert check_isomorphism(dual(A, "op"), A, ob, one, dict(one))
    # the identity relabeling is not an isomorphism
    same = {f: f for f in A.one_cells}
    assert not check_isomorphism(dual(A, "op"), A, {0: 0, 1: 1}, same, dict(same))


def test_ordinal_two_op_found_by_search():
    iso = find_isomorphism(dual(ordinal(2), "op"), ordinal(2))
    assert iso is not None
    assert iso.ob == {0: 2, 1: 1, 2: 0}


# -- products, coproducts ---------------------------------------------------

@given(seeds, seeds)
def test_products_and_coproducts_validate(s1, s2):
    A, B = random_presentation(s1), random_presentation(s2)
    P = product(A, B)
    assert validate(P).ok
    assert P.sizes() == tuple(a * b for a, b in zip(A.sizes(), B.sizes()))
    C = coproduct(A, B)
    assert validate(C).ok
    assert len(pi0(C)) == len(pi0(A)) + len(pi0(B))


def test_product_with_point():
    A = group_2cat(2)
    assert is_isomorphic(product(point(), A), A)


def test_square_of_arrow():
    P = product(ordinal(1), ordinal(1))
    assert P.sizes()[:2] == (4, 9)


def test_coproduct_of_points():
    C = coproduct(point(), point())
    assert len(C.objects) == 2
    assert len(pi0(C)) == 2


# -- truncations and components ---------------------------------------------

@pytest.mark.parametrize("n", [2, 3, (2, 2)])
def test_truncations_of_group(n):
    G = group_2cat(n)
    assert is_isomorphic(tau_b(G), point())
    assert is_isomorphic(tau_i(G), point())
    assert tau_b(G).is_category and tau_i(G).is_category


def test_tau_on_categories_is_identity():
    for A in (ordinal(2), ordinal(4), poset_category("abc", lambda x, y: x <= y)):
        assert tau_i(A) == A
        assert tau_b(A) == A


def test_tau_i_of_locally_posetal_merges_connected_cells():
    M = monotone_maps((0, 1))
    T = tau_i(M)
    assert validate(T).ok
    # Hom(1, 1) has three monotone maps, all related by the pointwise order
    assert len(T.hom(1, 1)) == 1
    assert len(T.hom(0, 1)) == 1


def test_pi0():
    assert len(pi0(ordinal(5))) == 1
    assert len(pi0(group_2cat(3))) == 1
    assert len(pi0(coproduct(ordinal(1), coproduct(point(), group_2cat(2))))) == 3


@given(seeds)
def test_random_monotone_subcategories_validate(seed):
    assert validate(random_monotone_sub(random.Random(seed))).ok


# -- identifiers ------------------------------------------------------------

ids = st.recursive(
    st.one_of(st.integers(-50, 50), st.from_regex(r"[a-z_][a-z0-9_']{0,5}", fullmatch=True)),
    lambda inner: st.lists(inner, max_size=3).map(tuple), max_leaves=8)


@given(ids)
def test_identifier_round_trip(x):
    assert decode_id(encode_id(x)) == x


@pytest.mark.parametrize("bad", ["", "(", "(a,", "a)", "(a b)"])
def test_bad_identifiers_rejected(bad):
    with pytest.raises(ValueError):
        decode_id(bad)


def test_stringify_round_trips_through_relabel():
    A = monotone_maps((0, 1))
    S = stringify(A)
    assert validate(S).ok
    assert relabel(S, decode_id, decode_id, decode_id) == A
