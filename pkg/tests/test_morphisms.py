import itertools
import random

import pytest
from hypothesis import given

from artifact.generators import monotone_maps
from artifact.kernel import group_2cat, ordinal, point, product, validate
from artifact.morphisms import (DirectionMismatch, KindUnsupported, LaxFunctor, Modification,
                                Transformation, compose_functors, compose_transformations_h,
                                compose_transformations_v, constant_functor, dual_functor,
                                dual_transformation, enumerate_lax_functors,
                                homotopy_from_transformation, identity_functor,
                                identity_modification, identity_transformation, projection,
                                random_lax_functor, strict_transformation,
                                structural_cell_chain, structural_cell_chain_right,
                                validate_functor, validate_modification,
                                validate_transformation)
from artifact.nerve import contracting_transformation
from helpers import ordinal_map, random_presentation, seeds
from oracles import group_valued_lax_functors

Z2 = group_2cat(2)


def normalized_into_group(m, n, cells):
    """Normalized lax [m] -> group_2cat(n); ``cells`` sets x_{k,j,i} for i<j<k."""
    P, G = ordinal(m), group_2cat(n)
    ones = {f: "id" for f in P.one_cells}
    comp = {}
    for ((j, k), (i, j2)) in P.comp1:
        comp[((j, k), (i, j2))] = cells.get((k, j, i), 0)
    return LaxFunctor(P, G, {i: "x" for i in P.objects}, ones, {f: 0 for f in P.one_cells},
                      comp, {i: 0 for i in P.objects})


def test_identity_functor_valid():
    for A in (ordinal(3), Z2, monotone_maps((0, 1))):
        assert validate_functor(identity_functor(A)).ok
        assert validate_functor(identity_functor(A, "colax")).ok


@pytest.mark.parametrize("g", [0, 1, 2])
def test_single_comp_cell_on_two_simplex_is_valid(g):
    u = normalized_into_group(2, 3, {(2, 1, 0): g})
    assert validate_functor(u).ok
    assert u.is_normalized


def test_cocycle_violation_detected():
    # x_{3,1,0} + x_{3,2,1} = x_{3,2,0} + x_{2,1,0} fails when only x_{3,2,1} is set
    u = normalized_into_group(3, 2, {(3, 2, 1): 1})
    rep = validate_functor(u)
    assert "CocycleViolation" in rep.tags()


def test_unit_violation_detected():
    u = normalized_into_group(1, 2, {})
    u = u.replace(unit={0: 1, 1: 0})
    assert not validate_functor(u).ok


def test_boundary_mismatch_detected():
    u = identity_functor(ordinal(2))
    one = dict(u.one)
    one[(0, 1)] = (1, 2)
    assert "BoundaryMismatch" in validate_functor(u.replace(one=one)).tags()


@pytest.mark.parametrize("m,n,normalized", [
    (0, 2, False), (1, 2, False), (2, 2, False), (0, 3, False), (1, 3, False),
    (2, 2, True), (3, 2, True), (2, 3, True), (3, 3, True)])
def test_enumeration_matches_brute_force(m, n, normalized):
    got = list(enumerate_lax_functors(ordinal(m), group_2cat(n), normalized=normalized))
    assert len(got) == len(group_valued_lax_functors(ordinal(m), n, normalized))
    assert all(validate_functor(u).ok for u in got)
    assert len({repr(sorted(u.comp.items())) + repr(sorted(u.unit.items())) for u in got}) == len(got)


def test_enumeration_of_colax_functors_validates():
    got = list(enumerate_lax_functors(ordinal(1), Z2, direction="colax"))
    assert got and all(u.direction == "colax" and validate_functor(u).ok for u in got)


def oracle_keys(C, n, normalized=False):
    return {(tuple(sorted(c.items())), tuple(sorted(e.items())))
            for c, e in group_valued_lax_functors(C, n, normalized)}


@given(seeds)
def test_validation_agrees_with_oracle_after_mutation(seed):
    rng = random.Random(seed)
    A = ordinal(rng.randrange(1, 3))
    n = rng.choice([2, 3]) if len(A.objects) == 2 else 2
    B = group_2cat(n)
    u = random_lax_functor(A, B, rng)
    table = rng.choice(["comp", "unit"])
    entries = dict(getattr(u, table))
    key = rng.choice(sorted(entries, key=repr))
    entries[key] = (entries[key] + rng.randrange(1, n)) % n
    w = u.replace(**{table: entries})
    key = (tuple(sorted(w.comp.items())), tuple(sorted(w.unit.items())))
    assert validate_functor(w).ok == (key in oracle_keys(A, n))


def test_mutating_constrained_cells_is_detected():
    # on [3] every unit-adjacent cell is tied to the unit cells
    for u in enumerate_lax_functors(ordinal(3), Z2, limit=20, rng=random.Random(1)):
        for a in u.source.objects:
            w = u.replace(unit={**u.unit, a: 1 - u.unit[a]})
            assert not validate_functor(w).ok


# -- composition ------------------------------------------------------------

def test_compose_with_identity():
    u = normalized_into_group(2, 2, {(2, 1, 0): 1})
    assert compose_functors(identity_functor(Z2), u) == u
    assert compose_functors(u, identity_functor(ordinal(2))) == u


def test_strict_composites_stay_strict():
    u = ordinal_map(1, 2, (0, 2))
    v = ordinal_map(2, 3, (0, 1, 3))
    w = compose_functors(v, u)
    assert w.is_strict and validate_functor(w).ok
    assert w.ob == {0: 0, 1: 3}


def test_composite_structural_cells_entrywise():
    us = list(enumerate_lax_functors(ordinal(2), Z2, normalized=True))
    vs = [v for v in enumerate_lax_functors(Z2, Z2) if not v.is_strict]
    assert vs
    for u, v in itertools.product(us, vs):
        w = compose_functors(v, u)
        assert validate_functor(w).ok
        for (g, f), c in u.comp.items():
            assert w.comp[(g, f)] == (v.two[c] + v.comp[(u.one[g], u.one[f])]) % 2


@given(seeds)
def test_composition_associative(seed):
    rng = random.Random(seed)
    A, B, C, D = ordinal(2), Z2, Z2, group_2cat(2)
    u = random_lax_functor(A, B, rng)
    v = random_lax_functor(B, C, rng)
    w = random_lax_functor(C, D, rng)
    assert compose_functors(w, compose_functors(v, u)) == compose_functors(compose_functors(w, v), u)


def test_direction_mismatch():
    with pytest.raises(DirectionMismatch):
        compose_functors(identity_functor(Z2, "colax"), identity_functor(Z2, "lax"))


# -- duality ----------------------------------------------------------------

@given(seeds)
def test_dual_functor_involutive_and_valid(seed):
    rng = random.Random(seed)
    u = random_lax_functor(ordinal(rng.randrange(3)), group_2cat(rng.choice([2, 3])), rng)
    for k in ("op", "co", "coop"):
        d = dual_functor(u, k)
        assert validate_functor(d).ok
        assert dual_functor(d, k) == u
    assert dual_functor(u, "co").direction == "colax"
    assert dual_functor(u, "op").direction == "lax"


def test_dual_of_strict_is_strict():
    u = ordinal_map(1, 3, (1, 2))
    for k in ("op", "co", "coop"):
        assert dual_functor(u, k).is_strict


@given(seeds)
def test_dual_commutes_with_composition(seed):
    rng = random.Random(seed)
    u = random_lax_functor(ordinal(2), Z2, rng)
    v = random_lax_functor(Z2, Z2, rng)
    for k in ("op", "co", "coop"):
        assert dual_functor(compose_functors(v, u), k) == \
            compose_functors(dual_functor(v, k), dual_functor(u, k))


def test_dual_of_strict_transformation():
    u = ordinal_map(0, 1, (0,))
    v = ordinal_map(0, 1, (1,))
    s = strict_transformation(u, v, {0: (0, 1)})
    for k in ("op", "co", "coop"):
        d = dual_transformation(s, k)
        assert d.kind == "strict" and d.is_strict
        assert d.obj == s.obj and d.one == s.one
        assert validate_transformation(d).ok


# -- transformations --------------------------------------------------------

def test_identity_transformation_valid():
    for u in enumerate_lax_functors(ordinal(2), Z2):
        assert validate_transformation(identity_transformation(u)).ok


@pytest.mark.parametrize("A", [ordinal(3), monotone_maps((0, 1)), product(ordinal(1), ordinal(1))],
                         ids=["ordinal3", "monotone", "square"])
def test_contracting_transformation(A):
    s = contracting_transformation(A)
    assert s.kind == "lax"
    assert validate_transformation(s).ok


def test_wrong_boundary_component_is_detected():
    A = monotone_maps((0, 1))
    s = contracting_transformation(A)
    for f in A.one_cells:
        for y in A.two_cells:
            if A.two_cells[y] != A.two_cells[s.one[f]]:
                bad = s.replace(one={**s.one, f: y})
                assert "BoundaryMismatch" in validate_transformation(bad).tags()
                break


def test_mutated_component_in_group_target():
    us = list(enumerate_lax_functors(ordinal(2), Z2, normalized=True))
    found = 0
    for u, v in itertools.product(us, us):
        for vals in itertools.product([0, 1], repeat=6):
            s = Transformation("lax", u, v, {i: "id" for i in range(3)},
                               dict(zip(sorted(u.source.one_cells), vals)))
            if validate_transformation(s).ok:
                f = (0, 1)
                bad = s.replace(one={**s.one, f: 1 - s.one[f]})
                assert "NaturalityViolation" in validate_transformation(bad).tags()
                found += 1
    assert found


def test_vertical_composition_unit():
    u = ordinal_map(1, 2, (0, 1))
    v = ordinal_map(1, 2, (1, 2))
    s = strict_transformation(u, v, {0: (0, 1), 1: (1, 2)})
    assert validate_transformation(s).ok
    assert compose_transformations_v(s, identity_transformation(u)) == s
    assert compose_transformations_v(identity_transformation(v), s) == s


def test_horizontal_composition_formula():
    # u, v: [1] -> [2]; u2, v2: [2] -> [3]
    u, v = ordinal_map(1, 2, (0, 1)), ordinal_map(1, 2, (1, 2))
    u2, v2 = ordinal_map(2, 3, (0, 1, 2)), ordinal_map(2, 3, (1, 2, 3))
    s = strict_transformation(u, v, {0: (0, 1), 1: (1, 2)})
    s2 = strict_transformation(u2, v2, {i: (i, i + 1) for i in range(3)})
    h = compose_transformations_h(s2, s)
    assert validate_transformation(h).ok
    C = u2.target
    for a in u.source.objects:
        assert h.obj[a] == C.c1(s2.obj[v.ob[a]], u2.one[s.obj[a]])
    assert h.obj == {0: (0, 2), 1: (1, 3)}


def test_horizontal_composite_of_identities():
    u, u2 = ordinal_map(1, 2, (0, 2)), ordinal_map(2, 3, (0, 1, 3))
    h = compose_transformations_h(identity_transformation(u2), identity_transformation(u))
    assert h == identity_transformation(compose_functors(u2, u))


def test_non_strict_composition_rejected():
    s = contracting_transformation(ordinal(2))
    with pytest.raises(KindUnsupported):
        compose_transformations_v(s, s)


def test_modifications():
    s = contracting_transformation(monotone_maps((0, 1)))
    m = identity_modification(s)
    assert validate_modification(m).ok
    B = s.source.target
    wrong = next(x for x in B.two_cells if B.two_cells[x] != B.two_cells[m.comp[0]])
    bad = Modification(s, s, {**m.comp, 0: wrong})
    assert not validate_modification(bad).ok


# -- homotopies -------------------------------------------------------------

def restrict(h, end, A):
    """The restriction of a functor on [1] x A to {end} x A."""
    e = (end, end)
    return LaxFunctor(A, h.target, {a: h.ob[(end, a)] for a in A.objects},
                      {f: h.one[(e, f)] for f in A.one_cells},
                      {x: h.two[(e, x)] for x in A.two_cells},
                      {(g, f): h.comp[((e, g), (e, f))] for (g, f) in A.comp1},
                      {a: h.unit[(end, a)] for a in A.objects})


def test_homotopy_of_identity_is_projection():
    for u in enumerate_lax_functors(ordinal(2), Z2, limit=6):
        h = homotopy_from_transformation(identity_transformation(u))
        assert validate_functor(h).ok
        assert h == compose_functors(u, projection(ordinal(1), ordinal(2), 1))


def test_strict_homotopy_is_strict():
    u, v = ordinal_map(1, 2, (0, 1)), ordinal_map(1, 2, (1, 2))
    s = strict_transformation(u, v, {0: (0, 1), 1: (1, 2)})
    h = homotopy_from_transformation(s)
    assert h.is_strict and validate_functor(h).ok


@pytest.mark.parametrize("A", [ordinal(2), monotone_maps((0, 1))], ids=["ordinal2", "monotone"])
def test_homotopy_to_constant(A):
    s = contracting_transformation(A)
    h = homotopy_from_transformation(s)
    assert validate_functor(h).ok
    assert restrict(h, 0, A) == identity_functor(A)
    assert restrict(h, 1, A) == constant_functor(A, A, s.target.ob[A.objects[0]])


def test_homotopy_of_group_valued_transformations():
    us = list(enumerate_lax_functors(ordinal(1), Z2))
    for u, v in itertools.product(us, us):
        for kind in ("lax", "colax"):
            for vals in itertools.product([0, 1], repeat=3):
                s = Transformation(kind, u, v, {0: "id", 1: "id"},
                                   dict(zip(sorted(u.source.one_cells), vals)))
                if not validate_transformation(s).ok:
                    continue
                h = homotopy_from_transformation(s)
                assert validate_functor(h).ok
                assert restrict(h, 0, u.source) == u and restrict(h, 1, u.source) == v


# -- structural cells of chains ---------------------------------------------

def test_chain_cells_short():
    u = normalized_into_group(2, 2, {(2, 1, 0): 1})
    assert structural_cell_chain(u, [(0, 1)]) == 0
    w = next(w for w in enumerate_lax_functors(ordinal(1), Z2) if w.unit[0] == 1)
    assert structural_cell_chain(w, [], obj=0) == 1
    assert structural_cell_chain(u, [(0, 1), (1, 2)]) == 1


@pytest.mark.parametrize("n", [2, 3])
def test_chain_cells_parenthesization_invariant(n):
    P = ordinal(4)
    chains = [[(i, i + 1) for i in range(k, k + L)] for L in range(1, 5) for k in range(5 - L)]
    chains.append([(0, 0), (0, 2), (2, 2), (2, 4)])
    for u in enumerate_lax_functors(P, group_2cat(n), limit=40, rng=random.Random(n)):
        for c in chains:
            assert structural_cell_chain(u, c) == structural_cell_chain_right(u, c)


def test_chain_cells_in_fixture_categories():
    A = monotone_maps((0, 1))
    u = identity_functor(A)
    f = next(f for f, (s, t) in A.one_cells.items() if s == 0 and t == 1)
    g = next(g for g, (s, t) in A.one_cells.items() if s == 1 and t == 1 and g != A.id1[1])
    for chain in ([f], [f, g], [f, g, g], [A.id1[0], f, g, A.id1[1]]):
        assert structural_cell_chain(u, chain) == structural_cell_chain_right(u, chain)
        assert A.is_id2(structural_cell_chain(u, chain))


@given(seeds)
def test_random_presentations_identity_valid(seed):
    A = random_presentation(seed)
    assert validate(A).ok
    assert validate_functor(identity_functor(A)).ok


def test_point_functor():
    u = constant_functor(point(), Z2, "x")
    assert validate_functor(u).ok and u.is_strict
