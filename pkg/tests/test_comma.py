import itertools
import random

import pytest
from hypothesis import given

from artifact.comma import (PREFIBRATION_KINDS, VARIANTS, DirectionMismatch, LaxColaxAdjunction,
                            NotStrict, TargetMismatch,
                            comma, fiber, fiber_J, has_object_admitting_final, hom_final,
                            has_object_admitting_initial, identity_adjunction,
                            induced_comma_morphism, induced_slice_morphism, is_preadjoint,
                            is_prefibration, slice, validate_lax_colax_adjunction)
from artifact.generators import monotone_maps
from artifact.kernel import (coproduct, dual, group_2cat, is_isomorphic, make_category, ordinal,
                             point, validate)
from artifact.morphisms import (compose_functors, compose_transformations_v, constant_functor,
                                dual_functor, dual_transformation, enumerate_lax_functors,
                                identity_functor, identity_transformation, projection,
                                random_lax_functor, strict_transformation, validate_functor)
from helpers import ordinal_map, random_presentation, seeds

Z2 = group_2cat(2)
FLAVORS = [(s, f) for s in ("left", "right") for f in ("lax", "colax")]


def chaotic(names):
    """The category with exactly one arrow between any two objects."""
    arrows = {(a, b): (a, b) for a in names for b in names}
    comp = {((b, c), (a, b)): (a, c) for a in names for b in names for c in names}
    return make_category(names, arrows, comp, {a: (a, a) for a in names})


def test_comma_of_point_identities():
    e = point()
    K = comma(identity_functor(e), identity_functor(e, "colax"))
    assert validate(K).ok
    assert is_isomorphic(K, e)


def test_arrow_category_of_arrow():
    A = ordinal(1)
    K = comma(identity_functor(A), identity_functor(A, "colax"))
    assert validate(K).ok
    assert len(K.objects) == 3
    assert all(A.one_cells[r] == (a, b) for (a, b, r) in K.objects)


@given(seeds)
def test_random_commas_validate(seed):
    rng = random.Random(seed)
    C = rng.choice([Z2, ordinal(2), monotone_maps((0, 1))])
    A = rng.choice([ordinal(1), ordinal(2), point()])
    u = random_lax_functor(A, C, rng)
    v = random_lax_functor(ordinal(rng.randrange(2)), C, rng, direction="colax")
    assert validate(comma(u, v)).ok


def test_comma_target_mismatch():
    with pytest.raises(TargetMismatch):
        comma(identity_functor(Z2), identity_functor(ordinal(1), "colax"))


# -- slices -----------------------------------------------------------------

@pytest.mark.parametrize("A", [ordinal(2), Z2, monotone_maps((0, 1))], ids=["ordinal2", "z2", "monotone"])
def test_colax_slice_of_identity_has_final_witness(A):
    for a in A.objects:
        S = slice(identity_functor(A, "colax"), a, "colax_over")
        assert validate(S).ok
        top = (a, A.id1[a])
        assert top in S.objects
        assert all(hom_final(S, o, top) is not None for o in S.objects)
        assert has_object_admitting_final(S) is not None


def test_slice_sizes():
    A = ordinal(1)
    assert len(slice(identity_functor(A), 1, "lax_over").objects) == 2
    # nothing but the identity points into 0
    assert len(slice(identity_functor(ordinal(2)), 0, "lax_over").objects) == 1


@given(seeds)
def test_random_slices_validate(seed):
    rng = random.Random(seed)
    B = rng.choice([Z2, ordinal(2), monotone_maps((0, 1))])
    A = rng.choice([ordinal(1), ordinal(2), Z2])
    variant = rng.choice(VARIANTS)
    direction = "lax" if variant.startswith("lax") else "colax"
    u = random_lax_functor(A, B, rng, direction=direction)
    if u is None:
        return
    b = rng.choice(B.objects)
    assert validate(slice(u, b, variant)).ok


@given(seeds)
def test_slice_variant_duality_formulas(seed):
    rng = random.Random(seed)
    B = rng.choice([Z2, ordinal(2), monotone_maps((0, 1))])
    u = random_lax_functor(rng.choice([ordinal(1), Z2]), B, rng)
    b = rng.choice(B.objects)
    ucol = dual_functor(u, "co")
    # colax_over of a colax functor is the co-dual of lax_over of its co-dual
    assert slice(ucol, b, "colax_over") == dual(slice(dual_functor(ucol, "co"), b, "lax_over"), "co")
    assert slice(u, b, "lax_under") == dual(slice(dual_functor(u, "op"), b, "lax_over"), "op")
    ucp = dual_functor(u, "co")
    assert slice(ucp, b, "colax_under") == \
        dual(slice(dual_functor(ucp, "coop"), b, "lax_over"), "coop")


def test_slice_direction_checked():
    u = next(w for w in enumerate_lax_functors(ordinal(2), Z2) if not w.is_strict)
    with pytest.raises(DirectionMismatch):
        slice(u, "x", "colax_over")


def classical_comma_arrows(C, b):
    """Morphisms of C/b counted directly: f: a -> a' with p' f = p."""
    count = 0
    for (p, (a, t)), (p1, (a1, t1)) in itertools.product(C.one_cells.items(), repeat=2):
        if t == b and t1 == b:
            count += sum(1 for f in C.hom(a, a1) if C.comp1[(p1, f)] == p)
    return count


@pytest.mark.parametrize("C", [ordinal(3), chaotic(["a", "b", "c"]),
                               make_category(["x"], {"1": ("x", "x"), "e": ("x", "x")},
                                             {("1", "1"): "1", ("1", "e"): "e",
                                              ("e", "1"): "e", ("e", "e"): "e"}, {"x": "1"})],
                         ids=["ordinal3", "chaotic", "idempotent"])
def test_slice_of_category_is_classical(C):
    for b in C.objects:
        S = slice(identity_functor(C), b, "lax_over")
        assert S.is_category
        assert len(S.objects) == sum(len(C.hom(a, b)) for a in C.objects)
        assert len(S.one_cells) == classical_comma_arrows(C, b)


# -- induced morphisms ------------------------------------------------------

def test_induced_comma_morphism_of_identity():
    A = monotone_maps((0, 1))
    u = identity_functor(A)
    v = identity_functor(A, "colax")
    F = induced_comma_morphism(identity_transformation(u), v)
    assert F == identity_functor(comma(u, v))


def test_induced_comma_morphism_objects_and_composites():
    # two strict maps [1] -> [2] with σ: u => u' and σ': u' => u''
    u, u1, u2 = ordinal_map(1, 2, (0, 1)), ordinal_map(1, 2, (1, 1)), ordinal_map(1, 2, (1, 2))
    s = strict_transformation(u, u1, {0: (0, 1), 1: (1, 1)})
    s1 = strict_transformation(u1, u2, {0: (1, 1), 1: (1, 2)})
    v = identity_functor(ordinal(2), "colax")
    F = induced_comma_morphism(s, v)
    F1 = induced_comma_morphism(s1, v)
    assert validate_functor(F).ok and F.is_strict
    C = ordinal(2)
    for (a, b, r) in F.source.objects:
        assert F.ob[(a, b, r)] == (a, b, C.c1(r, s.obj[a]))
    both = induced_comma_morphism(compose_transformations_v(s1, s), v)
    assert compose_functors(F, F1) == both


def test_induced_slice_morphism_identity():
    A = ordinal(2)
    i = identity_functor(A)
    for c in A.objects:
        F = induced_slice_morphism(i, i, i, identity_transformation(i), c)
        assert F == identity_functor(slice(i, c, "lax_over"))


def test_induced_slice_morphism_strict_triangle():
    u = ordinal_map(1, 2, (0, 2))
    v = ordinal_map(2, 3, (0, 1, 3))
    w = compose_functors(v, u)
    for c in w.target.objects:
        F = induced_slice_morphism(u, v, w, identity_transformation(w), c)
        assert F.is_strict and validate_functor(F).ok


def test_induced_slice_morphism_duality():
    u = ordinal_map(1, 2, (0, 2))
    v = ordinal_map(2, 3, (0, 1, 3))
    w = compose_functors(v, u)
    s = identity_transformation(w)
    for c in w.target.objects:
        lhs = induced_slice_morphism(u, v, w, s, c, "lax_under")
        op = lambda f: dual_functor(f, "op")
        rhs = dual_functor(induced_slice_morphism(op(u), op(v), op(w),
                                                  dual_transformation(s, "op"), c), "op")
        assert lhs == rhs
        assert validate_functor(lhs).ok


def test_induced_slice_morphism_with_non_identity_sigma():
    # σ: vu => w for u = 1, v, w: [1] -> [2] with v below w pointwise
    v, w = ordinal_map(1, 2, (0, 1)), ordinal_map(1, 2, (1, 2))
    s = strict_transformation(v, w, {0: (0, 1), 1: (1, 2)})
    i = identity_functor(ordinal(1))
    for c in (1, 2):
        F = induced_slice_morphism(i, v, w, s, c)
        assert validate_functor(F).ok


# -- fibers -----------------------------------------------------------------

def test_fiber_of_projection():
    A, B = ordinal(1), Z2
    p = projection(A, B, 0)
    for a in A.objects:
        assert is_isomorphic(fiber(p, a), B)


def test_fiber_commutes_with_op():
    u = ordinal_map(2, 1, (0, 0, 1))
    for b in (0, 1):
        assert fiber(dual_functor(u, "op"), b) == dual(fiber(u, b), "op")


def test_fiber_inclusion():
    p = projection(ordinal(1), ordinal(1), 0)
    for variant in VARIANTS:
        J = fiber_J(p, 0, variant)
        assert validate_functor(J).ok and J.is_strict
        assert all(J.ob[a][1] == (0, 0) for a in J.source.objects)


# -- witnesses --------------------------------------------------------------

@pytest.mark.parametrize("n", range(5))
def test_ordinal_final_witness(n):
    w = has_object_admitting_final(ordinal(n))
    assert w is not None and w.z == n
    # hom-posets are empty or a point, so initial and final agree
    assert has_object_admitting_initial(ordinal(n)).z == n


@pytest.mark.parametrize("n", [2, 3])
def test_group_has_no_final_witness(n):
    G = group_2cat(n)
    assert has_object_admitting_final(G) is None
    # brute force: the only hom-category has n parallel 2-cells on one object
    assert len(G.cells2("id", "id")) == n


def test_final_witness_choice_is_first_in_order():
    C = chaotic(["a", "b"])
    assert has_object_admitting_final(C).z == "a"


def test_identity_is_preadjoint():
    for A in (ordinal(2), Z2, monotone_maps((0, 1))):
        for side, flavor in FLAVORS:
            assert is_preadjoint(identity_functor(A, flavor), side, flavor).ok


def test_equivalence_is_preadjoint():
    e = constant_functor(chaotic(["a", "b"]), point(), 0)
    for side, flavor in FLAVORS:
        v = is_preadjoint(e, side, flavor)
        assert v.ok and all(w is not None for w in v.witnesses.values())


def test_codiagonal_is_not_preadjoint():
    two = coproduct(point(), point())
    e = constant_functor(two, point(), 0)
    for side, flavor in FLAVORS:
        assert not is_preadjoint(e, side, flavor).ok


def test_preadjoints_compose():
    u = ordinal_map(2, 1, (0, 0, 1))
    v = ordinal_map(1, 0, (0, 0))
    w = ordinal_map(3, 2, (0, 1, 1, 2))
    e = constant_functor(chaotic(["a", "b"]), point(), 0)
    pairs = [(u, v), (w, u), (e, identity_functor(point()))]
    for f, g in pairs:
        assert is_preadjoint(f, "left", "colax").ok and is_preadjoint(g, "left", "colax").ok
        assert is_preadjoint(compose_functors(g, f), "left", "colax").ok


def test_preadjoint_witnesses_match_detectors():
    u = ordinal_map(2, 1, (0, 0, 1))
    v = is_preadjoint(u, "left", "colax")
    for b, w in v.witnesses.items():
        assert w is not None
        assert w == has_object_admitting_final(slice(u, b, "colax_over"))


def test_projection_is_prefibration():
    for A, B in [(ordinal(1), Z2), (ordinal(2), ordinal(1)), (Z2, ordinal(1))]:
        p = projection(A, B, 0)
        for kind in PREFIBRATION_KINDS:
            assert is_prefibration(p, kind).ok


def test_inclusion_of_end_is_only_half_prefibration():
    top = ordinal_map(0, 1, (1,))
    kinds = {k: is_prefibration(top, k).ok for k in PREFIBRATION_KINDS}
    assert kinds == {"pre": False, "preop": True, "preco": False, "precoop": True}


def test_prefibration_needs_strict():
    u = next(w for w in enumerate_lax_functors(ordinal(2), Z2) if not w.is_strict)
    with pytest.raises(NotStrict):
        is_prefibration(u)


# -- lax-colax adjunctions --------------------------------------------------

@pytest.mark.parametrize("A", [ordinal(2), Z2, monotone_maps((0, 1))], ids=["ordinal2", "z2", "monotone"])
def test_identity_adjunction(A):
    assert validate_lax_colax_adjunction(identity_adjunction(A)).ok


def test_mutated_counit_detected():
    d = identity_adjunction(Z2)
    bad = LaxColaxAdjunction(d.u, d.v, d.p, d.p_one, d.q, d.q_one, d.sigma, {"x": 1})
    tags = validate_lax_colax_adjunction(bad).tags()
    assert tags & {"ALCViolation(8)", "ALCViolation(9)", "ALCViolation(10)"}


@given(seeds)
def test_random_presentation_slices_of_identity(seed):
    A = random_presentation(seed)
    for a in A.objects[:2]:
        for variant in VARIANTS:
            direction = "lax" if variant.startswith("lax") else "colax"
            assert validate(slice(identity_functor(A, direction), a, variant)).ok
