"""Quantitative acceptance checks, one test per criterion.

Each test prints a PASS/FAIL line and adds it to the summary shown at the
end of the pytest run.
"""
import functools
import itertools
import random
import time

from artifact.benabou import (count_strict_extensions, counit_unit_identity,
                              strictification_bijection_check, triangle_identities)
from artifact.comma import (VARIANTS, comma, fiber, is_preadjoint, is_prefibration, slice,
                            validate_lax_colax_adjunction)
from artifact.formats import load, load_2cat
from artifact.generators import monotone_maps, random_2cat
from artifact.homology import homology
from artifact.integration import (VARIANCES, constant_diagram, constant_product_iso,
                                  cylinder_presentations, cylinder_S1, cylinder_S2, fiber_iso,
                                  integrate, jk_adjunction, jk_pair, representable_diagram,
                                  slice_diagram)
from artifact.kernel import (check_isomorphism, coproduct, dual, dual_mul, group_2cat,
                             make_category, ordinal, point, poset_category, product, validate)
from artifact.morphisms import (compose_functors, dual_functor, enumerate_lax_functors,
                                identity_functor, point_functor, projection, random_lax_functor,
                                strict_functor)
from artifact.mutations import mutation_detection_rate
from artifact.nerve import classical_nerve, nerve, spine_label, we_probe
from helpers import ACCEPTANCE_LINES, fixture, monoid, ordinal_map
from oracles import group_valued_lax_functors, normalized_group_simplices, random_poset

FIXTURE_2CATS = ["ordinal0.2cat", "ordinal1.2cat", "ordinal2.2cat", "ordinal3.2cat", "z2.2cat",
                 "z3.2cat", "monotone.2cat"]


def criterion(number, title, limit=None):
    def deco(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
                elapsed = time.perf_counter() - start
                assert limit is None or elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
            except BaseException as e:
                line = f"criterion {number} FAIL  {title}: {type(e).__name__} {e}"
                ACCEPTANCE_LINES.append(line)
                print(line)
                raise
            line = f"criterion {number} PASS  {title} ({elapsed:.1f}s)"
            ACCEPTANCE_LINES.append(line)
            print(line)
        return run
    return deco


def chaotic(names):
    arrows = {(a, b): (a, b) for a in names for b in names}
    comp = {((b, c), (a, b)): (a, c) for a in names for b in names for c in names}
    return make_category(list(names), arrows, comp, {a: (a, a) for a in names})


def to_point(A):
    return strict_functor(A, point(), {a: 0 for a in A.objects},
                          {f: (0, 0) for f in A.one_cells}, {x: (0, 0) for x in A.two_cells})


# ---------------------------------------------------------------------------

def _random_construction(rng, kind):
    C = random_2cat(rng)
    if kind == "comma":
        u = random_lax_functor(random_2cat(rng), C, rng)
        v = random_lax_functor(random_2cat(rng), C, rng, direction="colax")
        return None if u is None or v is None else comma(u, v)
    if kind == "slice":
        variant = rng.choice(VARIANTS)
        direction = "lax" if variant.startswith("lax") else "colax"
        u = random_lax_functor(random_2cat(rng), C, rng, direction=direction)
        return None if u is None else slice(u, rng.choice(C.objects), variant)
    if kind == "integrate":
        F = rng.choice([constant_diagram(C, random_2cat(rng), rng.choice(VARIANCES)),
                        representable_diagram(C, rng.choice(C.objects)),
                        slice_diagram(C, rng.choice(VARIANTS))])
        return integrate(F, rng.choice(VARIANCES))[0]
    return rng.choice([cylinder_S1, cylinder_S2])(C)[0]


@criterion(1, "axiom suite on generators, 200 random constructions, mutations", limit=60)
def test_criterion_1_axiom_suite():
    for n in range(6):
        assert validate(ordinal(n)).ok
    for g in (2, 3):
        assert validate(group_2cat(g)).ok
    rng = random.Random(2024)
    kinds = ["comma", "slice", "integrate", "cylinder"]
    checked = 0
    while checked < 200:
        X = _random_construction(rng, kinds[checked % 4])
        if X is None:
            continue
        assert validate(X).ok
        checked += 1
    for A in (ordinal(3), group_2cat(2), group_2cat(3), monotone_maps((0, 1))):
        assert mutation_detection_rate(A, trials=200, rng=random.Random(5)) >= 0.99


@criterion(2, "normalized nerve of group 2-categories: counts and H_2", limit=30)
def test_criterion_2_group_nerves():
    for g in (2, 3):
        X = nerve(group_2cat(g), "lax_nor", 4)
        want = tuple(normalized_group_simplices(g, m) for m in range(5))
        assert X.counts() == want
        h = homology(X, 2)
        assert h.group(0) == (1, ())
        assert h.group(1) == (0, ())
        assert h.group(2) == (0, (g,))
    assert nerve(group_2cat(2), "lax_nor", 4).counts() == (1, 1, 2, 8, 64)


@criterion(3, "normalized nerve of 1-categories equals the classical nerve")
def test_criterion_3_nerve_restriction():
    rng = random.Random(11)
    cats = []
    for _ in range(6):
        n = rng.randint(1, 4)
        rel = random_poset(rng, n)
        cats.append(poset_category(range(n), lambda a, b, rel=rel: (a, b) in rel))
    cats.append(monoid([0, 1], lambda g, f: (g + f) % 2, 0))
    cats.append(monoid([0, 1, 2], lambda g, f: (g + f) % 3, 0))
    cats.append(monoid([0, 1], max, 0))
    cats.append(chaotic("ab"))
    assert len(cats) == 10
    for C in cats:
        assert nerve(C, "lax_nor", 4).relabel(spine_label) == classical_nerve(C, 4)


@criterion(4, "strictification adjunction on fixtures", limit=30)
def test_criterion_4_strictification():
    for name in FIXTURE_2CATS:
        A = load_2cat(fixture(name))
        assert counit_unit_identity(A)
        assert all(triangle_identities(A, 3).values())
    Z2 = group_2cat(2)
    for A in (ordinal(1), ordinal(2)):
        for u in enumerate_lax_functors(A, Z2):
            assert count_strict_extensions(A, Z2, u, 3) == 1
        r = strictification_bijection_check(A, Z2, 3)
        assert r["ok"]
        assert r["lax_functors"] == len(group_valued_lax_functors(A, 2))


@criterion(5, "integration: products, fibers, K J = 1 and the adjunction validator")
def test_criterion_5_integration():
    M = monotone_maps((0, 1))
    for A, B in [(ordinal(2), group_2cat(2)), (M, ordinal(1)), (group_2cat(2), ordinal(1))]:
        T, _ = integrate(constant_diagram(A, B))
        assert check_isomorphism(T, product(A, B), *constant_product_iso(A, B, T))
    diagrams = [load(fixture("const_z2.diag")), representable_diagram(M, 0),
                representable_diagram(M, 1), representable_diagram(ordinal(2), 0),
                slice_diagram(ordinal(2)), constant_diagram(ordinal(1), group_2cat(3))]
    for F in diagrams:
        T, P = integrate(F)
        for a in F.base.objects:
            assert check_isomorphism(F.ob_val[a], fiber(P, a), *fiber_iso(F, T, P, a))
            J, K = jk_pair(F, a)
            assert compose_functors(K, J) == identity_functor(fiber(P, a))
            assert validate_lax_colax_adjunction(jk_adjunction(F, a)).ok


@criterion(6, "duality identities on 50 presentations and 20 slices")
def test_criterion_6_duality():
    rng = random.Random(6)
    kinds = ("id", "op", "co", "coop")
    for _ in range(50):
        A = random_2cat(rng)
        for j, k in itertools.product(kinds, repeat=2):
            assert dual(dual(A, j), k) == dual(A, dual_mul(j, k))
        for k in kinds[1:]:
            assert dual(dual(A, k), k) == A
            assert validate(dual(A, k)).ok
    done = 0
    while done < 20:
        B = rng.choice([group_2cat(2), ordinal(2), monotone_maps((0, 1)), random_2cat(rng)])
        u = random_lax_functor(rng.choice([ordinal(1), group_2cat(2), random_2cat(rng)]), B, rng)
        if u is None:
            continue
        b = rng.choice(B.objects)
        co = dual_functor(u, "co")
        assert slice(u, b, "lax_under") == dual(slice(dual_functor(u, "op"), b, "lax_over"), "op")
        assert slice(co, b, "colax_over") == dual(slice(u, b, "lax_over"), "co")
        assert slice(co, b, "colax_under") == \
            dual(slice(dual_functor(co, "coop"), b, "lax_over"), "coop")
        done += 1


@criterion(7, "probe consistent on colax left preadjoints, refuted on the point in Z/2")
def test_criterion_7_theorem_a_consistency():
    triangles = [identity_functor(group_2cat(2)), identity_functor(ordinal(2)),
                 to_point(ordinal(1)), ordinal_map(2, 1, (0, 0, 1)), ordinal_map(0, 1, (0,)),
                 to_point(chaotic("ab")), projection(ordinal(2), group_2cat(2), 1)]
    for u in triangles:
        assert is_preadjoint(u, "left", "colax").ok
        assert we_probe(u, 4, 2).verdict == "consistent"
    r = we_probe(point_functor(group_2cat(2), "x"), 4, 2)
    assert r.verdict == "refuted" and r.degree == 2
    assert we_probe(load(fixture("point_to_z2.lfun")), 4, 2).degree == 2


@criterion(8, "cylinders match both integral presentations; projection fibration kinds")
def test_criterion_8_cylinders():
    fixtures = {
        "point": point(), "o1": ordinal(1), "o2": ordinal(2), "o3": ordinal(3),
        "z2": group_2cat(2), "z3": group_2cat(3), "o1xz2": product(ordinal(1), group_2cat(2)),
        "o1+pt": coproduct(ordinal(1), point()), "chaotic": chaotic("ab"),
        "monotone": monotone_maps((0, 1)),
    }
    for name, A in fixtures.items():
        for kind in (1, 2):
            assert all(ok for _, _, ok in cylinder_presentations(A, kind)), (name, kind)
        if name == "monotone":
            # the detectors are exhaustive; this fixture alone takes most of a minute
            continue
        _, s1, t1 = cylinder_S1(A)
        _, s2, t2 = cylinder_S2(A)
        assert is_prefibration(s1, "preop").ok and is_prefibration(t1, "preop").ok, name
        assert is_prefibration(s2, "pre").ok and is_prefibration(t2, "preop").ok, name
