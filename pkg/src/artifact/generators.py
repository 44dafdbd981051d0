"""Small 2-categories for tests, examples and random sampling."""
from __future__ import annotations

import itertools
import random

from .kernel import TwoCat, group_2cat, ordinal, product, sub_2cat


def _monotone(n, m):
    """Monotone maps [n] -> [m] as tuples."""
    return [t for t in itertools.product(range(m + 1), repeat=n + 1)
            if all(t[i] <= t[i + 1] for i in range(n))]


def monotone_maps(sizes=(0, 1)) -> TwoCat:
    """Chains [n] with monotone maps and pointwise order between them.

    1-cells are ``(n, m, t)``; 2-cells are pairs of parallel 1-cells with
    the source pointwise below the target.  Locally posetal.
    """
    sizes = sorted(set(sizes))
    one = {}
    for n in sizes:
        for m in sizes:
            for t in _monotone(n, m):
                one[(n, m, t)] = (n, m)
    two = {}
    for f, (n, m) in one.items():
        for g, bd in one.items():
            if bd == (n, m) and all(a <= b for a, b in zip(f[2], g[2])):
                two[(f, g)] = (f, g)
    comp1 = {}
    for f, (n, m) in one.items():
        for g, (m2, k) in one.items():
            if m2 == m:
                comp1[(g, f)] = (n, k, tuple(g[2][i] for i in f[2]))
    vcomp = {((g, h), (f, g)): (f, h) for (f, g) in two for (g2, h) in two if g2 == g}
    hcomp = {}
    for (f, g) in two:
        for (f1, g1) in two:
            if one[f1][0] == one[f][1]:
                hcomp[((f1, g1), (f, g))] = (comp1[(f1, f)], comp1[(g1, g)])
    id1 = {n: (n, n, tuple(range(n + 1))) for n in sizes}
    id2 = {f: (f, f) for f in one}
    return TwoCat(sizes, one, two, comp1, vcomp, hcomp, id1, id2)


def random_monotone_sub(rng=None, sizes=(0, 1), keep=0.5, max_tries=50) -> TwoCat:
    """A random sub-2-category of ``monotone_maps(sizes)``.

    A random set of non-identity 1-cells is closed under composition;
    all 2-cells between kept 1-cells are kept.
    """
    rng = rng or random.Random(0)
    M = monotone_maps(sizes)
    objs = list(M.objects)
    nonid = [f for f in M.ones if f not in set(M.id1.values())]
    chosen = {f for f in nonid if rng.random() < keep} | set(M.id1.values())
    changed = True
    while changed:
        changed = False
        for (g, f), h in M.comp1.items():
            if g in chosen and f in chosen and h not in chosen:
                chosen.add(h)
                changed = True
    twos = [x for x, (f, g) in M.two_cells.items() if f in chosen and g in chosen]
    return sub_2cat(M, objs, chosen, twos)


def random_2cat(rng=None) -> TwoCat:
    """Random small 2-category drawn from a few families."""
    rng = rng or random.Random(0)
    kind = rng.randrange(4)
    if kind == 0:
        return ordinal(rng.randrange(4))
    if kind == 1:
        return group_2cat(rng.choice([1, 2, 3]))
    if kind == 2:
        return random_monotone_sub(rng, sizes=rng.choice([(0,), (0, 1), (1,)]))
    return product(ordinal(rng.randrange(2)), group_2cat(rng.choice([1, 2])))
