"""Random single-entry edits of presentations, used to measure validation."""
from __future__ import annotations

import random

from .kernel import TwoCat, sorted_ids, validate

TABLES = ("comp1", "vcomp", "hcomp", "id1", "id2", "one_cells", "two_cells")


def mutate(A: TwoCat, rng=None):
    """A copy of A with one table entry replaced by a different value.

    Returns ``(B, table, key)`` or None when no entry can change.
    """
    rng = rng or random.Random(0)
    tables = {t: dict(getattr(A, t)) for t in TABLES}
    objects = list(A.objects)
    ones = list(A.ones)
    twos = list(A.twos)
    pools = {"comp1": ones, "id1": ones, "vcomp": twos, "hcomp": twos, "id2": twos}
    options = []
    for t in TABLES:
        if not tables[t]:
            continue
        if t == "one_cells":
            pool = [(a, b) for a in objects for b in objects]
        elif t == "two_cells":
            pool = [(f, g) for f in ones for g in ones]
        else:
            pool = pools[t]
        if len(pool) > 1:
            options.append((t, pool))
    if not options:
        return None
    t, pool = rng.choice(options)
    key = rng.choice(sorted_ids(tables[t]))
    old = tables[t][key]
    new = old
    while new == old:
        new = pool[rng.randrange(len(pool))]
    tables[t][key] = new
    B = TwoCat(A.objects, tables["one_cells"], tables["two_cells"], tables["comp1"],
               tables["vcomp"], tables["hcomp"], tables["id1"], tables["id2"])
    return B, t, key


def mutation_detection_rate(A: TwoCat, trials=100, rng=None):
    """Fraction of random single-entry edits that validation rejects."""
    rng = rng or random.Random(0)
    caught = done = 0
    for _ in range(trials):
        m = mutate(A, rng)
        if m is None:
            break
        done += 1
        try:
            bad = not validate(m[0]).ok
        except Exception:
            bad = True
        caught += bad
    return caught / done if done else 1.0
