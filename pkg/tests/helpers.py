"""Shared fixtures paths and small builders for the test modules."""
import os
import random

from hypothesis import strategies as st

from artifact.generators import random_2cat
from artifact.kernel import make_category, ordinal
from artifact.morphisms import strict_functor

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def fixture(name):
    return os.path.join(FIXTURES, name)


def random_presentation(seed):
    return random_2cat(random.Random(seed))


def tables(A):
    return (set(A.objects), A.one_cells, A.two_cells, A.comp1, A.vcomp, A.hcomp, A.id1, A.id2)


def ordinal_map(m, n, values):
    """The strict functor ordinal(m) -> ordinal(n) of a monotone map."""
    ob = dict(enumerate(values))
    one = {(i, j): (values[i], values[j]) for i in range(m + 1) for j in range(i, m + 1)}
    return strict_functor(ordinal(m), ordinal(n), ob, one, dict(one))


def monoid(elements, mult, unit):
    """One-object category of a monoid given by a multiplication function."""
    arrows = {e: ("*", "*") for e in elements}
    comp = {(g, f): mult(g, f) for g in elements for f in elements}
    return make_category(["*"], arrows, comp, {"*": unit})


# one summary line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = []
