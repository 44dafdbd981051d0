"""Brute-force reference computations, written without the library's algorithms.

Everything here works on plain dicts and tuples and re-derives the answer by
exhaustive search or elementary linear algebra, so agreement with the
library is meaningful.
"""
import itertools
from fractions import Fraction


# ---------------------------------------------------------------------------
# lax functors from a 1-category into a one-object abelian-group 2-category

def group_valued_lax_functors(C, n, normalized=False):
    """All lax functors C -> group_2cat(n) for a 1-category C, by product search.

    A functor is fixed by one group element per composable pair (the
    composition cell) and one per object (the unit cell); the conditions are
    the additive forms of the cocycle and both unit laws.
    """
    pairs = sorted(C.comp1, key=repr)
    objs = sorted(C.objects, key=repr)
    ids = set(C.id1.values())
    free_pairs = [p for p in pairs if not (normalized and (p[0] in ids or p[1] in ids))]
    free_objs = [] if normalized else objs
    triples = [(h, g, f) for (g, f) in pairs for (h, g2) in pairs if g2 == g]
    out = []
    for vals in itertools.product(range(n), repeat=len(free_pairs) + len(free_objs)):
        c = {p: 0 for p in pairs}
        c.update(zip(free_pairs, vals))
        e = {a: 0 for a in objs}
        e.update(zip(free_objs, vals[len(free_pairs):]))
        ok = True
        for h, g, f in triples:
            hg, gf = C.comp1[(h, g)], C.comp1[(g, f)]
            if (c[(hg, f)] + c[(h, g)] - c[(h, gf)] - c[(g, f)]) % n:
                ok = False
                break
        if ok:
            for f, (a, b) in C.one_cells.items():
                if (c[(f, C.id1[a])] + e[a]) % n or (c[(C.id1[b], f)] + e[b]) % n:
                    ok = False
                    break
        if ok:
            out.append((c, e))
    return out


def normalized_group_simplices(n, m):
    """Number of normalized lax functors [m] -> group_2cat(n).

    Only the cells x_{k,j,i} with i < j < k are free, subject to
    x_{l,j,i} + x_{l,k,j} = x_{l,k,i} + x_{k,j,i} for i < j < k < l.
    """
    trip = list(itertools.combinations(range(m + 1), 3))
    count = 0
    for vals in itertools.product(range(n), repeat=len(trip)):
        x = dict(zip(trip, vals))
        if all((x[(i, j, l)] + x[(j, k, l)] - x[(i, k, l)] - x[(i, j, k)]) % n == 0
               for i, j, k, l in itertools.combinations(range(m + 1), 4)):
            count += 1
    return count


# ---------------------------------------------------------------------------
# classical nerves

def composable_chains(C, m):
    """Sequences of m composable arrows of a 1-category (m = 0: objects)."""
    if m == 0:
        return [((a,), ()) for a in C.objects]
    out = []
    for arrows in itertools.product(list(C.one_cells), repeat=m):
        if all(C.one_cells[arrows[i]][1] == C.one_cells[arrows[i + 1]][0]
               for i in range(m - 1)):
            obs = (C.one_cells[arrows[0]][0],) + tuple(C.one_cells[f][1] for f in arrows)
            out.append((obs, tuple(arrows)))
    return out


def chain_face(C, chain, i):
    """The i-th face of a chain of composable arrows."""
    obs, arrows = chain
    m = len(arrows)
    if i == 0:
        return obs[1:], arrows[1:]
    if i == m:
        return obs[:-1], arrows[:-1]
    merged = C.comp1[(arrows[i], arrows[i - 1])]
    return obs[:i] + obs[i + 1:], arrows[:i - 1] + (merged,) + arrows[i + 1:]


# ---------------------------------------------------------------------------
# functors on ordinals, decoded from the flat simplex layout

def decode_simplex(x):
    """Dicts ob[i], one[(i, j)], comp[(i, j, k)], unit[i] from a simplex."""
    m = len(x.obs) - 1
    pairs = [(i, j) for j in range(m + 1) for i in range(j + 1)]
    trips = [(i, j, k) for k in range(m + 1) for j in range(k + 1) for i in range(j + 1)]
    return (dict(enumerate(x.obs)), dict(zip(pairs, x.ones)),
            dict(zip(trips, x.comps)), dict(enumerate(x.units)))


def pull_back(decoded, theta):
    """The functor decoded, restricted along a monotone theta given as a tuple."""
    ob, one, comp, unit = decoded
    n = len(theta) - 1
    return ({i: ob[theta[i]] for i in range(n + 1)},
            {(i, j): one[(theta[i], theta[j])] for i in range(n + 1) for j in range(i, n + 1)},
            {(i, j, k): comp[(theta[i], theta[j], theta[k])]
             for i in range(n + 1) for j in range(i, n + 1) for k in range(j, n + 1)},
            {i: unit[theta[i]] for i in range(n + 1)})


def same_functor(decoded, x):
    return decoded == decode_simplex(x)


# ---------------------------------------------------------------------------
# homology from unnormalized chains

def _rank(rows, p=None):
    """Rank over Q (p None) or over F_p, by plain Gaussian elimination."""
    if p is None:
        M = [[Fraction(v) for v in r] for r in rows]
    else:
        M = [[v % p for v in r] for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = 1 / M[rank][c] if p is None else pow(M[rank][c], -1, p)
        for r in range(len(M)):
            if r != rank and M[r][c]:
                f = M[r][c] * inv
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
                if p is not None:
                    M[r] = [a % p for a in M[r]]
        rank += 1
    return rank


def unnormalized_boundaries(counts, face_index, top):
    """Matrices of the alternating face sums on all simplices up to ``top``."""
    mats = {}
    for k in range(1, top + 1):
        rows = [[0] * counts[k] for _ in range(counts[k - 1])]
        for c in range(counts[k]):
            for i in range(k + 1):
                rows[face_index(k, c, i)][c] += (-1) ** i
        mats[k] = rows
    return mats


def betti(counts, mats, k, p=None):
    """dim H_k with coefficients Q or F_p of the unnormalized complex."""
    r_in = _rank(mats[k], p) if k >= 1 else 0
    r_out = _rank(mats[k + 1], p)
    return counts[k] - r_in - r_out


def homology_profile(counts, face_index, k_max, primes=(2, 3)):
    """Per degree: (free rank, {p: number of p-primary cyclic summands})."""
    mats = unnormalized_boundaries(counts, face_index, k_max + 1)
    out = []
    prev = {p: 0 for p in primes}
    for k in range(k_max + 1):
        free = betti(counts, mats, k)
        tors = {}
        for p in primes:
            # universal coefficients: dim H_k(F_p) = free + t_p(H_k) + t_p(H_{k-1})
            tors[p] = betti(counts, mats, k, p) - free - prev[p]
        out.append((free, tors))
        prev = tors
    return out


def sset_profile(X, k_max, primes=(2, 3)):
    counts = X.counts()
    return homology_profile(counts, lambda k, c, i: X.faces[k][c][i], k_max, primes)


def profile_of(result, primes=(2, 3)):
    """The same summary computed from a library homology result."""
    out = []
    for k in range(len(result.ranks)):
        tors = {}
        for p in primes:
            tors[p] = sum(1 for t in result.torsion[k] if t % p == 0)
        out.append((result.ranks[k], tors))
    return out


# ---------------------------------------------------------------------------
# finite posets

def random_poset(rng, n):
    """A random partial order on range(n) as the transitive closure of a DAG."""
    rel = {(i, i) for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                rel.add((i, j))
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


def multichains(rel, n, m):
    """Number of weakly increasing sequences a_0 <= ... <= a_m."""
    return sum(1 for seq in itertools.product(range(n), repeat=m + 1)
               if all((seq[i], seq[i + 1]) in rel for i in range(m)))
