"""Integral homology of truncated simplicial sets via Smith normal form."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import _snf
from .kernel import ArtifactError

try:
    from ._homology_core import diagonalize as _fast_diagonalize
    HAVE_COMPILED = True
except ImportError:  # pragma: no cover - depends on the build
    _fast_diagonalize = None
    HAVE_COMPILED = False


class DegreeOutOfRange(ArtifactError):
    pass


def diagonalize(rows, ncols, backend="auto"):
    """Pivots of a diagonal form; ``backend`` is auto, compiled or python."""
    if backend == "python" or (backend == "auto" and _fast_diagonalize is None):
        return _snf.diagonalize(rows, ncols)
    if _fast_diagonalize is None:
        raise ArtifactError("compiled kernel not available")
    try:
        return _fast_diagonalize(rows, ncols)
    except OverflowError:
        if backend == "compiled":
            raise
        return _snf.diagonalize(rows, ncols)


def invariant_factors(pivots):
    """Smith invariant factors d_1 | d_2 | ... from any diagonal form."""
    ds = sorted(p for p in pivots if p)
    changed = True
    while changed:
        changed = False
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                a, b = ds[i], ds[j]
                if b % a:
                    g = gcd(a, b)
                    ds[i], ds[j] = g, a * b // g
                    changed = True
        ds.sort()
    return ds


def smith_normal_form(rows, ncols, backend="auto"):
    return invariant_factors(diagonalize(rows, ncols, backend))


@dataclass
class ChainComplex:
    """Normalized chains: ``basis[k]`` lists nondegenerate simplex indices and
    ``boundary[k]`` is the matrix of d_k (rows: basis[k-1], columns: basis[k])."""
    basis: list
    boundary: dict = field(default_factory=dict)

    def is_complex(self):
        for k in self.boundary:
            if k + 1 not in self.boundary:
                continue
            a, b = self.boundary[k], self.boundary[k + 1]
            for i in range(len(a)):
                for j in range(len(self.basis[k + 1])):
                    if sum(a[i][t] * b[t][j] for t in range(len(self.basis[k]))):
                        return False
        return True


def chain_complex(X, top=None):
    """The normalized chain complex of X up to degree ``top``."""
    top = X.d if top is None else top
    basis = [X.nondegenerate(m) for m in range(top + 1)]
    boundary = {}
    for k in range(1, top + 1):
        pos = {s: r for r, s in enumerate(basis[k - 1])}
        rows = [[0] * len(basis[k]) for _ in basis[k - 1]]
        for c, s in enumerate(basis[k]):
            for i, f in enumerate(X.faces[k][s]):
                r = pos.get(f)
                if r is not None:
                    rows[r][c] += -1 if i % 2 else 1
        boundary[k] = rows
    return ChainComplex(basis, boundary)


@dataclass
class HomologyResult:
    ranks: list
    torsion: list

    def group(self, k):
        return (self.ranks[k], tuple(self.torsion[k]))

    def describe(self, k):
        parts = ["Z"] * self.ranks[k] + [f"Z/{t}" for t in self.torsion[k]]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"ranks": list(self.ranks), "torsion": [list(t) for t in self.torsion]}


def homology(X, k_max=2, backend="auto"):
    """H_0 .. H_k_max of X; needs k_max <= X.d - 1."""
    if k_max < 0 or k_max > X.d - 1:
        raise DegreeOutOfRange(f"degree {k_max} needs truncation at least {k_max + 1}, got {X.d}")
    C = chain_complex(X, k_max + 1)
    factors = {}
    for k in range(1, k_max + 2):
        factors[k] = smith_normal_form(C.boundary[k], len(C.basis[k]), backend)
    ranks, torsion = [], []
    for k in range(k_max + 1):
        rank_in = len(factors[k]) if k >= 1 else 0
        out = factors[k + 1]
        ranks.append(len(C.basis[k]) - rank_in - len(out))
        torsion.append([t for t in out if t > 1])
    return HomologyResult(ranks, torsion)
