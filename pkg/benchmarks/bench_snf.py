"""Compiled versus pure-Python diagonalisation on nerve boundary matrices.

Run: python benchmarks/bench_snf.py
"""
import random
import time

from artifact.homology import HAVE_COMPILED, chain_complex, smith_normal_form
from artifact.kernel import group_2cat
from artifact.nerve import nerve


def timed(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def cases():
    for n in (2, 3, 4, (2, 2)):
        X = nerve(group_2cat(n), "lax_nor", 4)
        C = chain_complex(X)
        for k in (3, 4):
            yield f"G={n} nerve, boundary {k}", C.boundary[k], len(C.basis[k])
    rng = random.Random(7)
    # full-rank random matrices grow past 64 bits quickly, so stay small
    for size in (20, 40):
        rows = [[rng.choice((-1, 0, 0, 0, 1)) for _ in range(size)] for _ in range(size)]
        yield f"random sparse {size}x{size}", rows, size


def main():
    if not HAVE_COMPILED:
        print("compiled kernel not built; only the Python path is available")
    print(f"{'case':32} {'shape':>10} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, rows, ncols in cases():
        py = timed(lambda: smith_normal_form(rows, ncols, "python"))
        if HAVE_COMPILED:
            assert smith_normal_form(rows, ncols, "compiled") == smith_normal_form(rows, ncols, "python")
            c = timed(lambda: smith_normal_form(rows, ncols, "compiled"))
            print(f"{name:32} {len(rows):>4}x{ncols:<5} {py:10.4f} {c:11.4f} {py / c:8.1f}")
        else:
            print(f"{name:32} {len(rows):>4}x{ncols:<5} {py:10.4f}")


if __name__ == "__main__":
    main()
