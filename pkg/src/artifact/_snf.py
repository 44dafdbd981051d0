"""Pure-Python diagonalisation of integer matrices."""


def diagonalize(rows, ncols):
    """Nonzero pivots of a diagonal form of the matrix, by row/column moves.

    ``rows`` is a list of integer lists; it is not modified.
    """
    a = [list(r) for r in rows]
    nrows = len(a)
    pivots = []
    t = 0
    while t < nrows and t < ncols:
        best = None
        for i in range(t, nrows):
            ri = a[i]
            for j in range(t, ncols):
                v = ri[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for r in a:
                r[t], r[j] = r[j], r[t]
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, nrows):
                v = a[i][t]
                if v:
                    q = v // p
                    ri, rt = a[i], a[t]
                    for j in range(t, ncols):
                        if rt[j]:
                            ri[j] -= q * rt[j]
                    if ri[t]:
                        clean = False
            rt = a[t]
            for j in range(t + 1, ncols):
                v = rt[j]
                if v:
                    q = v // p
                    for r in a:
                        if r[t]:
                            r[j] -= q * r[t]
                    if rt[j]:
                        clean = False
            if clean:
                break
            # move the smallest leftover entry of the pivot row/column into place
            best = (abs(p), t, t)
            for i in range(t + 1, nrows):
                v = a[i][t]
                if v and abs(v) < best[0]:
                    best = (abs(v), i, t)
            for j in range(t + 1, ncols):
                v = a[t][j]
                if v and abs(v) < best[0]:
                    best = (abs(v), t, j)
            _, i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for r in a:
                    r[t], r[j] = r[j], r[t]
        pivots.append(abs(a[t][t]))
        t += 1
    return pivots
