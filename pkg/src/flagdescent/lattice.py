"""Integer row reduction and saturated kernels of integer matrices."""

from __future__ import annotations

__all__ = ["hermite_rows", "integer_kernel", "in_row_span"]


def _echelon(rows, track=None):
    """Unimodular row reduction to echelon form with positive pivots.

    ``track`` rows (if given) receive the same operations.  Returns the
    reduced rows, the tracked rows and the list of pivot columns.
    """
    a = [list(r) for r in rows]
    t = [list(r) for r in track] if track is not None else None
    ncols = len(a[0]) if a else 0
    pivots = []
    top = 0

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        if t is not None:
            t[i], t[j] = t[j], t[i]

    def addmul(dst, src, f):
        a[dst] = [x - f * y for x, y in zip(a[dst], a[src])]
        if t is not None:
            t[dst] = [x - f * y for x, y in zip(t[dst], t[src])]

    for c in range(ncols):
        if top >= len(a):
            break
        while True:
            nz = [r for r in range(top, len(a)) if a[r][c]]
            if not nz:
                break
            best = min(nz, key=lambda r: abs(a[r][c]))
            swap(top, best)
            done = True
            for r in range(top + 1, len(a)):
                if a[r][c]:
                    addmul(r, top, a[r][c] // a[top][c])
                    if a[r][c]:
                        done = False
            if done:
                break
        if not any(a[r][c] for r in range(top, len(a))):
            continue
        if a[top][c] < 0:
            a[top] = [-x for x in a[top]]
            if t is not None:
                t[top] = [-x for x in t[top]]
        for r in range(top):
            addmul(r, top, a[r][c] // a[top][c])
        pivots.append(c)
        top += 1
    return a, t, pivots


def hermite_rows(rows):
    """Row Hermite normal form with zero rows dropped."""
    if not rows:
        return []
    a, _, pivots = _echelon(rows)
    return [tuple(r) for r in a[:len(pivots)]]


def integer_kernel(matrix, ncols: int):
    """A basis of {v in Z^ncols : matrix v = 0}, in Hermite normal form.

    The basis comes from the rows of a unimodular transform, so it spans
    every integer solution (the kernel lattice is saturated).
    """
    if not matrix:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    transposed = [[row[j] for row in matrix] for j in range(ncols)]
    ident = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    reduced, trans, pivots = _echelon(transposed, ident)
    kernel = [trans[i] for i in range(len(pivots), ncols)]
    return hermite_rows(kernel)


def in_row_span(basis, v) -> bool:
    """Whether ``v`` is an integer combination of the rows of ``basis``."""
    if not any(v):
        return True
    if not basis:
        return False
    h = hermite_rows(basis)
    return hermite_rows(list(h) + [list(v)]) == h
